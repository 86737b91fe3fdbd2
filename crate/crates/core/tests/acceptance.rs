//! The full acceptance grid. Each criterion prints one PASS/FAIL line to
//! stderr (bypassing the test harness capture) before the final assert.

use std::io::Write;
use std::time::Instant;

use periplectic::verify;

#[test]
fn acceptance_grid() {
    let start = Instant::now();
    let outcomes = verify::run_all(usize::MAX, 0);
    let mut err = std::io::stderr().lock();
    for o in &outcomes {
        writeln!(err, "acceptance {o}").unwrap();
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    writeln!(
        err,
        "acceptance summary: {} of {} criteria passed in {:.1}s",
        outcomes.len() - failed.len(),
        outcomes.len(),
        start.elapsed().as_secs_f64()
    )
    .unwrap();
    assert_eq!(outcomes.len(), 11);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
