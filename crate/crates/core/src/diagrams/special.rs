//! The idempotent `ε_n` and the diagrams `g_{n,n-2}`, `f_{n-2,n}` relating
//! `A_{n-2}` to `ε_n A_n ε_n`.

use super::diagram::BrauerDiagram;
use crate::error::{bail, Result};

fn check(n: usize) -> Result<()> {
    if n < 3 {
        bail!(Domain, "the special diagrams need n >= 3, got {n}");
    }
    Ok(())
}

/// `ε_n`: lines `i - i` for `i < n-2`, a line from north `n-2` to south
/// `n`, a cup on north `n-1, n` and a cap on south `n-2, n-1` (1-based).
pub fn epsilon(n: usize) -> Result<BrauerDiagram> {
    check(n)?;
    let mut pairs: Vec<(usize, usize)> = (0..n - 3).map(|i| (i, n + i)).collect();
    pairs.extend([(n - 3, 2 * n - 1), (n - 2, n - 1), (n + n - 3, n + n - 2)]);
    BrauerDiagram::from_pairs(n, n, &pairs)
}

/// `g_{n,n-2}`: the `(n, n-2)` diagram with straight lines and a cup on the
/// last two northern nodes.
pub fn g_diagram(n: usize) -> Result<BrauerDiagram> {
    check(n)?;
    let mut pairs: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, n + i)).collect();
    pairs.push((n - 2, n - 1));
    BrauerDiagram::from_pairs(n, n - 2, &pairs)
}

/// `f_{n-2,n}`: the `(n-2, n)` diagram with straight lines for `i < n-3`,
/// a line from north `n-2` to south `n`, and a cap on south `n-2, n-1`
/// (1-based).
pub fn f_diagram(n: usize) -> Result<BrauerDiagram> {
    check(n)?;
    let m = n - 2;
    let mut pairs: Vec<(usize, usize)> = (0..m - 1).map(|i| (i, m + i)).collect();
    pairs.extend([(m - 1, m + n - 1), (m + n - 3, m + n - 2)]);
    BrauerDiagram::from_pairs(m, n, &pairs)
}

/// `(ε_n, g_{n,n-2}, f_{n-2,n})`.
pub fn special_diagrams(n: usize) -> Result<(BrauerDiagram, BrauerDiagram, BrauerDiagram)> {
    Ok((epsilon(n)?, g_diagram(n)?, f_diagram(n)?))
}
