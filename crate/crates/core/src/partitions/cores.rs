//! p-cores via beta-numbers on the abacus, and literal rim-hook removal.

use rand::Rng;

use super::partition::Partition;

/// The `p`-core: what remains after removing rim `p`-hooks until none is
/// left. Computed on a `p`-runner abacus by sliding every bead up.
/// `p = 0` removes nothing.
pub fn p_core(lambda: &Partition, p: usize) -> Partition {
    if p == 0 {
        return lambda.clone();
    }
    let k = lambda.len();
    let mut runners = vec![0usize; p];
    for i in 0..k {
        let beta = lambda.part(i) + k - 1 - i;
        runners[beta % p] += 1;
    }
    let mut betas: Vec<usize> =
        runners.iter().enumerate().flat_map(|(r, &count)| (0..count).map(move |level| r + level * p)).collect();
    betas.sort_unstable_by(|a, b| b.cmp(a));
    let parts: Vec<usize> = betas.iter().enumerate().map(|(i, &b)| b - (k - 1 - i)).filter(|&x| x > 0).collect();
    Partition::from_sorted(parts)
}

/// Number of rim `p`-hooks removed on the way to the core.
pub fn p_weight(lambda: &Partition, p: usize) -> usize {
    if p == 0 {
        return 0;
    }
    (lambda.size() - p_core(lambda, p).size()) / p
}

/// The 2-core, always a staircase.
pub fn two_core(lambda: &Partition) -> Partition {
    p_core(lambda, 2)
}

/// Every partition obtained by removing one rim hook of length `h`.
///
/// The rim hook attached to box `(i, j)` with hook length `h` runs along
/// the boundary from the end of row `i` to the foot of column `j`; removing
/// it drops each row `r` in that range to one less than row `r + 1`, and the
/// last row to `j`.
pub fn remove_rim_hooks(lambda: &Partition, h: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for (i, j) in lambda.boxes() {
        if lambda.hook_length(i, j) != h {
            continue;
        }
        let bottom = lambda.column_len(j) - 1;
        let mut parts = lambda.parts().to_vec();
        for r in i..bottom {
            parts[r] = lambda.part(r + 1) - 1;
        }
        parts[bottom] = j;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.push(Partition::new(parts).expect("rim hook removal leaves a partition"));
    }
    out
}

/// Removes rim `p`-hooks in a random order until none remain.
pub fn p_core_by_removal(lambda: &Partition, p: usize, rng: &mut impl Rng) -> Partition {
    let mut cur = lambda.clone();
    loop {
        let options = remove_rim_hooks(&cur, p);
        if options.is_empty() {
            return cur;
        }
        cur = options[rng.gen_range(0..options.len())].clone();
    }
}
