use std::collections::BTreeMap;

use super::{BlockDecomposition, Provenance};
use crate::error::Result;
use crate::linalg::Field;
use crate::partitions::{enumerate_lambda, two_core, Partition};

/// The three conditions under which the staircase `ρ_r` carries a block of
/// its own in characteristic `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StaircaseEligibility {
    pub r: usize,
    /// `2r - 1 < p`.
    pub small_hook: bool,
    /// `r(r+1)/2 + p - 2r > n`.
    pub gap: bool,
    /// `r(r+1)/2 <= n` with the same parity as `n`, so `ρ_r ∈ Λ_n`.
    pub fits: bool,
}

impl StaircaseEligibility {
    pub fn new(n: usize, p: u64, r: usize) -> Self {
        let size = r * (r + 1) / 2;
        let p = p as usize;
        StaircaseEligibility {
            r,
            small_hook: 2 * r < p + 1,
            gap: size + p > n + 2 * r,
            fits: size <= n && (n - size).is_multiple_of(2),
        }
    }

    pub fn eligible(&self) -> bool {
        self.r >= 2 && self.small_hook && self.gap && self.fits
    }
}

/// Eligibility of every `r >= 2` with `ρ_r` no larger than `n`.
pub fn staircase_eligibility(n: usize, p: u64) -> Vec<StaircaseEligibility> {
    (2..).take_while(|r| r * (r + 1) / 2 <= n).map(|r| StaircaseEligibility::new(n, p, r)).collect()
}

/// Smallest `n` from which `A_n` is a single block in characteristic `p`:
/// `⌈(p² + 7) / 8⌉`.
pub fn single_block_bound(p: u64) -> usize {
    ((p * p + 7).div_ceil(8)) as usize
}

/// The block partition of `Λ_n` in characteristic `p` (0 or an odd prime).
///
/// In characteristic 0 blocks are the fibres of the 2-core. For odd `p`
/// each eligible staircase `ρ_r` keeps its 2-core fibre as a block and
/// everything else forms one block.
pub fn classify(n: usize, p: u64) -> Result<BlockDecomposition> {
    Field::new(p)?;
    let lambda = enumerate_lambda(n, 0, false);
    let mut fibres: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lam in lambda.iter() {
        fibres.entry(two_core(lam)).or_default().push(lam.clone());
    }
    if p == 0 {
        return BlockDecomposition::new(n, p, Provenance::Classifier, fibres.into_values().collect());
    }
    let mut blocks = Vec::new();
    let mut rest = Vec::new();
    let eligible: Vec<Partition> = staircase_eligibility(n, p)
        .into_iter()
        .filter(StaircaseEligibility::eligible)
        .map(|e| Partition::staircase(e.r))
        .collect();
    for (core, members) in fibres {
        if eligible.contains(&core) {
            blocks.push(members);
        } else {
            rest.extend(members);
        }
    }
    blocks.push(rest);
    BlockDecomposition::new(n, p, Provenance::Classifier, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn bounds() {
        assert_eq!(single_block_bound(3), 2);
        assert_eq!(single_block_bound(5), 4);
        assert_eq!(single_block_bound(7), 7);
    }

    #[test]
    fn documented_classifications() {
        let b = classify(3, 5).unwrap();
        assert_eq!(b.blocks, vec![vec![p(&[1, 1, 1]), p(&[3]), p(&[1])], vec![p(&[2, 1])]]);
        assert_eq!(classify(3, 3).unwrap().len(), 1);
        assert!(classify(3, 0).unwrap().same_partition(&b));

        let b = classify(5, 7).unwrap();
        assert_eq!(b.len(), 2);
        let staircase = b.block_of(&p(&[2, 1])).unwrap();
        for lam in enumerate_lambda(5, 0, false).iter() {
            assert_eq!(b.block_of(lam) == Some(staircase), two_core(lam) == p(&[2, 1]), "{lam}");
        }
    }

    #[test]
    fn eligibility_predicates() {
        let e = StaircaseEligibility::new(3, 5, 2);
        assert!(e.small_hook && e.gap && e.fits && e.eligible());
        assert!(!StaircaseEligibility::new(3, 3, 2).small_hook);
        assert!(!StaircaseEligibility::new(5, 7, 3).fits);
    }

    #[test]
    fn single_block_from_bound_and_large_p_agreement() {
        for q in [3u64, 5, 7] {
            for n in single_block_bound(q)..=12 {
                assert_eq!(classify(n, q).unwrap().len(), 1, "n={n} p={q}");
            }
        }
        for q in [7u64, 11, 13] {
            for n in 0..q as usize {
                assert!(classify(n, q).unwrap().same_partition(&classify(n, 0).unwrap()));
            }
        }
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert!(matches!(classify(3, 2), Err(Error::Unsupported(_))));
        assert!(matches!(classify(3, 9), Err(Error::Usage(_))));
        assert!(matches!(classify(3, 1), Err(Error::Usage(_))));
    }
}
