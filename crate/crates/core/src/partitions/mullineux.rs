//! The Mullineux conjugate through Mullineux symbols.
//!
//! For a `p`-regular `μ`, the symbol records, while peeling off `p`-rims,
//! the size `a_i` of each rim and the number of rows `r_i` before peeling.
//! The regular-label conjugate has symbol rows `a_i` and
//! `a_i - r_i + ε_i` (`ε_i = 0` iff `p | a_i`). Labels here are
//! `p`-restricted, so the map is transported through the transpose.

use super::partition::Partition;
use crate::error::{bail, Result};

/// One column of a Mullineux symbol: `(rim size, number of rows)`.
pub type SymbolColumn = (usize, usize);

/// Sizes removed from each row by the `p`-rim, top to bottom.
fn p_rim(lambda: &Partition, p: usize) -> Vec<usize> {
    let len = lambda.len();
    let rim_in_row = |i: usize| {
        let next = lambda.part(i + 1);
        lambda.part(i) - next.saturating_sub(1)
    };
    let mut take = vec![0; len];
    let mut start = 0;
    while start < len {
        let mut need = p;
        let mut row = start;
        loop {
            let t = need.min(rim_in_row(row));
            take[row] = t;
            need -= t;
            if need == 0 || row + 1 == len {
                break;
            }
            row += 1;
        }
        start = row + 1;
    }
    take
}

/// Mullineux symbol of a `p`-regular partition.
pub fn mullineux_symbol(lambda: &Partition, p: usize) -> Vec<SymbolColumn> {
    let mut cur = lambda.parts().to_vec();
    let mut symbol = Vec::new();
    while !cur.is_empty() {
        let part = Partition::from_sorted(cur.clone());
        let take = p_rim(&part, p);
        symbol.push((take.iter().sum(), cur.len()));
        for (c, t) in cur.iter_mut().zip(&take) {
            *c -= t;
        }
        while cur.last() == Some(&0) {
            cur.pop();
        }
        debug_assert!(cur.windows(2).all(|w| w[0] >= w[1]), "p-rim removal must leave a partition");
    }
    symbol
}

/// Mullineux's map on `p`-regular labels, by matching symbols against every
/// `p`-regular partition of the same size.
pub fn mullineux_regular(lambda: &Partition, p: usize) -> Result<Partition> {
    if !lambda.is_p_regular(p as u32) {
        bail!(Domain, "{lambda} is not {p}-regular");
    }
    let target: Vec<SymbolColumn> =
        mullineux_symbol(lambda, p).into_iter().map(|(a, r)| (a, a + usize::from(a % p != 0) - r)).collect();
    let mut hits = Partition::all_of_size(lambda.size())
        .into_iter()
        .filter(|mu| mu.is_p_regular(p as u32) && mullineux_symbol(mu, p) == target);
    match (hits.next(), hits.next()) {
        (Some(mu), None) => Ok(mu),
        _ => bail!(Internal, "no unique partition carries the conjugate symbol of {lambda}"),
    }
}

/// `λ^M` for a `p`-restricted `λ`: the label of the simple module obtained by
/// tensoring the simple head labelled `λ` with the sign representation.
/// In characteristic zero this is the transpose.
pub fn mullineux(lambda: &Partition, p: u32) -> Result<Partition> {
    if p == 1 {
        bail!(Usage, "characteristic must be 0 or a prime");
    }
    if !lambda.is_p_restricted(p) {
        bail!(Domain, "{lambda} is not {p}-restricted");
    }
    if p == 0 {
        return Ok(lambda.transpose());
    }
    Ok(mullineux_regular(&lambda.transpose(), p as usize)?.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::cores::p_core;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn symbols() {
        assert_eq!(mullineux_symbol(&p(&[2, 2]), 3), vec![(3, 2), (1, 1)]);
        assert_eq!(mullineux_symbol(&p(&[4]), 3), vec![(3, 1), (1, 1)]);
    }

    #[test]
    fn documented_values() {
        // (2,1) has a 3-hook, so it is not a 3-core; the simple head is the
        // trivial module and its sign twist is labelled (1,1,1).
        assert_eq!(mullineux(&p(&[2, 1]), 3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(mullineux(&p(&[2, 1]), 5).unwrap(), p(&[2, 1]));
        assert_eq!(mullineux(&p(&[3, 1]), 7).unwrap(), p(&[2, 1, 1]));
        assert_eq!(mullineux(&p(&[2, 2]), 3).unwrap(), p(&[1, 1, 1, 1]));
        assert_eq!(mullineux(&p(&[4, 1]), 0).unwrap(), p(&[2, 1, 1, 1]));
        assert!(mullineux(&p(&[3]), 3).is_err());
    }

    #[test]
    fn involution_and_core_behaviour() {
        for q in [3u32, 5, 7] {
            for n in 0..=8 {
                for lam in Partition::all_of_size(n).into_iter().filter(|l| l.is_p_restricted(q)) {
                    let m = mullineux(&lam, q).unwrap();
                    assert!(m.is_p_restricted(q));
                    assert_eq!(m.size(), lam.size());
                    assert_eq!(mullineux(&m, q).unwrap(), lam);
                    if p_core(&lam, q as usize) == lam {
                        assert_eq!(m, lam.transpose());
                    }
                    if q as usize > n {
                        assert_eq!(m, lam.transpose());
                    }
                }
            }
        }
    }
}
