//! The bilinear form on `W_n(λ)`.
//!
//! With `i0 = (S_0, t^λ)` fixed, `G[a][b]` is the coefficient of
//! `C_{i0,i0}` in `C_{i0,a} C_{b,i0}` modulo `A^{>λ}`. The rank is the
//! dimension of the simple head, and it is positive exactly on `Λ'_n`.

use super::element::IntegralElement;
use super::module::StandardModule;
use super::standard::{sandwich, BasisLabel, StandardBasis};
use super::symmetric::murphy_element;
use crate::diagrams::{compose_signed, SignedDiagram};
use crate::error::{bail, Result};
use crate::linalg::{Arith, Field, Matrix, PrimeField, RationalField};
use crate::partitions::{in_lambda, standard_tableaux, Partition};

/// The form as integers. The middle factor `S_a^op S_b` is `±w` or has
/// fewer lines; in the first case the entry is `±β(T_a, w · T_b)` with
/// `β` the cellular form of `S^λ`.
pub fn gram_matrix(n: usize, shape: &Partition) -> Result<Vec<Vec<i64>>> {
    let module = StandardModule::new(n, shape, RationalField)?;
    let specht = module.specht();
    let beta = specht.gram();
    let f = specht.dim();
    let t = shape.size();
    let ii = module.diagrams();
    let dim = ii.len() * f;
    let mut g = vec![vec![0; dim]; dim];
    for (sa, da) in ii.iter().enumerate() {
        for (sb, db) in ii.iter().enumerate() {
            let SignedDiagram::Term { sign, diagram } = compose_signed(&da.flip(), db) else {
                continue;
            };
            if diagram.num_propagating() < t {
                continue;
            }
            let w = diagram.as_permutation().expect("a (t,t) diagram with t lines is a permutation");
            let rho = specht.action(&w);
            for ta in 0..f {
                for tb in 0..f {
                    let entry: i64 = (0..f).map(|k| beta[ta][k] * rho[k][tb]).sum();
                    g[sa * f + ta][sb * f + tb] = sign as i64 * entry;
                }
            }
        }
    }
    Ok(g)
}

/// The same form read off from products in the standard basis.
pub fn gram_matrix_via_basis<A: Arith>(basis: &StandardBasis, shape: &Partition, arith: A) -> Result<Matrix<A>> {
    let n = basis.n();
    if !in_lambda(n, shape) {
        bail!(Domain, "{shape} is not in Λ_{n}");
    }
    let exp = basis.expander(arith.clone())?;
    let ii = crate::diagrams::enumerate_i(n, shape.size());
    let tabs = standard_tableaux(shape);
    let f = tabs.len();
    let dim = ii.len() * f;
    let top = BasisLabel { shape: shape.clone(), s1: 0, t1: 0, s2: 0, t2: 0 };
    let k = basis.position(&top).expect("top label present");
    let c = |s1: usize, t1: usize, s2: usize, t2: usize| -> IntegralElement {
        sandwich(&ii[s1], &murphy_element(&tabs[t1], &tabs[t2]), &ii[s2])
    };
    let mut g = Matrix::zeros(arith, dim, dim);
    for a in 0..dim {
        let left = c(0, 0, a / f, a % f);
        for b in 0..dim {
            let right = c(b / f, b % f, 0, 0);
            g.set(a, b, exp.coordinate(k, &left.multiply(&right)));
        }
    }
    Ok(g)
}

/// Rank of the form over GF(p) or, for `p = 0`, the rationals.
pub fn gram_rank(n: usize, shape: &Partition, p: u64) -> Result<usize> {
    let g = gram_matrix(n, shape)?;
    let cols = g.first().map_or(0, Vec::len);
    Ok(match Field::new(p)? {
        Field::Prime(q) => {
            let arith = PrimeField::new(q as u64)?;
            Matrix::from_rows(arith, cols, g.iter().map(|r| r.iter().map(|&v| arith.from_i64(v)).collect()).collect())?
                .rank()
        }
        Field::Rational => Matrix::from_rows(
            RationalField,
            cols,
            g.iter().map(|r| r.iter().map(|&v| RationalField.from_i64(v)).collect()).collect(),
        )?
        .rank(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::standard::{standard_basis, DEFAULT_BASIS_BOUND};
    use crate::partitions::{enumerate_lambda, in_lambda_prime};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn documented_ranks() {
        for q in [0, 3, 5, 7] {
            assert_eq!(gram_rank(2, &Partition::empty(), q).unwrap(), 0);
        }
        for n in 1..=5 {
            assert_eq!(gram_rank(n, &p(&[n]), 7).unwrap(), 1);
        }
        assert!(gram_rank(3, &p(&[1]), 3).unwrap() > 0);
    }

    #[test]
    fn two_constructions_agree() {
        for n in 1..=4 {
            let basis = standard_basis(n, DEFAULT_BASIS_BOUND).unwrap();
            for shape in enumerate_lambda(n, 0, false).iter() {
                let direct = gram_matrix(n, shape).unwrap();
                let arith = PrimeField::new(1_000_003).unwrap();
                let via = gram_matrix_via_basis(&basis, shape, arith).unwrap();
                for (i, row) in direct.iter().enumerate() {
                    for (j, &v) in row.iter().enumerate() {
                        assert_eq!(*via.get(i, j), arith.from_i64(v), "n = {n}, {shape}, entry ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn positivity_matches_restricted_labels() {
        for q in [3u32, 5] {
            for n in 1..=4 {
                for shape in enumerate_lambda(n, 0, false).iter() {
                    let rank = gram_rank(n, shape, q as u64).unwrap();
                    assert_eq!(rank > 0, in_lambda_prime(n, q, shape), "n = {n}, {shape}, p = {q}");
                }
            }
        }
    }
}
