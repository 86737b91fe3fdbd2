//! Blocks from first principles: split the centre into primitive
//! idempotents and see which one acts as the identity on each standard
//! module. Shares nothing with the classifier beyond `Λ_n`.

use rayon::prelude::*;

use super::{BlockDecomposition, Provenance};
use crate::algebra::center::DEFAULT_CENTER_BOUND;
use crate::algebra::{center, Representation, StandardModule};
use crate::diagrams::BrauerDiagram;
use crate::error::{bail, Result};
use crate::linalg::{split_idempotents, Arith, PrimeField};
use crate::partitions::{enumerate_lambda, Partition};

/// [`oracle_with_bound`] with the default centre bound.
pub fn oracle(n: usize, p: u64) -> Result<BlockDecomposition> {
    oracle_with_bound(n, p, DEFAULT_CENTER_BOUND)
}

/// The block partition of `Λ_n` over GF(p), computed from the centre of
/// `A_n`. Fails with an internal error if some standard module is not
/// acted on as the identity by exactly one primitive central idempotent,
/// or if an idempotent meets no standard module.
pub fn oracle_with_bound(n: usize, p: u64, bound: usize) -> Result<BlockDecomposition> {
    if p == 0 {
        bail!(Usage, "the block oracle works over GF(p) for an odd prime p");
    }
    let field = PrimeField::new(p)?;
    let z = center(n, p, bound)?;
    let constants = z.structure_constants()?;
    let idempotents: Vec<Vec<u32>> = split_idempotents(&constants)?.iter().map(|c| z.combine(c)).collect();
    let diagrams = z.algebra().diagrams();
    let lambda = enumerate_lambda(n, 0, false);
    let owners: Vec<usize> = lambda
        .members()
        .par_iter()
        .map(|shape| owning_idempotent(n, shape, field, diagrams, &idempotents))
        .collect::<Result<_>>()?;
    let mut blocks = vec![Vec::new(); idempotents.len()];
    for (shape, &i) in lambda.iter().zip(&owners) {
        blocks[i].push(shape.clone());
    }
    if let Some(i) = blocks.iter().position(Vec::is_empty) {
        bail!(Internal, "central idempotent {i} of A_{n} over GF({p}) acts as zero on every standard module");
    }
    BlockDecomposition::new(n, p, Provenance::Oracle, blocks)
}

fn owning_idempotent(
    n: usize,
    shape: &Partition,
    field: PrimeField,
    diagrams: &[BrauerDiagram],
    idempotents: &[Vec<u32>],
) -> Result<usize> {
    let module = StandardModule::new(n, shape, field)?;
    let dim = module.dim();
    let support: Vec<usize> = (0..diagrams.len()).filter(|&d| idempotents.iter().any(|e| e[d] != 0)).collect();
    let mut nonzero = vec![false; idempotents.len()];
    let mut identity = vec![true; idempotents.len()];
    for k in 0..dim {
        let mut images = vec![vec![0u32; dim]; idempotents.len()];
        for &d in &support {
            let terms = module.act_integral(&diagrams[d], k);
            for (e, image) in idempotents.iter().zip(&mut images) {
                if e[d] != 0 {
                    for &(j, v) in &terms {
                        field.mul_add_assign(&mut image[j], &e[d], &field.from_i64(v));
                    }
                }
            }
        }
        for (i, image) in images.iter().enumerate() {
            nonzero[i] |= image.iter().any(|&x| x != 0);
            identity[i] &= image.iter().enumerate().all(|(j, &x)| x == u32::from(j == k));
        }
    }
    let hits: Vec<usize> = (0..idempotents.len()).filter(|&i| nonzero[i]).collect();
    match hits.as_slice() {
        [i] if identity[*i] => Ok(*i),
        [i] => bail!(Internal, "idempotent {i} acts on W_{n}{shape} but not as the identity"),
        [] => bail!(Internal, "no central idempotent acts on W_{n}{shape}"),
        _ => bail!(Internal, "W_{n}{shape} meets the central idempotents {hits:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::classify;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn documented_cases() {
        let b = oracle(2, 5).unwrap();
        assert_eq!(b.blocks, vec![vec![p(&[1, 1]), p(&[2]), Partition::empty()]]);
        let b = oracle(3, 5).unwrap();
        assert_eq!(b.provenance, Provenance::Oracle);
        assert!(b.same_partition(&classify(3, 5).unwrap()));
        assert_eq!(oracle(3, 3).unwrap().len(), 1);
    }

    #[test]
    fn small_n() {
        for n in 0..=1 {
            assert_eq!(oracle(n, 3).unwrap().len(), 1);
        }
    }

    #[test]
    fn rejects_characteristic_zero_and_large_n() {
        assert!(oracle(3, 0).is_err());
        assert!(oracle(6, 3).is_err());
    }
}
