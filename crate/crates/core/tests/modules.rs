//! Standard modules, their duals and central idempotents working together.

use periplectic::algebra::center::DEFAULT_CENTER_BOUND;
use periplectic::algebra::{center, dual_module, localise, Representation, StandardModule};
use periplectic::blocks::oracle;
use periplectic::linalg::{split_idempotents, Arith, Matrix, PrimeField};
use periplectic::partitions::{enumerate_lambda, mullineux, Partition};

/// Index of the central idempotent acting as the identity on `m`.
fn owner<M: Representation<PrimeField>>(m: &M, idempotents: &[Matrix<PrimeField>]) -> usize {
    let identity = Matrix::identity(*m.arith(), m.dim());
    let owners: Vec<usize> = (0..idempotents.len()).filter(|&i| idempotents[i] == identity).collect();
    assert_eq!(owners.len(), 1);
    owners[0]
}

#[test]
fn duals_of_standard_modules_sit_in_the_mullineux_block() {
    let mut checked = 0;
    for n in 2..=4 {
        for p in [3u64, 5] {
            let field = PrimeField::new(p).unwrap();
            let z = center(n, p, DEFAULT_CENTER_BOUND).unwrap();
            let elements: Vec<_> = split_idempotents(&z.structure_constants().unwrap())
                .unwrap()
                .iter()
                .map(|c| z.to_element(&z.combine(c)))
                .collect();
            for lam in enumerate_lambda(n, p as u32, true).iter() {
                let w = StandardModule::new(n, lam, field).unwrap();
                let dual = dual_module(StandardModule::new(n, lam, field).unwrap());
                let on_dual: Vec<_> = elements.iter().map(|e| dual.element_matrix(e).unwrap()).collect();
                let m = mullineux(lam, p as u32).unwrap();
                let twin = StandardModule::new(n, &m, field).unwrap();
                let on_twin: Vec<_> = elements.iter().map(|e| twin.element_matrix(e).unwrap()).collect();
                assert_eq!(owner(&dual, &on_dual), owner(&twin, &on_twin), "n={n} p={p} λ={lam} λ^M={m}");
                let blocks = oracle(n, p).unwrap();
                let on_w: Vec<_> = elements.iter().map(|e| w.element_matrix(e).unwrap()).collect();
                assert_eq!(blocks.same_block(lam, &m), owner(&w, &on_w) == owner(&twin, &on_twin));
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 24);
}

#[test]
fn localisation_matches_the_smaller_standard_module() {
    let field = PrimeField::new(5).unwrap();
    for n in 3..=5 {
        for lam in enumerate_lambda(n, 0, false).iter().filter(|l| l.size() + 2 <= n) {
            let local = localise(StandardModule::new(n, lam, field).unwrap()).unwrap();
            let small = StandardModule::new(n - 2, lam, field).unwrap();
            assert_eq!(local.dim(), small.dim());
            // Generators of A_{n-2} act with the same characteristic data.
            for ((_, a), (_, b)) in
                local.generator_matrices().unwrap().iter().zip(small.generator_matrices().unwrap().iter())
            {
                assert_eq!(a.rank(), b.rank(), "n={n} λ={lam}");
                let trace = |m: &Matrix<PrimeField>| (0..m.rows()).fold(0u32, |acc, i| field.add(&acc, m.get(i, i)));
                assert_eq!(trace(a), trace(b), "n={n} λ={lam}");
            }
        }
    }
}

#[test]
fn standard_modules_outside_lambda_are_rejected() {
    let field = PrimeField::new(3).unwrap();
    assert!(StandardModule::new(3, &"(2)".parse::<Partition>().unwrap(), field).is_err());
    assert!(StandardModule::new(2, &"(2,1)".parse::<Partition>().unwrap(), field).is_err());
}
