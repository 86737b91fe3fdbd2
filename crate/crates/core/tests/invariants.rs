//! Property tests over random diagrams and partitions.

use periplectic::algebra::{AlgebraElement, IntegralElement};
use periplectic::blocks::{classify, single_block_bound, staircase_eligibility};
use periplectic::diagrams::{compose_signed, enumerate_diagrams, phi, BrauerDiagram, SignedDiagram};
use periplectic::linalg::Field;
use periplectic::partitions::{enumerate_lambda, mullineux, p_core, two_core, Partition};
use proptest::prelude::*;

fn diagram(n: usize) -> impl Strategy<Value = BrauerDiagram> {
    let all = enumerate_diagrams(n, n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn sized_diagrams() -> impl Strategy<Value = (BrauerDiagram, BrauerDiagram, BrauerDiagram)> {
    (1usize..=5).prop_flat_map(|n| (diagram(n), diagram(n), diagram(n)))
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = Partition::all_of_size(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn phi_signed(x: &SignedDiagram) -> SignedDiagram {
    match x {
        SignedDiagram::Zero => SignedDiagram::Zero,
        SignedDiagram::Term { sign, diagram } => phi(diagram).scaled(*sign),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn composition_is_associative((a, b, c) in sized_diagrams()) {
        let left = compose_signed(&a, &b).then(&SignedDiagram::plus(c.clone()));
        let right = SignedDiagram::plus(a).then(&compose_signed(&b, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn phi_is_an_anti_involution((a, b, _) in sized_diagrams()) {
        prop_assert_eq!(phi_signed(&phi(&a)), SignedDiagram::plus(a.clone()));
        prop_assert_eq!(phi_signed(&compose_signed(&a, &b)), phi(&b).then(&phi(&a)));
    }

    #[test]
    fn diagram_json_round_trips((a, _, _) in sized_diagrams()) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<BrauerDiagram>(&text).unwrap(), a.clone());
        let flipped = a.flip();
        prop_assert_eq!(flipped.flip(), a);
    }

    #[test]
    fn element_products_are_bilinear((a, b, c) in sized_diagrams(), x in -3i64..=3, y in -3i64..=3) {
        let field = Field::new(7).unwrap();
        let n = a.r();
        let mut left = AlgebraElement::zero(n, field);
        left.add_term(a.clone(), field.from_i64(x)).unwrap();
        left.add_term(b.clone(), field.from_i64(y)).unwrap();
        let right = AlgebraElement::from_diagram(c.clone(), field).unwrap();
        let product = left.multiply(&right).unwrap();
        let ac = IntegralElement::from_signed(compose_signed(&a, &c));
        let bc = IntegralElement::from_signed(compose_signed(&b, &c));
        let expected = AlgebraElement::from_integral(n, &ac.scaled(x).add(&bc.scaled(y)), field).unwrap();
        prop_assert_eq!(product, expected);
    }

    #[test]
    fn staircase_blocks_are_two_core_fibres(n in 0usize..=14, q in prop::sample::select(vec![3u64, 5, 7, 11, 13])) {
        let blocks = classify(n, q).unwrap();
        let eligible: Vec<Partition> = staircase_eligibility(n, q)
            .into_iter()
            .filter(|e| e.eligible())
            .map(|e| Partition::staircase(e.r))
            .collect();
        prop_assert_eq!(blocks.len(), eligible.len() + 1);
        for lam in enumerate_lambda(n, 0, false).iter() {
            let core = two_core(lam);
            let own = blocks.block_of(lam).unwrap();
            for mu in enumerate_lambda(n, 0, false).iter() {
                let together = blocks.same_block(lam, mu);
                if eligible.contains(&core) || eligible.contains(&two_core(mu)) {
                    prop_assert_eq!(together, core == two_core(mu));
                } else {
                    prop_assert!(together, "{} and {} should share block {}", lam, mu, own);
                }
            }
        }
        if n >= single_block_bound(q) {
            prop_assert_eq!(blocks.len(), 1);
        }
    }

    #[test]
    fn mullineux_preserves_p_cores(lam in partition(10), q in prop::sample::select(vec![3u32, 5, 7])) {
        if lam.is_p_restricted(q) {
            let m = mullineux(&lam, q).unwrap();
            prop_assert_eq!(p_core(&m, q as usize), p_core(&lam, q as usize).transpose());
        }
    }
}
