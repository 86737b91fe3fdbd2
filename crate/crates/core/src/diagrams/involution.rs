//! The anti-involution `φ`: `φ(X) = -X`, `φ(∪) = -∩`, `φ(∩) = ∪`, extended
//! so that it reverses products and preserves juxtaposition.

use super::diagram::BrauerDiagram;
use super::layers::{canonical_word, Generator};
use super::marking::SignedDiagram;

/// `φ(d) = ±d^flip`. Writes `d = σ · L_k ⋯ L_1` with the layers of its
/// canonical word and takes `σ · φ(L_1) ⋯ φ(L_k)`.
pub fn phi(d: &BrauerDiagram) -> SignedDiagram {
    let word = canonical_word(d);
    let mut rebuilt = SignedDiagram::plus(BrauerDiagram::identity(d.s()));
    let mut image = SignedDiagram::plus(BrauerDiagram::identity(d.s()));
    for layer in &word {
        let piece = SignedDiagram::plus(layer.diagram());
        rebuilt = piece.then(&rebuilt);
        let sign = match layer.generator {
            Generator::Crossing | Generator::Cup => -1,
            Generator::Cap => 1,
        };
        image = image.then(&SignedDiagram::plus(layer.diagram().flip())).scaled(sign);
    }
    debug_assert_eq!(rebuilt.diagram(), Some(d));
    image.scaled(rebuilt.sign())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::enumerate::enumerate_diagrams;
    use crate::diagrams::layers::phi_via_layers;
    use crate::diagrams::marking::compose_signed;

    #[test]
    fn generators() {
        for n in 2..=5 {
            for i in 0..n - 1 {
                let s = BrauerDiagram::simple_transposition(n, i);
                assert_eq!(phi(&s), SignedDiagram::plus(s).negated());
                let e = BrauerDiagram::cup_cap(n, i);
                assert_eq!(phi(&e), SignedDiagram::plus(e).negated());
            }
        }
        assert_eq!(phi(&BrauerDiagram::cup()), SignedDiagram::plus(BrauerDiagram::cap()).negated());
        assert_eq!(phi(&BrauerDiagram::cap()), SignedDiagram::plus(BrauerDiagram::cup()));
    }

    #[test]
    fn permutations_map_to_signed_inverses() {
        let w = [2, 0, 3, 1];
        let inv = [1, 3, 0, 2];
        let inversions = 3;
        let expected =
            SignedDiagram::plus(BrauerDiagram::permutation(&inv)).scaled(if inversions % 2 == 0 { 1 } else { -1 });
        assert_eq!(phi(&BrauerDiagram::permutation(&w)), expected);
    }

    #[test]
    fn agrees_with_operator_oracle() {
        for (r, s) in [(2, 2), (3, 3), (4, 2), (2, 4), (1, 3), (4, 4)] {
            for d in enumerate_diagrams(r, s) {
                assert_eq!(phi(&d), phi_via_layers(&d).unwrap(), "{d}");
            }
        }
    }

    #[test]
    fn involutive_and_anti_multiplicative() {
        for n in 1..=3 {
            let all = enumerate_diagrams(n, n);
            for a in &all {
                let pa = phi(a);
                assert_eq!(pa.then(&SignedDiagram::Zero), SignedDiagram::Zero);
                let back = phi(pa.diagram().unwrap()).scaled(pa.sign());
                assert_eq!(back, SignedDiagram::plus(a.clone()));
                for b in &all {
                    let lhs = match compose_signed(a, b) {
                        SignedDiagram::Term { sign, diagram } => phi(&diagram).scaled(sign),
                        SignedDiagram::Zero => SignedDiagram::Zero,
                    };
                    let rhs = phi(b).then(&phi(a));
                    assert_eq!(lhs, rhs, "φ({a} · {b})");
                }
            }
        }
    }
}
