//! Diagrams as words in the generators `I, X, ∩, ∪`, and an independent
//! check of the sign rule through the action on tensor powers of the super
//! space `V = k^{m|m}` with its odd pairing.
//!
//! `V` has even basis `e_0..e_{m-1}` and odd basis `e_m..e_{2m-1}`. The
//! cap is the odd form with `β(e_i, e_{m+i}) = 1`, `β(e_{m+i}, e_i) = -1`,
//! the cup sends `1` to `Σ e_i ⊗ e_{m+i} + e_{m+i} ⊗ e_i`, and the crossing
//! is the signed swap. Tensor products of maps carry Koszul signs.

use std::collections::HashMap;

use super::diagram::BrauerDiagram;
use super::marking::SignedDiagram;
use crate::error::{bail, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Crossing,
    Cap,
    Cup,
}

impl Generator {
    fn inputs(self) -> usize {
        match self {
            Generator::Crossing | Generator::Cap => 2,
            Generator::Cup => 0,
        }
    }

    fn outputs(self) -> usize {
        match self {
            Generator::Crossing | Generator::Cup => 2,
            Generator::Cap => 0,
        }
    }
}

/// `I^pos ⊗ g ⊗ I^rest` acting on `width` strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Layer {
    pub width: usize,
    pub pos: usize,
    pub generator: Generator,
}

impl Layer {
    pub fn output_width(&self) -> usize {
        self.width - self.generator.inputs() + self.generator.outputs()
    }

    /// The layer as an unsigned diagram.
    pub fn diagram(&self) -> BrauerDiagram {
        let g = match self.generator {
            Generator::Crossing => BrauerDiagram::crossing(),
            Generator::Cap => BrauerDiagram::cap(),
            Generator::Cup => BrauerDiagram::cup(),
        };
        let rest = self.width - self.pos - self.generator.inputs();
        BrauerDiagram::identity(self.pos).juxtapose(&g).juxtapose(&BrauerDiagram::identity(rest))
    }
}

/// A word for `d`, listed bottom to top. Caps are closed in increasing
/// order of their left node by moving the right strand leftwards, cups are
/// opened at the right end in decreasing order of their left node, and the
/// strands are then sorted into place by crossings.
pub fn canonical_word(d: &BrauerDiagram) -> Vec<Layer> {
    let (r, s) = (d.r(), d.s());
    let mut word = Vec::new();
    let mut strands: Vec<usize> = (0..s).collect();
    let swap = |strands: &mut Vec<usize>, word: &mut Vec<Layer>, i: usize| {
        word.push(Layer { width: strands.len(), pos: i, generator: Generator::Crossing });
        strands.swap(i, i + 1);
    };

    for (a, b) in d.caps() {
        let pa = strands.iter().position(|&x| x == a).expect("cap end present");
        let mut pb = strands.iter().position(|&x| x == b).expect("cap end present");
        while pb > pa + 1 {
            swap(&mut strands, &mut word, pb - 1);
            pb -= 1;
        }
        word.push(Layer { width: strands.len(), pos: pa, generator: Generator::Cap });
        strands.drain(pa..pa + 2);
    }

    // Relabel surviving strands by their northern ends.
    for x in strands.iter_mut() {
        *x = d.partner(r + *x);
    }
    for (a, b) in d.cups().into_iter().rev() {
        word.push(Layer { width: strands.len(), pos: strands.len(), generator: Generator::Cup });
        strands.extend([a, b]);
    }

    let len = strands.len();
    for pass in 0..len {
        for i in 0..len - 1 - pass.min(len - 1) {
            if strands[i] > strands[i + 1] {
                swap(&mut strands, &mut word, i);
            }
        }
    }
    debug_assert!(strands.iter().copied().eq(0..r));
    word
}

type Vector = HashMap<Vec<u8>, i64>;

/// The tensor-power representation of the signed diagram category on
/// `V = k^{m|m}`.
#[derive(Clone, Copy, Debug)]
pub struct SuperRep {
    m: u8,
}

impl SuperRep {
    pub fn new(m: usize) -> Self {
        assert!((1..=60).contains(&m), "superdimension out of range");
        SuperRep { m: m as u8 }
    }

    fn odd(&self, x: u8) -> bool {
        x >= self.m
    }

    fn parity(&self, v: &[u8]) -> bool {
        v.iter().filter(|&&x| self.odd(x)).count() % 2 == 1
    }

    fn pairing(&self, x: u8, y: u8) -> i64 {
        let m = self.m;
        if x < m && y == x + m {
            1
        } else if x >= m && y + m == x {
            -1
        } else {
            0
        }
    }

    fn apply_layer(&self, layer: &Layer, input: &Vector) -> Vector {
        let mut out = Vector::new();
        for (v, &c) in input {
            let pos = layer.pos;
            match layer.generator {
                Generator::Crossing => {
                    let mut w = v.clone();
                    w.swap(pos, pos + 1);
                    let sign = if self.odd(v[pos]) && self.odd(v[pos + 1]) { -1 } else { 1 };
                    *out.entry(w).or_insert(0) += sign * c;
                }
                Generator::Cap => {
                    let koszul = if self.parity(&v[..pos]) { -1 } else { 1 };
                    let b = self.pairing(v[pos], v[pos + 1]);
                    if b != 0 {
                        let mut w = v.clone();
                        w.drain(pos..pos + 2);
                        *out.entry(w).or_insert(0) += koszul * b * c;
                    }
                }
                Generator::Cup => {
                    let koszul = if self.parity(&v[..pos]) { -1 } else { 1 };
                    for i in 0..self.m {
                        for pair in [[i, i + self.m], [i + self.m, i]] {
                            let mut w = v.clone();
                            w.splice(pos..pos, pair);
                            *out.entry(w).or_insert(0) += koszul * c;
                        }
                    }
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Images of every basis vector of the input tensor power under the
    /// word, applied bottom layer first.
    pub fn evaluate(&self, inputs: usize, word: &[Layer]) -> Vec<Vector> {
        self.basis(inputs)
            .into_iter()
            .map(|v| {
                let mut cur = Vector::from([(v, 1)]);
                for layer in word {
                    cur = self.apply_layer(layer, &cur);
                }
                cur
            })
            .collect()
    }

    fn basis(&self, len: usize) -> Vec<Vec<u8>> {
        let dim = 2 * self.m;
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out.into_iter().flat_map(|v| (0..dim).map(move |x| [v.as_slice(), &[x]].concat())).collect();
        }
        out
    }

    pub fn operator(&self, d: &BrauerDiagram) -> Vec<Vector> {
        self.evaluate(d.s(), &canonical_word(d))
    }
}

/// `c` with `a = c · b` as operators, `Some(0)` if `a` vanishes, `None` if
/// `a` is not a multiple of `b`.
fn proportionality(a: &[Vector], b: &[Vector]) -> Option<i64> {
    let mut ratio: Option<i64> = None;
    for (x, y) in a.iter().zip(b) {
        for (k, &cx) in x {
            let cy = *y.get(k)?;
            if cx % cy != 0 {
                return None;
            }
            match ratio {
                None => ratio = Some(cx / cy),
                Some(q) if q * cy == cx => {}
                Some(_) => return None,
            }
        }
        for k in y.keys() {
            if !x.contains_key(k) {
                ratio = match ratio {
                    None | Some(0) => Some(0),
                    Some(_) => return None,
                };
            }
        }
    }
    Some(ratio.unwrap_or(0))
}

fn as_signed(ratio: i64, d: BrauerDiagram, what: &str) -> Result<SignedDiagram> {
    match ratio {
        1 => Ok(SignedDiagram::plus(d)),
        -1 => Ok(SignedDiagram::plus(d).negated()),
        _ => bail!(Internal, "{what} acts as {ratio} times {d}"),
    }
}

/// `m` for the test space. Any diagram already acts nonzero for `m = 1`;
/// `m = 2` leaves room for cancellations between terms.
const SUPERDIMENSION: usize = 2;

/// `d1 · d2` read off from the operators on `V^{⊗ d2.s()}`.
pub fn compose_via_layers(d1: &BrauerDiagram, d2: &BrauerDiagram) -> Result<SignedDiagram> {
    if d1.s() != d2.r() {
        return Ok(SignedDiagram::Zero);
    }
    let Some(target) = super::enumerate::concatenate_unsigned(d1, d2) else {
        return Ok(SignedDiagram::Zero);
    };
    let rep = SuperRep::new(SUPERDIMENSION);
    let mut word = canonical_word(d2);
    word.extend(canonical_word(d1));
    let product = rep.evaluate(d2.s(), &word);
    if product.iter().all(HashMap::is_empty) {
        bail!(Internal, "the product of {d1} and {d2} acts as zero on the test space");
    }
    let ratio = proportionality(&product, &rep.operator(&target))
        .ok_or_else(|| crate::Error::Internal(format!("{d1} · {d2} is not a multiple of {target}")))?;
    as_signed(ratio, target, "the product")
}

/// `φ(d)` read off from operators: the reversed word with each generator
/// replaced by its image (`X ↦ -X`, `∪ ↦ -∩`, `∩ ↦ ∪`).
pub fn phi_via_layers(d: &BrauerDiagram) -> Result<SignedDiagram> {
    let word = canonical_word(d);
    let mut sign = 1;
    let flipped: Vec<Layer> = word
        .iter()
        .rev()
        .map(|layer| {
            let generator = match layer.generator {
                Generator::Crossing => {
                    sign = -sign;
                    Generator::Crossing
                }
                Generator::Cup => {
                    sign = -sign;
                    Generator::Cap
                }
                Generator::Cap => Generator::Cup,
            };
            Layer { width: layer.output_width(), pos: layer.pos, generator }
        })
        .collect();
    let target = d.flip();
    let rep = SuperRep::new(SUPERDIMENSION);
    let image = rep.evaluate(target.s(), &flipped);
    let ratio = proportionality(&image, &rep.operator(&target))
        .ok_or_else(|| crate::Error::Internal(format!("the image of {d} is not a multiple of its flip")))?;
    as_signed(ratio * sign, target, "the image")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::enumerate::enumerate_diagrams;
    use crate::diagrams::marking::compose_signed;

    #[test]
    fn words_rebuild_their_diagram() {
        for (r, s) in [(2, 2), (3, 3), (4, 2), (1, 3), (4, 4)] {
            for d in enumerate_diagrams(r, s) {
                let word = canonical_word(&d);
                let mut width = s;
                let mut acc = BrauerDiagram::identity(s);
                for layer in &word {
                    assert_eq!(layer.width, width);
                    width = layer.output_width();
                    acc = crate::diagrams::enumerate::concatenate_unsigned(&layer.diagram(), &acc).unwrap();
                }
                assert_eq!(acc, d);
            }
        }
    }

    #[test]
    fn snakes_and_crossings() {
        let i = BrauerDiagram::identity(1);
        let cap_i = BrauerDiagram::cap().juxtapose(&i);
        let i_cup = i.juxtapose(&BrauerDiagram::cup());
        assert_eq!(compose_via_layers(&cap_i, &i_cup).unwrap(), SignedDiagram::plus(i.clone()));
        let i_cap = i.juxtapose(&BrauerDiagram::cap());
        let cup_i = BrauerDiagram::cup().juxtapose(&i);
        assert_eq!(compose_via_layers(&i_cap, &cup_i).unwrap(), SignedDiagram::plus(i).negated());
        let x = BrauerDiagram::crossing();
        assert_eq!(
            compose_via_layers(&BrauerDiagram::cap(), &x).unwrap(),
            SignedDiagram::plus(BrauerDiagram::cap()).negated()
        );
    }

    #[test]
    fn agrees_with_marking_rule_exhaustively() {
        for n in 1..=3 {
            let all = enumerate_diagrams(n, n);
            for d1 in &all {
                for d2 in &all {
                    let expected = compose_signed(d1, d2);
                    assert_eq!(compose_via_layers(d1, d2).unwrap(), expected, "{d1} · {d2}");
                }
            }
        }
    }

    #[test]
    fn agrees_on_rectangular_products() {
        for (r, s, t) in [(2, 4, 2), (4, 2, 4), (3, 1, 3), (1, 3, 1), (4, 0, 2), (0, 4, 0)] {
            for d1 in enumerate_diagrams(r, s) {
                for d2 in enumerate_diagrams(s, t) {
                    assert_eq!(compose_via_layers(&d1, &d2).unwrap(), compose_signed(&d1, &d2), "{d1} · {d2}");
                }
            }
        }
    }

    #[test]
    fn phi_on_generators() {
        let x = BrauerDiagram::simple_transposition(3, 1);
        assert_eq!(phi_via_layers(&x).unwrap(), SignedDiagram::plus(x).negated());
        let e = BrauerDiagram::cup_cap(3, 0);
        assert_eq!(phi_via_layers(&e).unwrap(), SignedDiagram::plus(e).negated());
    }
}
