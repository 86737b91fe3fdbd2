//! The standard basis `C^λ_{(S1,T1)(S2,T2)} = S1 m_{T1,T2} S2^op` of `A_n`.

use std::collections::HashMap;

use super::element::IntegralElement;
use super::symmetric::murphy_element;
use crate::diagrams::{compose_signed, enumerate_diagrams, enumerate_i, BrauerDiagram};
use crate::error::{bail, Result};
use crate::linalg::{Arith, Matrix};
use crate::partitions::{dominance_leq, enumerate_lambda, standard_tableaux, Partition};

/// Largest `n` for which [`standard_basis`] runs by default.
pub const DEFAULT_BASIS_BOUND: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    pub shape: Partition,
    /// Positions in [`enumerate_i`] and [`standard_tableaux`].
    pub s1: usize,
    pub t1: usize,
    pub s2: usize,
    pub t2: usize,
}

#[derive(Clone, Debug)]
pub struct StandardBasis {
    n: usize,
    labels: Vec<BasisLabel>,
    elements: Vec<IntegralElement>,
}

/// `S1 · x · S2^op` for `x` in the group algebra of `S_t`.
pub fn sandwich(s1: &BrauerDiagram, x: &super::symmetric::GroupElement, s2: &BrauerDiagram) -> IntegralElement {
    let s2_op = s2.flip();
    let mut out = IntegralElement::zero();
    for (w, &c) in x {
        let left = compose_signed(s1, &BrauerDiagram::permutation(w));
        out.add_signed(left.then(&crate::diagrams::SignedDiagram::plus(s2_op.clone())), c);
    }
    out
}

pub fn standard_basis(n: usize, bound: usize) -> Result<StandardBasis> {
    if n > bound {
        bail!(Resource, "standard basis for n = {n} exceeds the configured bound {bound}");
    }
    let mut labels = Vec::new();
    let mut elements = Vec::new();
    for shape in enumerate_lambda(n, 0, false).iter() {
        let ii = enumerate_i(n, shape.size());
        let tabs = standard_tableaux(shape);
        for (s1, a) in ii.iter().enumerate() {
            for (t1, ta) in tabs.iter().enumerate() {
                for (s2, b) in ii.iter().enumerate() {
                    for (t2, tb) in tabs.iter().enumerate() {
                        labels.push(BasisLabel { shape: shape.clone(), s1, t1, s2, t2 });
                        elements.push(sandwich(a, &murphy_element(ta, tb), b));
                    }
                }
            }
        }
    }
    Ok(StandardBasis { n, labels, elements })
}

impl StandardBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn elements(&self) -> &[IntegralElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, label: &BasisLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Columns are the basis elements in the diagram basis, rows follow
    /// [`enumerate_diagrams`].
    pub fn change_of_basis<A: Arith>(&self, arith: A) -> Matrix<A> {
        let diagrams = enumerate_diagrams(self.n, self.n);
        let index: HashMap<&BrauerDiagram, usize> = diagrams.iter().enumerate().map(|(i, d)| (d, i)).collect();
        let mut m = Matrix::zeros(arith.clone(), diagrams.len(), self.elements.len());
        for (j, x) in self.elements.iter().enumerate() {
            for (d, &c) in x.terms() {
                m.set(index[d], j, arith.from_i64(c));
            }
        }
        m
    }

    /// Coordinates with respect to this basis; fails if it is not a basis
    /// over the given field.
    pub fn expander<A: Arith>(&self, arith: A) -> Result<Expander<A>> {
        let inverse = self.change_of_basis(arith.clone()).inverse()?;
        let index = enumerate_diagrams(self.n, self.n).into_iter().enumerate().map(|(i, d)| (d, i)).collect();
        Ok(Expander { arith, inverse, index })
    }

    /// Checks that multiplying any `C^λ` by a generator on either side
    /// stays in the span of `ℬ^μ`, `μ ⊵ λ`. Returns the violations.
    pub fn check_triangularity<A: Arith>(&self, arith: A) -> Result<Vec<String>> {
        let n = self.n;
        let exp = self.expander(arith.clone())?;
        let mut generators = Vec::new();
        for i in 0..n.saturating_sub(1) {
            generators.push(BrauerDiagram::simple_transposition(n, i));
            generators.push(BrauerDiagram::cup_cap(n, i));
        }
        let mut violations = Vec::new();
        for g in &generators {
            let g = IntegralElement::from_diagram(g.clone());
            for (label, c) in self.labels.iter().zip(&self.elements) {
                for (side, product) in [("left", g.multiply(c)), ("right", c.multiply(&g))] {
                    for (k, coeff) in exp.coordinates(&product).iter().enumerate() {
                        let mu = &self.labels[k].shape;
                        if !arith.is_zero(coeff) && !dominance_leq(&label.shape, mu) {
                            violations.push(format!("{side} product with C^{} reaches shape {mu}", label.shape));
                        }
                    }
                }
            }
        }
        Ok(violations)
    }
}

/// Coordinates of elements of `A_n` in a fixed basis.
pub struct Expander<A: Arith> {
    arith: A,
    inverse: Matrix<A>,
    index: HashMap<BrauerDiagram, usize>,
}

impl<A: Arith> Expander<A> {
    pub fn coordinates(&self, x: &IntegralElement) -> Vec<A::Elem> {
        let size = self.inverse.rows();
        let mut out = vec![self.arith.zero(); size];
        for (d, &c) in x.terms() {
            let j = self.index[d];
            let c = self.arith.from_i64(c);
            for (i, slot) in out.iter_mut().enumerate() {
                self.arith.mul_add_assign(slot, self.inverse.get(i, j), &c);
            }
        }
        out
    }

    /// Only the `k`-th coordinate.
    pub fn coordinate(&self, k: usize, x: &IntegralElement) -> A::Elem {
        let mut acc = self.arith.zero();
        for (d, &c) in x.terms() {
            self.arith.mul_add_assign(&mut acc, self.inverse.get(k, self.index[d]), &self.arith.from_i64(c));
        }
        acc
    }
}
