//! Explicit modules for `A_n`: standard modules `W_n(λ) = V(n,t) ⊗ S^λ`,
//! the localisation `M ↦ ε_n M` to `A_{n-2}`, and the dual twisted by `φ`.

use std::collections::HashMap;
use std::sync::Arc;

use super::element::IntegralElement;
use super::symmetric::SpechtModule;
use crate::diagrams::{
    compose_signed, enumerate_i, epsilon, f_diagram, factorize, g_diagram, phi, BrauerDiagram, SignedDiagram,
};
use crate::error::{bail, Result};
use crate::linalg::{Arith, Matrix};
use crate::partitions::{in_lambda, Partition};

/// A finite-dimensional left `A_n`-module with computable action matrices.
pub trait Representation<A: Arith> {
    fn arith(&self) -> &A;

    /// The `n` of `A_n`.
    fn algebra_size(&self) -> usize;

    fn dim(&self) -> usize;

    /// Matrix of an `(n,n)` diagram in the module basis.
    fn diagram_matrix(&self, d: &BrauerDiagram) -> Result<Matrix<A>>;

    fn signed_matrix(&self, d: &SignedDiagram) -> Result<Matrix<A>> {
        match d {
            SignedDiagram::Zero => Ok(Matrix::zeros(self.arith().clone(), self.dim(), self.dim())),
            SignedDiagram::Term { sign, diagram } => {
                let m = self.diagram_matrix(diagram)?;
                Ok(if *sign < 0 { m.scale(&self.arith().from_i64(-1)) } else { m })
            }
        }
    }

    fn element_matrix(&self, x: &IntegralElement) -> Result<Matrix<A>> {
        let mut out = Matrix::zeros(self.arith().clone(), self.dim(), self.dim());
        for (d, &c) in x.terms() {
            out = out.add(&self.diagram_matrix(d)?.scale(&self.arith().from_i64(c)));
        }
        Ok(out)
    }

    /// Matrices of `s_1..s_{n-1}` followed by `e_1..e_{n-1}`.
    fn generator_matrices(&self) -> Result<Vec<(BrauerDiagram, Matrix<A>)>> {
        let n = self.algebra_size();
        let mut gens: Vec<BrauerDiagram> =
            (0..n.saturating_sub(1)).map(|i| BrauerDiagram::simple_transposition(n, i)).collect();
        gens.extend((0..n.saturating_sub(1)).map(|i| BrauerDiagram::cup_cap(n, i)));
        gens.into_iter().map(|g| Ok((g.clone(), self.diagram_matrix(&g)?))).collect()
    }
}

/// `W_n(λ)` with basis `S ⊗ m_T`, `S ∈ I(n,t)`, `T` standard of shape `λ`,
/// ordered with `T` varying fastest.
#[derive(Debug)]
pub struct StandardModule<A: Arith> {
    arith: A,
    n: usize,
    shape: Partition,
    diagrams: Vec<BrauerDiagram>,
    index: HashMap<BrauerDiagram, usize>,
    specht: Arc<SpechtModule>,
}

impl<A: Arith> StandardModule<A> {
    pub fn new(n: usize, shape: &Partition, arith: A) -> Result<Self> {
        if !in_lambda(n, shape) {
            bail!(Domain, "{shape} does not label a standard module of A_{n}");
        }
        let diagrams = enumerate_i(n, shape.size());
        let index = diagrams.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        let specht = SpechtModule::shared(shape)?;
        Ok(StandardModule { arith, n, shape: shape.clone(), diagrams, index, specht })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn diagrams(&self) -> &[BrauerDiagram] {
        &self.diagrams
    }

    pub fn specht(&self) -> &SpechtModule {
        &self.specht
    }

    /// `d · (S_k ⊗ m_T)` as a sparse integer vector. Writes
    /// `d S = ±S' w` and applies `w` on the Specht side; fewer than `t`
    /// lines through gives zero.
    pub fn act_integral(&self, d: &BrauerDiagram, k: usize) -> Vec<(usize, i64)> {
        let f = self.specht.dim();
        let (s, col) = (k / f, k % f);
        let t = self.shape.size();
        let SignedDiagram::Term { sign, diagram } = compose_signed(d, &self.diagrams[s]) else {
            return Vec::new();
        };
        if diagram.num_propagating() < t {
            return Vec::new();
        }
        let (target, w, _) = factorize(&diagram);
        let back = compose_signed(&target, &BrauerDiagram::permutation(&w));
        debug_assert_eq!(back.diagram(), Some(&diagram));
        let sign = sign as i64 * back.sign() as i64;
        let base = self.index[&target] * f;
        let rho = self.specht.action(&w);
        (0..f).filter(|&i| rho[i][col] != 0).map(|i| (base + i, sign * rho[i][col])).collect()
    }
}

impl<A: Arith> Representation<A> for StandardModule<A> {
    fn arith(&self) -> &A {
        &self.arith
    }

    fn algebra_size(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        self.diagrams.len() * self.specht.dim()
    }

    fn diagram_matrix(&self, d: &BrauerDiagram) -> Result<Matrix<A>> {
        if d.r() != self.n || d.s() != self.n {
            bail!(Usage, "{d} is not an element of A_{}", self.n);
        }
        let dim = self.dim();
        let mut m = Matrix::zeros(self.arith.clone(), dim, dim);
        for k in 0..dim {
            for (i, c) in self.act_integral(d, k) {
                m.set(i, k, self.arith.from_i64(c));
            }
        }
        Ok(m)
    }
}

/// `ε_n M` as an `A_{n-2}`-module, `a` acting as `g a f`.
pub struct LocalisedModule<A: Arith, M: Representation<A>> {
    inner: M,
    basis: Matrix<A>,
    rows: Vec<usize>,
    solver: Matrix<A>,
    g: BrauerDiagram,
    f: BrauerDiagram,
}

/// The localisation functor on an explicit module.
pub fn localise<A: Arith, M: Representation<A>>(inner: M) -> Result<LocalisedModule<A, M>> {
    let n = inner.algebra_size();
    if n < 3 {
        bail!(Domain, "localisation needs n >= 3, got {n}");
    }
    let arith = inner.arith().clone();
    let e = inner.diagram_matrix(&epsilon(n)?)?;
    let pivots = e.rref().pivots;
    let columns: Vec<Vec<A::Elem>> = pivots.iter().map(|&j| e.column(j)).collect();
    let basis = Matrix::from_columns(arith.clone(), inner.dim(), &columns);
    let rows = if columns.is_empty() { Vec::new() } else { basis.transpose().rref().pivots };
    let square = Matrix::from_rows(arith.clone(), rows.len(), rows.iter().map(|&i| basis.row(i).to_vec()).collect())?;
    let solver = square.inverse()?;
    Ok(LocalisedModule { inner, basis, rows, solver, g: g_diagram(n)?, f: f_diagram(n)? })
}

impl<A: Arith, M: Representation<A>> LocalisedModule<A, M> {
    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<A: Arith, M: Representation<A>> Representation<A> for LocalisedModule<A, M> {
    fn arith(&self) -> &A {
        self.inner.arith()
    }

    fn algebra_size(&self) -> usize {
        self.inner.algebra_size() - 2
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn diagram_matrix(&self, d: &BrauerDiagram) -> Result<Matrix<A>> {
        let m = self.algebra_size();
        if d.r() != m || d.s() != m {
            bail!(Usage, "{d} is not an element of A_{m}");
        }
        let lifted = compose_signed(&self.g, d).then(&SignedDiagram::plus(self.f.clone()));
        let image = self.inner.signed_matrix(&lifted)?.mul(&self.basis)?;
        let picked = Matrix::from_rows(
            self.arith().clone(),
            image.cols(),
            self.rows.iter().map(|&i| image.row(i).to_vec()).collect(),
        )?;
        self.solver.mul(&picked)
    }
}

/// The dual `M^*` with `a` acting as the transpose of `φ(a)`.
pub struct DualModule<A: Arith, M: Representation<A>> {
    inner: M,
    _arith: std::marker::PhantomData<A>,
}

pub fn dual_module<A: Arith, M: Representation<A>>(inner: M) -> DualModule<A, M> {
    DualModule { inner, _arith: std::marker::PhantomData }
}

impl<A: Arith, M: Representation<A>> Representation<A> for DualModule<A, M> {
    fn arith(&self) -> &A {
        self.inner.arith()
    }

    fn algebra_size(&self) -> usize {
        self.inner.algebra_size()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn diagram_matrix(&self, d: &BrauerDiagram) -> Result<Matrix<A>> {
        Ok(self.inner.signed_matrix(&phi(d))?.transpose())
    }
}

/// `dim W_n(λ) = |I(n,t)| · f^λ`, without building the module.
pub fn standard_dimension(n: usize, shape: &Partition) -> usize {
    if !in_lambda(n, shape) {
        return 0;
    }
    let t = shape.size();
    let binomial = (0..t).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    binomial
        * crate::diagrams::enumerate::double_factorial_odd(n - t)
        * crate::partitions::count_standard_tableaux(shape)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::standard::{standard_basis, DEFAULT_BASIS_BOUND};
    use crate::diagrams::enumerate_diagrams;
    use crate::linalg::{PrimeField, RationalField};
    use crate::partitions::{enumerate_lambda, standard_tableaux};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn assert_representation<A: Arith, M: Representation<A>>(m: &M, diagrams: &[BrauerDiagram]) {
        for a in diagrams {
            for b in diagrams {
                let lhs = m.signed_matrix(&compose_signed(a, b)).unwrap();
                let rhs = m.diagram_matrix(a).unwrap().mul(&m.diagram_matrix(b).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{a} · {b}");
            }
        }
    }

    #[test]
    fn dimensions() {
        let w = StandardModule::new(3, &p(&[1]), RationalField).unwrap();
        assert_eq!(w.dim(), 3);
        assert_eq!(StandardModule::new(4, &p(&[4]), RationalField).unwrap().dim(), 1);
        assert!(StandardModule::new(3, &p(&[2]), RationalField).is_err());
        for n in 0..=6 {
            let total: usize = enumerate_lambda(n, 0, false).iter().map(|l| standard_dimension(n, l).pow(2)).sum();
            assert_eq!(total, crate::diagrams::enumerate::double_factorial_odd(2 * n));
        }
    }

    #[test]
    fn standard_modules_are_representations() {
        for n in 1..=3 {
            let all = enumerate_diagrams(n, n);
            for shape in enumerate_lambda(n, 0, false).iter() {
                assert_representation(&StandardModule::new(n, shape, RationalField).unwrap(), &all);
                assert_representation(&StandardModule::new(n, shape, PrimeField::new(3).unwrap()).unwrap(), &all);
            }
        }
        let all = enumerate_diagrams(4, 4);
        let sample: Vec<BrauerDiagram> = all.iter().step_by(9).cloned().collect();
        for shape in enumerate_lambda(4, 0, false).iter() {
            assert_representation(&StandardModule::new(4, shape, RationalField).unwrap(), &sample);
        }
    }

    #[test]
    fn module_matches_left_action_on_the_basis() {
        // The λ-part of g · C_{(S,T),(S0,T0)} in the standard basis is the
        // module action on S ⊗ m_T.
        let n = 3;
        let arith = RationalField;
        let basis = standard_basis(n, DEFAULT_BASIS_BOUND).unwrap();
        let exp = basis.expander(arith).unwrap();
        for shape in enumerate_lambda(n, 0, false).iter() {
            let w = StandardModule::new(n, shape, arith).unwrap();
            let f = standard_tableaux(shape).len();
            for d in enumerate_diagrams(n, n) {
                let m = w.diagram_matrix(&d).unwrap();
                for k in 0..w.dim() {
                    let label = crate::algebra::standard::BasisLabel {
                        shape: shape.clone(),
                        s1: k / f,
                        t1: k % f,
                        s2: 0,
                        t2: 0,
                    };
                    let c = &basis.elements()[basis.position(&label).unwrap()];
                    let coords = exp.coordinates(&IntegralElement::from_diagram(d.clone()).multiply(c));
                    for i in 0..w.dim() {
                        let target = crate::algebra::standard::BasisLabel { s1: i / f, t1: i % f, ..label.clone() };
                        assert_eq!(&coords[basis.position(&target).unwrap()], m.get(i, k));
                    }
                }
            }
        }
    }

    #[test]
    fn localisation_dimensions() {
        let arith = PrimeField::new(5).unwrap();
        let loc = localise(StandardModule::new(5, &p(&[1]), arith).unwrap()).unwrap();
        assert_eq!(loc.dim(), 3);
        let loc = localise(StandardModule::new(4, &p(&[2]), arith).unwrap()).unwrap();
        assert_eq!(loc.dim(), 1);
        let loc = localise(StandardModule::new(4, &p(&[3, 1]), arith).unwrap()).unwrap();
        assert_eq!(loc.dim(), 0);
        assert!(localise(StandardModule::new(2, &p(&[2]), arith).unwrap()).is_err());
    }

    #[test]
    fn localised_module_is_an_a_n_minus_two_module() {
        let loc = localise(StandardModule::new(5, &p(&[1]), RationalField).unwrap()).unwrap();
        assert_representation(&loc, &enumerate_diagrams(3, 3));
        let loc = localise(StandardModule::new(4, &p(&[1, 1]), RationalField).unwrap()).unwrap();
        assert_eq!(loc.dim(), 1);
        assert_representation(&loc, &enumerate_diagrams(2, 2));
    }

    #[test]
    fn duals() {
        for n in 1..=3 {
            let all = enumerate_diagrams(n, n);
            for shape in enumerate_lambda(n, 0, false).iter() {
                let d = dual_module(StandardModule::new(n, shape, RationalField).unwrap());
                assert_eq!(d.dim(), standard_dimension(n, shape));
                assert_representation(&d, &all);
            }
        }
    }
}
