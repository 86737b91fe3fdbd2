//! The centre of `A_n` over GF(p).
//!
//! A central element is fixed by conjugation with every `s_i`, so its
//! coefficients are constant up to sign on signed conjugation orbits of
//! diagrams (an orbit meeting a diagram with both signs carries zero).
//! Since every `e_i` is `±w e_1 w^{-1}`, commuting with `e_1` is the only
//! further condition. The integer data depends only on `n` and is cached.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::element::IntegralElement;
use crate::diagrams::{compose_signed, enumerate_diagrams, BrauerDiagram, SignedDiagram};
use crate::error::{bail, Result};
use crate::linalg::{Arith, Matrix, PrimeField, StructureConstants};

/// Largest `n` for which [`center`] runs by default.
pub const DEFAULT_CENTER_BOUND: usize = 5;

/// Diagrams of `A_n`, their full signed multiplication table, and the
/// centraliser system in orbit coordinates.
pub struct DiagramAlgebra {
    n: usize,
    diagrams: Vec<BrauerDiagram>,
    index: HashMap<BrauerDiagram, usize>,
    /// `table[x * len + y] = (z, sign)` with `x y = sign · z`; sign 0 for zero.
    table: Vec<(u32, i8)>,
    /// Signed orbit sums; the first entry of each has sign `+1`.
    orbits: Vec<Vec<(usize, i8)>>,
    /// Column `k` is `e_1 O_k - O_k e_1` in the diagram basis.
    commutator: Vec<Vec<i64>>,
}

impl DiagramAlgebra {
    fn build(n: usize) -> Self {
        let diagrams = enumerate_diagrams(n, n);
        let len = diagrams.len();
        let index: HashMap<BrauerDiagram, usize> = diagrams.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        let table: Vec<(u32, i8)> = diagrams
            .par_iter()
            .flat_map_iter(|a| {
                diagrams.iter().map(|b| match compose_signed(a, b) {
                    SignedDiagram::Zero => (0, 0),
                    SignedDiagram::Term { sign, diagram } => (index[&diagram] as u32, sign),
                })
            })
            .collect();
        let product = |x: usize, y: usize| table[x * len + y];

        let gens: Vec<usize> =
            (0..n.saturating_sub(1)).map(|i| index[&BrauerDiagram::simple_transposition(n, i)]).collect();
        let mut seen: Vec<Option<i8>> = vec![None; len];
        let mut orbits = Vec::new();
        for start in 0..len {
            if seen[start].is_some() {
                continue;
            }
            seen[start] = Some(1);
            let mut members = vec![start];
            let mut killed = false;
            let mut queue = VecDeque::from([start]);
            while let Some(d) = queue.pop_front() {
                let sd = seen[d].expect("visited");
                for &s in &gens {
                    let (left, s1) = product(s, d);
                    let (conj, s2) = product(left as usize, s);
                    let sign = sd * s1 * s2;
                    let conj = conj as usize;
                    match seen[conj] {
                        None => {
                            seen[conj] = Some(sign);
                            members.push(conj);
                            queue.push_back(conj);
                        }
                        Some(old) if old != sign => killed = true,
                        Some(_) => {}
                    }
                }
            }
            if !killed {
                orbits.push(members.iter().map(|&d| (d, seen[d].expect("visited"))).collect());
            }
        }

        let mut commutator = vec![vec![0i64; orbits.len()]; len];
        if n >= 2 {
            let e1 = index[&BrauerDiagram::cup_cap(n, 0)];
            for (k, orbit) in orbits.iter().enumerate() {
                for &(d, s) in orbit {
                    let (left, sl) = product(e1, d);
                    let (right, sr) = product(d, e1);
                    commutator[left as usize][k] += (s * sl) as i64;
                    commutator[right as usize][k] -= (s * sr) as i64;
                }
            }
        }
        DiagramAlgebra { n, diagrams, index, table, orbits, commutator }
    }

    /// Shared instance per `n`.
    pub fn shared(n: usize) -> Arc<DiagramAlgebra> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DiagramAlgebra>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(hit) = cache.lock().expect("cache lock").get(&n) {
            return hit.clone();
        }
        let data = Arc::new(DiagramAlgebra::build(n));
        cache.lock().expect("cache lock").insert(n, data.clone());
        data
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagrams(&self) -> &[BrauerDiagram] {
        &self.diagrams
    }

    pub fn index_of(&self, d: &BrauerDiagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// `(z, sign)` with `diagrams[x] · diagrams[y] = sign · diagrams[z]`.
    pub fn product(&self, x: usize, y: usize) -> (usize, i8) {
        let (z, s) = self.table[x * self.diagrams.len() + y];
        (z as usize, s)
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }
}

/// A basis of `Z(A_n)` over GF(p), each element normalised to coefficient
/// 1 on the representative of its own pivot orbit and 0 on the others.
pub struct Center {
    field: PrimeField,
    algebra: Arc<DiagramAlgebra>,
    /// Dense coefficient vectors over the diagrams.
    basis: Vec<Vec<u32>>,
    /// Representative diagram of each pivot orbit.
    pivots: Vec<usize>,
}

pub fn center(n: usize, p: u64, bound: usize) -> Result<Center> {
    if n > bound {
        bail!(Resource, "centre of A_{n} exceeds the configured bound {bound}");
    }
    let field = PrimeField::new(p)?;
    let algebra = DiagramAlgebra::shared(n);
    let cols = algebra.orbit_count();
    let rows: Vec<Vec<u32>> =
        algebra.commutator.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
    let kernel = Matrix::from_rows(field, cols, rows)?.kernel();
    let basis_orbits =
        if kernel.is_empty() { Matrix::zeros(field, 0, cols) } else { Matrix::from_rows(field, cols, kernel)? };
    let echelon = basis_orbits.rref();
    let len = algebra.diagrams.len();
    let mut basis = Vec::new();
    let mut pivots = Vec::new();
    for (row, &pivot) in echelon.pivots.iter().enumerate() {
        let mut v = vec![0u32; len];
        for (k, orbit) in algebra.orbits.iter().enumerate() {
            let c = *echelon.reduced.get(row, k);
            if c != 0 {
                for &(d, s) in orbit {
                    v[d] = if s > 0 { c } else { field.neg(&c) };
                }
            }
        }
        basis.push(v);
        pivots.push(algebra.orbits[pivot][0].0);
    }
    Ok(Center { field, algebra, basis, pivots })
}

impl Center {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn algebra(&self) -> &DiagramAlgebra {
        &self.algebra
    }

    /// Basis elements as coefficient vectors over [`DiagramAlgebra::diagrams`].
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    /// `Σ c_k z_k` as a coefficient vector over the diagrams.
    pub fn combine(&self, coords: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0; self.algebra.diagrams.len()];
        for (c, z) in coords.iter().zip(&self.basis) {
            if *c != 0 {
                for (o, v) in out.iter_mut().zip(z) {
                    f.mul_add_assign(o, c, v);
                }
            }
        }
        out
    }

    /// Structure constants in this basis. A product of central elements is
    /// central, so its coordinates are its coefficients on the pivot
    /// representatives.
    pub fn structure_constants(&self) -> Result<StructureConstants> {
        let f = self.field;
        let alg = &self.algebra;
        let len = alg.diagrams.len();
        let target_of: HashMap<usize, usize> = self.pivots.iter().enumerate().map(|(k, &d)| (d, k)).collect();
        let mut contributions: Vec<Vec<(u32, u32, i8)>> = vec![Vec::new(); self.dim()];
        for x in 0..len {
            for y in 0..len {
                let (z, s) = alg.product(x, y);
                if s != 0 {
                    if let Some(&k) = target_of.get(&z) {
                        contributions[k].push((x as u32, y as u32, s));
                    }
                }
            }
        }
        let dim = self.dim();
        let table: Vec<Vec<Vec<u32>>> = (0..dim)
            .into_par_iter()
            .map(|a| {
                (0..dim)
                    .map(|b| {
                        contributions
                            .iter()
                            .map(|list| {
                                list.iter().fold(0u32, |acc, &(x, y, s)| {
                                    let term = f.mul(&self.basis[a][x as usize], &self.basis[b][y as usize]);
                                    if s > 0 {
                                        f.add(&acc, &term)
                                    } else {
                                        f.sub(&acc, &term)
                                    }
                                })
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let identity = alg.index[&BrauerDiagram::identity(alg.n)];
        let one = self.pivots.iter().map(|&d| u32::from(d == identity)).collect();
        StructureConstants::new(f, table, one)
    }

    /// Basis elements as integer-coefficient elements (residues in `[0,p)`).
    pub fn elements(&self) -> Vec<IntegralElement> {
        self.basis.iter().map(|v| self.to_element(v)).collect()
    }

    pub fn to_element(&self, v: &[u32]) -> IntegralElement {
        let mut x = IntegralElement::zero();
        for (d, &c) in self.algebra.diagrams.iter().zip(v) {
            x.add_term(d.clone(), c as i64);
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::split_idempotents;
    use rand::{Rng, SeedableRng};

    fn reduce(x: &IntegralElement, p: i64) -> Vec<(BrauerDiagram, i64)> {
        x.terms().iter().map(|(d, &c)| (d.clone(), c.rem_euclid(p))).filter(|(_, c)| *c != 0).collect()
    }

    #[test]
    fn small_centres() {
        let z = center(1, 3, DEFAULT_CENTER_BOUND).unwrap();
        assert_eq!(z.dim(), 1);
        let z = center(0, 5, DEFAULT_CENTER_BOUND).unwrap();
        assert_eq!(z.dim(), 1);
        assert!(center(6, 3, DEFAULT_CENTER_BOUND).is_err());
    }

    #[test]
    fn generators_span() {
        for n in 1..=4 {
            let mut gens = Vec::new();
            for i in 0..n - 1 {
                gens.push(BrauerDiagram::simple_transposition(n, i));
                gens.push(BrauerDiagram::cup_cap(n, i));
            }
            let mut reached = std::collections::HashSet::from([BrauerDiagram::identity(n)]);
            let mut frontier = vec![BrauerDiagram::identity(n)];
            while let Some(d) = frontier.pop() {
                for g in &gens {
                    if let Some(next) = compose_signed(g, &d).diagram() {
                        if reached.insert(next.clone()) {
                            frontier.push(next.clone());
                        }
                    }
                    let unsigned = crate::diagrams::concatenate_unsigned(g, &d);
                    if let Some(next) = unsigned {
                        if reached.insert(next.clone()) {
                            frontier.push(next);
                        }
                    }
                }
            }
            assert_eq!(reached.len(), enumerate_diagrams(n, n).len(), "n = {n}");
        }
    }

    #[test]
    fn central_elements_commute_with_random_elements() {
        let p = 5;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 2..=4 {
            let z = center(n, p, DEFAULT_CENTER_BOUND).unwrap();
            let all = enumerate_diagrams(n, n);
            for _ in 0..50 {
                let mut a = IntegralElement::zero();
                for _ in 0..3 {
                    a.add_term(all[rng.gen_range(0..all.len())].clone(), rng.gen_range(1..5));
                }
                for c in z.elements() {
                    assert_eq!(reduce(&a.multiply(&c), p as i64), reduce(&c.multiply(&a), p as i64));
                }
            }
        }
    }

    #[test]
    fn idempotent_count_for_a3_mod_5() {
        let z = center(3, 5, DEFAULT_CENTER_BOUND).unwrap();
        let sc = z.structure_constants().unwrap();
        assert_eq!(split_idempotents(&sc).unwrap().len(), 2);
    }
}
