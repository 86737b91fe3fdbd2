//! Primitive idempotents of a finite-dimensional commutative algebra over
//! GF(p).

use super::field::{Arith, PrimeField};
use super::matrix::Matrix;
use super::poly::{factor_gfp, minimal_polynomial};
use crate::error::{bail, Result};

/// A commutative algebra given by structure constants on a basis
/// `b_0..b_{d-1}`: `b_i b_j = sum_k table[i][j][k] b_k`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    field: PrimeField,
    table: Vec<Vec<Vec<u32>>>,
    one: Vec<u32>,
}

impl StructureConstants {
    pub fn new(field: PrimeField, table: Vec<Vec<Vec<u32>>>, one: Vec<u32>) -> Result<Self> {
        let d = one.len();
        if table.len() != d || table.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            bail!(Usage, "structure constants do not form a {d}x{d}x{d} table");
        }
        Ok(StructureConstants { field, table, one })
    }

    pub fn dim(&self) -> usize {
        self.one.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn one(&self) -> &[u32] {
        &self.one
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let d = self.dim();
        let mut out = vec![0u32; d];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| **b != 0) {
                let ab = f.mul(a, b);
                for (o, c) in out.iter_mut().zip(&self.table[i][j]) {
                    f.mul_add_assign(o, &ab, c);
                }
            }
        }
        out
    }

    fn pow(&self, x: &[u32], mut e: u64) -> Vec<u32> {
        let mut acc = self.one.clone();
        let mut b = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// Matrix of multiplication by `x`, acting on coordinate columns.
    pub fn left_mult_matrix(&self, x: &[u32]) -> Matrix<PrimeField> {
        let cols: Vec<Vec<u32>> = (0..self.dim()).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Verifies `b_i b_j = b_j b_i` for every pair of basis elements.
    pub fn check_commutative(&self) -> Result<()> {
        for i in 0..self.dim() {
            for j in 0..i {
                if self.table[i][j] != self.table[j][i] {
                    bail!(Usage, "algebra is not commutative: b{i} b{j} != b{j} b{i}");
                }
            }
        }
        Ok(())
    }

    /// Structure constants of the ideal `eC`, a unital algebra with
    /// identity `e` when `e` is idempotent.
    pub fn corner(&self, e: &[u32]) -> Result<StructureConstants> {
        let f = self.field;
        let image = self.left_mult_matrix(e).transpose().rref();
        let basis: Vec<Vec<u32>> = (0..image.rank()).map(|i| image.reduced.row(i).to_vec()).collect();
        let m = Matrix::from_columns(f, self.dim(), &basis);
        let coords = |v: &[u32]| -> Result<Vec<u32>> {
            m.solve(v).ok_or_else(|| crate::Error::Internal("product left the ideal".into()))
        };
        let table = basis
            .iter()
            .map(|x| basis.iter().map(|y| coords(&self.mul(x, y))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        StructureConstants::new(f, table, coords(e)?)
    }
}

/// Pairwise-orthogonal primitive idempotents summing to the identity.
///
/// The nilradical is the kernel of the `m`-fold Frobenius with
/// `p^m >= dim`. Elements of `{x : x^p - x in J}` act semisimply with
/// eigenvalues in GF(p) modulo `J`; the spectral idempotents of each one
/// are lifted along `J` and intersected with the current decomposition.
pub fn split_idempotents(alg: &StructureConstants) -> Result<Vec<Vec<u32>>> {
    alg.check_commutative()?;
    let f = alg.field();
    let p = f.modulus() as u64;
    let d = alg.dim();
    if d == 0 {
        return Ok(Vec::new());
    }

    let frob_cols: Vec<Vec<u32>> = (0..d).map(|j| alg.pow(&alg.basis_vector(j), p)).collect();
    let frob = Matrix::from_columns(f, d, &frob_cols);
    let mut m = 1u32;
    while (p as u128).pow(m) < d as u128 {
        m += 1;
    }
    let mut frob_m = frob.clone();
    for _ in 1..m {
        frob_m = frob_m.mul(&frob)?;
    }
    let radical = frob_m.kernel();

    // Solve (F - I)x = j with j in J: kernel of [F - I | -J].
    let mut system = Matrix::zeros(f, d, d + radical.len());
    for i in 0..d {
        for j in 0..d {
            let v = if i == j { f.sub(frob.get(i, j), &1) } else { *frob.get(i, j) };
            system.set(i, j, v);
        }
        for (k, r) in radical.iter().enumerate() {
            system.set(i, d + k, f.neg(&r[i]));
        }
    }
    let fixed: Vec<Vec<u32>> = system.kernel().into_iter().map(|v| v[..d].to_vec()).collect();

    // Keep only elements independent modulo J.
    let mut span: Vec<Vec<u32>> = radical.clone();
    let mut base_rank = Matrix::from_columns(f, d, &span).rank();
    let mut splitters = Vec::new();
    for x in fixed {
        span.push(x.clone());
        let r = Matrix::from_columns(f, d, &span).rank();
        if r > base_rank {
            base_rank = r;
            splitters.push(x);
        } else {
            span.pop();
        }
    }

    let mut idems = vec![alg.one().to_vec()];
    for b in &splitters {
        let spectral = spectral_idempotents(alg, b)?;
        if spectral.len() < 2 {
            continue;
        }
        let mut next = Vec::new();
        for e in &idems {
            for s in &spectral {
                let es = alg.mul(e, s);
                if es.iter().any(|&c| c != 0) {
                    next.push(es);
                }
            }
        }
        idems = next;
    }

    verify_decomposition(alg, &idems)?;
    Ok(idems)
}

/// Lifted idempotents `E_a` for the distinct eigenvalues `a` of `b`.
fn spectral_idempotents(alg: &StructureConstants, b: &[u32]) -> Result<Vec<Vec<u32>>> {
    let f = alg.field();
    let mu = minimal_polynomial(&alg.left_mult_matrix(b))?;
    let mut roots = Vec::new();
    for (g, _) in factor_gfp(&mu)? {
        if g.degree() != Some(1) {
            bail!(Internal, "element of the Frobenius-fixed subalgebra has a non-linear spectral factor");
        }
        roots.push(f.neg(&g.coeffs()[0]));
    }
    let shifted = |a: u32| -> Vec<u32> {
        let mut v = b.to_vec();
        for (vi, oi) in v.iter_mut().zip(alg.one()) {
            *vi = f.sub(vi, &f.mul(oi, &a));
        }
        v
    };
    let mut out = Vec::new();
    for (i, &a) in roots.iter().enumerate() {
        let mut e = alg.one().to_vec();
        for (j, &c) in roots.iter().enumerate() {
            if i != j {
                let inv = f.inv(&f.sub(&a, &c)).expect("distinct roots");
                let factor: Vec<u32> = shifted(c).iter().map(|x| f.mul(x, &inv)).collect();
                e = alg.mul(&e, &factor);
            }
        }
        out.push(lift_idempotent(alg, e));
    }
    Ok(out)
}

/// Newton iteration `e <- 3e^2 - 2e^3` until `e` is fixed.
fn lift_idempotent(alg: &StructureConstants, mut e: Vec<u32>) -> Vec<u32> {
    let f = alg.field();
    loop {
        let e2 = alg.mul(&e, &e);
        if e2 == e {
            return e;
        }
        let e3 = alg.mul(&e2, &e);
        e = e2.iter().zip(&e3).map(|(a, b)| f.sub(&f.mul(&3, a), &f.mul(&2, b))).collect();
    }
}

fn verify_decomposition(alg: &StructureConstants, idems: &[Vec<u32>]) -> Result<()> {
    let f = alg.field();
    let mut sum = vec![0u32; alg.dim()];
    for (i, e) in idems.iter().enumerate() {
        for (s, x) in sum.iter_mut().zip(e) {
            *s = f.add(s, x);
        }
        for (j, g) in idems.iter().enumerate() {
            let prod = alg.mul(e, g);
            let ok = if i == j { prod == *e } else { prod.iter().all(|&c| c == 0) };
            if !ok {
                bail!(Internal, "idempotents {i} and {j} are not orthogonal idempotents");
            }
        }
    }
    if sum != alg.one() {
        bail!(Internal, "idempotents do not sum to the identity");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn prime_field_is_primitive() {
        let c = StructureConstants::new(gf(5), vec![vec![vec![1]]], vec![1]).unwrap();
        assert_eq!(split_idempotents(&c).unwrap(), vec![vec![1]]);
    }

    #[test]
    fn product_of_two_fields() {
        let table = vec![vec![vec![1, 0], vec![0, 0]], vec![vec![0, 0], vec![0, 1]]];
        let c = StructureConstants::new(gf(7), table, vec![1, 1]).unwrap();
        let mut e = split_idempotents(&c).unwrap();
        e.sort();
        assert_eq!(e, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn quotient_by_x_squared_minus_x() {
        // basis 1, x with x^2 = x over GF(3)
        let table = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 1]]];
        let c = StructureConstants::new(gf(3), table, vec![1, 0]).unwrap();
        let mut e = split_idempotents(&c).unwrap();
        e.sort();
        // x = (0,1) and 1 - x = (1, 2)
        assert_eq!(e, vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn local_algebra_with_radical() {
        // GF(5)[x]/(x^3) is local: a single idempotent.
        let mut table = vec![vec![vec![0; 3]; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                if i + j < 3 {
                    table[i][j][i + j] = 1;
                }
            }
        }
        let c = StructureConstants::new(gf(5), table, vec![1, 0, 0]).unwrap();
        assert_eq!(split_idempotents(&c).unwrap(), vec![vec![1, 0, 0]]);
    }

    #[test]
    fn mixed_radical_and_extension_field() {
        // GF(3)[x]/((x^2+1)(x-1)^2): one field factor GF(9), one local factor.
        let f = gf(3);
        let modulus = [1i64, -2, 2, -2, 1]; // (x^2+1)(x^2-2x+1), low degree first
        let d = 4;
        let reduce = |mut c: Vec<u32>| -> Vec<u32> {
            for k in (d..c.len()).rev() {
                let lead = c[k];
                if lead != 0 {
                    for (j, &m) in modulus.iter().enumerate() {
                        let idx = k - d + j;
                        c[idx] = f.sub(&c[idx], &f.mul(&lead, &f.from_i64(m)));
                    }
                }
            }
            c.truncate(d);
            c
        };
        let table: Vec<Vec<Vec<u32>>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut c = vec![0u32; 2 * d];
                        c[i + j] = 1;
                        reduce(c)
                    })
                    .collect()
            })
            .collect();
        let c = StructureConstants::new(f, table, vec![1, 0, 0, 0]).unwrap();
        let e = split_idempotents(&c).unwrap();
        assert_eq!(e.len(), 2);
        for x in &e {
            let corner = c.corner(x).unwrap();
            assert_eq!(split_idempotents(&corner).unwrap().len(), 1);
        }
    }

    #[test]
    fn rejects_noncommutative() {
        // 2x2 matrix units are not commutative.
        let mut table = vec![vec![vec![0u32; 4]; 4]; 4];
        // E_ij E_kl = delta_jk E_il, index 2*i + j
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)].iter().enumerate() {
            for (c, d) in [(0, 0), (0, 1), (1, 0), (1, 1)].iter().enumerate() {
                if b.1 == d.0 {
                    table[a][c][2 * b.0 + d.1] = 1;
                }
            }
        }
        let c = StructureConstants::new(gf(5), table, vec![1, 0, 0, 1]).unwrap();
        assert!(matches!(split_idempotents(&c), Err(crate::Error::Usage(_))));
    }
}
