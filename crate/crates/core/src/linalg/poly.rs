//! Univariate polynomials, minimal polynomials of matrices and
//! factorization over GF(p).

use std::fmt;

use num_bigint::BigUint;

use super::field::{Arith, Field, PrimeField, RationalField, Scalar};
use super::matrix::Matrix;
use crate::error::{bail, Result};

/// Polynomial with coefficients low degree first. The zero polynomial has
/// no coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<A: Arith> {
    arith: A,
    coeffs: Vec<A::Elem>,
}

impl<A: Arith> Polynomial<A> {
    pub fn new(arith: A, mut coeffs: Vec<A::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| arith.is_zero(c)) {
            coeffs.pop();
        }
        Polynomial { arith, coeffs }
    }

    pub fn zero(arith: A) -> Self {
        Polynomial { arith, coeffs: Vec::new() }
    }

    pub fn one(arith: A) -> Self {
        let c = vec![arith.one()];
        Polynomial { arith, coeffs: c }
    }

    /// `x - a`
    pub fn linear(arith: A, a: &A::Elem) -> Self {
        let c = vec![arith.neg(a), arith.one()];
        Polynomial { arith, coeffs: c }
    }

    pub fn monomial(arith: A, degree: usize) -> Self {
        let mut c = vec![arith.zero(); degree + 1];
        c[degree] = arith.one();
        Polynomial { arith, coeffs: c }
    }

    pub fn arith(&self) -> &A {
        &self.arith
    }

    pub fn coeffs(&self) -> &[A::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.arith.is_one(&self.coeffs[0])
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&A::Elem> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.arith.inv(lc).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &A::Elem) -> Self {
        let f = &self.arith;
        Self::new(f.clone(), self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.arith;
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        let c = (0..n).map(|i| f.add(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z))).collect();
        Self::new(f.clone(), c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&self.arith.from_i64(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.arith;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f.clone());
        }
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                f.mul_add_assign(&mut c[i + j], a, b);
            }
        }
        Self::new(f.clone(), c)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let f = &self.arith;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv = f.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f.clone()), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &inv);
            if f.is_zero(&c) {
                continue;
            }
            let neg = f.neg(&c);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                f.mul_add_assign(&mut rem[k + j], &neg, d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(f.clone(), quot), Self::new(f.clone(), rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.arith.clone());
        }
        let g = self.gcd(other);
        self.mul(other).div_rem(&g).0.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = &self.arith;
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, a)| f.mul(a, &f.from_i64(i as i64))).collect();
        Self::new(f.clone(), c)
    }

    pub fn eval(&self, x: &A::Elem) -> A::Elem {
        let f = &self.arith;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix<A>) -> Matrix<A> {
        let f = &self.arith;
        let n = m.rows();
        let mut acc = Matrix::zeros(f.clone(), n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).expect("square").add(&Matrix::identity(f.clone(), n).scale(c));
        }
        acc
    }

    pub fn to_poly(&self) -> Poly {
        Poly { field: self.arith.field(), coeffs: self.coeffs.iter().map(|c| self.arith.to_scalar(c)).collect() }
    }
}

/// A polynomial with tagged coefficients, low degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub field: Field,
    pub coeffs: Vec<Scalar>,
}

impl Poly {
    /// Normalizes trailing zeros away; coefficients must lie in `field`.
    pub fn new(field: Field, coeffs: Vec<Scalar>) -> Result<Self> {
        match field {
            Field::Prime(p) => Ok(Self::over(PrimeField::new(p as u64)?, &coeffs)?.to_poly()),
            Field::Rational => Ok(Self::over(RationalField, &coeffs)?.to_poly()),
        }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Result<Self> {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn over<A: Arith>(arith: A, coeffs: &[Scalar]) -> Result<Polynomial<A>> {
        let c = coeffs.iter().map(|s| arith.from_scalar(s)).collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(arith, c))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(match (cs.as_str(), i) {
                (_, 0) => cs,
                ("1", _) => mono,
                _ => format!("{cs}*{mono}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// Monic least-degree polynomial annihilating `m`: the lcm over basis
/// vectors of their Krylov annihilators.
pub fn minimal_polynomial<A: Arith>(m: &Matrix<A>) -> Result<Polynomial<A>> {
    if !m.is_square() {
        bail!(Usage, "minimal polynomial of a non-square {}x{} matrix", m.rows(), m.cols());
    }
    let f = m.arith().clone();
    let n = m.rows();
    let mut acc = Polynomial::one(f.clone());
    for j in 0..n {
        let mut e = vec![f.zero(); n];
        e[j] = f.one();
        if acc.degree() == Some(n) {
            break;
        }
        let mu = vector_annihilator(m, e);
        acc = acc.lcm(&mu);
    }
    Ok(acc)
}

/// Least monic `q` with `q(m) v = 0`, found by eliminating the Krylov
/// sequence `v, mv, m^2v, ...` as it is generated.
fn vector_annihilator<A: Arith>(m: &Matrix<A>, v: Vec<A::Elem>) -> Polynomial<A> {
    let f = m.arith().clone();
    let n = v.len();
    // Echelon rows: (pivot index, reduced vector, combination of Krylov powers).
    let mut basis: Vec<(usize, Vec<A::Elem>, Vec<A::Elem>)> = Vec::new();
    let mut current = v;
    for k in 0..=n {
        let mut w = current.clone();
        let mut comb = vec![f.zero(); n + 1];
        comb[k] = f.one();
        for (piv, row, rc) in &basis {
            if f.is_zero(&w[*piv]) {
                continue;
            }
            let c = f.neg(&w[*piv]);
            for (x, y) in w.iter_mut().zip(row) {
                f.mul_add_assign(x, &c, y);
            }
            for (x, y) in comb.iter_mut().zip(rc) {
                f.mul_add_assign(x, &c, y);
            }
        }
        match w.iter().position(|x| !f.is_zero(x)) {
            None => return Polynomial::new(f, comb),
            Some(piv) => {
                let inv = f.inv(&w[piv]).unwrap();
                let w: Vec<_> = w.iter().map(|x| f.mul(x, &inv)).collect();
                let comb: Vec<_> = comb.iter().map(|x| f.mul(x, &inv)).collect();
                basis.push((piv, w, comb));
            }
        }
        current = m.mul_vec(&current);
    }
    unreachable!("n+1 vectors in an n-dimensional space are dependent")
}

/// Irreducible factorization over GF(p): monic, pairwise coprime factors
/// with multiplicities, sorted by degree then coefficients.
pub fn factor_squarefree_gfp(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let Field::Prime(p) = f.field else {
        bail!(Unsupported, "polynomial factorization is only available over GF(p)");
    };
    let g = Poly::over(PrimeField::new(p as u64)?, &f.coeffs)?;
    Ok(factor_gfp(&g)?.into_iter().map(|(q, m)| (q.to_poly(), m)).collect())
}

/// Generic form of [`factor_squarefree_gfp`].
pub fn factor_gfp(f: &Polynomial<PrimeField>) -> Result<Vec<(Polynomial<PrimeField>, usize)>> {
    if f.is_zero() {
        bail!(Domain, "cannot factor the zero polynomial");
    }
    let mut out = Vec::new();
    for (sqf, mult) in squarefree_decomposition(&f.monic()) {
        for (g, d) in distinct_degree(&sqf) {
            for h in equal_degree(&g, d) {
                out.push((h, mult));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
    });
    Ok(out)
}

/// Yun-style decomposition with the characteristic-p correction.
fn squarefree_decomposition(f: &Polynomial<PrimeField>) -> Vec<(Polynomial<PrimeField>, usize)> {
    let ar = *f.arith();
    let p = ar.modulus() as usize;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0.monic();
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        // c is a polynomial in x^p; its p-th root has coefficients c_{ip}.
        let root = Polynomial::new(ar, c.coeffs().iter().step_by(p).cloned().collect());
        for (g, m) in squarefree_decomposition(&root.monic()) {
            out.push((g, m * p));
        }
    }
    let mut merged: Vec<(Polynomial<PrimeField>, usize)> = Vec::new();
    for (g, m) in out {
        match merged.iter_mut().find(|(_, mm)| *mm == m) {
            Some(entry) => entry.0 = entry.0.mul(&g),
            None => merged.push((g, m)),
        }
    }
    merged
}

/// `base^e mod modulus` for a possibly huge exponent.
fn pow_mod(base: &Polynomial<PrimeField>, e: &BigUint, modulus: &Polynomial<PrimeField>) -> Polynomial<PrimeField> {
    let mut acc = Polynomial::one(*base.arith()).rem(modulus);
    let b = base.rem(modulus);
    for i in (0..e.bits()).rev() {
        acc = acc.mul(&acc).rem(modulus);
        if e.bit(i) {
            acc = acc.mul(&b).rem(modulus);
        }
    }
    acc
}

/// Splits a monic square-free polynomial into products of irreducibles of
/// equal degree.
fn distinct_degree(f: &Polynomial<PrimeField>) -> Vec<(Polynomial<PrimeField>, usize)> {
    let ar = *f.arith();
    let p = BigUint::from(ar.modulus());
    let x = Polynomial::monomial(ar, 1);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = pow_mod(&h, &p, &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        out.push((rest.monic(), deg));
    }
    out
}

/// Deterministic Cantor-Zassenhaus: trial polynomials are enumerated from
/// a counter instead of drawn at random.
fn equal_degree(f: &Polynomial<PrimeField>, d: usize) -> Vec<Polynomial<PrimeField>> {
    let deg = f.degree().unwrap_or(0);
    if deg <= d {
        return vec![f.monic()];
    }
    let ar = *f.arith();
    let p = ar.modulus() as u64;
    let exponent = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    let mut counter: u64 = p;
    loop {
        counter += 1;
        let mut digits = Vec::new();
        let mut c = counter;
        while c > 0 {
            digits.push((c % p) as u32);
            c /= p;
        }
        let a = Polynomial::new(ar, digits);
        if a.degree().unwrap_or(0) >= deg {
            continue;
        }
        let b = pow_mod(&a, &exponent, f).sub(&Polynomial::one(ar));
        let g = b.gcd(f);
        if let Some(gd) = g.degree() {
            if gd > 0 && gd < deg {
                let mut out = equal_degree(&g, d);
                out.extend(equal_degree(&f.div_rem(&g).0.monic(), d));
                return out;
            }
        }
    }
}
