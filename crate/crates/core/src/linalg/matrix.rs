//! Dense matrices over an [`Arith`] field, with exact Gauss-Jordan
//! elimination.

use std::fmt;

use super::field::{Arith, Field, PrimeField, RationalField, Scalar};
use super::poly::Poly;
use crate::error::{bail, Result};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<A: Arith> {
    arith: A,
    rows: usize,
    cols: usize,
    data: Vec<A::Elem>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq)]
pub struct Echelon<A: Arith> {
    pub reduced: Matrix<A>,
    pub pivots: Vec<usize>,
}

impl<A: Arith> Echelon<A> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl<A: Arith> Matrix<A> {
    pub fn zeros(arith: A, rows: usize, cols: usize) -> Self {
        let data = vec![arith.zero(); rows * cols];
        Matrix { arith, rows, cols, data }
    }

    pub fn identity(arith: A, n: usize) -> Self {
        let mut m = Self::zeros(arith, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.arith.one();
        }
        m
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(arith: A, cols: usize, rows: Vec<Vec<A::Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                bail!(Usage, "row {i} has {} entries, expected {cols}", row.len());
            }
            data.extend(row);
        }
        Ok(Matrix { arith, rows: nrows, cols, data })
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(arith: A, rows: usize, columns: &[Vec<A::Elem>]) -> Self {
        let mut m = Self::zeros(arith, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn from_i64(arith: A, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&v| arith.from_i64(v))
            })
            .collect();
        Matrix { arith, rows: rows.len(), cols, data }
    }

    pub fn arith(&self) -> &A {
        &self.arith
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &A::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: A::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[A::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<A::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.arith.is_zero(v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.arith.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            bail!(Usage, "cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols);
        }
        let f = &self.arith;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for (o, b) in orow.iter_mut().zip(other.row(k)) {
                    f.mul_add_assign(o, a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[A::Elem]) -> Vec<A::Elem> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let f = &self.arith;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    f.mul_add_assign(&mut acc, a, b);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let f = &self.arith;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { arith: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &A::Elem) -> Self {
        let f = &self.arith;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Matrix { arith: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form. The input is left untouched.
    pub fn rref(&self) -> Echelon<A> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Echelon { reduced: m, pivots }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.arith.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for k in c..cols {
                let v = f.mul(self.get(r, k), &inv);
                self.set(r, k, v);
            }
            let pivot_row: Vec<A::Elem> = self.row(r)[c..].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let neg = f.neg(&factor);
                let row = &mut self.data[i * cols + c..(i + 1) * cols];
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    f.mul_add_assign(x, &neg, pv);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of the right null space `{v : m v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<A::Elem>> {
        let ech = self.rref();
        let f = &self.arith;
        let mut is_pivot = vec![false; self.cols];
        for &c in &ech.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (i, &pc) in ech.pivots.iter().enumerate() {
                    v[pc] = f.neg(ech.reduced.get(i, free));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            bail!(Usage, "cannot invert a {}x{} matrix", self.rows, self.cols);
        }
        let n = self.rows;
        let f = &self.arith;
        let mut aug = Self::zeros(f.clone(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            bail!(Domain, "matrix is singular");
        }
        let mut inv = Self::zeros(f.clone(), n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Some `x` with `m x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[A::Elem]) -> Option<Vec<A::Elem>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let f = &self.arith;
        let mut aug = Self::zeros(f.clone(), self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Converts entrywise to another field.
    pub fn map<B: Arith>(&self, arith: B, mut g: impl FnMut(&A::Elem) -> B::Elem) -> Matrix<B> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut g).collect(), arith }
    }

    pub fn to_scalars(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|v| self.arith.to_scalar(v)).collect()).collect()
    }
}

impl<A: Arith> fmt::Display for Matrix<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|v| self.arith.to_scalar(v).to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A matrix whose field is chosen at runtime.
#[derive(Clone, Debug, PartialEq)]
pub enum DenseMatrix {
    Prime(Matrix<PrimeField>),
    Rational(Matrix<RationalField>),
}

/// Runs `$body` with `$m` bound to the inner generic matrix.
macro_rules! dispatch {
    ($self:expr, $m:ident => $body:expr) => {
        match $self {
            DenseMatrix::Prime($m) => $body,
            DenseMatrix::Rational($m) => $body,
        }
    };
}

impl DenseMatrix {
    /// Builds from tagged scalars. Every entry must share `field`.
    pub fn from_scalars(field: Field, rows: &[Vec<Scalar>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        for s in rows.iter().flatten() {
            if s.field() != field {
                bail!(Usage, "entry {s} is over {} but the matrix is over {field}", s.field());
            }
        }
        match field {
            Field::Prime(p) => {
                let f = PrimeField::new(p as u64)?;
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(|s| f.from_scalar(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(DenseMatrix::Prime(Matrix::from_rows(f, cols, rows)?))
            }
            Field::Rational => {
                let f = RationalField;
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(|s| f.from_scalar(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(DenseMatrix::Rational(Matrix::from_rows(f, cols, rows)?))
            }
        }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Result<Self> {
        Ok(match field {
            Field::Prime(p) => DenseMatrix::Prime(Matrix::from_i64(PrimeField::new(p as u64)?, rows)),
            Field::Rational => DenseMatrix::Rational(Matrix::from_i64(RationalField, rows)),
        })
    }

    pub fn field(&self) -> Field {
        dispatch!(self, m => m.arith().field())
    }

    pub fn rows(&self) -> usize {
        dispatch!(self, m => m.rows())
    }

    pub fn cols(&self) -> usize {
        dispatch!(self, m => m.cols())
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        dispatch!(self, m => m.arith().to_scalar(m.get(i, j)))
    }

    /// Reduced row echelon form, pivot columns and rank.
    pub fn rref(&self) -> (DenseMatrix, Vec<usize>, usize) {
        match self {
            DenseMatrix::Prime(m) => {
                let e = m.rref();
                let r = e.rank();
                (DenseMatrix::Prime(e.reduced), e.pivots, r)
            }
            DenseMatrix::Rational(m) => {
                let e = m.rref();
                let r = e.rank();
                (DenseMatrix::Rational(e.reduced), e.pivots, r)
            }
        }
    }

    pub fn rank(&self) -> usize {
        dispatch!(self, m => m.rank())
    }

    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        dispatch!(self, m => m
            .kernel()
            .iter()
            .map(|v| v.iter().map(|x| m.arith().to_scalar(x)).collect())
            .collect())
    }

    pub fn mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        match (self, other) {
            (DenseMatrix::Prime(a), DenseMatrix::Prime(b)) if a.arith() == b.arith() => {
                Ok(DenseMatrix::Prime(a.mul(b)?))
            }
            (DenseMatrix::Rational(a), DenseMatrix::Rational(b)) => Ok(DenseMatrix::Rational(a.mul(b)?)),
            _ => bail!(Usage, "field mismatch: {} and {}", self.field(), other.field()),
        }
    }

    pub fn mul_scalars(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        dispatch!(self, m => {
            let f = m.arith();
            let v = v.iter().map(|s| f.from_scalar(s)).collect::<Result<Vec<_>>>()?;
            if v.len() != m.cols() {
                bail!(Usage, "vector has length {}, expected {}", v.len(), m.cols());
            }
            Ok(m.mul_vec(&v).iter().map(|x| f.to_scalar(x)).collect())
        })
    }

    /// Monic minimal polynomial of a square matrix.
    pub fn minimal_polynomial(&self) -> Result<Poly> {
        dispatch!(self, m => Ok(super::poly::minimal_polynomial(m)?.to_poly()))
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        dispatch!(self, m => write!(f, "{m}"))
    }
}
