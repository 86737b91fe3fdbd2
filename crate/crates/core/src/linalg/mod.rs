//! Exact scalars, dense matrices, polynomials and idempotent splitting.

pub mod field;
pub mod idempotents;
pub mod matrix;
pub mod poly;

pub use field::{Arith, Field, PrimeField, RationalField, Scalar};
pub use idempotents::{split_idempotents, StructureConstants};
pub use matrix::{DenseMatrix, Echelon, Matrix};
pub use poly::{factor_squarefree_gfp, minimal_polynomial, Poly, Polynomial};
