//! The algebra `A_n`, its standard basis and standard modules, and the
//! centre.

pub mod center;
mod element;
pub mod gram;
pub mod module;
pub mod perm;
pub mod standard;
pub mod symmetric;

pub use center::{center, Center};
pub use element::{AlgebraElement, IntegralElement};
pub use gram::{gram_matrix, gram_rank};
pub use module::{
    dual_module, localise, standard_dimension, DualModule, LocalisedModule, Representation, StandardModule,
};
pub use standard::{standard_basis, BasisLabel, StandardBasis};
pub use symmetric::{involution_iota, murphy_basis, sign_twist_alpha, MurphyBasis, SpechtModule};
