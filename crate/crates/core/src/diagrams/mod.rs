//! Brauer diagrams and their signed composition.

mod diagram;
pub mod enumerate;
mod involution;
pub mod layers;
mod marking;
pub mod special;

pub use diagram::{BrauerDiagram, EdgeKind};
pub use enumerate::{concatenate_unsigned, enumerate_diagrams, enumerate_i, factorize};
pub use involution::phi;
pub use marking::{compose_signed, standard_marking, tensor_signed, MarkedDiagram, Marker, Marking, SignedDiagram};
pub use special::{epsilon, f_diagram, g_diagram, special_diagrams};
