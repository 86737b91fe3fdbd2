pub mod algebra;
pub mod blocks;
pub mod cli;
pub mod diagrams;
pub mod error;
pub mod linalg;
pub mod partitions;
pub mod verify;

pub use error::{Error, Result};
