//! Young-diagram combinatorics: partitions, cores, the Mullineux map,
//! tableaux, paths in Young's lattice and the label sets `Λ_n`.

pub mod cores;
pub mod lambda;
pub mod mullineux;
pub mod partition;
pub mod paths;
pub mod tableaux;

pub use cores::{p_core, two_core};
pub use lambda::{enumerate_lambda, in_lambda, in_lambda_prime, LambdaSet};
pub use mullineux::mullineux;
pub use partition::{dominance_leq, Partition};
pub use paths::{enumerate_paths, PartitionPath};
pub use tableaux::{count_standard_tableaux, standard_tableaux, StandardTableau};
