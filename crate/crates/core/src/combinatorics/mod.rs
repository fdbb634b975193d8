//! Partitions, bipartitions, and the closure order on `𝒬_n`.

mod bipartition;
mod order;
mod partition;

pub use bipartition::Bipartition;
pub use order::{
    alternate_linear_extension, bipartition_leq, covers, enumerate_bipartitions, hasse, hasse_check,
    CoverKind, CoverType,
};
pub use partition::{partitions_of, Partition};
