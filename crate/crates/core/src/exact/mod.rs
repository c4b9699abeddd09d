//! Exact scalars, partitions and dense linear algebra over the rationals.

mod matrix;
mod partition;
mod rational;
mod vector;

pub use matrix::RationalMatrix;
pub use partition::{
    partition_index, partition_splittings, partitions_of, Partition, PartitionTable,
};
pub use rational::{format_rational, int, ratio, Rational};
pub use vector::PartitionVector;
