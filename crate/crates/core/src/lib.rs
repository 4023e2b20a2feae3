//! Partition combinatorics, exact character degrees of symmetric, alternating
//! and general linear groups, and the classification of characters whose
//! degree avoids a pair of primes.

pub mod arith;
pub mod error;
pub mod gltype;
pub mod graph;
pub mod partitions;
pub mod piclass;
pub mod symdeg;
pub mod verify;

pub use error::{Error, Result};
pub use graph::PrimeGraph;
pub use partitions::{enumerate_partitions, hook_partitions, Cell, Partition, Tower};
pub use piclass::PrimePair;
