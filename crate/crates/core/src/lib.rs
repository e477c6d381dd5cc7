//! Combinatorics and exact character arithmetic for RoCK blocks of the
//! double covers of the symmetric groups.
//!
//! Layers, bottom up: [`partitions`] and [`sqrt2`], then the bar-abacus
//! ([`abacus`], [`rouquier`]), shifted branching ([`stembridge`]), character
//! vectors ([`supercharacters`]), lattice checks ([`lattice`], [`rock_verify`])
//! and line Brauer trees ([`brauer_trees`]).

pub mod abacus;
pub mod brauer_trees;
pub mod error;
pub mod lattice;
pub mod par;
pub mod partitions;
pub mod rock_verify;
pub mod rouquier;
pub mod sqrt2;
pub mod stembridge;
pub mod supercharacters;

pub use error::{Error, Result};
pub use par::Exec;
pub use partitions::{Kind, Partition};
pub use sqrt2::Sqrt2Scalar;
