//! Symbols, residual points, the generalized Springer correspondence and
//! Green functions for Weyl groups of type B with two parameters `k` and
//! `mk`, `m` a half-integer.

pub mod exact_algebra;
pub mod partitions;
pub mod residual;
pub mod symbols;
pub mod springer;
pub mod characters;
pub mod green;
pub mod cli;
