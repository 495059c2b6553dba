//! Exact computations behind the dimension bookkeeping of Galois deformation
//! rings: finite-field linear algebra, the partition model of unipotent
//! inertial types, cohomology of cyclic groups, the smoothness and
//! dual-Selmer ledger, Taylor's `(1,...,1)` condition and the splitting
//! density bound on explicit finite groups.
//!
//! Every quantity is an exact integer, field element or rational; nothing in
//! the crate uses floating point.

pub mod audit;
pub mod cohomology;
pub mod density;
pub mod error;
pub mod ff;
pub mod ledger;
pub mod partitions;
pub mod scenario;
pub mod taylor;
pub mod verify;

pub use error::{Error, Result};
