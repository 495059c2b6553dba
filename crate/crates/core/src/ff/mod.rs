//! Exact linear algebra over finite fields `F_{p^m}`.
//!
//! Fields are built on the lexicographically smallest monic irreducible
//! modulus, so every run sees the same model of `F_{p^m}`. Matrices are
//! dense; everything is sized for matrices up to roughly 64x64.

mod field;
pub(crate) mod fp;
mod matrix;
mod poly;
mod roots;

pub use field::{is_prime, FieldElement, FiniteField};
pub use matrix::Matrix;
pub use poly::Poly;
pub use roots::{
    eigenvalues_in_splitting_field, roots_with_multiplicity, Eigenvalues, Embedding,
    ROOT_SCAN_BUDGET,
};
