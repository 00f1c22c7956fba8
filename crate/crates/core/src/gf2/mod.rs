//! Linear algebra over the two-element field.
//!
//! Vectors are bit-packed into `u64` words; matrices are row-major lists of
//! vectors. The module covers exactly what contextuality checking needs:
//! rank, solving `A·x = e`, and the minimum distance from `e` to `Im(A)`.

mod matrix;
mod search;
mod vector;

pub use matrix::{rank, solve, Gf2Matrix};
pub use search::{coset_min_weight, default_threads, CosetSearch, ImageBasis, SearchBudget};
pub use vector::Gf2Vector;

pub(crate) use search::search_with_basis;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
