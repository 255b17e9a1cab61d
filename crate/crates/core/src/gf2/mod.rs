//! Bit-packed linear algebra over GF(2).
//!
//! Rows are stored as runs of 64-bit words and eliminated with word-wide XOR.
//! Pivot selection always takes the lowest available column, so every
//! reduction is deterministic.

mod matrix;
mod vector;

pub use matrix::{BitMatrix, RowSpace};
pub(crate) use vector::and_parity;
pub use vector::BitVec;
