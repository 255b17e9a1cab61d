use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("index ({row}, {col}) out of range for a {rows}x{cols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("column order is not a permutation of 0..{cols}")]
    InvalidPermutation { cols: usize },

    /// The right-hand side is outside the column space of the matrix.
    #[error("linear system is infeasible")]
    Infeasible,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("search budget exceeded: {required} candidates needed, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    /// Raised when an internal consistency check fails, e.g. an OSD solve on a
    /// syndrome that was produced by a real error.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_len(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}
