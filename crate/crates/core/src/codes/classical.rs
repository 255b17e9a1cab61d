use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// A classical linear code `ker H` given by its `m × n` parity-check matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalCode {
    h: BitMatrix,
}

impl ClassicalCode {
    pub fn new(h: BitMatrix) -> Self {
        Self { h }
    }

    pub fn h(&self) -> &BitMatrix {
        &self.h
    }

    /// Block length.
    pub fn n(&self) -> usize {
        self.h.cols()
    }

    /// Number of parity checks (rows of `H`).
    pub fn m(&self) -> usize {
        self.h.rows()
    }
}

/// Repetition code of length `n`.
///
/// The cyclic form has `n` checks `x_i + x_{i+1 mod n}`; the chain form drops
/// the wrap-around check, leaving `n - 1`.
pub fn repetition(n: usize, cyclic: bool) -> Result<ClassicalCode> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "repetition code length must be >= 2, got {n}"
        )));
    }
    let rows = if cyclic { n } else { n - 1 };
    let h = BitMatrix::from_entries(rows, n, (0..rows).flat_map(|i| [(i, i), (i, (i + 1) % n)]));
    Ok(ClassicalCode::new(h))
}
