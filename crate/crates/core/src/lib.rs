//! Stabilizer code constructions, a fully decoupled belief-propagation decoder
//! with ordered-statistics post-processing, and a Monte Carlo search that
//! produces witnessed upper bounds on code distance.

pub mod codes;
pub mod decoder;
mod error;
pub mod estimator;
pub mod gf2;
pub mod pauli;

pub use codes::{ClassicalCode, StabilizerCode};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec};
pub use pauli::{DecoupledPauli, Pauli, SymplecticPauli, Syndrome};
