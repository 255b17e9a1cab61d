use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::decoder::ChannelPrior;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, SymplecticPauli};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseKind {
    /// X, Z, Y each with probability `p / 3`.
    #[default]
    Depolarizing,
    /// X with probability `p`. Only X-type logicals count toward the bound.
    PureX,
}

impl NoiseKind {
    /// Decoder prior matched to this channel.
    pub fn prior(self, p: f64) -> Result<ChannelPrior> {
        match self {
            NoiseKind::Depolarizing => ChannelPrior::depolarizing(p),
            NoiseKind::PureX => ChannelPrior::pure_x(p),
        }
    }
}

impl std::fmt::Display for NoiseKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NoiseKind::Depolarizing => "depolarizing",
            NoiseKind::PureX => "pure_x",
        })
    }
}

impl std::str::FromStr for NoiseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "depolarizing" => Ok(NoiseKind::Depolarizing),
            "pure_x" | "pure-x" | "x" => Ok(NoiseKind::PureX),
            other => Err(Error::InvalidParameter(format!(
                "unknown noise kind {other:?} (expected depolarizing or pure_x)"
            ))),
        }
    }
}

/// I.i.d. single-qubit errors at rate `p`.
pub fn sample_error<R: Rng + ?Sized>(n: usize, p: f64, kind: NoiseKind, rng: &mut R) -> Result<SymplecticPauli> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "error rate must lie in (0, 1), got {p}"
        )));
    }
    let mut e = SymplecticPauli::identity(n);
    for q in 0..n {
        if rng.gen::<f64>() < p {
            let op = match kind {
                NoiseKind::Depolarizing => Pauli::NONTRIVIAL[rng.gen_range(0..3)],
                NoiseKind::PureX => Pauli::X,
            };
            e.set(q, op);
        }
    }
    Ok(e)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Independent stream for one trial, so results do not depend on how trials
/// are scheduled across threads.
pub fn trial_rng(master_seed: u64, rate_index: usize, trial_index: usize) -> ChaCha8Rng {
    let key = splitmix64(splitmix64(rate_index as u64) ^ trial_index as u64);
    ChaCha8Rng::seed_from_u64(master_seed ^ key)
}
