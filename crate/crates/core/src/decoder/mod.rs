//! Fully decoupled belief propagation with OSD-0 fallback.
//!
//! [`bp_decode`] runs sum-product on the decoupled check matrix
//! `(Hz | Hx | Hx+Hz)`, [`hard_decision`] maps bit marginals to one Pauli per
//! qubit, and [`osd_post_process`] solves the syndrome exactly on the most
//! reliable columns when BP does not converge. [`Decoder`] wires them together
//! for a fixed code and keeps its scratch buffers between calls.

mod bp;
mod osd;

use serde::{Deserialize, Serialize};

pub use bp::{bp_decode, bp_decode_with, hard_decision, BpResult, BpWorkspace, TannerGraph};
pub use osd::osd_post_process;

use crate::codes::StabilizerCode;
use crate::error::{Error, Result};
use crate::pauli::{decoupled_bits_to_symplectic, SymplecticPauli, Syndrome};

/// Per-qubit prior probabilities of the X, Z and Y decoupled bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelPrior {
    pub p: f64,
    pub x: f64,
    pub z: f64,
    pub y: f64,
}

/// Floor for bits the channel never flips. Keeps the log-likelihoods finite;
/// clipping bounds them anyway.
const NEGLIGIBLE: f64 = 1e-12;

impl ChannelPrior {
    /// X, Z and Y each with probability `p / 3`.
    pub fn depolarizing(p: f64) -> Result<Self> {
        check_rate(p)?;
        Ok(Self {
            p,
            x: p / 3.0,
            z: p / 3.0,
            y: p / 3.0,
        })
    }

    /// X with probability `p`, never Z or Y.
    pub fn pure_x(p: f64) -> Result<Self> {
        check_rate(p)?;
        Ok(Self {
            p,
            x: p,
            z: NEGLIGIBLE,
            y: NEGLIGIBLE,
        })
    }
}

fn check_rate(p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "error rate must lie in (0, 1), got {p}"
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Schedule {
    #[default]
    Flooding,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BpConfig {
    pub max_iterations: usize,
    pub schedule: Schedule,
    /// Bound on message magnitudes in the log domain.
    pub clip: f64,
}

impl Default for BpConfig {
    fn default() -> Self {
        Self {
            max_iterations: 100,
            schedule: Schedule::Flooding,
            clip: 30.0,
        }
    }
}

impl BpConfig {
    pub fn check(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::InvalidParameter("max_iterations must be at least 1".into()));
        }
        if !(self.clip.is_finite() && self.clip > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "message clip must be positive and finite, got {}",
                self.clip
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecodeOutcome {
    pub estimate: SymplecticPauli,
    /// `P(bit = 1)` for the `3n` decoupled bits, ordered `x' | z' | y'`.
    pub posteriors: Vec<f64>,
    pub bp_converged: bool,
    pub osd_applied: bool,
    pub iterations: usize,
}

/// Decoder bound to one code and channel. Cheap to clone; each clone owns
/// its own scratch space, so clones can run on different threads.
#[derive(Debug, Clone)]
pub struct Decoder<'a> {
    code: &'a StabilizerCode,
    graph: std::sync::Arc<TannerGraph>,
    prior: ChannelPrior,
    config: BpConfig,
    workspace: BpWorkspace,
}

impl<'a> Decoder<'a> {
    pub fn new(code: &'a StabilizerCode, prior: ChannelPrior, config: BpConfig) -> Result<Self> {
        config.check()?;
        Ok(Self {
            code,
            graph: std::sync::Arc::new(TannerGraph::new(code.hd())),
            prior,
            config,
            workspace: BpWorkspace::default(),
        })
    }

    pub fn code(&self) -> &'a StabilizerCode {
        self.code
    }

    pub fn prior(&self) -> &ChannelPrior {
        &self.prior
    }

    pub fn set_prior(&mut self, prior: ChannelPrior) {
        self.prior = prior;
    }

    pub fn config(&self) -> &BpConfig {
        &self.config
    }

    pub fn decode(&mut self, s: &Syndrome) -> Result<DecodeOutcome> {
        let bp = bp_decode_with(&self.graph, s, &self.prior, &self.config, &mut self.workspace)?;
        let (raw, osd_applied) = if bp.converged {
            (bp.raw, false)
        } else {
            (osd_post_process(self.code.hd(), s, &bp.posteriors)?, true)
        };
        Ok(DecodeOutcome {
            estimate: decoupled_bits_to_symplectic(&raw)?,
            posteriors: bp.posteriors,
            bp_converged: bp.converged,
            osd_applied,
            iterations: bp.iterations,
        })
    }
}

/// One-shot decode. Prefer [`Decoder`] when decoding many syndromes.
pub fn decode(code: &StabilizerCode, s: &Syndrome, prior: &ChannelPrior, cfg: &BpConfig) -> Result<DecodeOutcome> {
    Decoder::new(code, *prior, *cfg)?.decode(s)
}
