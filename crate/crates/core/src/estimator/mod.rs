//! Monte Carlo distance upper bounds with self-certifying witnesses.
//!
//! Each trial samples an error, decodes its syndrome and looks at the
//! residual `e * ê`. When the residual is a logical operator its weight is an
//! upper bound on the distance; the smallest such residual over all trials is
//! reported together with the operator itself.

mod oracle;
mod report;
mod sampling;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use oracle::{brute_force_distance, candidate_count, OracleResult, Support};
pub use report::{rates_csv, ReportDocument, ReportMetadata, SCHEMA_VERSION};
pub use sampling::{sample_error, trial_rng, NoiseKind};

use crate::codes::StabilizerCode;
use crate::decoder::{BpConfig, Decoder};
use crate::error::{Error, Result};
use crate::pauli::SymplecticPauli;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Residual {
    Stabilizer,
    Logical,
    SyndromeNonzero,
}

pub fn classify_residual(code: &StabilizerCode, r: &SymplecticPauli) -> Result<Residual> {
    if !code.syndrome(r)?.is_zero() {
        Ok(Residual::SyndromeNonzero)
    } else if code.is_stabilizer(r)? {
        Ok(Residual::Stabilizer)
    } else {
        Ok(Residual::Logical)
    }
}

/// True iff `w` has zero syndrome, is not a stabilizer and has weight `bound`.
pub fn verify_witness(code: &StabilizerCode, w: &SymplecticPauli, bound: usize) -> bool {
    w.n() == code.n() && w.weight() == bound && matches!(classify_residual(code, w), Ok(Residual::Logical))
}

/// Default error-rate sweep, denser around 0.1.
pub const DEFAULT_RATES: [f64; 7] = [0.01, 0.02, 0.05, 0.08, 0.10, 0.12, 0.15];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub rates: Vec<f64>,
    pub trials_per_rate: usize,
    pub master_seed: u64,
    pub noise: NoiseKind,
    pub decoder: BpConfig,
}

impl TrialConfig {
    pub fn new(rates: Vec<f64>, trials_per_rate: usize, master_seed: u64) -> Self {
        Self {
            rates,
            trials_per_rate,
            master_seed,
            noise: NoiseKind::Depolarizing,
            decoder: BpConfig::default(),
        }
    }

    pub fn with_noise(mut self, noise: NoiseKind) -> Self {
        self.noise = noise;
        self
    }

    pub fn with_decoder(mut self, decoder: BpConfig) -> Self {
        self.decoder = decoder;
        self
    }

    pub fn check(&self) -> Result<()> {
        if self.rates.is_empty() {
            return Err(Error::InvalidParameter("at least one error rate is required".into()));
        }
        if let Some(p) = self.rates.iter().find(|p| !(**p > 0.0 && **p < 1.0)) {
            return Err(Error::InvalidParameter(format!(
                "error rate must lie in (0, 1), got {p}"
            )));
        }
        if self.trials_per_rate == 0 {
            return Err(Error::InvalidParameter("trials per rate must be at least 1".into()));
        }
        self.decoder.check()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateStats {
    pub p: f64,
    pub trials: usize,
    /// Trials whose residual was a logical operator.
    pub logical_events: usize,
    /// Smallest logical residual that counted toward the bound at this rate.
    pub min_weight: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceReport {
    pub code: String,
    pub n: usize,
    pub k: usize,
    /// Starts at `n` and only decreases. Equals the witness weight when a
    /// witness exists.
    pub upper_bound: usize,
    /// First logical found at the final minimum weight.
    pub witness: Option<SymplecticPauli>,
    pub per_rate: Vec<RateStats>,
    pub seed: u64,
    pub decoder_config: BpConfig,
    pub noise: NoiseKind,
}

impl DistanceReport {
    pub fn is_certified(&self, code: &StabilizerCode) -> bool {
        match &self.witness {
            Some(w) => verify_witness(code, w, self.upper_bound),
            None => self.upper_bound == code.n(),
        }
    }
}

struct TrialOutcome {
    logical: bool,
    counted: Option<SymplecticPauli>,
}

fn run_trial(decoder: &mut Decoder<'_>, cfg: &TrialConfig, rate_index: usize, trial: usize) -> Result<TrialOutcome> {
    let code = decoder.code();
    let p = cfg.rates[rate_index];
    let mut rng = trial_rng(cfg.master_seed, rate_index, trial);
    let e = sample_error(code.n(), p, cfg.noise, &mut rng)?;
    let s = code.syndrome(&e)?;
    let outcome = decoder.decode(&s)?;
    let r = e.mul(&outcome.estimate)?;
    match classify_residual(code, &r)? {
        Residual::Stabilizer => Ok(TrialOutcome {
            logical: false,
            counted: None,
        }),
        Residual::Logical => {
            let counts = cfg.noise != NoiseKind::PureX || r.z().is_zero();
            Ok(TrialOutcome {
                logical: true,
                counted: counts.then_some(r),
            })
        }
        Residual::SyndromeNonzero => Err(Error::Internal(format!(
            "decoder returned an estimate with the wrong syndrome (rate {p}, trial {trial})"
        ))),
    }
}

/// Runs the sweep on the current rayon pool.
pub fn estimate_upper_bound(code: &StabilizerCode, cfg: &TrialConfig) -> Result<DistanceReport> {
    estimate_upper_bound_with(code, cfg, |_| {})
}

/// Like [`estimate_upper_bound`], calling `on_rate` after each rate finishes.
pub fn estimate_upper_bound_with(
    code: &StabilizerCode,
    cfg: &TrialConfig,
    mut on_rate: impl FnMut(&RateStats),
) -> Result<DistanceReport> {
    cfg.check()?;
    let mut upper_bound = code.n();
    let mut witness: Option<SymplecticPauli> = None;
    let mut per_rate = Vec::with_capacity(cfg.rates.len());

    for (rate_index, &p) in cfg.rates.iter().enumerate() {
        let template = Decoder::new(code, cfg.noise.prior(p)?, cfg.decoder)?;
        let outcomes: Vec<TrialOutcome> = (0..cfg.trials_per_rate)
            .into_par_iter()
            .map_init(|| template.clone(), |dec, t| run_trial(dec, cfg, rate_index, t))
            .collect::<Result<_>>()?;

        let mut stats = RateStats {
            p,
            trials: cfg.trials_per_rate,
            logical_events: 0,
            min_weight: None,
        };
        for outcome in outcomes {
            stats.logical_events += usize::from(outcome.logical);
            let Some(r) = outcome.counted else { continue };
            let w = r.weight();
            stats.min_weight = Some(stats.min_weight.map_or(w, |m| m.min(w)));
            if w < upper_bound {
                upper_bound = w;
                witness = Some(r);
            }
        }
        on_rate(&stats);
        per_rate.push(stats);
    }

    Ok(DistanceReport {
        code: code.name().to_string(),
        n: code.n(),
        k: code.k(),
        upper_bound,
        witness,
        per_rate,
        seed: cfg.master_seed,
        decoder_config: cfg.decoder,
        noise: cfg.noise,
    })
}
