//! JSON and CSV forms of a [`DistanceReport`].
//!
//! Everything except `metadata` is a pure function of the code and the trial
//! configuration, so two runs with the same seed produce identical bodies.

use serde::{Deserialize, Serialize};

use super::{DistanceReport, NoiseKind, RateStats};
use crate::decoder::BpConfig;
use crate::error::{Error, Result};
use crate::pauli::SymplecticPauli;

pub const SCHEMA_VERSION: u32 = 1;

/// Run details that legitimately differ between identical runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportMetadata {
    pub started_unix_ms: u128,
    pub elapsed_ms: u128,
    pub threads: usize,
    pub tool_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub code: String,
    pub n: usize,
    pub k: usize,
    pub upper_bound: usize,
    /// Dense `IXYZ` string, qubit 0 leftmost.
    pub witness_pauli_string: Option<String>,
    pub per_rate: Vec<RateStats>,
    pub seed: u64,
    pub decoder_config: BpConfig,
    pub noise: NoiseKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<ReportMetadata>,
}

impl ReportDocument {
    pub fn new(report: &DistanceReport, metadata: Option<ReportMetadata>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            code: report.code.clone(),
            n: report.n,
            k: report.k,
            upper_bound: report.upper_bound,
            witness_pauli_string: report.witness.as_ref().map(|w| w.to_string()),
            per_rate: report.per_rate.clone(),
            seed: report.seed,
            decoder_config: report.decoder_config,
            noise: report.noise,
            metadata,
        }
    }

    /// Pretty JSON including metadata.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Pretty JSON without metadata: the reproducible part of the report.
    pub fn body_json(&self) -> String {
        let body = Self {
            metadata: None,
            ..self.clone()
        };
        body.to_json()
    }

    /// Parses and checks the schema version and the witness shape.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::InvalidParameter(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                doc.schema_version
            )));
        }
        if let Some(w) = doc.witness()? {
            if w.n() != doc.n {
                return Err(Error::InvalidParameter(format!(
                    "witness has {} qubits but the report says n = {}",
                    w.n(),
                    doc.n
                )));
            }
        }
        Ok(doc)
    }

    pub fn witness(&self) -> Result<Option<SymplecticPauli>> {
        self.witness_pauli_string.as_deref().map(str::parse).transpose()
    }
}

/// `p,trials,logical_events,min_weight` with an empty `min_weight` when no
/// logical counted at that rate.
pub fn rates_csv(per_rate: &[RateStats]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in per_rate {
        w.serialize(row).map_err(|e| Error::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> DistanceReport {
        DistanceReport {
            code: "demo".into(),
            n: 3,
            k: 1,
            upper_bound: 2,
            witness: Some("XXI".parse().unwrap()),
            per_rate: vec![
                RateStats {
                    p: 0.1,
                    trials: 10,
                    logical_events: 1,
                    min_weight: Some(2),
                },
                RateStats {
                    p: 0.2,
                    trials: 10,
                    logical_events: 0,
                    min_weight: None,
                },
            ],
            seed: 9,
            decoder_config: BpConfig::default(),
            noise: NoiseKind::Depolarizing,
        }
    }

    #[test]
    fn json_round_trip_and_body() {
        let meta = ReportMetadata {
            started_unix_ms: 1,
            elapsed_ms: 2,
            threads: 1,
            tool_version: "x".into(),
        };
        let doc = ReportDocument::new(&sample(), Some(meta));
        let text = doc.to_json();
        assert!(text.contains("\"metadata\""));
        assert!(!doc.body_json().contains("metadata"));
        let back = ReportDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.witness().unwrap().unwrap().to_string(), "XXI");
    }

    #[test]
    fn rejects_other_schema_versions() {
        let text = ReportDocument::new(&sample(), None)
            .to_json()
            .replace("\"schema_version\": 1", "\"schema_version\": 2");
        assert!(ReportDocument::from_json(&text).is_err());
    }

    #[test]
    fn csv_layout() {
        let csv = rates_csv(&sample().per_rate).unwrap();
        assert_eq!(csv, "p,trials,logical_events,min_weight\n0.1,10,1,2\n0.2,10,0,\n");
    }
}
