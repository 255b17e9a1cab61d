//! Plain-text code files.
//!
//! ```text
//! # anything after '#' is a comment
//! name: planar_surface_2
//! n: 5
//! k: 1
//! XXXII
//! IIXXX
//! ZIZZI
//! Z1 Z2 Z4
//! ```
//!
//! The header carries `name`, `n` and `k`, one `key: value` per line, and
//! must precede the generators. Each remaining line is one generator, either
//! dense (`IXYZ`, qubit 0 leftmost, exactly `n` characters) or sparse
//! (whitespace-separated `P<qubit>` terms). Loading recomputes `k` and checks
//! that all generators commute.

use std::fmt::Write as _;

use super::{generator_blocks, StabilizerCode, ValidationReport};
use crate::error::{Error, Result};
use crate::pauli::{Pauli, SymplecticPauli};

/// A code file parsed without the commutation and dimension checks.
#[derive(Debug, Clone)]
pub struct ParsedCode {
    pub code: StabilizerCode,
    pub declared_k: usize,
}

impl ParsedCode {
    /// Validation of the generators plus a check of the declared `k`.
    pub fn validate(&self) -> std::result::Result<ValidationReport, String> {
        let report = self.code.validate();
        if report.passed() && self.code.k() != self.declared_k {
            return Err(format!(
                "header declares k = {} but the generators give k = {}",
                self.declared_k,
                self.code.k()
            ));
        }
        Ok(report)
    }
}

pub fn write_code(code: &StabilizerCode) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# qdist stabilizer code");
    for (key, value) in code.params() {
        let _ = writeln!(out, "# {key} = {value}");
    }
    let _ = writeln!(out, "name: {}", code.name());
    let _ = writeln!(out, "n: {}", code.n());
    let _ = writeln!(out, "k: {}", code.k());
    for g in code.generators() {
        let _ = writeln!(out, "{g}");
    }
    out
}

/// Parses a code file and rejects it unless it validates.
pub fn read_code(text: &str) -> Result<StabilizerCode> {
    let parsed = parse_code(text)?;
    match parsed.validate() {
        Ok(report) => match report.first_violation {
            None => Ok(parsed.code),
            Some(v) => Err(Error::InvalidCode(v.to_string())),
        },
        Err(msg) => Err(Error::InvalidCode(msg)),
    }
}

pub fn parse_code(text: &str) -> Result<ParsedCode> {
    let mut name = None;
    let mut n = None;
    let mut k = None;
    let mut gens: Vec<SymplecticPauli> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        if let Some((key, value)) = line.split_once(':') {
            if !gens.is_empty() {
                return Err(err("header field after the first generator".into()));
            }
            let value = value.trim();
            match key.trim() {
                "name" => name = Some(value.to_string()),
                "n" => {
                    n = Some(
                        value
                            .parse::<usize>()
                            .map_err(|_| err(format!("invalid n {value:?}")))?,
                    )
                }
                "k" => {
                    k = Some(
                        value
                            .parse::<usize>()
                            .map_err(|_| err(format!("invalid k {value:?}")))?,
                    )
                }
                other => return Err(err(format!("unknown header field {other:?}"))),
            }
            continue;
        }
        let n = n.ok_or_else(|| err("generator before the `n:` header".into()))?;
        gens.push(parse_generator(line, n).map_err(err)?);
    }

    let n = n.ok_or_else(|| Error::Parse {
        line: 0,
        message: "missing `n:` header".into(),
    })?;
    let declared_k = k.ok_or_else(|| Error::Parse {
        line: 0,
        message: "missing `k:` header".into(),
    })?;
    let name = name.unwrap_or_else(|| "unnamed".to_string());
    let (hx, hz) = generator_blocks(n, &gens)?;
    Ok(ParsedCode {
        code: StabilizerCode::new_unchecked(name, hx, hz)?,
        declared_k,
    })
}

fn parse_generator(line: &str, n: usize) -> std::result::Result<SymplecticPauli, String> {
    let dense = line.chars().all(|c| Pauli::from_char(c).is_some());
    if dense {
        let g: SymplecticPauli = line.parse().map_err(|e: Error| e.to_string())?;
        if g.n() != n {
            return Err(format!("generator has {} qubits, expected {n}", g.n()));
        }
        return Ok(g);
    }
    let mut g = SymplecticPauli::identity(n);
    for term in line.split_whitespace() {
        let mut chars = term.chars();
        let op = chars
            .next()
            .and_then(Pauli::from_char)
            .ok_or_else(|| format!("invalid term {term:?}"))?;
        let q: usize = chars
            .as_str()
            .parse()
            .map_err(|_| format!("invalid qubit index in {term:?}"))?;
        if q >= n {
            return Err(format!("qubit {q} out of range for n = {n}"));
        }
        if g.get(q) != Pauli::I {
            return Err(format!("qubit {q} appears twice"));
        }
        g.set(q, op);
    }
    Ok(g)
}
