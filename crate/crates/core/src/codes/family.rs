use std::fmt;
use std::str::FromStr;

use super::{chamon, planar_surface, toric, xzzx_surface, ztgre, StabilizerCode};
use crate::error::{Error, Result};

/// A named code family with its construction parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeFamily {
    /// Planar surface code of size `L`.
    Surface(usize),
    Toric(usize),
    Xzzx(usize),
    /// Z-TGRE code with `2^L` qubits.
    Ztgre(usize),
    Chamon(usize, usize, usize),
}

impl CodeFamily {
    pub const NAMES: [&'static str; 5] = ["surface", "toric", "xzzx", "ztgre", "chamon"];

    /// Resolves a family name and its comma-separated parameter list.
    pub fn parse(name: &str, params: &[usize]) -> Result<Self> {
        let single = |family: fn(usize) -> CodeFamily, min: usize| -> Result<CodeFamily> {
            match params {
                [l] if *l >= min => Ok(family(*l)),
                [l] => Err(Error::InvalidParameter(format!("L must be ≥ {min}, got {l}"))),
                _ => Err(Error::InvalidParameter(format!(
                    "family {name} takes one parameter L, got {}",
                    params.len()
                ))),
            }
        };
        match name {
            "surface" | "planar" => single(CodeFamily::Surface, 2),
            "toric" => single(CodeFamily::Toric, 2),
            "xzzx" => single(CodeFamily::Xzzx, 2),
            "ztgre" => single(CodeFamily::Ztgre, 1),
            "chamon" => match params {
                [a, b, c] => {
                    if let Some(bad) = [a, b, c].into_iter().find(|&&v| v < 2) {
                        Err(Error::InvalidParameter(format!(
                            "chamon block lengths must be ≥ 2, got {bad}"
                        )))
                    } else {
                        Ok(CodeFamily::Chamon(*a, *b, *c))
                    }
                }
                _ => Err(Error::InvalidParameter(format!(
                    "family chamon takes three parameters n1,n2,n3, got {}",
                    params.len()
                ))),
            },
            other => Err(Error::InvalidParameter(format!(
                "unknown code family {other:?} (known: {})",
                Self::NAMES.join(", ")
            ))),
        }
    }

    pub fn build(&self) -> Result<StabilizerCode> {
        match *self {
            CodeFamily::Surface(l) => planar_surface(l),
            CodeFamily::Toric(l) => toric(l),
            CodeFamily::Xzzx(l) => xzzx_surface(l),
            CodeFamily::Ztgre(l) => ztgre(l),
            CodeFamily::Chamon(a, b, c) => chamon(a, b, c),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CodeFamily::Surface(_) => "surface",
            CodeFamily::Toric(_) => "toric",
            CodeFamily::Xzzx(_) => "xzzx",
            CodeFamily::Ztgre(_) => "ztgre",
            CodeFamily::Chamon(..) => "chamon",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            CodeFamily::Surface(l) | CodeFamily::Toric(l) | CodeFamily::Xzzx(l) | CodeFamily::Ztgre(l) => vec![l],
            CodeFamily::Chamon(a, b, c) => vec![a, b, c],
        }
    }

    pub fn describe(name: &str) -> &'static str {
        match name {
            "surface" => "planar surface code [[L²+(L-1)², 1, L]]; params: L ≥ 2",
            "toric" => "toric code [[2L², 2, L]]; params: L ≥ 2",
            "xzzx" => "XZZX surface code on the planar layout; params: L ≥ 2",
            "ztgre" => "Z-TGRE code with N = 2^L qubits and N/2 Z checks; params: L ≥ 1",
            "chamon" => "Chamon code (XYZ product of cyclic repetition codes), N = 4·n1·n2·n3; params: n1,n2,n3 ≥ 2",
            _ => "",
        }
    }
}

impl fmt::Display for CodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{}:{}", self.name(), params.join(","))
    }
}

impl FromStr for CodeFamily {
    type Err = Error;

    /// Parses `family:p1,p2,...`, e.g. `chamon:3,3,3`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let params = parse_params(params)?;
        Self::parse(name.trim(), &params)
    }
}

/// Parses a comma-separated list of non-negative integers.
pub fn parse_params(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("invalid parameter {p:?}")))
        })
        .collect()
}
