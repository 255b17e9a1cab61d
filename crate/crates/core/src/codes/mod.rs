//! Stabilizer codes and the families used throughout the crate.

mod classical;
mod family;
pub mod io;
mod lattice;
mod product;
mod ztgre;

use std::fmt;

pub use classical::{repetition, ClassicalCode};
pub use family::{parse_params, CodeFamily};
pub use lattice::{planar_surface, toric, xzzx_surface};
pub use product::{chamon, hypergraph_product, xyz_product};
pub use ztgre::{ztgre, ztgre_cross_edges, CrossEdge, ZTGRE_BASE_CHECK};

use crate::error::{ensure_len, Error, Result};
use crate::gf2::{and_parity, BitMatrix, RowSpace};
use crate::pauli::{syndrome_symplectic, SymplecticPauli, Syndrome};

/// A stabilizer code given by generator rows `(Hx | Hz)`.
///
/// Generator rows may be linearly dependent; `k` is always computed from the
/// rank of the `2n`-column binary matrix.
#[derive(Clone)]
pub struct StabilizerCode {
    name: String,
    params: Vec<(String, String)>,
    n: usize,
    k: usize,
    hx: BitMatrix,
    hz: BitMatrix,
    hd: BitMatrix,
    stabilizers: RowSpace,
}

/// First problem found by [`StabilizerCode::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Generator rows `a` and `b` anticommute.
    Anticommuting { a: usize, b: usize },
    /// Stored logical qubit count disagrees with the rank computation.
    Dimension { stored: usize, computed: usize },
    /// Cached decoupled check matrix is not `(Hz | Hx | Hx ⊕ Hz)`.
    DecoupledMatrix,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Anticommuting { a, b } => {
                write!(f, "generators {a} and {b} anticommute")
            }
            Violation::Dimension { stored, computed } => {
                write!(f, "stored k = {stored} but rank gives k = {computed}")
            }
            Violation::DecoupledMatrix => write!(f, "cached decoupled check matrix is stale"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub generators: usize,
    pub first_violation: Option<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// A conjugate pair of logical operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalPair {
    pub x: SymplecticPauli,
    pub z: SymplecticPauli,
}

/// `Hd = (Hz | Hx | Hx ⊕ Hz)`. The column blocks act on the `x'`, `z'` and
/// `y'` bits of the decoupled representation.
pub fn decoupled_parity_check(hx: &BitMatrix, hz: &BitMatrix) -> Result<BitMatrix> {
    let hy = hx.xor(hz)?;
    BitMatrix::hstack(&[hz, hx, &hy])
}

impl StabilizerCode {
    /// Builds a code and rejects it if any pair of generators anticommutes.
    pub fn new(name: impl Into<String>, hx: BitMatrix, hz: BitMatrix) -> Result<Self> {
        let code = Self::new_unchecked(name, hx, hz)?;
        match code.validate().first_violation {
            None => Ok(code),
            Some(v) => Err(Error::InvalidCode(format!("{}: {v}", code.name))),
        }
    }

    /// Builds a code without the commutation check. Shapes are still
    /// checked. Use [`StabilizerCode::validate`] to inspect the result.
    pub fn new_unchecked(name: impl Into<String>, hx: BitMatrix, hz: BitMatrix) -> Result<Self> {
        ensure_len("generator blocks (rows)", hx.rows(), hz.rows())?;
        ensure_len("generator blocks (cols)", hx.cols(), hz.cols())?;
        let n = hx.cols();
        let check = BitMatrix::hstack(&[&hx, &hz])?;
        let stabilizers = RowSpace::new(&check);
        let hd = decoupled_parity_check(&hx, &hz)?;
        Ok(Self {
            name: name.into(),
            params: Vec::new(),
            n,
            k: n - stabilizers.dim(),
            hx,
            hz,
            hd,
            stabilizers,
        })
    }

    pub fn from_generators(name: impl Into<String>, n: usize, gens: &[SymplecticPauli]) -> Result<Self> {
        let (hx, hz) = generator_blocks(n, gens)?;
        Self::new(name, hx, hz)
    }

    pub fn with_params(mut self, params: &[(&str, String)]) -> Self {
        self.params = params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Construction parameters recorded by the constructor.
    pub fn params(&self) -> &[(String, String)] {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of generator rows, dependent ones included.
    pub fn num_generators(&self) -> usize {
        self.hx.rows()
    }

    pub fn hx(&self) -> &BitMatrix {
        &self.hx
    }

    pub fn hz(&self) -> &BitMatrix {
        &self.hz
    }

    /// Cached decoupled check matrix.
    pub fn hd(&self) -> &BitMatrix {
        &self.hd
    }

    pub fn generator(&self, i: usize) -> SymplecticPauli {
        SymplecticPauli::from_parts(self.hx.row(i), self.hz.row(i)).expect("blocks have equal width")
    }

    pub fn generators(&self) -> Vec<SymplecticPauli> {
        (0..self.num_generators()).map(|i| self.generator(i)).collect()
    }

    pub fn syndrome(&self, e: &SymplecticPauli) -> Result<Syndrome> {
        syndrome_symplectic(&self.hx, &self.hz, e)
    }

    /// Whether `p` lies in the stabilizer group (up to phase).
    pub fn is_stabilizer(&self, p: &SymplecticPauli) -> Result<bool> {
        ensure_len("operator size", self.n, p.n())?;
        self.stabilizers.contains(&p.to_binary())
    }

    /// True when every generator is X-type only or Z-type only.
    pub fn is_css(&self) -> bool {
        (0..self.num_generators()).all(|r| {
            let x = self.hx.row(r);
            let z = self.hz.row(r);
            x.is_zero() || z.is_zero()
        })
    }

    /// Checks pairwise commutation, the logical qubit count and the cached
    /// decoupled matrix, stopping at the first violation.
    pub fn validate(&self) -> ValidationReport {
        let m = self.num_generators();
        let mut first_violation = None;
        'pairs: for a in 0..m {
            for b in a + 1..m {
                let anti = and_parity(self.hx.row_words(a), self.hz.row_words(b))
                    ^ and_parity(self.hz.row_words(a), self.hx.row_words(b));
                if anti {
                    first_violation = Some(Violation::Anticommuting { a, b });
                    break 'pairs;
                }
            }
        }
        if first_violation.is_none() {
            let check = BitMatrix::hstack(&[&self.hx, &self.hz]).expect("shapes checked at construction");
            let computed = self.n - check.rank();
            if computed != self.k {
                first_violation = Some(Violation::Dimension {
                    stored: self.k,
                    computed,
                });
            }
        }
        if first_violation.is_none() {
            let hd = decoupled_parity_check(&self.hx, &self.hz).expect("shapes checked at construction");
            if hd != self.hd {
                first_violation = Some(Violation::DecoupledMatrix);
            }
        }
        ValidationReport {
            generators: m,
            first_violation,
        }
    }

    /// `k` conjugate pairs of logical operators, built by symplectic
    /// Gram-Schmidt over a basis of the centralizer modulo the stabilizer.
    pub fn logical_basis(&self) -> Result<Vec<LogicalPair>> {
        if self.k == 0 {
            return Err(Error::InvalidParameter("code encodes no logical qubits".into()));
        }
        // v = (vx | vz) commutes with row (hx | hz) iff hz·vx + hx·vz = 0.
        let form = BitMatrix::hstack(&[&self.hz, &self.hx])?;
        let centralizer = form.kernel_basis();

        let mut span = self.stabilizers.clone();
        let mut quotient: Vec<SymplecticPauli> = Vec::with_capacity(2 * self.k);
        for v in centralizer {
            if span.insert(&v)? {
                quotient.push(SymplecticPauli::from_binary(&v)?);
                if quotient.len() == 2 * self.k {
                    break;
                }
            }
        }
        if quotient.len() != 2 * self.k {
            return Err(Error::Internal(format!(
                "centralizer quotient has dimension {}, expected {}",
                quotient.len(),
                2 * self.k
            )));
        }

        let mut pairs = Vec::with_capacity(self.k);
        while let Some(lx) = (!quotient.is_empty()).then(|| quotient.remove(0)) {
            let partner = quotient
                .iter()
                .position(|w| lx.symplectic_form(w).unwrap_or(false))
                .ok_or_else(|| Error::Internal("degenerate symplectic quotient".into()))?;
            let lz = quotient.remove(partner);
            for u in quotient.iter_mut() {
                let mut next = u.clone();
                if u.symplectic_form(&lz)? {
                    next = next.mul(&lx)?;
                }
                if u.symplectic_form(&lx)? {
                    next = next.mul(&lz)?;
                }
                *u = next;
            }
            pairs.push(LogicalPair { x: lx, z: lz });
        }
        Ok(pairs)
    }
}

impl fmt::Debug for StabilizerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StabilizerCode")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("k", &self.k)
            .field("generators", &self.num_generators())
            .finish()
    }
}

pub(crate) fn generator_blocks(n: usize, gens: &[SymplecticPauli]) -> Result<(BitMatrix, BitMatrix)> {
    let mut hx = BitMatrix::zeros(gens.len(), n);
    let mut hz = BitMatrix::zeros(gens.len(), n);
    for (r, g) in gens.iter().enumerate() {
        ensure_len("generator size", n, g.n())?;
        for q in g.x().iter_ones() {
            hx.set(r, q, true);
        }
        for q in g.z().iter_ones() {
            hz.set(r, q, true);
        }
    }
    Ok((hx, hz))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::syndrome_decoupled;

    #[test]
    fn decoupled_matrix_blocks() {
        let hx = BitMatrix::identity(2);
        let hz = BitMatrix::zeros(2, 2);
        let hd = decoupled_parity_check(&hx, &hz).unwrap();
        assert_eq!(hd, BitMatrix::parse_rows(6, &["001010", "000101"]).unwrap());
        let m = BitMatrix::parse_rows(3, &["110", "011"]).unwrap();
        let hd = decoupled_parity_check(&m, &m).unwrap();
        for r in 0..2 {
            assert!(hd.row(r).slice(6, 3).is_zero());
        }
    }

    #[test]
    fn corrupted_generator_is_reported() {
        let code = planar_surface(3).unwrap();
        assert!(code.validate().passed());
        let mut hz = code.hz().clone();
        // Flip a Z bit on a qubit touched by the first X-type generator.
        let row = (0..code.num_generators())
            .find(|&r| code.hz().row(r).is_zero())
            .unwrap();
        let q = code.hx().row(row).iter_ones().next().unwrap();
        let target = (0..code.num_generators())
            .find(|&r| !code.hz().row(r).is_zero() && !code.hz().get(r, q))
            .unwrap();
        hz.flip(target, q);
        let bad = StabilizerCode::new_unchecked("bad", code.hx().clone(), hz.clone()).unwrap();
        let report = bad.validate();
        match report.first_violation {
            Some(Violation::Anticommuting { a, b }) => {
                assert!(!bad.generator(a).commutes(&bad.generator(b)).unwrap());
            }
            other => panic!("expected anticommuting pair, got {other:?}"),
        }
        assert!(StabilizerCode::new("bad", code.hx().clone(), hz).is_err());
    }

    #[test]
    fn single_y_selects_hx_plus_hz_column() {
        let code = chamon(2, 2, 2).unwrap();
        let hy = code.hx().xor(code.hz()).unwrap();
        for q in [0, 5, 31] {
            let mut e = SymplecticPauli::identity(code.n());
            e.set(q, crate::Pauli::Y);
            let s = syndrome_decoupled(code.hd(), &e.to_decoupled()).unwrap();
            assert_eq!(s.0, hy.column(q));
        }
    }

    #[test]
    fn logical_basis_requires_logical_qubits() {
        let hx = BitMatrix::zeros(1, 1);
        let hz = BitMatrix::identity(1);
        let code = StabilizerCode::new("trivial", hx, hz).unwrap();
        assert_eq!(code.k(), 0);
        assert!(code.logical_basis().is_err());
    }
}
