//! Phase-free Pauli operators in the symplectic `(x | z)` and decoupled
//! `(x' | z' | y')` binary representations.

use std::fmt;
use std::str::FromStr;

use crate::error::{ensure_len, Error, Result};
use crate::gf2::{and_parity, BitMatrix, BitVec};

/// Single-qubit Pauli. The declaration order `I < X < Z < Y` is the
/// tie-break order used by the hard decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pauli {
    I,
    X,
    Z,
    Y,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Z, Pauli::Y];
    pub const NONTRIVIAL: [Pauli; 3] = [Pauli::X, Pauli::Z, Pauli::Y];

    /// `(x, z)` bits.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Z => (false, true),
            Pauli::Y => (true, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (false, true) => Pauli::Z,
            (true, true) => Pauli::Y,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Z => 'Z',
            Pauli::Y => 'Y',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' | '_' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Z' => Some(Pauli::Z),
            'Y' => Some(Pauli::Y),
            _ => None,
        }
    }
}

/// An n-qubit Pauli operator modulo phase, stored as `(x | z)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticPauli {
    x: BitVec,
    z: BitVec,
}

impl SymplecticPauli {
    pub fn identity(n: usize) -> Self {
        Self {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
        }
    }

    pub fn from_parts(x: BitVec, z: BitVec) -> Result<Self> {
        ensure_len("symplectic parts", x.len(), z.len())?;
        Ok(Self { x, z })
    }

    /// Splits a `2n`-bit vector `(x | z)`.
    pub fn from_binary(v: &BitVec) -> Result<Self> {
        if v.len() % 2 != 0 {
            return Err(Error::DimensionMismatch {
                context: "symplectic vector (must have even length)",
                expected: v.len() + 1,
                found: v.len(),
            });
        }
        let n = v.len() / 2;
        Ok(Self {
            x: v.slice(0, n),
            z: v.slice(n, n),
        })
    }

    /// Operator with `p` on each listed qubit and identity elsewhere.
    pub fn from_sparse(n: usize, terms: &[(usize, Pauli)]) -> Result<Self> {
        let mut out = Self::identity(n);
        for &(q, p) in terms {
            if q >= n {
                return Err(Error::InvalidParameter(format!(
                    "qubit {q} out of range for {n} qubits"
                )));
            }
            out.set(q, p);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &BitVec {
        &self.x
    }

    pub fn z(&self) -> &BitVec {
        &self.z
    }

    pub fn get(&self, q: usize) -> Pauli {
        Pauli::from_bits(self.x.get(q), self.z.get(q))
    }

    pub fn set(&mut self, q: usize, p: Pauli) {
        let (x, z) = p.bits();
        self.x.set(q, x);
        self.z.set(q, z);
    }

    /// The `2n`-bit vector `(x | z)`.
    pub fn to_binary(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    /// Number of qubits acted on nontrivially.
    pub fn weight(&self) -> usize {
        self.x
            .words()
            .iter()
            .zip(self.z.words())
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Symplectic form `x·z' + z·x'`; zero iff the operators commute.
    pub fn symplectic_form(&self, other: &SymplecticPauli) -> Result<bool> {
        ensure_len("symplectic form", self.n(), other.n())?;
        Ok(and_parity(self.x.words(), other.z.words()) ^ and_parity(self.z.words(), other.x.words()))
    }

    pub fn commutes(&self, other: &SymplecticPauli) -> Result<bool> {
        Ok(!self.symplectic_form(other)?)
    }

    /// Phase-free product.
    pub fn mul(&self, other: &SymplecticPauli) -> Result<SymplecticPauli> {
        ensure_len("pauli product", self.n(), other.n())?;
        Ok(Self {
            x: &self.x ^ &other.x,
            z: &self.z ^ &other.z,
        })
    }

    pub fn to_decoupled(&self) -> DecoupledPauli {
        let mut x = BitVec::zeros(self.n());
        let mut z = BitVec::zeros(self.n());
        let mut y = BitVec::zeros(self.n());
        for ((xw, zw), ((dx, dz), dy)) in self.x.words().iter().zip(self.z.words()).zip(
            x.words_mut()
                .iter_mut()
                .zip(z.words_mut().iter_mut())
                .zip(y.words_mut().iter_mut()),
        ) {
            *dx = xw & !zw;
            *dz = zw & !xw;
            *dy = xw & zw;
        }
        DecoupledPauli { x, z, y }
    }

    /// Sparse rendering such as `X0 Y3 Z7`; `I` for the identity.
    pub fn to_sparse_string(&self) -> String {
        let terms: Vec<String> = (0..self.n())
            .filter(|&q| self.get(q) != Pauli::I)
            .map(|q| format!("{}{q}", self.get(q).as_char()))
            .collect();
        if terms.is_empty() {
            "I".to_string()
        } else {
            terms.join(" ")
        }
    }
}

impl fmt::Display for SymplecticPauli {
    /// Dense `IXYZ` string, qubit 0 leftmost.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n() {
            write!(f, "{}", self.get(q).as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymplecticPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymplecticPauli({self})")
    }
}

impl FromStr for SymplecticPauli {
    type Err = Error;

    /// Parses a dense `IXYZ` string, qubit 0 leftmost. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let ops = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                Pauli::from_char(c).ok_or_else(|| Error::Parse {
                    line: 1,
                    message: format!("invalid Pauli character {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut p = Self::identity(ops.len());
        for (q, op) in ops.into_iter().enumerate() {
            p.set(q, op);
        }
        Ok(p)
    }
}

/// Canonical decoupled representation: one-hot `(x' | z' | y')` per qubit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DecoupledPauli {
    x: BitVec,
    z: BitVec,
    y: BitVec,
}

impl DecoupledPauli {
    pub fn identity(n: usize) -> Self {
        Self {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            y: BitVec::zeros(n),
        }
    }

    /// Builds from a `3n`-bit vector, rejecting triples with more than one set bit.
    pub fn from_bits(bits: &BitVec) -> Result<Self> {
        let (x, z, y) = split_triple(bits)?;
        for ((a, b), c) in x.words().iter().zip(z.words()).zip(y.words()) {
            if a & b != 0 || a & c != 0 || b & c != 0 {
                return Err(Error::InvalidParameter(
                    "decoupled vector has more than one set bit on a qubit".into(),
                ));
            }
        }
        Ok(Self { x, z, y })
    }

    pub fn from_paulis(ops: &[Pauli]) -> Self {
        let n = ops.len();
        let mut d = Self::identity(n);
        for (q, &p) in ops.iter().enumerate() {
            d.set(q, p);
        }
        d
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn get(&self, q: usize) -> Pauli {
        if self.x.get(q) {
            Pauli::X
        } else if self.z.get(q) {
            Pauli::Z
        } else if self.y.get(q) {
            Pauli::Y
        } else {
            Pauli::I
        }
    }

    pub fn set(&mut self, q: usize, p: Pauli) {
        self.x.set(q, p == Pauli::X);
        self.z.set(q, p == Pauli::Z);
        self.y.set(q, p == Pauli::Y);
    }

    /// The `3n`-bit vector `(x' | z' | y')`.
    pub fn to_bits(&self) -> BitVec {
        self.x.concat(&self.z).concat(&self.y)
    }

    pub fn to_symplectic(&self) -> SymplecticPauli {
        decoupled_bits_to_symplectic(&self.to_bits()).expect("canonical decoupled vector always has length 3n")
    }
}

fn split_triple(bits: &BitVec) -> Result<(BitVec, BitVec, BitVec)> {
    if bits.len() % 3 != 0 {
        return Err(Error::DimensionMismatch {
            context: "decoupled vector (length must be a multiple of 3)",
            expected: bits.len() - bits.len() % 3,
            found: bits.len(),
        });
    }
    let n = bits.len() / 3;
    Ok((bits.slice(0, n), bits.slice(n, n), bits.slice(2 * n, n)))
}

/// Maps any `3n`-bit vector, canonical or not, to a symplectic Pauli with
/// `x = x' ⊕ y'` and `z = z' ⊕ y'` per qubit. The map preserves syndromes
/// because the third block of the decoupled check matrix is `Hx ⊕ Hz`.
pub fn decoupled_bits_to_symplectic(bits: &BitVec) -> Result<SymplecticPauli> {
    let (x, z, y) = split_triple(bits)?;
    Ok(SymplecticPauli { x: &x ^ &y, z: &z ^ &y })
}

/// Error syndrome; one bit per stabilizer generator row.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Syndrome(pub BitVec);

impl Syndrome {
    pub fn zeros(len: usize) -> Self {
        Self(BitVec::zeros(len))
    }

    pub fn bits(&self) -> &BitVec {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `s = Hx·e_z + Hz·e_x (mod 2)`.
pub fn syndrome_symplectic(hx: &BitMatrix, hz: &BitMatrix, e: &SymplecticPauli) -> Result<Syndrome> {
    ensure_len("generator blocks (rows)", hx.rows(), hz.rows())?;
    ensure_len("X block columns", e.n(), hx.cols())?;
    ensure_len("Z block columns", e.n(), hz.cols())?;
    let mut s = BitVec::zeros(hx.rows());
    for r in 0..hx.rows() {
        if and_parity(hx.row_words(r), e.z().words()) ^ and_parity(hz.row_words(r), e.x().words()) {
            s.set(r, true);
        }
    }
    Ok(Syndrome(s))
}

/// `s = Hd·e (mod 2)` in the decoupled representation.
pub fn syndrome_decoupled(hd: &BitMatrix, d: &DecoupledPauli) -> Result<Syndrome> {
    ensure_len("decoupled check matrix columns", 3 * d.n(), hd.cols())?;
    Ok(Syndrome(hd.mul_vec(&d.to_bits())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SymplecticPauli {
        s.parse().unwrap()
    }

    #[test]
    fn decoupled_example() {
        let d = p("XYZ").to_decoupled();
        assert_eq!(d.to_bits().to_string(), "100001010");
        assert!(p("IIIII").to_decoupled().to_bits().is_zero());
        assert_eq!(p("IIIII").to_decoupled().to_bits().len(), 15);
    }

    #[test]
    fn xor_map_on_non_canonical_triples() {
        let y: BitVec = "001".parse().unwrap();
        assert_eq!(decoupled_bits_to_symplectic(&y).unwrap(), p("Y"));
        let xz: BitVec = "110".parse().unwrap();
        assert_eq!(decoupled_bits_to_symplectic(&xz).unwrap(), p("Y"));
        let xy: BitVec = "101".parse().unwrap();
        assert_eq!(decoupled_bits_to_symplectic(&xy).unwrap(), p("Z"));
        assert!(DecoupledPauli::from_bits(&xy).is_err());
        assert!(decoupled_bits_to_symplectic(&BitVec::zeros(4)).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(p("IXYZ").weight(), 3);
        assert_eq!(p("IIII").weight(), 0);
        assert_eq!(p(&"Y".repeat(70)).weight(), 70);
    }

    #[test]
    fn commutation() {
        assert!(!p("X").commutes(&p("Z")).unwrap());
        assert!(p("XX").commutes(&p("ZZ")).unwrap());
        let a = p("XYZIY");
        assert!(a.commutes(&a).unwrap());
        assert!(p("X").commutes(&p("XX")).is_err());
    }

    #[test]
    fn products() {
        let a = p("XYZI");
        assert!(a.mul(&a).unwrap().is_identity());
        assert_eq!(p("X").mul(&p("Z")).unwrap(), p("Y"));
        assert!(p("X").mul(&p("XX")).is_err());
    }

    #[test]
    fn syndromes() {
        // Z1Z2, Z2Z3 on three qubits.
        let hx = BitMatrix::zeros(2, 3);
        let hz = BitMatrix::parse_rows(3, &["110", "011"]).unwrap();
        let s = syndrome_symplectic(&hx, &hz, &p("XII")).unwrap();
        assert_eq!(s.to_string(), "10");
        assert!(syndrome_symplectic(&hx, &hz, &p("III")).unwrap().is_zero());
        assert!(syndrome_symplectic(&hx, &hz, &p("XI")).is_err());
    }

    #[test]
    fn parse_display_round_trip() {
        let a = p("IXYZ_");
        assert_eq!(a.to_string(), "IXYZI");
        assert_eq!(a.to_sparse_string(), "X1 Y2 Z3");
        assert!("IXQ".parse::<SymplecticPauli>().is_err());
        let b = SymplecticPauli::from_sparse(4, &[(1, Pauli::X), (2, Pauli::Y), (3, Pauli::Z)]).unwrap();
        assert_eq!(b, p("IXYZ"));
    }

    #[test]
    fn binary_round_trip() {
        let a = p("XYZIZ");
        assert_eq!(SymplecticPauli::from_binary(&a.to_binary()).unwrap(), a);
    }
}
