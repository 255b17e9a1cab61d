use std::fmt;

use super::vector::{and_parity, words_for, xor_words, BitVec, WORD_BITS};
use crate::error::{ensure_len, Error, Result};

/// Dense row-major matrix over GF(2). Each row is a run of `stride` words.
///
/// Matrices with zero rows or zero columns are legal everywhere.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from row vectors, all of which must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            ensure_len("matrix row", cols, r.len())?;
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
    }

    /// Parses rows of `0`/`1` characters. Intended for fixtures and tests.
    pub fn parse_rows(cols: usize, rows: &[&str]) -> Result<Self> {
        let parsed = rows.iter().map(|r| r.parse::<BitVec>()).collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, &parsed)
    }

    /// Matrix with the given `(row, col)` entries set. Repeated entries toggle.
    pub fn from_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c) in entries {
            m.flip(r, c);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub(crate) fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BitVec {
        assert!(r < self.rows, "row {r} out of range");
        BitVec::from_words(self.cols, self.row_words(r).to_vec())
    }

    pub fn row_vecs(&self) -> Vec<BitVec> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn column(&self, c: usize) -> BitVec {
        assert!(c < self.cols, "column {c} out of range");
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    /// # Panics
    ///
    /// Panics if the entry is out of range; see [`BitMatrix::try_get`].
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "entry ({r}, {c}) out of range");
        (self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    pub fn try_get(&self, r: usize, c: usize) -> Result<bool> {
        self.check_index(r, c)?;
        Ok(self.get(r, c))
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "entry ({r}, {c}) out of range");
        let w = &mut self.data[r * self.stride + c / WORD_BITS];
        let mask = 1u64 << (c % WORD_BITS);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn try_set(&mut self, r: usize, c: usize, value: bool) -> Result<()> {
        self.check_index(r, c)?;
        self.set(r, c, value);
        Ok(())
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols, "entry ({r}, {c}) out of range");
        self.data[r * self.stride + c / WORD_BITS] ^= 1u64 << (c % WORD_BITS);
    }

    fn check_index(&self, r: usize, c: usize) -> Result<()> {
        if r < self.rows && c < self.cols {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                row: r,
                col: c,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Set column indices of row `r`.
    pub fn row_support(&self, r: usize) -> Vec<usize> {
        self.row(r).iter_ones().collect()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row(r).iter_ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Matrix-vector product `M·v` over GF(2).
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        ensure_len("matrix-vector product", self.cols, v.len())?;
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if and_parity(self.row_words(r), v.words()) {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// `self · otherᵀ`; both operands must have the same column count.
    pub fn mul_transpose(&self, other: &BitMatrix) -> Result<BitMatrix> {
        ensure_len("product with transpose", self.cols, other.cols)?;
        let mut out = BitMatrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                if and_parity(self.row_words(i), other.row_words(j)) {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        ensure_len("matrix product", self.cols, other.rows)?;
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in self.row(i).iter_ones() {
                xor_words(out.row_words_mut(i), other.row_words(k));
            }
        }
        Ok(out)
    }

    /// Elementwise sum over GF(2).
    pub fn xor(&self, other: &BitMatrix) -> Result<BitMatrix> {
        ensure_len("matrix sum (rows)", self.rows, other.rows)?;
        ensure_len("matrix sum (cols)", self.cols, other.cols)?;
        let mut out = self.clone();
        xor_words(&mut out.data, &other.data);
        Ok(out)
    }

    /// Horizontal concatenation `[A | B | ...]`.
    pub fn hstack(blocks: &[&BitMatrix]) -> Result<BitMatrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = BitMatrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            ensure_len("horizontal stack", rows, b.rows)?;
            for r in 0..b.rows {
                for c in b.row(r).iter_ones() {
                    out.set(r, offset + c, true);
                }
            }
            offset += b.cols;
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(blocks: &[&BitMatrix]) -> Result<BitMatrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = BitMatrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            ensure_len("vertical stack", cols, b.cols)?;
            for r in 0..b.rows {
                out.row_words_mut(offset + r).copy_from_slice(b.row_words(r));
            }
            offset += b.rows;
        }
        Ok(out)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in self.row(i1).iter_ones() {
                for i2 in 0..other.rows {
                    for j2 in other.row(i2).iter_ones() {
                        out.set(i1 * other.rows + i2, j1 * other.cols + j2, true);
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (head, tail) = self.data.split_at_mut(hi * s);
        head[lo * s..(lo + 1) * s].swap_with_slice(&mut tail[..s]);
    }

    /// `row[dst] ^= row[src]`.
    #[inline]
    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        if src < dst {
            let (head, tail) = self.data.split_at_mut(dst * s);
            xor_words(&mut tail[..s], &head[src * s..(src + 1) * s]);
        } else {
            let (head, tail) = self.data.split_at_mut(src * s);
            xor_words(&mut head[dst * s..(dst + 1) * s], &tail[..s]);
        }
    }

    /// In-place reduction to reduced row-echelon form. Pivots are chosen at
    /// the lowest available column. Returns the pivot columns in row order.
    fn reduce_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let word = c / WORD_BITS;
            let mask = 1u64 << (c % WORD_BITS);
            let Some(p) = (rank..self.rows).find(|&r| self.data[r * self.stride + word] & mask != 0) else {
                continue;
            };
            self.swap_rows(p, rank);
            for r in 0..self.rows {
                if r != rank && self.data[r * self.stride + word] & mask != 0 {
                    self.xor_row_into(rank, r);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        self.clone().reduce_in_place().len()
    }

    /// Reduced row-echelon form and its pivot columns (ascending, one per
    /// nonzero row). Zero rows are moved to the bottom.
    pub fn row_reduce(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.reduce_in_place();
        (m, pivots)
    }

    /// Whether `v` is a GF(2) combination of the rows.
    pub fn in_row_span(&self, v: &BitVec) -> Result<bool> {
        ensure_len("row span membership", self.cols, v.len())?;
        Ok(RowSpace::new(self).contains_unchecked(v))
    }

    /// Basis of the right kernel `{v : M·v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let (rref, pivots) = self.row_reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVec::zeros(self.cols);
                v.set(free, true);
                for (r, &p) in pivots.iter().enumerate() {
                    if rref.get(r, free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Solves `M·x = s` using only columns selected greedily in `col_order`.
    ///
    /// Columns are scanned in the given order and kept when independent of
    /// those already kept. The returned `x` is supported on the kept set, on
    /// which the solution is unique.
    pub fn solve_selected(&self, s: &BitVec, col_order: &[usize]) -> Result<BitVec> {
        ensure_len("syndrome length", self.rows, s.len())?;
        check_permutation(col_order, self.cols)?;

        let mut work = self.clone();
        let mut rhs: Vec<bool> = (0..self.rows).map(|r| s.get(r)).collect();
        let mut pivots: Vec<usize> = Vec::with_capacity(self.rows.min(self.cols));
        let stride = self.stride;

        for &c in col_order {
            let rank = pivots.len();
            if rank == self.rows {
                break;
            }
            let word = c / WORD_BITS;
            let mask = 1u64 << (c % WORD_BITS);
            let Some(p) = (rank..self.rows).find(|&r| work.data[r * stride + word] & mask != 0) else {
                continue;
            };
            work.swap_rows(p, rank);
            rhs.swap(p, rank);
            for r in rank + 1..self.rows {
                if work.data[r * stride + word] & mask != 0 {
                    work.xor_row_into(rank, r);
                    rhs[r] ^= rhs[rank];
                }
            }
            pivots.push(c);
        }

        if rhs[pivots.len()..].iter().any(|&b| b) {
            return Err(Error::Infeasible);
        }

        // Back substitution: row i has no entries in earlier pivot columns, and x
        // is only ever nonzero on pivot columns.
        let mut x = BitVec::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate().rev() {
            let bit = rhs[i] ^ and_parity(work.row_words(i), x.words());
            if bit {
                x.set(p, true);
            }
        }
        Ok(x)
    }
}

fn check_permutation(order: &[usize], cols: usize) -> Result<()> {
    if order.len() != cols {
        return Err(Error::InvalidPermutation { cols });
    }
    let mut seen = vec![false; cols];
    for &c in order {
        if c >= cols || std::mem::replace(&mut seen[c], true) {
            return Err(Error::InvalidPermutation { cols });
        }
    }
    Ok(())
}

/// A row space held in reduced echelon form for repeated membership tests.
#[derive(Clone, Debug)]
pub struct RowSpace {
    basis: BitMatrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(m: &BitMatrix) -> Self {
        let (mut rref, pivots) = m.row_reduce();
        rref.rows = pivots.len();
        rref.data.truncate(pivots.len() * rref.stride);
        Self { basis: rref, pivots }
    }

    /// Empty subspace of `GF(2)^cols`.
    pub fn empty(cols: usize) -> Self {
        Self {
            basis: BitMatrix::zeros(0, cols),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Adds `v` to the spanning set. Returns `false` if it was already in the span.
    pub fn insert(&mut self, v: &BitVec) -> Result<bool> {
        ensure_len("row space insertion", self.basis.cols, v.len())?;
        let w = self.reduce(v);
        let Some(p) = w
            .iter()
            .enumerate()
            .find(|(_, &x)| x != 0)
            .map(|(i, &x)| i * WORD_BITS + x.trailing_zeros() as usize)
        else {
            return Ok(false);
        };
        self.basis.data.extend_from_slice(&w);
        self.basis.rows += 1;
        self.pivots.push(p);
        Ok(true)
    }

    // Every basis row is zero on the pivots of the rows before it, so one
    // ordered pass clears all pivot positions of `v`.
    fn reduce(&self, v: &BitVec) -> Vec<u64> {
        let mut w = v.words().to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if (w[p / WORD_BITS] >> (p % WORD_BITS)) & 1 == 1 {
                xor_words(&mut w, self.basis.row_words(r));
            }
        }
        w
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        ensure_len("row span membership", self.basis.cols, v.len())?;
        Ok(self.contains_unchecked(v))
    }

    fn contains_unchecked(&self, v: &BitVec) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(cols: usize, rows: &[&str]) -> BitMatrix {
        BitMatrix::parse_rows(cols, rows).unwrap()
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::zeros(4, 6).rank(), 0);
    }

    #[test]
    fn row_reduce_identity_is_fixed() {
        let (r, p) = BitMatrix::identity(4).row_reduce();
        assert_eq!(r, BitMatrix::identity(4));
        assert_eq!(p, vec![0, 1, 2, 3]);
    }

    #[test]
    fn row_reduce_collapses_duplicate_rows() {
        let (r, p) = m(2, &["11", "11"]).row_reduce();
        assert_eq!(r, m(2, &["11", "00"]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn in_row_span_basics() {
        let id = BitMatrix::identity(3);
        assert!(id.in_row_span(&BitVec::zeros(3)).unwrap());
        assert!(id.in_row_span(&"101".parse().unwrap()).unwrap());
        assert!(id.in_row_span(&BitVec::zeros(4)).is_err());
        let a = m(3, &["110"]);
        assert!(!a.in_row_span(&"100".parse().unwrap()).unwrap());
    }

    #[test]
    fn solve_selected_trivial_cases() {
        let id = BitMatrix::identity(3);
        let order = [0, 1, 2];
        assert!(id.solve_selected(&BitVec::zeros(3), &order).unwrap().is_zero());
        let s: BitVec = "011".parse().unwrap();
        assert_eq!(id.solve_selected(&s, &order).unwrap(), s);
    }

    #[test]
    fn solve_selected_respects_order_and_detects_infeasible() {
        // Column 2 equals column 0 + column 1.
        let a = m(3, &["101", "011"]);
        let s: BitVec = "11".parse().unwrap();
        let x = a.solve_selected(&s, &[2, 0, 1]).unwrap();
        assert_eq!(x.to_string(), "001");
        let x = a.solve_selected(&s, &[0, 1, 2]).unwrap();
        assert_eq!(x.to_string(), "110");

        let b = m(2, &["10", "10"]);
        assert_eq!(
            b.solve_selected(&"01".parse().unwrap(), &[0, 1]),
            Err(Error::Infeasible)
        );
        assert!(matches!(
            b.solve_selected(&"00".parse().unwrap(), &[0, 0]),
            Err(Error::InvalidPermutation { .. })
        ));
    }

    #[test]
    fn kernel_basis_small_cases() {
        assert!(BitMatrix::identity(5).kernel_basis().is_empty());
        let k = m(2, &["11"]).kernel_basis();
        assert_eq!(k, vec!["11".parse::<BitVec>().unwrap()]);
    }

    #[test]
    fn empty_matrices_are_legal() {
        let e = BitMatrix::zeros(0, 5);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.kernel_basis().len(), 5);
        assert!(e.in_row_span(&BitVec::zeros(5)).unwrap());
        assert!(!e.in_row_span(&BitVec::ones(5)).unwrap());
        let e2 = BitMatrix::zeros(3, 0);
        assert_eq!(e2.rank(), 0);
        assert!(e2.kernel_basis().is_empty());
        assert!(e2.solve_selected(&BitVec::zeros(3), &[]).unwrap().is_empty());
    }

    #[test]
    fn kron_and_stack_shapes() {
        let h = m(3, &["110", "011"]);
        let k = BitMatrix::identity(2).kron(&h);
        assert_eq!((k.rows(), k.cols()), (4, 6));
        assert_eq!(k.row(3).to_string(), "000011");
        let hs = BitMatrix::hstack(&[&h, &BitMatrix::identity(2)]).unwrap();
        assert_eq!(hs.row(1).to_string(), "01101");
        let vs = BitMatrix::vstack(&[&h, &h]).unwrap();
        assert_eq!(vs.rows(), 4);
        assert!(BitMatrix::hstack(&[&h, &BitMatrix::identity(3)]).is_err());
    }

    #[test]
    fn products() {
        let a = m(3, &["110", "011"]);
        let at = a.transpose();
        assert_eq!(a.mul(&at).unwrap(), a.mul_transpose(&a).unwrap());
        assert_eq!(a.mul_vec(&"111".parse().unwrap()).unwrap().to_string(), "00");
    }

    #[test]
    fn index_errors() {
        let mut a = BitMatrix::zeros(2, 2);
        assert!(a.try_get(2, 0).is_err());
        assert!(a.try_set(0, 2, true).is_err());
        assert!(a.try_set(1, 1, true).is_ok());
        assert!(a.try_get(1, 1).unwrap());
    }
}
