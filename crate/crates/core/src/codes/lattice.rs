//! Surface-code families on square lattices.
//!
//! Planar layout: a `(2L-1) × (2L-1)` grid where data qubits sit at sites with
//! `row + col` even (indexed row-major), X checks sit at (even row, odd col)
//! and Z checks at (odd row, even col). Each check acts on its existing
//! up/down/left/right neighbours.
//!
//! Toric layout: an `L × L` periodic lattice with horizontal edge `(r, c)` at
//! index `r·L + c` and vertical edge `(r, c)` at `L² + r·L + c`. Vertex checks
//! are X type, plaquette checks Z type.

use super::StabilizerCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

fn check_size(l: usize) -> Result<()> {
    if l < 2 {
        return Err(Error::InvalidParameter(format!("L must be ≥ 2, got {l}")));
    }
    Ok(())
}

type Site = (usize, usize);

struct PlanarGrid {
    side: usize,
    index: Vec<Option<usize>>,
    n: usize,
}

impl PlanarGrid {
    fn new(l: usize) -> Self {
        let side = 2 * l - 1;
        let mut index = vec![None; side * side];
        let mut n = 0;
        for r in 0..side {
            for c in 0..side {
                if (r + c) % 2 == 0 {
                    index[r * side + c] = Some(n);
                    n += 1;
                }
            }
        }
        Self { side, index, n }
    }

    fn qubit(&self, r: isize, c: isize) -> Option<usize> {
        let s = self.side as isize;
        if r < 0 || c < 0 || r >= s || c >= s {
            return None;
        }
        self.index[r as usize * self.side + c as usize]
    }

    /// (horizontal neighbours, vertical neighbours) of the check at `(r, c)`.
    fn neighbours(&self, r: usize, c: usize) -> (Vec<usize>, Vec<usize>) {
        let (r, c) = (r as isize, c as isize);
        let horizontal = [self.qubit(r, c - 1), self.qubit(r, c + 1)]
            .into_iter()
            .flatten()
            .collect();
        let vertical = [self.qubit(r - 1, c), self.qubit(r + 1, c)]
            .into_iter()
            .flatten()
            .collect();
        (horizontal, vertical)
    }

    /// Check sites: X checks first, then Z checks, each in row-major order.
    fn check_sites(&self) -> (Vec<Site>, Vec<Site>) {
        let mut xs = Vec::new();
        let mut zs = Vec::new();
        for r in 0..self.side {
            for c in 0..self.side {
                match (r % 2, c % 2) {
                    (0, 1) => xs.push((r, c)),
                    (1, 0) => zs.push((r, c)),
                    _ => {}
                }
            }
        }
        (xs, zs)
    }
}

/// Unrotated planar surface code `[[L² + (L-1)², 1, L]]`.
pub fn planar_surface(l: usize) -> Result<StabilizerCode> {
    check_size(l)?;
    let grid = PlanarGrid::new(l);
    let (xs, zs) = grid.check_sites();
    let m = xs.len() + zs.len();
    let mut hx = BitMatrix::zeros(m, grid.n);
    let mut hz = BitMatrix::zeros(m, grid.n);
    for (row, &(r, c)) in xs.iter().enumerate() {
        let (h, v) = grid.neighbours(r, c);
        for q in h.into_iter().chain(v) {
            hx.set(row, q, true);
        }
    }
    for (i, &(r, c)) in zs.iter().enumerate() {
        let (h, v) = grid.neighbours(r, c);
        for q in h.into_iter().chain(v) {
            hz.set(xs.len() + i, q, true);
        }
    }
    Ok(StabilizerCode::new(format!("planar_surface_{l}"), hx, hz)?
        .with_params(&[("family", "surface".into()), ("L", l.to_string())]))
}

/// XZZX surface code on the planar layout: every check reads X, Z, Z, X on
/// its left, up, down and right neighbours. Equivalent to the planar code
/// with a Hadamard on every qubit at an (odd, odd) site.
pub fn xzzx_surface(l: usize) -> Result<StabilizerCode> {
    check_size(l)?;
    let grid = PlanarGrid::new(l);
    let (xs, zs) = grid.check_sites();
    let m = xs.len() + zs.len();
    let mut hx = BitMatrix::zeros(m, grid.n);
    let mut hz = BitMatrix::zeros(m, grid.n);
    for (row, &(r, c)) in xs.iter().chain(&zs).enumerate() {
        let (h, v) = grid.neighbours(r, c);
        for q in h {
            hx.set(row, q, true);
        }
        for q in v {
            hz.set(row, q, true);
        }
    }
    Ok(StabilizerCode::new(format!("xzzx_surface_{l}"), hx, hz)?
        .with_params(&[("family", "xzzx".into()), ("L", l.to_string())]))
}

/// Toric code `[[2L², 2, L]]`.
pub fn toric(l: usize) -> Result<StabilizerCode> {
    check_size(l)?;
    let n = 2 * l * l;
    let h = |r: usize, c: usize| (r % l) * l + (c % l);
    let v = |r: usize, c: usize| l * l + (r % l) * l + (c % l);
    let mut hx = BitMatrix::zeros(n, n);
    let mut hz = BitMatrix::zeros(n, n);
    for r in 0..l {
        for c in 0..l {
            let vertex = r * l + c;
            for q in [h(r, c), h(r, c + l - 1), v(r, c), v(r + l - 1, c)] {
                hx.flip(vertex, q);
            }
            let plaquette = l * l + r * l + c;
            for q in [h(r, c), h(r + 1, c), v(r, c), v(r, c + 1)] {
                hz.flip(plaquette, q);
            }
        }
    }
    Ok(StabilizerCode::new(format!("toric_{l}"), hx, hz)?
        .with_params(&[("family", "toric".into()), ("L", l.to_string())]))
}
