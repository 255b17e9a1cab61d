//! Hypergraph and XYZ product constructions.

use super::{repetition, ClassicalCode, StabilizerCode};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::pauli::Pauli;

fn kron3(a: &BitMatrix, b: &BitMatrix, c: &BitMatrix) -> BitMatrix {
    a.kron(b).kron(c)
}

/// CSS hypergraph product of `ker H1` (`m1 × n1`) and `ker H2` (`m2 × n2`).
///
/// Qubits are `n1·n2 + m1·m2`; X checks `[1 ⊗ H2 | H1ᵀ ⊗ 1]` come first,
/// then Z checks `[H1 ⊗ 1 | 1 ⊗ H2ᵀ]`.
pub fn hypergraph_product(c1: &ClassicalCode, c2: &ClassicalCode) -> Result<StabilizerCode> {
    let (h1, h2) = (c1.h(), c2.h());
    let (m1, n1, m2, n2) = (h1.rows(), h1.cols(), h2.rows(), h2.cols());
    let x_block = BitMatrix::hstack(&[
        &BitMatrix::identity(n1).kron(h2),
        &h1.transpose().kron(&BitMatrix::identity(m2)),
    ])?;
    let z_block = BitMatrix::hstack(&[
        &h1.kron(&BitMatrix::identity(n2)),
        &BitMatrix::identity(m1).kron(&h2.transpose()),
    ])?;
    let n = n1 * n2 + m1 * m2;
    let hx = BitMatrix::vstack(&[&x_block, &BitMatrix::zeros(z_block.rows(), n)])?;
    let hz = BitMatrix::vstack(&[&BitMatrix::zeros(x_block.rows(), n), &z_block])?;
    Ok(StabilizerCode::new(format!("hgp_{n1}x{n2}"), hx, hz)?.with_params(&[
        ("family", "hypergraph_product".into()),
        ("h1", format!("{m1}x{n1}")),
        ("h2", format!("{m2}x{n2}")),
    ]))
}

/// XYZ product of three classical codes.
///
/// Qubit blocks in order: `A = n1·n2·n3`, `B = m1·m2·n3`, `C = m1·n2·m3`,
/// `D = n1·m2·m3`. Generator blocks in order: `S = m1·n2·n3`,
/// `T = n1·m2·n3`, `U = n1·n2·m3`, `V = m1·m2·m3`. A Pauli tensor `P^(M)`
/// places `P` wherever `M` has a one: X fills the x block, Z the z block,
/// Y both.
pub fn xyz_product(c1: &ClassicalCode, c2: &ClassicalCode, c3: &ClassicalCode) -> Result<StabilizerCode> {
    let (h1, h2, h3) = (c1.h(), c2.h(), c3.h());
    let (m1, n1) = (h1.rows(), h1.cols());
    let (m2, n2) = (h2.rows(), h2.cols());
    let (m3, n3) = (h3.rows(), h3.cols());
    let id = BitMatrix::identity;
    let (h1t, h2t, h3t) = (h1.transpose(), h2.transpose(), h3.transpose());

    let qubit_blocks = [n1 * n2 * n3, m1 * m2 * n3, m1 * n2 * m3, n1 * m2 * m3];
    let row_blocks = [m1 * n2 * n3, n1 * m2 * n3, n1 * n2 * m3, m1 * m2 * m3];

    // One entry per (generator block, qubit block); `None` is the identity.
    let layout: [[Option<(Pauli, BitMatrix)>; 4]; 4] = [
        [
            Some((Pauli::X, kron3(h1, &id(n2), &id(n3)))),
            Some((Pauli::Y, kron3(&id(m1), &h2t, &id(n3)))),
            Some((Pauli::Z, kron3(&id(m1), &id(n2), &h3t))),
            None,
        ],
        [
            Some((Pauli::Y, kron3(&id(n1), h2, &id(n3)))),
            Some((Pauli::X, kron3(&h1t, &id(m2), &id(n3)))),
            None,
            Some((Pauli::Z, kron3(&id(n1), &id(m2), &h3t))),
        ],
        [
            Some((Pauli::Z, kron3(&id(n1), &id(n2), h3))),
            None,
            Some((Pauli::X, kron3(&h1t, &id(n2), &id(m3)))),
            Some((Pauli::Y, kron3(&id(n1), &h2t, &id(m3)))),
        ],
        [
            None,
            Some((Pauli::Z, kron3(&id(m1), &id(m2), h3))),
            Some((Pauli::Y, kron3(&id(m1), h2, &id(m3)))),
            Some((Pauli::X, kron3(h1, &id(m2), &id(m3)))),
        ],
    ];

    let n: usize = qubit_blocks.iter().sum();
    let rows: usize = row_blocks.iter().sum();
    let mut hx = BitMatrix::zeros(rows, n);
    let mut hz = BitMatrix::zeros(rows, n);
    let mut row_offset = 0;
    for (bi, row_layout) in layout.iter().enumerate() {
        let mut col_offset = 0;
        for (bj, cell) in row_layout.iter().enumerate() {
            if let Some((pauli, m)) = cell {
                if (m.rows(), m.cols()) != (row_blocks[bi], qubit_blocks[bj]) {
                    return Err(Error::Internal(format!(
                        "XYZ block ({bi}, {bj}) has shape {}x{}",
                        m.rows(),
                        m.cols()
                    )));
                }
                let (x, z) = pauli.bits();
                for r in 0..m.rows() {
                    for c in m.row(r).iter_ones() {
                        if x {
                            hx.set(row_offset + r, col_offset + c, true);
                        }
                        if z {
                            hz.set(row_offset + r, col_offset + c, true);
                        }
                    }
                }
            }
            col_offset += qubit_blocks[bj];
        }
        row_offset += row_blocks[bi];
    }
    Ok(
        StabilizerCode::new(format!("xyz_{n1}x{n2}x{n3}"), hx, hz)?.with_params(&[
            ("family", "xyz_product".into()),
            ("h1", format!("{m1}x{n1}")),
            ("h2", format!("{m2}x{n2}")),
            ("h3", format!("{m3}x{n3}")),
        ]),
    )
}

/// Chamon code: XYZ product of three cyclic repetition codes, `N = 4·n1·n2·n3`.
pub fn chamon(n1: usize, n2: usize, n3: usize) -> Result<StabilizerCode> {
    for (name, v) in [("n1", n1), ("n2", n2), ("n3", n3)] {
        if v < 2 {
            return Err(Error::InvalidParameter(format!("{name} must be ≥ 2, got {v}")));
        }
    }
    let code = xyz_product(&repetition(n1, true)?, &repetition(n2, true)?, &repetition(n3, true)?)?;
    Ok(code.with_name(format!("chamon_{n1}_{n2}_{n3}")).with_params(&[
        ("family", "chamon".into()),
        ("n1", n1.to_string()),
        ("n2", n2.to_string()),
        ("n3", n3.to_string()),
    ]))
}
