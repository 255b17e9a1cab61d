//! Z-type Tanner-graph recursive expansion (Z-TGRE) codes.
//!
//! `G_1` is a single Z check on qubits 0 and 1. `G_L` is two copies of
//! `G_{L-1}` (qubits and checks of the second copy offset by `2^(L-1)` and
//! `2^(L-2)`) plus cross edges: the odd-indexed qubit `2t + 1` of each copy
//! joins check `t` of the other copy. Qubit `2t` stays private to check `t`,
//! so the `2^(L-1)` checks are independent and `k = N / 2`. Every check of
//! `G_L` has weight `L + 1`.

use super::StabilizerCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// Qubits of the single check in `G_1`.
pub const ZTGRE_BASE_CHECK: [usize; 2] = [0, 1];

/// One arrow of the expansion: a qubit of one copy joins a check of the other.
/// Indices are local to the copy they belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossEdge {
    /// 0 for the first copy, 1 for the second.
    pub from_copy: usize,
    pub qubit: usize,
    pub check: usize,
}

/// Cross edges used to build `G_level` from two copies of `G_{level-1}`.
pub fn ztgre_cross_edges(level: usize) -> Vec<CrossEdge> {
    if level < 2 {
        return Vec::new();
    }
    let checks_per_copy = 1usize << (level - 2);
    (0..2)
        .flat_map(|from_copy| {
            (0..checks_per_copy).map(move |t| CrossEdge {
                from_copy,
                qubit: 2 * t + 1,
                check: t,
            })
        })
        .collect()
}

/// Z-TGRE code with `N = 2^L` qubits and `N / 2` Z-type generators.
pub fn ztgre(l: usize) -> Result<StabilizerCode> {
    if l < 1 {
        return Err(Error::InvalidParameter(format!("L must be ≥ 1, got {l}")));
    }
    if l > 20 {
        return Err(Error::InvalidParameter(format!("L = {l} is too large")));
    }
    let mut checks: Vec<Vec<usize>> = vec![ZTGRE_BASE_CHECK.to_vec()];
    let mut n = 2;
    for level in 2..=l {
        let m = checks.len();
        let mut next: Vec<Vec<usize>> = checks.clone();
        next.extend(checks.iter().map(|c| c.iter().map(|q| q + n).collect::<Vec<_>>()));
        for e in ztgre_cross_edges(level) {
            let (qubit, check) = if e.from_copy == 0 {
                (e.qubit, m + e.check)
            } else {
                (n + e.qubit, e.check)
            };
            next[check].push(qubit);
        }
        checks = next;
        n *= 2;
    }
    let hz = BitMatrix::from_entries(
        checks.len(),
        n,
        checks
            .iter()
            .enumerate()
            .flat_map(|(r, c)| c.iter().map(move |&q| (r, q))),
    );
    let hx = BitMatrix::zeros(checks.len(), n);
    Ok(StabilizerCode::new(format!("ztgre_{n}"), hx, hz)?
        .with_params(&[("family", "ztgre".into()), ("L", l.to_string())]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs_are_pinned() {
        // 1-indexed: c1 = {1, 2, 4}, c2 = {2, 3, 4}.
        let g2 = ztgre(2).unwrap();
        assert_eq!(g2.hz(), &BitMatrix::parse_rows(4, &["1101", "0111"]).unwrap());
        let g3 = ztgre(3).unwrap();
        assert_eq!(
            g3.hz(),
            &BitMatrix::parse_rows(8, &["11010100", "01110001", "01001101", "00010111"]).unwrap()
        );
    }

    #[test]
    fn rate_one_half_and_check_weight() {
        for l in 1..=9 {
            let code = ztgre(l).unwrap();
            assert_eq!(code.n(), 1 << l);
            assert_eq!(code.k(), 1 << (l - 1));
            for r in 0..code.num_generators() {
                assert_eq!(code.hz().row(r).count_ones(), l + 1);
            }
        }
        assert!(ztgre(0).is_err());
    }
}
