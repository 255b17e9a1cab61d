use crate::error::{ensure_len, Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::pauli::Syndrome;

/// OSD-0: columns sorted by descending `P(bit = 1)`, ties by ascending index,
/// then an exact solve on the first independent set in that order.
///
/// The result may put more than one bit on a qubit; the XOR map resolves it
/// without changing the syndrome.
pub fn osd_post_process(hd: &BitMatrix, s: &Syndrome, posteriors: &[f64]) -> Result<BitVec> {
    ensure_len("posterior count", hd.cols(), posteriors.len())?;
    let mut order: Vec<usize> = (0..hd.cols()).collect();
    order.sort_by(|&a, &b| posteriors[b].total_cmp(&posteriors[a]));
    hd.solve_selected(s.bits(), &order).map_err(|e| match e {
        Error::Infeasible => Error::Internal("syndrome is not in the column space of the check matrix".into()),
        other => other,
    })
}
