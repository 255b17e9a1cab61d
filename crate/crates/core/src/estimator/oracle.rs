//! Exhaustive minimum-weight logical search, independent of the decoder.

use serde::{Deserialize, Serialize};

use crate::codes::StabilizerCode;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, SymplecticPauli};

/// Single-qubit operators the search may place on each qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Support {
    #[default]
    All,
    /// X only: the minimum weight of X-type logicals.
    XOnly,
}

impl Support {
    fn paulis(self) -> &'static [Pauli] {
        match self {
            Support::All => &Pauli::NONTRIVIAL,
            Support::XOnly => &[Pauli::X],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub searched_max_weight: usize,
    /// `None` when no logical of weight up to `searched_max_weight` exists.
    pub found_distance: Option<usize>,
    pub witness: Option<SymplecticPauli>,
    /// Operators enumerated before stopping.
    pub candidates: u128,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Number of operators with weight `1..=w_max` on `n` qubits.
pub fn candidate_count(n: usize, w_max: usize, support: Support) -> u128 {
    let choices = support.paulis().len() as u128;
    (1..=w_max)
        .map(|w| binomial(n, w).saturating_mul(choices.saturating_pow(w as u32)))
        .fold(0u128, u128::saturating_add)
}

struct Search<'a> {
    code: &'a StabilizerCode,
    paulis: &'static [Pauli],
    words: usize,
    /// Syndrome of each (qubit, operator) pair, `words` per entry.
    columns: Vec<u64>,
    /// Running syndrome for each depth.
    stack: Vec<u64>,
    chosen: Vec<(usize, Pauli)>,
    candidates: u128,
}

impl Search<'_> {
    fn run(&mut self, target: usize, start: usize) -> Result<Option<SymplecticPauli>> {
        let depth = self.chosen.len();
        let n = self.code.n();
        if depth == target {
            self.candidates += 1;
            let syn = &self.stack[depth * self.words..(depth + 1) * self.words];
            if syn.iter().all(|&w| w == 0) {
                let p = SymplecticPauli::from_sparse(n, &self.chosen)?;
                if !self.code.is_stabilizer(&p)? {
                    return Ok(Some(p));
                }
            }
            return Ok(None);
        }
        let remaining = target - depth;
        for q in start..=n - remaining {
            for op in 0..self.paulis.len() {
                let (lo, hi) = self.stack.split_at_mut((depth + 1) * self.words);
                let next = &mut hi[..self.words];
                next.copy_from_slice(&lo[depth * self.words..]);
                let at = (q * self.paulis.len() + op) * self.words;
                for (d, s) in next.iter_mut().zip(&self.columns[at..at + self.words]) {
                    *d ^= s;
                }
                self.chosen.push((q, self.paulis[op]));
                let found = self.run(target, q + 1)?;
                self.chosen.pop();
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
        Ok(None)
    }
}

/// Smallest weight `w <= w_max` carrying a zero-syndrome operator outside the
/// stabilizer group. Fails up front if more than `budget` operators would
/// have to be enumerated.
pub fn brute_force_distance(
    code: &StabilizerCode,
    w_max: usize,
    support: Support,
    budget: u128,
) -> Result<OracleResult> {
    let n = code.n();
    let w_max = w_max.min(n);
    let required = candidate_count(n, w_max, support);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let paulis = support.paulis();
    let m = code.num_generators();
    let words = m.div_ceil(64).max(1);
    let mut columns = vec![0u64; n * paulis.len() * words];
    for q in 0..n {
        for (oi, &op) in paulis.iter().enumerate() {
            let syn = code.syndrome(&SymplecticPauli::from_sparse(n, &[(q, op)])?)?;
            let at = (q * paulis.len() + oi) * words;
            for r in syn.bits().iter_ones() {
                columns[at + r / 64] |= 1u64 << (r % 64);
            }
        }
    }
    let mut search = Search {
        code,
        paulis,
        words,
        columns,
        stack: vec![0u64; (w_max + 1) * words],
        chosen: Vec::with_capacity(w_max),
        candidates: 0,
    };
    for w in 1..=w_max {
        if let Some(p) = search.run(w, 0)? {
            return Ok(OracleResult {
                searched_max_weight: w_max,
                found_distance: Some(w),
                witness: Some(p),
                candidates: search.candidates,
            });
        }
    }
    Ok(OracleResult {
        searched_max_weight: w_max,
        found_distance: None,
        witness: None,
        candidates: search.candidates,
    })
}
