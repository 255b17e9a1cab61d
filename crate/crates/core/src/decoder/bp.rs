//! Log-domain sum-product on the decoupled Tanner graph.
//!
//! Every one of the `3n` decoupled bits is an independent binary variable
//! with its own prior. The one-hot constraint per qubit is applied by the
//! hard decision, which picks the most likely of I, X, Z, Y from the three
//! bit marginals.

use super::{BpConfig, ChannelPrior};
use crate::error::{ensure_len, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::pauli::{DecoupledPauli, Pauli, Syndrome};

/// Sparse adjacency of a check matrix in CSR form, indexed by edge.
#[derive(Debug, Clone)]
pub struct TannerGraph {
    checks: usize,
    vars: usize,
    check_start: Vec<usize>,
    edge_var: Vec<usize>,
    var_start: Vec<usize>,
    var_edges: Vec<usize>,
    hd: BitMatrix,
}

impl TannerGraph {
    pub fn new(hd: &BitMatrix) -> Self {
        let (checks, vars) = (hd.rows(), hd.cols());
        let mut check_start = Vec::with_capacity(checks + 1);
        let mut edge_var = Vec::new();
        check_start.push(0);
        for c in 0..checks {
            edge_var.extend(hd.row(c).iter_ones());
            check_start.push(edge_var.len());
        }
        let mut degree = vec![0usize; vars];
        for &v in &edge_var {
            degree[v] += 1;
        }
        let mut var_start = vec![0usize; vars + 1];
        for v in 0..vars {
            var_start[v + 1] = var_start[v] + degree[v];
        }
        let mut fill = var_start.clone();
        let mut var_edges = vec![0usize; edge_var.len()];
        for (e, &v) in edge_var.iter().enumerate() {
            var_edges[fill[v]] = e;
            fill[v] += 1;
        }
        Self {
            checks,
            vars,
            check_start,
            edge_var,
            var_start,
            var_edges,
            hd: hd.clone(),
        }
    }

    pub fn checks(&self) -> usize {
        self.checks
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn edges(&self) -> usize {
        self.edge_var.len()
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.hd
    }
}

/// Per-call message buffers. One per worker thread.
#[derive(Debug, Default, Clone)]
pub struct BpWorkspace {
    v2c: Vec<f64>,
    c2v: Vec<f64>,
    tanh: Vec<f64>,
    prior_llr: Vec<f64>,
    total_llr: Vec<f64>,
    prefix: Vec<f64>,
    decision: Vec<bool>,
}

impl BpWorkspace {
    fn prepare(&mut self, graph: &TannerGraph) {
        self.v2c.resize(graph.edges(), 0.0);
        self.c2v.resize(graph.edges(), 0.0);
        self.tanh.resize(graph.edges(), 0.0);
        self.prior_llr.resize(graph.vars, 0.0);
        self.total_llr.resize(graph.vars, 0.0);
        self.decision.resize(graph.vars, false);
    }
}

#[derive(Debug, Clone)]
pub struct BpResult {
    /// Hard decision of the last iteration as `3n` raw bits.
    pub raw: BitVec,
    /// Marginal probability that each decoupled bit is 1.
    pub posteriors: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
}

#[inline]
fn clip(x: f64, bound: f64) -> f64 {
    x.clamp(-bound, bound)
}

/// `ln((1 - q) / q)`, clipped.
fn prior_llr(q: f64, bound: f64) -> f64 {
    clip(((1.0 - q) / q).ln(), bound)
}

/// [`hard_decision`] on log-likelihood ratios `ln(P(0) / P(1))`.
///
/// `P(X) / P(I) = exp(-L_x)`, so the four-way argmax compares `0` with
/// `-L_x`, `-L_z` and `-L_y`.
fn hard_decision_llr(llr: &[f64], n: usize, out: &mut [bool]) {
    out.fill(false);
    for q in 0..n {
        let mut best = 0;
        let mut best_score = 0.0;
        for b in 0..3 {
            let score = -llr[b * n + q];
            if score > best_score {
                best = b + 1;
                best_score = score;
            }
        }
        if best > 0 {
            out[(best - 1) * n + q] = true;
        }
    }
}

impl TannerGraph {
    fn satisfies(&self, bits: &[bool], s: &BitVec) -> bool {
        (0..self.checks).all(|c| {
            let edges = &self.edge_var[self.check_start[c]..self.check_start[c + 1]];
            let parity = edges.iter().fold(false, |acc, &v| acc ^ bits[v]);
            parity == s.get(c)
        })
    }
}

/// Flooding sum-product on `graph` for syndrome `s`.
pub fn bp_decode_with(
    graph: &TannerGraph,
    s: &Syndrome,
    prior: &ChannelPrior,
    cfg: &BpConfig,
    ws: &mut BpWorkspace,
) -> Result<BpResult> {
    ensure_len("syndrome length", graph.checks, s.len())?;
    ensure_len(
        "decoupled columns (must be 3n)",
        graph.vars - graph.vars % 3,
        graph.vars,
    )?;
    cfg.check()?;
    let n = graph.vars / 3;
    let bound = cfg.clip;
    ws.prepare(graph);

    let bit_priors = [prior.x, prior.z, prior.y];
    for (block, &q) in bit_priors.iter().enumerate() {
        let llr = prior_llr(q, bound);
        ws.prior_llr[block * n..(block + 1) * n].fill(llr);
    }
    for (e, &v) in graph.edge_var.iter().enumerate() {
        ws.v2c[e] = ws.prior_llr[v];
    }

    let mut iterations = 0;
    let mut converged = false;
    while iterations < cfg.max_iterations {
        iterations += 1;

        // Check-to-variable: tanh rule with leave-one-out products, using
        // tanh(m/2) = 1 - 2/(e^m + 1) and 2 atanh(t) = ln((1+t)/(1-t)).
        for (t, &m) in ws.tanh.iter_mut().zip(&ws.v2c) {
            *t = 1.0 - 2.0 / (m.exp() + 1.0);
        }
        for c in 0..graph.checks {
            let (lo, hi) = (graph.check_start[c], graph.check_start[c + 1]);
            let sign = if s.bits().get(c) { -1.0 } else { 1.0 };
            ws.prefix.clear();
            let mut acc = 1.0;
            for &t in &ws.tanh[lo..hi] {
                ws.prefix.push(acc);
                acc *= t;
            }
            let mut suffix = 1.0;
            for e in (lo..hi).rev() {
                let t = ws.prefix[e - lo] * suffix;
                suffix *= ws.tanh[e];
                ws.c2v[e] = clip(sign * ((1.0 + t) / (1.0 - t)).ln(), bound);
            }
        }

        // Variable-to-check and marginals.
        for v in 0..graph.vars {
            let edges = &graph.var_edges[graph.var_start[v]..graph.var_start[v + 1]];
            let total = ws.prior_llr[v] + edges.iter().map(|&e| ws.c2v[e]).sum::<f64>();
            ws.total_llr[v] = total;
            for &e in edges {
                ws.v2c[e] = clip(total - ws.c2v[e], bound);
            }
        }

        hard_decision_llr(&ws.total_llr, n, &mut ws.decision);
        if graph.satisfies(&ws.decision, s.bits()) {
            converged = true;
            break;
        }
    }

    if iterations == 0 {
        ws.total_llr.copy_from_slice(&ws.prior_llr);
        hard_decision_llr(&ws.total_llr, n, &mut ws.decision);
    }
    Ok(BpResult {
        raw: BitVec::from_bools(&ws.decision),
        posteriors: ws.total_llr.iter().map(|&l| 1.0 / (1.0 + l.exp())).collect(),
        converged,
        iterations,
    })
}

/// Convenience wrapper that builds the graph and scratch space for one call.
pub fn bp_decode(hd: &BitMatrix, s: &Syndrome, prior: &ChannelPrior, cfg: &BpConfig) -> Result<BpResult> {
    let graph = TannerGraph::new(hd);
    bp_decode_with(&graph, s, prior, cfg, &mut BpWorkspace::default())
}

/// Per-qubit four-way decision from the `3n` bit marginals.
///
/// Scores are `P(I) = (1-px)(1-pz)(1-py)`, `P(X) = px(1-pz)(1-py)` and so on;
/// exact ties go to the earlier of I, X, Z, Y.
pub fn hard_decision(posteriors: &[f64], n: usize) -> Result<DecoupledPauli> {
    ensure_len("posterior count (must be 3n)", 3 * n, posteriors.len())?;
    let mut out = DecoupledPauli::identity(n);
    for q in 0..n {
        let (px, pz, py) = (posteriors[q], posteriors[n + q], posteriors[2 * n + q]);
        let scores = [
            (1.0 - px) * (1.0 - pz) * (1.0 - py),
            px * (1.0 - pz) * (1.0 - py),
            (1.0 - px) * pz * (1.0 - py),
            (1.0 - px) * (1.0 - pz) * py,
        ];
        let mut best = 0;
        for i in 1..4 {
            if scores[i] > scores[best] {
                best = i;
            }
        }
        if best != 0 {
            out.set(q, Pauli::ALL[best]);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hard_decision_cases() {
        let n = 2;
        let mut post = vec![0.01; 3 * n];
        assert_eq!(hard_decision(&post, n).unwrap(), DecoupledPauli::identity(n));
        post[1] = 0.9;
        let d = hard_decision(&post, n).unwrap();
        assert_eq!(d.get(1), Pauli::X);
        assert_eq!(d.get(0), Pauli::I);
        assert!(hard_decision(&post, 3).is_err());
    }

    #[test]
    fn hard_decision_tie_breaks() {
        // X and Z exactly tied and dominant: X wins.
        let post = vec![0.8, 0.8, 0.0];
        assert_eq!(hard_decision(&post, 1).unwrap().get(0), Pauli::X);
        // Z and Y tied: Z wins.
        let post = vec![0.0, 0.8, 0.8];
        assert_eq!(hard_decision(&post, 1).unwrap().get(0), Pauli::Z);
        // I and X tied at 0.5: I wins.
        let post = vec![0.5, 0.0, 0.0];
        assert_eq!(hard_decision(&post, 1).unwrap().get(0), Pauli::I);
    }

    #[test]
    fn llr_decision_matches_probability_decision() {
        let llr = [2.0, -1.0, 0.5, -3.0, 4.0, -0.2, 1.0, -2.5, 3.0];
        let post: Vec<f64> = llr.iter().map(|l: &f64| 1.0 / (1.0 + l.exp())).collect();
        let mut bits = vec![false; 9];
        hard_decision_llr(&llr, 3, &mut bits);
        assert_eq!(BitVec::from_bools(&bits), hard_decision(&post, 3).unwrap().to_bits());
    }

    #[test]
    fn graph_shape() {
        let hd = BitMatrix::parse_rows(6, &["110100", "011001"]).unwrap();
        let g = TannerGraph::new(&hd);
        assert_eq!((g.checks(), g.vars(), g.edges()), (2, 6, 6));
    }
}
