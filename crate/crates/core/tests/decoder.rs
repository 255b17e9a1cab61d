use qdist::codes::{chamon, planar_surface, toric, xzzx_surface};
use qdist::decoder::{bp_decode, decode, hard_decision, osd_post_process, BpConfig, ChannelPrior, Decoder};
use qdist::estimator::{classify_residual, sample_error, trial_rng, NoiseKind, Residual};
use qdist::pauli::syndrome_decoupled;
use qdist::{BitMatrix, BitVec, Pauli, StabilizerCode, SymplecticPauli, Syndrome};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn single(n: usize, q: usize, op: Pauli) -> SymplecticPauli {
    SymplecticPauli::from_sparse(n, &[(q, op)]).unwrap()
}

#[test]
fn zero_syndrome_decodes_to_identity() {
    let code = planar_surface(3).unwrap();
    let prior = ChannelPrior::depolarizing(0.1).unwrap();
    let s = Syndrome::zeros(code.num_generators());
    let bp = bp_decode(code.hd(), &s, &prior, &BpConfig::default()).unwrap();
    assert!(bp.converged);
    assert_eq!(bp.iterations, 1);
    assert!(bp.raw.is_zero());
    let out = decode(&code, &s, &prior, &BpConfig::default()).unwrap();
    assert!(out.estimate.is_identity());
    assert!(!out.osd_applied);
}

#[test]
fn single_x_errors_are_reproduced_by_bp() {
    let code = planar_surface(3).unwrap();
    let prior = ChannelPrior::depolarizing(0.01).unwrap();
    for q in 0..code.n() {
        let e = single(code.n(), q, Pauli::X);
        let s = code.syndrome(&e).unwrap();
        let bp = bp_decode(code.hd(), &s, &prior, &BpConfig::default()).unwrap();
        assert!(bp.converged, "qubit {q}");
        let estimate = qdist::pauli::decoupled_bits_to_symplectic(&bp.raw).unwrap();
        let residual = e.mul(&estimate).unwrap();
        assert_eq!(
            classify_residual(&code, &residual).unwrap(),
            Residual::Stabilizer,
            "qubit {q}"
        );
    }
}

#[test]
fn weight_two_errors_on_small_torus_keep_posteriors_finite() {
    let code = toric(2).unwrap();
    let n = code.n();
    let prior = ChannelPrior::depolarizing(0.1).unwrap();
    let mut dec = Decoder::new(&code, prior, BpConfig::default()).unwrap();
    for a in 0..n {
        for b in a + 1..n {
            for pa in Pauli::NONTRIVIAL {
                for pb in Pauli::NONTRIVIAL {
                    let e = SymplecticPauli::from_sparse(n, &[(a, pa), (b, pb)]).unwrap();
                    let s = code.syndrome(&e).unwrap();
                    let out = dec.decode(&s).unwrap();
                    assert!(out.posteriors.iter().all(|p| p.is_finite() && (0.0..=1.0).contains(p)));
                    assert_eq!(code.syndrome(&out.estimate).unwrap(), s);
                }
            }
        }
    }
}

fn assert_weight_one_corrected(code: &StabilizerCode, p: f64) {
    let mut dec = Decoder::new(code, ChannelPrior::depolarizing(p).unwrap(), BpConfig::default()).unwrap();
    for q in 0..code.n() {
        for op in Pauli::NONTRIVIAL {
            let e = single(code.n(), q, op);
            let out = dec.decode(&code.syndrome(&e).unwrap()).unwrap();
            let r = e.mul(&out.estimate).unwrap();
            assert_eq!(
                classify_residual(code, &r).unwrap(),
                Residual::Stabilizer,
                "{} {op:?} on qubit {q}",
                code.name()
            );
        }
    }
}

#[test]
fn weight_one_errors_are_corrected() {
    assert_weight_one_corrected(&xzzx_surface(3).unwrap(), 0.05);
    assert_weight_one_corrected(&planar_surface(3).unwrap(), 0.05);
    assert_weight_one_corrected(&toric(3).unwrap(), 0.05);
    assert_weight_one_corrected(&chamon(3, 3, 3).unwrap(), 0.05);
}

#[test]
fn random_errors_give_consistent_syndromes() {
    let code = chamon(2, 2, 2).unwrap();
    let mut dec = Decoder::new(&code, ChannelPrior::depolarizing(0.05).unwrap(), BpConfig::default()).unwrap();
    for t in 0..1000 {
        let mut rng = trial_rng(3, 0, t);
        let e = sample_error(code.n(), 0.05, NoiseKind::Depolarizing, &mut rng).unwrap();
        let s = code.syndrome(&e).unwrap();
        let out = dec.decode(&s).unwrap();
        assert_eq!(code.syndrome(&out.estimate).unwrap(), s);
        assert_eq!(out.posteriors.len(), 3 * code.n());
        assert!(out.bp_converged || out.osd_applied);
    }
}

#[test]
fn decoding_is_deterministic() {
    let code = toric(4).unwrap();
    let prior = ChannelPrior::depolarizing(0.12).unwrap();
    let mut rng = trial_rng(11, 0, 0);
    for _ in 0..50 {
        let e = sample_error(code.n(), 0.12, NoiseKind::Depolarizing, &mut rng).unwrap();
        let s = code.syndrome(&e).unwrap();
        let a = decode(&code, &s, &prior, &BpConfig::default()).unwrap();
        let mut dec = Decoder::new(&code, prior, BpConfig::default()).unwrap();
        dec.decode(&s).unwrap();
        let b = dec.decode(&s).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn hard_decision_is_one_hot_and_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..2000 {
        let n = rng.gen_range(1..10);
        let post: Vec<f64> = (0..3 * n).map(|_| rng.gen::<f64>()).collect();
        let d = hard_decision(&post, n).unwrap();
        for q in 0..n {
            let scores = [
                (1.0 - post[q]) * (1.0 - post[n + q]) * (1.0 - post[2 * n + q]),
                post[q] * (1.0 - post[n + q]) * (1.0 - post[2 * n + q]),
                (1.0 - post[q]) * post[n + q] * (1.0 - post[2 * n + q]),
                (1.0 - post[q]) * (1.0 - post[n + q]) * post[2 * n + q],
            ];
            let chosen = Pauli::ALL.iter().position(|&p| p == d.get(q)).unwrap();
            assert!(scores.iter().all(|&s| s <= scores[chosen]));
        }
        // from_bits only accepts one-hot triples.
        assert!(qdist::DecoupledPauli::from_bits(&d.to_bits()).is_ok());
    }
}

#[test]
fn osd_always_matches_the_syndrome() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for case in 0..10_000 {
        let rows = rng.gen_range(1..12);
        let cols = 3 * rng.gen_range(1..8);
        let hd = BitMatrix::from_entries(
            rows,
            cols,
            (0..rows * cols)
                .filter(|_| rng.gen_bool(0.3))
                .map(|i| (i / cols, i % cols)),
        );
        let x = BitVec::from_indices(cols, (0..cols).filter(|_| rng.gen_bool(0.2)));
        let s = Syndrome(hd.mul_vec(&x).unwrap());
        let post: Vec<f64> = (0..cols).map(|_| rng.gen::<f64>()).collect();
        let sol = osd_post_process(&hd, &s, &post).unwrap();
        assert_eq!(hd.mul_vec(&sol).unwrap(), *s.bits(), "case {case}");
    }
}

#[test]
fn non_converged_bp_falls_back_to_osd() {
    let code = planar_surface(5).unwrap();
    let cfg = BpConfig {
        max_iterations: 1,
        ..BpConfig::default()
    };
    let prior = ChannelPrior::depolarizing(0.15).unwrap();
    let mut dec = Decoder::new(&code, prior, cfg).unwrap();
    let mut fallbacks = 0;
    for t in 0..300 {
        let mut rng = trial_rng(8, 0, t);
        let e = sample_error(code.n(), 0.15, NoiseKind::Depolarizing, &mut rng).unwrap();
        let s = code.syndrome(&e).unwrap();
        let out = dec.decode(&s).unwrap();
        assert_eq!(out.osd_applied, !out.bp_converged);
        fallbacks += usize::from(out.osd_applied);
        assert_eq!(syndrome_decoupled(code.hd(), &out.estimate.to_decoupled()).unwrap(), s);
    }
    assert!(fallbacks > 0);
}

#[test]
fn configuration_is_checked() {
    let code = toric(2).unwrap();
    let prior = ChannelPrior::depolarizing(0.1).unwrap();
    let bad = BpConfig {
        max_iterations: 0,
        ..BpConfig::default()
    };
    assert!(Decoder::new(&code, prior, bad).is_err());
    assert!(ChannelPrior::depolarizing(0.0).is_err());
    assert!(ChannelPrior::depolarizing(1.0).is_err());
    assert!(ChannelPrior::pure_x(-0.1).is_err());
    let s = Syndrome::zeros(3);
    assert!(decode(&code, &s, &prior, &BpConfig::default()).is_err());
}
