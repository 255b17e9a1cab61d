use qdist::codes::io::{read_code, write_code};
use qdist::codes::{chamon, hypergraph_product, planar_surface, repetition, toric, xzzx_surface, ztgre, CodeFamily};
use qdist::estimator::{brute_force_distance, Support};
use qdist::{BitVec, StabilizerCode};

fn lattice_codes() -> Vec<StabilizerCode> {
    let mut out = Vec::new();
    for l in [2, 3, 4, 5] {
        out.push(planar_surface(l).unwrap());
        out.push(toric(l).unwrap());
        out.push(xzzx_surface(l).unwrap());
    }
    out
}

fn all_codes() -> Vec<StabilizerCode> {
    let mut out = lattice_codes();
    for l in 1..=6 {
        out.push(ztgre(l).unwrap());
    }
    for (a, b, c) in [(2, 2, 2), (3, 3, 3), (2, 3, 4), (4, 4, 4), (3, 4, 5)] {
        out.push(chamon(a, b, c).unwrap());
    }
    out
}

#[test]
fn every_construction_validates() {
    for code in all_codes() {
        let report = code.validate();
        assert!(report.passed(), "{}: {:?}", code.name(), report.first_violation);
        assert_eq!(code.hd().cols(), 3 * code.n());
        assert_eq!(code.hd().rows(), code.num_generators());
    }
}

#[test]
fn logical_basis_is_symplectic() {
    for code in all_codes().into_iter().filter(|c| c.n() <= 128) {
        let basis = code.logical_basis().unwrap();
        assert_eq!(basis.len(), code.k(), "{}", code.name());
        let gens = code.generators();
        for (i, a) in basis.iter().enumerate() {
            for op in [&a.x, &a.z] {
                assert!(code.syndrome(op).unwrap().is_zero());
                assert!(!code.is_stabilizer(op).unwrap());
                assert!(gens.iter().all(|g| g.commutes(op).unwrap()));
            }
            for (j, b) in basis.iter().enumerate() {
                assert_eq!(!a.x.commutes(&b.z).unwrap(), i == j, "{} pair {i},{j}", code.name());
                assert!(a.x.commutes(&b.x).unwrap());
                assert!(a.z.commutes(&b.z).unwrap());
            }
        }
    }
}

#[test]
fn lattice_dimensions() {
    for l in 2..=6 {
        assert_eq!(planar_surface(l).unwrap().n(), l * l + (l - 1) * (l - 1));
        assert_eq!(toric(l).unwrap().k(), 2);
        assert_eq!(xzzx_surface(l).unwrap().k(), 1);
    }
}

#[test]
fn chamon_dimensions() {
    // k = 4 gcd(n1, n2, n3) for the XYZ product of three cyclic repetition codes.
    for ((a, b, c), n, k) in [
        ((2, 2, 2), 32, 8),
        ((3, 3, 3), 108, 12),
        ((4, 4, 4), 256, 16),
        ((2, 3, 4), 96, 4),
        ((3, 4, 5), 240, 4),
        ((5, 5, 5), 500, 20),
        ((4, 5, 6), 480, 4),
    ] {
        let code = chamon(a, b, c).unwrap();
        assert_eq!((code.n(), code.k()), (n, k), "chamon({a},{b},{c})");
    }
}

#[test]
fn hypergraph_product_of_chains_is_planar_like() {
    for l in 2..=5 {
        let rep = repetition(l, false).unwrap();
        let code = hypergraph_product(&rep, &rep).unwrap();
        assert!(code.validate().passed());
        assert!(code.is_css());
        let oracle = brute_force_distance(&code, l, Support::All, 1 << 32).unwrap();
        assert_eq!(oracle.found_distance, Some(l));
    }
}

#[test]
fn oracle_distances_of_small_codes() {
    let cases = [
        (planar_surface(2).unwrap(), 3, Some(2)),
        (planar_surface(3).unwrap(), 3, Some(3)),
        (toric(2).unwrap(), 2, Some(2)),
        (toric(3).unwrap(), 3, Some(3)),
        (xzzx_surface(2).unwrap(), 3, Some(2)),
        (xzzx_surface(3).unwrap(), 3, Some(3)),
        (planar_surface(3).unwrap(), 2, None),
        (chamon(2, 2, 2).unwrap(), 4, Some(4)),
    ];
    for (code, w_max, expected) in cases {
        let result = brute_force_distance(&code, w_max, Support::All, 1 << 32).unwrap();
        assert_eq!(result.found_distance, expected, "{}", code.name());
        if let (Some(d), Some(w)) = (result.found_distance, &result.witness) {
            assert_eq!(w.weight(), d);
            assert!(code.syndrome(w).unwrap().is_zero());
            assert!(!code.is_stabilizer(w).unwrap());
        }
    }
}

#[test]
fn oracle_budget_is_enforced() {
    let code = chamon(3, 3, 3).unwrap();
    assert!(brute_force_distance(&code, 6, Support::All, 1_000_000).is_err());
}

/// Minimum weight of a nonzero X string annihilated by every Z check, by
/// direct enumeration of all `2^n` strings.
fn min_x_logical_by_enumeration(code: &StabilizerCode) -> usize {
    let n = code.n();
    (1u64..1 << n)
        .filter(|mask| {
            let x = BitVec::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
            code.hz().mul_vec(&x).unwrap().is_zero()
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

#[test]
fn ztgre_is_rate_half_with_z_checks() {
    for l in 1..=9 {
        let code = ztgre(l).unwrap();
        assert_eq!(code.n(), 1 << l);
        assert_eq!(code.k(), code.n() / 2);
        assert!(code.hx().is_zero());
        for r in 0..code.num_generators() {
            assert_eq!(code.hz().row(r).count_ones(), l + 1);
        }
    }
}

#[test]
fn ztgre_min_x_logical_weights_small() {
    for (l, expected) in [(1, 2), (2, 2), (3, 4), (4, 4)] {
        let code = ztgre(l).unwrap();
        assert_eq!(min_x_logical_by_enumeration(&code), expected, "L = {l}");
        let oracle = brute_force_distance(&code, expected, Support::XOnly, u128::MAX).unwrap();
        assert_eq!(oracle.found_distance, Some(expected), "L = {l}");
    }
}

#[test]
fn ztgre_min_x_logical_weights_medium() {
    for (l, expected) in [(5, 6), (6, 6)] {
        let code = ztgre(l).unwrap();
        let oracle = brute_force_distance(&code, expected, Support::XOnly, u128::MAX).unwrap();
        assert_eq!(oracle.found_distance, Some(expected), "L = {l}");
    }
}

#[test]
fn ztgre_single_z_is_logical() {
    // No X checks, so a single Z has zero syndrome and is not a stabilizer.
    let code = ztgre(3).unwrap();
    let oracle = brute_force_distance(&code, 1, Support::All, 1000).unwrap();
    assert_eq!(oracle.found_distance, Some(1));
}

#[test]
fn families_parse_and_build() {
    let fam: CodeFamily = "chamon:2,3,4".parse().unwrap();
    assert_eq!(fam.build().unwrap().n(), 96);
    assert_eq!(fam.to_string().parse::<CodeFamily>().unwrap(), fam);
    let err = CodeFamily::parse("surface", &[0]).unwrap_err().to_string();
    assert!(err.contains("L must be ≥ 2"), "{err}");
    assert!(CodeFamily::parse("bogus", &[3]).is_err());
    assert!(CodeFamily::parse("chamon", &[2, 2]).is_err());
}

#[test]
fn code_files_round_trip_every_family() {
    for code in all_codes().into_iter().filter(|c| c.n() <= 108) {
        let back = read_code(&write_code(&code)).unwrap();
        assert_eq!((back.n(), back.k()), (code.n(), code.k()));
        assert_eq!(back.hd(), code.hd());
    }
}
