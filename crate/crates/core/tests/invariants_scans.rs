use linarr_core::corpus;
use linarr_core::invariants::{
    below_terao_threshold, classify_values, disjointness_witness, nu, sqrt_bound, tau_lower_bounds, tau_max,
    tau_max_refined, tau_min, tau_n_min, tau_prime_min, terao_certificate, terao_threshold, three_quarter_ceiling,
    verify_all, FreenessKind, InvariantError, NuBranch,
};

#[test]
fn threshold_table() {
    for (d, t, s) in [(10, 4, 2), (50, 9, 6), (100, 13, 9)] {
        assert_eq!(terao_threshold(d), t);
        assert_eq!(sqrt_bound(d), s);
        assert!((1..t).all(|s| disjointness_witness(d, s).holds), "d = {d}");
    }
}

#[test]
fn d100_boundary() {
    assert!((1..=12).all(|s| disjointness_witness(100, s).holds));
    let w = disjointness_witness(100, 13);
    assert_eq!((w.tau_max, w.tau_n_min_prev), (8683, 8683));
    assert!(!w.holds);
    assert!(below_terao_threshold(100, 12));
    assert!(!below_terao_threshold(100, 13));
}

#[test]
fn disjointness_below_threshold_up_to_200() {
    for d in 3..=200u64 {
        let t = terao_threshold(d);
        assert!(t > sqrt_bound(d) || d < 4, "d = {d}");
        for s in 1..t {
            assert!(disjointness_witness(d, s).holds, "d = {d}, s = {s}");
        }
    }
}

#[test]
fn tau_max_decreases_below_half() {
    for d in 3..=50u64 {
        for r in 1..d {
            if 2 * r < d {
                assert!(tau_max(d, r) < tau_max(d, r - 1), "d = {d}, r = {r}");
            }
            assert!(tau_min(d, r) <= tau_max(d, r));
        }
    }
}

#[test]
fn defect_branches_agree_on_overlap() {
    for d in 2..=120u64 {
        for r in 1..d {
            if 2 * r < d && 2 * r + 2 >= d {
                assert_eq!(tau_max(d, r), three_quarter_ceiling(d), "d = {d}, r = {r}");
                assert_eq!(nu(d, r, 0).unwrap().1, NuBranch::Both);
            }
        }
    }
}

#[test]
fn closed_forms() {
    assert_eq!(tau_min(7, 3), 18);
    assert_eq!(tau_max(7, 3), 27);
    assert_eq!(tau_prime_min(7, 3, 3), 25);
    assert_eq!(tau_n_min(7, 3), 25);
    assert_eq!(tau_max_refined(7, 4), Ok(tau_max(7, 4) - 3));
    assert!(tau_max_refined(7, 3).is_err());
    assert_eq!(tau_lower_bounds(3, 2, 2, 2), Err(InvariantError::Precondition("d >= 4")));
    assert_eq!(tau_lower_bounds(7, 1, 2, 2), Err(InvariantError::Precondition("r >= 2")));
    assert_eq!(tau_lower_bounds(7, 3, 4, 3).unwrap().tau_prime_min, Some(25));
}

#[test]
fn classification() {
    let free = classify_values(3, 1, 3);
    assert_eq!((free.kind, free.exponents, free.nu), (FreenessKind::Free, Some((1, 1)), 0));
    let nearly = classify_values(7, 3, 26);
    assert_eq!((nearly.kind, nearly.exponents, nearly.nu), (FreenessKind::NearlyFree, Some((3, 4)), 1));
    let c1 = classify_values(7, 3, 25);
    assert_eq!((c1.kind, c1.nu), (FreenessKind::Other, 2));
    assert_eq!(classify_values(9, 3, 40).nu, 9);
}

#[test]
fn c1_saturates_the_defect_bound() {
    let rep = verify_all(&corpus::c1());
    let check = rep.check("nu_le_defect_bound").unwrap();
    assert_eq!((check.lhs, check.rhs), (2, 2));
}

#[test]
fn certificates() {
    let c = terao_certificate(3, 3).unwrap();
    assert_eq!((c.r, c.threshold), (1, 3));
    assert!(c.lattice_determined);
    assert_eq!(terao_certificate(7, 25), Err(InvariantError::NoSolution));
    assert_eq!(terao_certificate(2, 1), Err(InvariantError::Precondition("d >= 3")));
    let p = terao_certificate(5, 13).unwrap();
    assert_eq!((p.r, p.witness.len()), (1, 1));
}

#[test]
fn corpus_checks_pass() {
    for (name, a) in corpus::named() {
        let rep = verify_all(&a);
        let failed: Vec<_> = rep.failures().map(|c| c.name).collect();
        assert!(failed.is_empty(), "{name}: {failed:?}");
    }
}
