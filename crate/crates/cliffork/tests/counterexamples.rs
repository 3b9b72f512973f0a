//! Stated rules that the computed matrices contradict.

use cliffork::classification::{division_ring, Ring};
use cliffork::ext::{ext_group_matrices, pi_bar_product, rule_commutes, E, PI};
use cliffork::spinor::{build_spinbasis, build_variant, Ordering, Profile, Signs, SpinBasis, Variant};
use cliffork::SignatureSpec;

#[test]
fn quaternionic_pi_bar_product_is_minus_identity() {
    for (p, q) in [(0, 2), (1, 3), (0, 4), (4, 0), (2, 6)] {
        let b = build_spinbasis(&SignatureSpec::real(p, q)).unwrap();
        assert_eq!(division_ring(&b.sig).ring, Ring::H);
        let r = pi_bar_product(&b).unwrap();
        assert_eq!(r.actual, Some(-1), "Cl({},{})", p, q);
    }
}

/// Cl(0,2) with the second unit real skew.
fn cl02_variant() -> SpinBasis {
    let v =
        Variant { profile: Profile { odd_in_p: 0, odd_in_q: 1 }, ordering: Ordering::Identity, signs: Signs::AllPlus };
    build_variant(&SignatureSpec::real(0, 2), v).unwrap()
}

#[test]
fn mod4_rule_mispredicts_cl02() {
    let b = cl02_variant();
    let r = pi_bar_product(&b).unwrap();
    assert_eq!((b.counts.a, b.counts.b), (1, 1));
    assert_eq!(r.predicted, Some(1));
    assert!(!r.agrees());
}

#[test]
fn parity_rule_misses_e_pi_anticommutation() {
    let b = cl02_variant();
    let ext = ext_group_matrices(&b).unwrap();
    assert!(ext.mats[E].anticommutes_with(&ext.mats[PI]));
    assert!(rule_commutes(E, PI, &b.counts, &ext.forms));
}
