use proptest::prelude::*;

use cliffork::coverings::{
    cpt_cover_group, cpt_structure, odd_dimensional_decomposition_report, pt_structure, PtSignature,
};
use cliffork::ext::SignatureVector;
use cliffork::quotient::{
    central_idempotents, epsilon_map, quotient_class, quotient_group, target_signature, targets, EpsilonContext,
};
use cliffork::spinor::sweep_signatures;
use cliffork::{Blade, Error, GaussianScalar, MultiVector, SignatureSpec};

#[test]
fn pt_groups_by_signs() {
    let g = |a, b, c| PtSignature::new(a, b, c).cover_group();
    assert_eq!(g(1, 1, 1), ("Z2⊗Z2⊗Z2", false));
    assert_eq!(g(1, -1, -1), ("Z2⊗Z4", false));
    assert_eq!(g(-1, -1, -1), ("Q4", true));
    assert_eq!(g(-1, 1, 1), ("D4", true));
}

#[test]
fn minkowski_pt_structure() {
    let r = pt_structure(&SignatureSpec::real(3, 1)).unwrap();
    assert_eq!(r.admissible, vec!["(-,-,-)"]);
    assert_eq!(r.cover_groups, vec!["Q4"]);
    assert_eq!(r.consistent, Some(true));
}

#[test]
fn canonical_bases_realise_predicted_pt() {
    for sig in sweep_signatures(8) {
        if sig.n() % 2 == 1 {
            continue;
        }
        let r = pt_structure(&sig).unwrap();
        assert_ne!(r.consistent, Some(false), "{}", sig);
    }
}

#[test]
fn cpt_cover_rows() {
    let sv = |s: [i8; 7]| SignatureVector(s);
    assert_eq!(cpt_cover_group(&sv([1; 7]), true), Some("Z2⊗Z2⊗Z2⊗Z2"));
    assert_eq!(cpt_cover_group(&sv([-1, -1, 1, -1, -1, 1, 1]), false), Some("*Z4⊗Z2⊗Z2"));
    assert_eq!(cpt_cover_group(&sv([-1, -1, 1, -1, -1, 1, 1]), true), Some("Z4⊗Z2⊗Z2"));
    assert_eq!(cpt_cover_group(&sv([-1, 1, -1, 1, 1, 1, 1]), false), Some("D4⊗Z2"));
    assert_eq!(cpt_cover_group(&sv([-1, -1, -1, -1, -1, -1, 1]), false), Some("Q4⊗Z2"));
}

#[test]
fn spacetime_cpt_structure() {
    let r = cpt_structure(&SignatureSpec::real(1, 3)).unwrap();
    // the canonical basis, not the γ basis
    assert_eq!(r.signature, "(-,-,-,-,+,+,+)");
    assert_eq!(r.signature.matches('-').count() % 2, 0);
    let want = if r.reduced { None } else { Some(r.cover_group.as_str()) };
    let signs: Vec<i8> =
        r.signature.trim_matches(|c| c == '(' || c == ')').split(',').map(|s| if s == "-" { -1 } else { 1 }).collect();
    let sv = SignatureVector(signs.try_into().unwrap());
    if let Some(w) = want {
        assert_eq!(cpt_cover_group(&sv, r.abelian), Some(w));
    }
    assert!(matches!(cpt_structure(&SignatureSpec::real(3, 0)), Err(Error::UnsupportedType { .. })));
}

#[test]
fn odd_decompositions() {
    let r = odd_dimensional_decomposition_report(&SignatureSpec::real(3, 0)).unwrap();
    assert_eq!(r.omega_square, -1);
    assert!(r.omega_central);
    assert_eq!(r.unitary.as_deref(), Some("SU(2) ∪ iSU(2)"));
    assert_eq!(r.unitary_consistent, Some(true));
    let r = odd_dimensional_decomposition_report(&SignatureSpec::real(0, 5)).unwrap();
    assert_eq!(r.unitary_consistent, Some(true));
    assert!(odd_dimensional_decomposition_report(&SignatureSpec::real(2, 2)).is_err());
}

#[test]
fn idempotents_split_the_algebra() {
    for (p, q) in [(3, 0), (2, 1), (1, 2), (0, 3), (4, 1), (0, 5)] {
        let ctx = EpsilonContext::new(SignatureSpec::real(p, q)).unwrap();
        let (lp, lm) = central_idempotents(&ctx).unwrap();
        let one = MultiVector::one(ctx.sig);
        assert_eq!(lp.add(&lm).unwrap(), one);
        assert_eq!(lp.mul(&lp).unwrap(), lp);
        assert_eq!(lm.mul(&lm).unwrap(), lm);
        assert!(lp.mul(&lm).unwrap().is_zero());
    }
}

#[test]
fn quotient_targets() {
    let ctx = EpsilonContext::new(SignatureSpec::real(3, 0)).unwrap();
    let ts: Vec<String> = targets(&ctx).iter().map(|&t| target_signature(&ctx, t).unwrap().to_string()).collect();
    assert_eq!(ts, ["Cl(2,0)", "Cl(0,2)"]);
    assert!(EpsilonContext::new(SignatureSpec::real(2, 2)).is_err());
}

#[test]
fn euclidean_three_quotient_group() {
    let ctx = EpsilonContext::new(SignatureSpec::real(3, 0)).unwrap();
    assert_eq!(quotient_class(&ctx).unwrap().label, "c");
    let g = quotient_group(&ctx).unwrap();
    assert_eq!(g.label, "pin^{c,d,g}");
    assert_eq!(g.elements, ["1", "PT", "C", "CPT"]);
    assert_eq!(g.group_name.as_deref(), Some("Z2⊗Z2"));
}

#[test]
fn class_a2_is_not_a_group() {
    let ctx = EpsilonContext::new(SignatureSpec::complex_marked(5, 0)).unwrap();
    let g = quotient_group(&ctx).unwrap();
    assert_eq!(g.class, "a₂");
    assert!(!g.is_group);
    assert!(g.cayley.is_none());
}

fn small_odd() -> impl Strategy<Value = SignatureSpec> {
    prop::sample::select(vec![(1, 0), (0, 1), (3, 0), (2, 1), (1, 2), (0, 3), (4, 1), (2, 3), (1, 4)])
        .prop_map(|(p, q)| SignatureSpec::real(p, q))
}

fn element(sig: SignatureSpec) -> impl Strategy<Value = MultiVector> {
    proptest::collection::vec((0..sig.dim() as u32, -2i64..=2), 0..5).prop_map(move |ts| {
        MultiVector::from_terms(sig, ts.into_iter().map(|(b, c)| (Blade(b), GaussianScalar::from_ints(c, 0)))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn epsilon_map_is_a_homomorphism((sig, x, y) in small_odd().prop_flat_map(|s| (Just(s), element(s), element(s)))) {
        let ctx = EpsilonContext::new(sig).unwrap();
        for t in targets(&ctx) {
            let lhs = epsilon_map(&x.mul(&y).unwrap(), &ctx, t).unwrap();
            let rhs = epsilon_map(&x, &ctx, t).unwrap().mul(&epsilon_map(&y, &ctx, t).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let w = epsilon_map(&ctx.eps_omega, &ctx, t).unwrap();
            prop_assert_eq!(w, MultiVector::one(target_signature(&ctx, t).unwrap()));
        }
    }
}
