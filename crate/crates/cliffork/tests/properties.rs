use proptest::prelude::*;

use cliffork::algebra::volume_square;
use cliffork::coverings::{pin_membership, spin_membership};
use cliffork::groups::{catalog_group, catalog_names, identify_small_group};
use cliffork::{Blade, GaussianScalar, MultiVector, SignatureSpec};

fn sig_strategy() -> impl Strategy<Value = SignatureSpec> {
    (0usize..=4, 0usize..=4).prop_filter("n ≥ 1", |(p, q)| p + q >= 1).prop_map(|(p, q)| SignatureSpec::real(p, q))
}

fn mv_strategy(sig: SignatureSpec) -> impl Strategy<Value = MultiVector> {
    let dim = sig.dim();
    proptest::collection::vec((0..dim as u32, -3i64..=3, -3i64..=3), 0..6).prop_map(move |terms| {
        MultiVector::from_terms(sig, terms.into_iter().map(|(b, re, im)| (Blade(b), GaussianScalar::from_ints(re, im))))
            .unwrap()
    })
}

fn triple() -> impl Strategy<Value = (MultiVector, MultiVector, MultiVector)> {
    sig_strategy().prop_flat_map(|s| (mv_strategy(s), mv_strategy(s), mv_strategy(s)))
}

fn omega_square_oracle(p: usize, q: usize) -> i8 {
    let n = p + q;
    if (n * n.saturating_sub(1) / 2 + q).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// (3 e_i + 4 e_j)/5 for two generators with equal squares has norm ±1.
fn pythagorean(sig: SignatureSpec, i: usize, j: usize) -> MultiVector {
    let fifth = GaussianScalar::from_ints(5, 0).inv().unwrap();
    MultiVector::from_terms(
        sig,
        [
            (Blade::generator(i), GaussianScalar::from_ints(3, 0) * fifth),
            (Blade::generator(j), GaussianScalar::from_ints(4, 0) * fifth),
        ],
    )
    .unwrap()
}

fn pin_factor(sig: SignatureSpec, pick: (usize, usize, bool)) -> MultiVector {
    let n = sig.n();
    let (i, j, flip) = (pick.0 % n + 1, pick.1 % n + 1, pick.2);
    let v = if i != j && sig.square(i) == sig.square(j) {
        pythagorean(sig, i, j)
    } else {
        MultiVector::generator(sig, i).unwrap()
    };
    if flip {
        v.neg()
    } else {
        v
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative((a, b, c) in triple()) {
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn product_distributes((a, b, c) in triple()) {
        let l = a.mul(&b.add(&c).unwrap()).unwrap();
        let r = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn involution_is_multiplicative((a, b, _c) in triple()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.involution(), a.involution().mul(&b.involution()).unwrap());
    }

    #[test]
    fn reversion_and_conjugation_reverse_order((a, b, _c) in triple()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.reversion(), b.reversion().mul(&a.reversion()).unwrap());
        prop_assert_eq!(ab.conjugation(), b.conjugation().mul(&a.conjugation()).unwrap());
    }

    #[test]
    fn automorphisms_are_involutive((a, _b, _c) in triple()) {
        prop_assert_eq!(a.involution().involution(), a.clone());
        prop_assert_eq!(a.reversion().reversion(), a.clone());
        prop_assert_eq!(a.conjugation(), a.involution().reversion());
    }

    #[test]
    fn volume_square_law(p in 0usize..8, q in 0usize..8) {
        let sig = SignatureSpec::real(p, q);
        let w = MultiVector::volume(sig);
        let sq = w.mul(&w).unwrap();
        let want = omega_square_oracle(p, q);
        prop_assert_eq!(volume_square(&sig), want);
        prop_assert_eq!(sq, MultiVector::scalar(sig, GaussianScalar::sign(want)));
    }

    #[test]
    fn pin_closed_under_products(
        sig in sig_strategy(),
        picks in proptest::collection::vec((0usize..8, 0usize..8, any::<bool>()), 1..5),
    ) {
        let mut x = MultiVector::one(sig);
        for &pk in &picks {
            let f = pin_factor(sig, pk);
            prop_assert!(pin_membership(&f).unwrap());
            x = x.mul(&f).unwrap();
        }
        prop_assert!(pin_membership(&x).unwrap());
        prop_assert_eq!(spin_membership(&x).unwrap(), picks.len() % 2 == 0);
    }

    #[test]
    fn identification_ignores_labels(order in prop::sample::select(vec![4usize, 8, 16]), seed in any::<u64>()) {
        for name in catalog_names(order) {
            let g = catalog_group(&name).unwrap();
            let perm = shuffle(g.order(), seed);
            let h = g.relabel(&perm);
            prop_assert!(h.is_valid());
            prop_assert_eq!(identify_small_group(&h).unwrap(), identify_small_group(&g).unwrap());
        }
    }
}

/// Deterministic permutation of 0..n from a seed (Fisher-Yates on an LCG).
fn shuffle(n: usize, seed: u64) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    let mut s = seed | 1;
    for i in (1..n).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        v.swap(i, (s >> 33) as usize % (i + 1));
    }
    v
}

#[test]
fn inverse_round_trip() {
    let sig = SignatureSpec::real(2, 1);
    let x = MultiVector::from_terms(sig, [(Blade(0), GaussianScalar::from_ints(2, 0)), (Blade(3), 1.into())]).unwrap();
    let y = x.inverse().unwrap();
    assert_eq!(x.mul(&y).unwrap(), MultiVector::one(sig));
}
