//! Spinbases: matrix images ℰ_i of the generators of Cl(p,q).
//!
//! Constructed bases use Hermitian Pauli strings P_i: ℰ_i = P_i for the
//! first p units and ℰ_i = iP_i for the last q. A string is real symmetric
//! when it holds an even number of Y factors and imaginary skew otherwise.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::algebra::SignatureSpec;
use crate::classification::{division_ring, Ring};
use crate::error::{Error, Result};
use crate::matrix::{MatrixClass, Reality, SpinMatrix, Symmetry};
use crate::scalar::GaussianScalar;

/// Tensor product of single-qubit Paulis; bit k of `x`/`z` is qubit k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PauliString {
    pub x: u32,
    pub z: u32,
}

impl PauliString {
    pub fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    pub fn weight(&self) -> u32 {
        (self.x | self.z).count_ones()
    }

    pub fn y_odd(&self) -> bool {
        self.y_count() % 2 == 1
    }

    pub fn anticommutes(&self, o: &PauliString) -> bool {
        ((self.x & o.z).count_ones() + (self.z & o.x).count_ones()) % 2 == 1
    }

    pub fn to_matrix(&self, qubits: usize) -> SpinMatrix {
        let g = |a: i64, b: i64| GaussianScalar::from_ints(a, b);
        let z0 = g(0, 0);
        let mut out = SpinMatrix::identity(1);
        for k in (0..qubits).rev() {
            let (xb, zb) = (self.x >> k & 1, self.z >> k & 1);
            let rows = match (xb, zb) {
                (0, 0) => vec![vec![g(1, 0), z0], vec![z0, g(1, 0)]],
                (1, 0) => vec![vec![z0, g(1, 0)], vec![g(1, 0), z0]],
                (0, 1) => vec![vec![g(1, 0), z0], vec![z0, g(-1, 0)]],
                _ => vec![vec![z0, g(0, -1)], vec![g(0, 1), z0]],
            };
            out = out.kron(&SpinMatrix::from_rows(rows).expect("2x2"));
        }
        out
    }

    pub fn label(&self, qubits: usize) -> String {
        (0..qubits)
            .rev()
            .map(|k| match (self.x >> k & 1, self.z >> k & 1) {
                (0, 0) => 'I',
                (1, 0) => 'X',
                (0, 1) => 'Z',
                _ => 'Y',
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisCounts {
    /// complex units
    pub a: usize,
    /// real units
    pub b: usize,
    /// complex symmetric
    pub l: usize,
    /// complex skewsymmetric
    pub m: usize,
    /// real skewsymmetric
    pub u: usize,
    /// real symmetric
    pub v: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpinBasis {
    pub sig: SignatureSpec,
    pub mats: Vec<SpinMatrix>,
    pub classes: Vec<MatrixClass>,
    pub counts: BasisCounts,
    pub provenance: String,
}

impl SpinBasis {
    pub fn n(&self) -> usize {
        self.mats.len()
    }

    pub fn dim(&self) -> usize {
        self.mats.first().map(|m| m.dim()).unwrap_or(1)
    }

    pub fn real_mask(&self) -> Vec<bool> {
        self.classes.iter().map(|c| c.reality == Reality::Real).collect()
    }

    pub fn sym_mask(&self) -> Vec<bool> {
        self.classes.iter().map(|c| c.symmetry == Symmetry::Symmetric).collect()
    }

    /// 0-based indices of units matching a predicate on their class.
    pub fn indices_where<F: Fn(&MatrixClass) -> bool>(&self, f: F) -> Vec<usize> {
        self.classes.iter().enumerate().filter(|(_, c)| f(c)).map(|(k, _)| k).collect()
    }

    /// Ordered product of the units with the given 0-based indices.
    pub fn product(&self, idx: &[usize]) -> SpinMatrix {
        SpinMatrix::product(self.dim(), idx.iter().map(|&k| &self.mats[k]))
    }

    /// Bitmask (bit k = unit k+1) of units matching a predicate.
    pub fn mask_where<F: Fn(&MatrixClass) -> bool>(&self, f: F) -> u32 {
        self.indices_where(f).iter().fold(0, |acc, k| acc | 1 << k)
    }

    /// Image of the basis blade with bitmask `bits`.
    pub fn blade_image(&self, bits: u32) -> SpinMatrix {
        let idx: Vec<usize> = (0..self.n()).filter(|k| bits >> k & 1 == 1).collect();
        self.product(&idx)
    }
}

pub fn classify_matrix(m: &SpinMatrix) -> MatrixClass {
    m.classify()
}

fn count_classes(classes: &[MatrixClass]) -> BasisCounts {
    let mut c = BasisCounts::default();
    for k in classes {
        match (k.reality, k.symmetry) {
            (Reality::Complex, Symmetry::Symmetric) => c.l += 1,
            (Reality::Complex, _) => c.m += 1,
            (Reality::Real, Symmetry::Skew) => c.u += 1,
            (Reality::Real, _) => c.v += 1,
        }
    }
    c.a = c.l + c.m;
    c.b = c.u + c.v;
    c
}

/// Validate a user-supplied basis: squares, anticommutation, and that
/// every unit is symmetric or skewsymmetric.
pub fn load_spinbasis(p: usize, q: usize, mats: Vec<SpinMatrix>) -> Result<SpinBasis> {
    let sig = SignatureSpec::real(p, q);
    if mats.len() != sig.n() {
        return Err(Error::InvalidBasis(format!("expected {} matrices, got {}", sig.n(), mats.len())));
    }
    let dim = mats.first().map(|m| m.dim()).unwrap_or(1);
    if mats.iter().any(|m| m.dim() != dim) {
        return Err(Error::InvalidBasis("matrices differ in dimension".into()));
    }
    for (k, m) in mats.iter().enumerate() {
        let want = sig.square(k + 1);
        if m.mul(m).as_sign() != Some(want) {
            return Err(Error::InvalidBasis(format!("unit {} does not square to {}I", k + 1, want)));
        }
    }
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            if !mats[i].anticommutes_with(&mats[j]) {
                return Err(Error::InvalidBasis(format!("units {} and {} do not anticommute", i + 1, j + 1)));
            }
        }
    }
    let classes: Vec<MatrixClass> = mats.iter().map(|m| m.classify()).collect();
    if let Some(k) = classes.iter().position(|c| c.symmetry == Symmetry::Mixed) {
        return Err(Error::InvalidBasis(format!("unit {} is neither symmetric nor skewsymmetric", k + 1)));
    }
    let counts = count_classes(&classes);
    Ok(SpinBasis { sig, mats, classes, counts, provenance: "loaded".into() })
}

#[derive(Serialize, Deserialize)]
struct BasisFile {
    p: usize,
    q: usize,
    matrices: Vec<SpinMatrix>,
}

pub fn load_spinbasis_json(text: &str) -> Result<SpinBasis> {
    let f: BasisFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    load_spinbasis(f.p, f.q, f.matrices)
}

pub fn spinbasis_to_json(b: &SpinBasis) -> String {
    serde_json::to_string_pretty(&BasisFile { p: b.sig.p, q: b.sig.q, matrices: b.mats.clone() }).expect("serializable")
}

pub const GAMMA_B_JSON: &str = include_str!("../assets/gamma_b.json");

/// The γ-basis of Cl(1,3) shipped with the crate.
pub fn gamma_basis() -> SpinBasis {
    let mut b = load_spinbasis_json(GAMMA_B_JSON).expect("bundled γ-basis is valid");
    b.provenance = "gamma".into();
    b
}

/// How the generator groups are ordered in a sweep variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ordering {
    Identity,
    Reversed,
    OddFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Signs {
    AllPlus,
    Alternate,
    FirstMinus,
}

/// Y-parity profile: how many Y-odd strings sit among the first p units
/// (these become complex skew) and among the last q (real skew).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Profile {
    pub odd_in_p: usize,
    pub odd_in_q: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variant {
    pub profile: Profile,
    pub ordering: Ordering,
    pub signs: Signs,
}

/// Real dimension of an irreducible module of Cl(a,b).
fn irreducible_real_dim(a: usize, b: usize) -> u32 {
    let n = (a + b) as u32;
    match (a as i64 - b as i64).rem_euclid(8) {
        0 | 2 => n / 2,
        3 | 7 => n.div_ceil(2),
        4 | 6 => (n + 2) / 2,
        1 => (n - 1) / 2,
        _ => n.div_ceil(2),
    }
}

fn qubits_for(n: usize) -> usize {
    n / 2
}

type StringKey = (usize, usize, usize);
type StringSplit = Option<(Vec<PauliString>, Vec<PauliString>)>;

fn string_cache() -> &'static Mutex<HashMap<StringKey, StringSplit>> {
    static CACHE: OnceLock<Mutex<HashMap<StringKey, StringSplit>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Mutually anticommuting Pauli strings on `qubits` qubits: `even` Y-even
/// and `odd` Y-odd ones. Returns (evens, odds).
pub fn find_strings(qubits: usize, even: usize, odd: usize) -> Option<(Vec<PauliString>, Vec<PauliString>)> {
    let key = (qubits, even, odd);
    if let Some(hit) = string_cache().lock().expect("cache").get(&key) {
        return hit.clone();
    }
    let res = search_strings(qubits, even, odd);
    string_cache().lock().expect("cache").insert(key, res.clone());
    res
}

fn search_strings(qubits: usize, even: usize, odd: usize) -> Option<(Vec<PauliString>, Vec<PauliString>)> {
    let n = even + odd;
    if n == 0 {
        return Some((vec![], vec![]));
    }
    if n == 1 && qubits == 0 {
        // the 1x1 identity is the only string
        return (odd == 0).then(|| (vec![PauliString { x: 0, z: 0 }], vec![]));
    }
    if irreducible_real_dim(even, odd) > qubits as u32 {
        return None;
    }
    let full = 1u32 << qubits;
    let mut cands: Vec<PauliString> =
        (0..full).flat_map(|x| (0..full).map(move |z| PauliString { x, z })).filter(|s| s.x | s.z != 0).collect();
    cands.sort_by_key(|s| (s.weight(), s.x, s.z));

    fn dfs(
        cands: &[PauliString],
        start: usize,
        chosen: &mut Vec<PauliString>,
        need_even: usize,
        need_odd: usize,
    ) -> bool {
        if need_even == 0 && need_odd == 0 {
            return true;
        }
        for k in start..cands.len() {
            if cands.len() - k < need_even + need_odd {
                return false;
            }
            let c = cands[k];
            let odd = c.y_odd();
            if (odd && need_odd == 0) || (!odd && need_even == 0) {
                continue;
            }
            if !chosen.iter().all(|s| s.anticommutes(&c)) {
                continue;
            }
            chosen.push(c);
            let (e, o) = if odd { (need_even, need_odd - 1) } else { (need_even - 1, need_odd) };
            if dfs(cands, k + 1, chosen, e, o) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::new();
    if dfs(&cands, 0, &mut chosen, even, odd) {
        let (odds, evens): (Vec<_>, Vec<_>) = chosen.into_iter().partition(|s| s.y_odd());
        Some((evens, odds))
    } else {
        None
    }
}

fn profile_counts(sig: &SignatureSpec, pr: Profile) -> (usize, usize) {
    let even = (sig.p - pr.odd_in_p) + (sig.q - pr.odd_in_q);
    let odd = pr.odd_in_p + pr.odd_in_q;
    (even, odd)
}

fn check_constructible(sig: &SignatureSpec) -> Result<()> {
    let cls = division_ring(sig);
    if cls.ring.is_double() {
        return Err(Error::UnsupportedType {
            mod8: cls.mod8,
            what: "spinbasis construction (semi-simple; use the quotient map)".into(),
        });
    }
    Ok(())
}

/// All Y-parity profiles for which Pauli strings exist.
pub fn feasible_profiles(sig: &SignatureSpec) -> Vec<Profile> {
    if check_constructible(sig).is_err() {
        return vec![];
    }
    let qubits = qubits_for(sig.n());
    let mut out = Vec::new();
    for odd_in_p in 0..=sig.p {
        for odd_in_q in 0..=sig.q {
            let pr = Profile { odd_in_p, odd_in_q };
            let (e, o) = profile_counts(sig, pr);
            if find_strings(qubits, e, o).is_some() {
                out.push(pr);
            }
        }
    }
    out
}

pub fn build_variant(sig: &SignatureSpec, v: Variant) -> Result<SpinBasis> {
    check_constructible(sig)?;
    let qubits = qubits_for(sig.n());
    let (e, o) = profile_counts(sig, v.profile);
    let (evens, odds) = find_strings(qubits, e, o)
        .ok_or_else(|| Error::InvalidBasis(format!("profile {:?} not realizable", v.profile)))?;
    let ev_p = sig.p - v.profile.odd_in_p;
    let (first, first_odd) = (&evens[..ev_p], &odds[..v.profile.odd_in_p]);
    let (last, last_odd) = (&evens[ev_p..], &odds[v.profile.odd_in_p..]);
    let arrange = |ev: &[PauliString], od: &[PauliString]| -> Vec<PauliString> {
        match v.ordering {
            Ordering::Identity => ev.iter().chain(od).copied().collect(),
            Ordering::Reversed => ev.iter().chain(od).rev().copied().collect(),
            Ordering::OddFirst => od.iter().chain(ev).copied().collect(),
        }
    };
    let mut strings = arrange(first, first_odd);
    strings.extend(arrange(last, last_odd));
    let i = GaussianScalar::i();
    let mats: Vec<SpinMatrix> = strings
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let mut m = s.to_matrix(qubits);
            if k >= sig.p {
                m = m.scale(i);
            }
            let negate = match v.signs {
                Signs::AllPlus => false,
                Signs::Alternate => k % 2 == 1,
                Signs::FirstMinus => k == 0,
            };
            if negate {
                m.neg()
            } else {
                m
            }
        })
        .collect();
    let mut basis = load_spinbasis(sig.p, sig.q, mats)?;
    let labels: Vec<String> = strings.iter().map(|s| s.label(qubits)).collect();
    basis.provenance = format!(
        "pauli[{}] profile=({},{}) order={:?} signs={:?}",
        labels.join(","),
        v.profile.odd_in_p,
        v.profile.odd_in_q,
        v.ordering,
        v.signs
    );
    Ok(basis)
}

/// Canonical spinbasis: all-real for ring R, otherwise the profile with
/// the fewest Y-odd strings.
pub fn build_spinbasis(sig: &SignatureSpec) -> Result<SpinBasis> {
    check_constructible(sig)?;
    let sig = SignatureSpec::real(sig.p, sig.q);
    let profile = if division_ring(&sig).ring == Ring::R {
        Profile { odd_in_p: 0, odd_in_q: sig.q }
    } else {
        let mut prs = feasible_profiles(&sig);
        prs.sort_by_key(|pr| (pr.odd_in_p + pr.odd_in_q, pr.odd_in_p));
        *prs.first().ok_or_else(|| Error::InvalidBasis(format!("no Pauli realization for {}", sig)))?
    };
    build_variant(&sig, Variant { profile, ordering: Ordering::Identity, signs: Signs::AllPlus })
}

pub const ORDERINGS: [Ordering; 3] = [Ordering::Identity, Ordering::Reversed, Ordering::OddFirst];
pub const SIGNS: [Signs; 3] = [Signs::AllPlus, Signs::Alternate, Signs::FirstMinus];

/// Every sweep variant of (p,q): the all-real profile for ring R, all
/// feasible profiles for ring H, each with 3 orderings and 3 sign choices.
pub fn sweep_variants(sig: &SignatureSpec) -> Vec<Variant> {
    let ring = division_ring(sig).ring;
    let profiles = match ring {
        Ring::R => vec![Profile { odd_in_p: 0, odd_in_q: sig.q }],
        Ring::H => feasible_profiles(sig),
        _ => vec![],
    };
    let mut out = Vec::new();
    for profile in profiles {
        for ordering in ORDERINGS {
            for signs in SIGNS {
                out.push(Variant { profile, ordering, signs });
            }
        }
    }
    out
}

/// All (p,q) with even p+q <= n_max and ring R or H.
pub fn sweep_signatures(n_max: usize) -> Vec<SignatureSpec> {
    let mut out = Vec::new();
    for n in (0..=n_max).step_by(2) {
        for p in 0..=n {
            let sig = SignatureSpec::real(p, n - p);
            if matches!(division_ring(&sig).ring, Ring::R | Ring::H) {
                out.push(sig);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_y_is_skew_imaginary() {
        let y = PauliString { x: 1, z: 1 };
        let c = y.to_matrix(1).classify();
        assert_eq!((c.reality, c.symmetry), (Reality::Complex, Symmetry::Skew));
    }

    #[test]
    fn cl02_is_complex_pair() {
        let b = build_spinbasis(&SignatureSpec::real(0, 2)).unwrap();
        assert_eq!((b.counts.a, b.counts.b), (2, 0));
    }

    #[test]
    fn cl11_dimension_two() {
        let b = build_spinbasis(&SignatureSpec::real(1, 1)).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(b.mats[0].mul(&b.mats[0]).as_sign(), Some(1));
        assert_eq!(b.mats[1].mul(&b.mats[1]).as_sign(), Some(-1));
        assert!(b.mats[0].anticommutes_with(&b.mats[1]));
    }

    #[test]
    fn semisimple_rejected() {
        assert!(matches!(build_spinbasis(&SignatureSpec::real(1, 0)), Err(Error::UnsupportedType { .. })));
    }

    #[test]
    fn gamma_masks() {
        let g = gamma_basis();
        assert_eq!(g.real_mask(), vec![true, true, false, true]);
    }
}
