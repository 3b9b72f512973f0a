//! The extended automorphism group {I, W, E, C, Π, K, S, F} of a
//! spinbasis: construction, defining conditions, CPT signature,
//! commutation profile and the order-8 classification.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::SignatureSpec;
use crate::classification::{division_ring, Ring};
use crate::error::{Error, Result};
use crate::groups::{generate_matrix_group, identify_small_group};
use crate::matrix::{Reality, SpinMatrix, Symmetry};
use crate::par;
use crate::spinor::{build_variant, sweep_signatures, sweep_variants, BasisCounts, SpinBasis, Variant};

pub const NAMES: [&str; 8] = ["I", "W", "E", "C", "Π", "K", "S", "F"];
pub const CPT_NAMES: [&str; 8] = ["1", "P", "T", "PT", "C", "CP", "CT", "CPT"];

pub const W: usize = 1;
pub const E: usize = 2;
pub const C: usize = 3;
pub const PI: usize = 4;
pub const K: usize = 5;
pub const S: usize = 6;
pub const F: usize = 7;

/// Which branch produced each matrix. Π: 'a' (complex units) or 'b'
/// (real units); E: 'j' (skew units) or 'i' (symmetric units); C: 'i'/'j';
/// K: 'a'/'b'; S and F: 'c'/'d'.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Forms {
    pub pi: char,
    pub e: char,
    pub c: char,
    pub k: char,
    pub s: char,
    pub f: char,
}

impl fmt::Display for Forms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Π{} E{} C{} K{} S{} F{}", self.pi, self.e, self.c, self.k, self.s, self.f)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtGroupMatrices {
    pub sig: SignatureSpec,
    pub counts: BasisCounts,
    pub forms: Forms,
    /// I, W, E, C, Π, K, S, F
    pub mats: [SpinMatrix; 8],
    /// each matrix is sign × (ordered product of the units in mask)
    pub masks: [u32; 8],
    pub signs: [i8; 8],
    /// Eᵀ = (−1)^{m(m−1)/2} E with m = n/2
    pub e_transpose_law: bool,
    pub provenance: String,
}

fn check_all<Fn_: Fn(usize) -> bool>(name: &str, n: usize, ok: Fn_) -> Result<()> {
    match (0..n).find(|&i| !ok(i)) {
        Some(i) => Err(Error::Condition { matrix: name.into(), index: i + 1 }),
        None => Ok(()),
    }
}

fn mask_of(idx: &[usize]) -> u32 {
    idx.iter().fold(0, |acc, k| acc | 1 << k)
}

pub fn matrix_w(basis: &SpinBasis) -> SpinMatrix {
    basis.product(&(0..basis.n()).collect::<Vec<_>>())
}

/// E with its form: the product of the skew units if it satisfies
/// ℰᵢE = Eℰᵢᵀ for all i, else the product of the symmetric units.
pub fn matrix_e(basis: &SpinBasis) -> Result<(SpinMatrix, char)> {
    matrix_e_masked(basis).map(|(m, f, _)| (m, f))
}

fn matrix_e_masked(basis: &SpinBasis) -> Result<(SpinMatrix, char, u32)> {
    let n = basis.n();
    let holds = |e: &SpinMatrix| (0..n).all(|i| basis.mats[i].mul(e) == e.mul(&basis.mats[i].transpose()));
    let skew_idx = basis.indices_where(|c| c.symmetry == Symmetry::Skew);
    let skew = basis.product(&skew_idx);
    if holds(&skew) {
        return Ok((skew, 'j', mask_of(&skew_idx)));
    }
    let sym_idx = basis.indices_where(|c| c.symmetry == Symmetry::Symmetric);
    let e = basis.product(&sym_idx);
    check_all("E", n, |i| basis.mats[i].mul(&e) == e.mul(&basis.mats[i].transpose()))?;
    Ok((e, 'i', mask_of(&sym_idx)))
}

pub fn matrix_c(basis: &SpinBasis, e: &SpinMatrix, w: &SpinMatrix) -> Result<SpinMatrix> {
    let c = e.mul(&w.transpose());
    check_all("C", basis.n(), |i| c.mul(&basis.mats[i].transpose()).add(&basis.mats[i].mul(&c)).is_zero())?;
    Ok(c)
}

/// Π: product of the complex units when a is even, else of the real
/// units; checked against ℰᵢΠ = ΠĖᵢ.
pub fn matrix_pi(basis: &SpinBasis) -> Result<(SpinMatrix, char)> {
    matrix_pi_masked(basis).map(|(m, f, _)| (m, f))
}

fn matrix_pi_masked(basis: &SpinBasis) -> Result<(SpinMatrix, char, u32)> {
    let (idx, form) = if basis.counts.a.is_multiple_of(2) {
        (basis.indices_where(|c| c.reality == Reality::Complex), 'a')
    } else {
        (basis.indices_where(|c| c.reality == Reality::Real), 'b')
    };
    let pi = basis.product(&idx);
    check_all("Π", basis.n(), |i| basis.mats[i].mul(&pi) == pi.mul(&basis.mats[i].conj()))?;
    Ok((pi, form, mask_of(&idx)))
}

pub fn matrix_k(basis: &SpinBasis, pi: &SpinMatrix, w: &SpinMatrix) -> Result<SpinMatrix> {
    let k = pi.mul(w);
    check_all("K", basis.n(), |i| basis.mats[i].mul(&k).neg() == k.mul(&basis.mats[i].conj()))?;
    Ok(k)
}

pub fn matrix_s(basis: &SpinBasis, pi: &SpinMatrix, e: &SpinMatrix) -> Result<SpinMatrix> {
    let s = pi.mul(e);
    check_all("S", basis.n(), |i| basis.mats[i].mul(&s) == s.mul(&basis.mats[i].conj().transpose()))?;
    Ok(s)
}

pub fn matrix_f(basis: &SpinBasis, pi: &SpinMatrix, c: &SpinMatrix) -> Result<SpinMatrix> {
    let f = pi.mul(c);
    check_all("F", basis.n(), |i| basis.mats[i].mul(&f).neg() == f.mul(&basis.mats[i].conj().transpose()))?;
    Ok(f)
}

pub fn ext_group_matrices(basis: &SpinBasis) -> Result<ExtGroupMatrices> {
    let n = basis.n();
    let w = matrix_w(basis);
    let (e, e_form, e_mask) = matrix_e_masked(basis)?;
    let c = matrix_c(basis, &e, &w)?;
    let (pi, pi_form, pi_mask) = matrix_pi_masked(basis)?;
    let k = matrix_k(basis, &pi, &w)?;
    let s = matrix_s(basis, &pi, &e)?;
    let f = matrix_f(basis, &pi, &c)?;
    let c_form = if e_form == 'j' { 'i' } else { 'j' };
    let k_form = if pi_form == 'a' { 'b' } else { 'a' };
    let s_form = if (pi_form == 'a') == (e_form == 'j') { 'c' } else { 'd' };
    let f_form = if s_form == 'c' { 'd' } else { 'c' };
    let forms = Forms { pi: pi_form, e: e_form, c: c_form, k: k_form, s: s_form, f: f_form };
    let m = (n / 2) as i64;
    let t_sign = if (m * (m - 1) / 2) % 2 == 0 { e.clone() } else { e.neg() };
    let e_transpose_law = e.transpose() == t_sign;
    let mats = [SpinMatrix::identity(basis.dim()), w, e, c, pi, k, s, f];
    let full = (1u32 << n) - 1;
    let c_mask = e_mask ^ full;
    let masks = [0, full, e_mask, c_mask, pi_mask, pi_mask ^ full, pi_mask ^ e_mask, pi_mask ^ c_mask];
    let mut signs = [1i8; 8];
    for j in 0..8 {
        signs[j] = mats[j]
            .sign_relative_to(&basis.blade_image(masks[j]))
            .ok_or_else(|| Error::Falsified(format!("{} is not a signed unit product", NAMES[j])))?;
    }
    let provenance = format!(
        "{}; {}; {}",
        basis.provenance,
        forms,
        (1..8).map(|j| format!("{}={}", NAMES[j], unit_word(basis, masks[j], signs[j]))).collect::<Vec<_>>().join(" ")
    );
    Ok(ExtGroupMatrices {
        sig: basis.sig,
        counts: basis.counts,
        forms,
        mats,
        masks,
        signs,
        e_transpose_law,
        provenance,
    })
}

/// Product word in the unit names, e.g. "γ0γ1γ3" or "-e1e2".
pub fn unit_word(basis: &SpinBasis, bits: u32, sign: i8) -> String {
    let gamma = basis.provenance.starts_with("gamma");
    let mut s = String::from(if sign < 0 { "-" } else { "" });
    if bits == 0 {
        s.push('I');
    }
    for k in 0..basis.n() {
        if bits >> k & 1 == 1 {
            if gamma {
                s.push_str(&format!("γ{}", k));
            } else {
                s.push_str(&format!("e{}", k + 1));
            }
        }
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignatureVector(pub [i8; 7]);

impl fmt::Display for SignatureVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.0.iter().map(|&x| if x > 0 { "+" } else { "-" }).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Serialize for SignatureVector {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl SignatureVector {
    pub fn minus_count(&self) -> usize {
        self.0.iter().filter(|&&x| x < 0).count()
    }

    /// One of 7 pluses, 2/5, 4/3 or 6/1 minus/plus splits.
    pub fn is_admissible(&self) -> bool {
        self.minus_count().is_multiple_of(2)
    }
}

/// Signs of the squares of the seven non-identity elements.
pub fn signature_of(mats: &[SpinMatrix; 8]) -> Result<SignatureVector> {
    let mut v = [0i8; 7];
    for j in 1..8 {
        v[j - 1] = mats[j]
            .mul(&mats[j])
            .as_sign()
            .ok_or_else(|| Error::Falsified(format!("element {} does not square to ±I", j)))?;
    }
    Ok(SignatureVector(v))
}

pub fn signature_vector(ext: &ExtGroupMatrices) -> Result<SignatureVector> {
    signature_of(&ext.mats)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    Commute,
    Anticommute,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutationProfile(pub [[Relation; 8]; 8]);

pub fn commutation_of(mats: &[SpinMatrix; 8]) -> Result<CommutationProfile> {
    let mut out = [[Relation::Commute; 8]; 8];
    for i in 0..8 {
        for j in i + 1..8 {
            let r = if mats[i].commutes_with(&mats[j]) {
                Relation::Commute
            } else if mats[i].anticommutes_with(&mats[j]) {
                Relation::Anticommute
            } else {
                return Err(Error::Falsified(format!("{} and {} neither commute nor anticommute", i, j)));
            };
            out[i][j] = r;
            out[j][i] = r;
        }
    }
    Ok(CommutationProfile(out))
}

pub fn commutation_profile(ext: &ExtGroupMatrices) -> Result<CommutationProfile> {
    commutation_of(&ext.mats)
}

fn even(x: usize) -> bool {
    x.is_multiple_of(2)
}

/// The printed parity rule for whether elements x and y (indices into
/// I W E C Π K S F, x < y) commute.
pub fn rule_commutes(x: usize, y: usize, c: &BasisCounts, fm: &Forms) -> bool {
    let (l, m, u, v) = (c.l, c.m, c.u, c.v);
    let (a, b) = (c.a, c.b);
    let (x, y) = if x < y { (x, y) } else { (y, x) };
    let pa = fm.pi == 'a';
    let ej = fm.e == 'j';
    let ci = fm.c == 'i';
    let kb = fm.k == 'b';
    let sc = fm.s == 'c';
    let fd = fm.f == 'd';
    let e_len = if ej { m + u } else { l + v };
    match (x, y) {
        (0, _) => true,
        (W, E) | (W, C) | (E, C) => even(e_len),
        (PI, K) => even(a * b),
        (E, PI) => match (pa, ej) {
            (true, true) => even(m * (u + l)),
            (true, false) => even(l * (m + v)),
            (false, true) => even(u * (m + v)),
            (false, false) => even(v * (u + l)),
        },
        (C, PI) => match (pa, ci) {
            (true, true) => even(l * (m + v)),
            (true, false) => even(m * (u + l)),
            (false, true) => even(v * (u + l)),
            (false, false) => even(u * (m + v)),
        },
        (W, PI) => pa,
        (PI, S) => match (pa, sc) {
            (true, true) => even(m),
            (true, false) => even(l),
            (false, false) => even(u),
            (false, true) => !even(v),
        },
        (PI, F) => match (pa, fd) {
            (true, true) => even(l),
            (true, false) => even(m),
            (false, false) => even(v),
            (false, true) => !even(u),
        },
        (W, K) => kb,
        (E, K) => match (kb, ej) {
            (true, true) => even(u * (m + v)),
            (false, true) => even(m * (u + l)),
            (true, false) => even(v * (u + l)),
            (false, false) => even(l * (m + v)),
        },
        (C, K) => match (kb, ci) {
            (true, true) => even(v * (u + l)),
            (false, true) => even(l * (m + v)),
            (true, false) => even(u * (m + v)),
            (false, false) => even(m * (u + l)),
        },
        (K, S) => match (kb, sc) {
            (true, true) => even(v),
            (false, false) => even(l),
            (true, false) => even(u),
            (false, true) => !even(m),
        },
        (K, F) => match (kb, fd) {
            (true, true) => even(u),
            (false, false) => even(m),
            (true, false) => even(v),
            (false, true) => !even(l),
        },
        (S, F) => even((u + l) * (m + v)),
        (W, S) => sc,
        (W, F) => fd,
        (E, S) => match (sc, ej) {
            (true, true) => even(u * (l + m)),
            (false, true) => even(m * (v + u)),
            (false, false) => even(v * (m + l)),
            (true, false) => even(l * (u + v)),
        },
        (C, S) => match (sc, ci) {
            (true, true) => even(l * (u + v)),
            (false, true) => even(v * (m + l)),
            (false, false) => even(m * (v + u)),
            (true, false) => even(u * (l + m)),
        },
        (E, F) => match (fd, ej) {
            (true, true) => even(m * (v + u)),
            (false, true) => even(u * (l + m)),
            (false, false) => even(l * (u + v)),
            (true, false) => even(v * (m + l)),
        },
        (C, F) => match (fd, ci) {
            (true, true) => even(v * (m + l)),
            (false, true) => even(l * (u + v)),
            (false, false) => even(u * (l + m)),
            (true, false) => even(m * (v + u)),
        },
        _ => true,
    }
}

/// Commutation of two products of pairwise anticommuting units, from
/// their masks: commute iff |X||Y| − |X∩Y| is even.
pub fn masks_commute(x: u32, y: u32) -> bool {
    let (a, b, c) = (x.count_ones(), y.count_ones(), (x & y).count_ones());
    (a * b + c) % 2 == 0
}

/// Printed square laws for K, S, F. `None` when the counts fall outside
/// the parity domain the rule covers.
pub fn rule_square(which: usize, c: &BasisCounts, fm: &Forms) -> Option<i8> {
    let md = |x: i64| x.rem_euclid(8);
    let (l, m, u, v) = (c.l as i64, c.m as i64, c.u as i64, c.v as i64);
    let pm = |plus: [i64; 2], minus: [i64; 2], d: i64| {
        if plus.contains(&d) {
            Some(1)
        } else if minus.contains(&d) {
            Some(-1)
        } else {
            None
        }
    };
    match (which, fm.k, fm.s, fm.f) {
        (K, 'a', _, _) => pm([1, 5], [3, 7], md(m - l)),
        (K, _, _, _) => pm([0, 4], [2, 6], md(v - u)),
        (S, _, 'c', _) => pm([0, 4], [2, 6], md(u + l)),
        (S, _, _, _) => pm([1, 5], [3, 7], md(m + v)),
        (F, _, _, 'd') => pm([0, 4], [2, 6], md(m + v)),
        (F, _, _, _) => pm([3, 7], [1, 5], md(u + l)),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PiBarReport {
    pub ring: Ring,
    /// sign of ΠΠ̇ if it is ±I
    pub actual: Option<i8>,
    /// the a,b mod 4 rule; `None` outside its stated residues
    pub predicted: Option<i8>,
    pub trivial: bool,
}

impl PiBarReport {
    pub fn agrees(&self) -> bool {
        self.actual.is_some() && self.actual == self.predicted
    }
}

/// ΠΠ̇ against the a,b (mod 4) rule. Ring R is flagged trivial.
pub fn pi_bar_product(basis: &SpinBasis) -> Result<PiBarReport> {
    let ring = division_ring(&basis.sig).ring;
    let (pi, form) = matrix_pi(basis)?;
    let actual = pi.mul(&pi.conj()).as_sign();
    let r = if form == 'a' { basis.counts.a % 4 } else { basis.counts.b % 4 };
    let predicted = match r {
        0 | 1 => Some(1),
        _ => Some(-1),
    };
    Ok(PiBarReport { ring, actual, predicted, trivial: ring == Ring::R })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ExtClass {
    Z2Z2Z2,
    Z4Z2,
    Z8,
    D4,
    Q4,
    StarZ4Z2,
    /// Π ∝ I: the set collapses to {I, W, E, C}
    Reduced,
}

impl fmt::Display for ExtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtClass::Z2Z2Z2 => "Z2⊗Z2⊗Z2",
            ExtClass::Z4Z2 => "Z4⊗Z2",
            ExtClass::Z8 => "Z8",
            ExtClass::D4 => "D4",
            ExtClass::Q4 => "Q4",
            ExtClass::StarZ4Z2 => "*Z4⊗Z2",
            ExtClass::Reduced => "Aut±",
        })
    }
}

/// Order-8 class from abelianness and (order-2, order-4, order-8) counts.
pub fn class_from_orders(abelian: bool, counts: (usize, usize, usize)) -> Option<ExtClass> {
    match (abelian, counts) {
        (true, (7, 0, 0)) => Some(ExtClass::Z2Z2Z2),
        (true, (3, 4, 0)) => Some(ExtClass::Z4Z2),
        (true, (1, 2, 4)) => Some(ExtClass::Z8),
        (false, (5, 2, 0)) => Some(ExtClass::D4),
        (false, (1, 6, 0)) => Some(ExtClass::Q4),
        (false, (3, 4, 0)) => Some(ExtClass::StarZ4Z2),
        _ => None,
    }
}

/// x·y = sign × element[index]
pub type SignedTable = Vec<Vec<(usize, i8)>>;

#[derive(Clone, Debug, Serialize)]
pub struct ExtGroupClass {
    pub class: ExtClass,
    pub abelian: bool,
    /// elements of order 2, 4, 8 among the seven non-identity members
    pub order_structure: (usize, usize, usize),
    /// the order-16 group generated together with −I
    pub abstract_group: String,
    pub table: SignedTable,
}

impl ExtGroupClass {
    pub fn order_structure_string(&self) -> String {
        let (a, b, c) = self.order_structure;
        match (b, c) {
            (0, 0) => format!("({})", a),
            (_, 0) => format!("({},{})", a, b),
            _ => format!("({},{},{})", a, b, c),
        }
    }
}

pub fn signed_table(mats: &[SpinMatrix; 8]) -> Result<SignedTable> {
    let mut t = vec![vec![(0usize, 1i8); 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let p = mats[i].mul(&mats[j]);
            t[i][j] = (0..8)
                .find_map(|k| p.sign_relative_to(&mats[k]).map(|s| (k, s)))
                .ok_or_else(|| Error::Falsified(format!("product {}·{} leaves the set", i, j)))?;
        }
    }
    Ok(t)
}

fn element_order(m: &SpinMatrix) -> usize {
    let id = SpinMatrix::identity(m.dim());
    let mut x = m.clone();
    for p in 1..=8 {
        if x == id {
            return p;
        }
        x = x.mul(m);
    }
    usize::MAX
}

/// Classify an 8-element signed set whose first element is I. When
/// elements coincide up to sign (Π ∝ I, or E ∝ I) the distinct
/// representatives are classified and the class is `Reduced`.
pub fn classify_signed_set(mats: &[SpinMatrix; 8]) -> Result<ExtGroupClass> {
    let table = signed_table(mats)?;
    let mut live: Vec<SpinMatrix> = Vec::new();
    for m in mats {
        if live.iter().all(|x| m.sign_relative_to(x).is_none()) {
            live.push(m.clone());
        }
    }
    let reduced = live.len() < 8;
    let abelian = live.iter().all(|x| live.iter().all(|y| x.commutes_with(y)));
    let mut counts = (0, 0, 0);
    for m in &live[1..] {
        match element_order(m) {
            2 => counts.0 += 1,
            4 => counts.1 += 1,
            8 => counts.2 += 1,
            o => return Err(Error::Falsified(format!("element of order {}", o))),
        }
    }
    let class = if reduced {
        ExtClass::Reduced
    } else {
        class_from_orders(abelian, counts).ok_or_else(|| {
            Error::Falsified(format!("order structure {:?} (abelian {}) outside the order-8 classes", counts, abelian))
        })?
    };
    let mut gens: Vec<SpinMatrix> = live[1..].to_vec();
    gens.push(SpinMatrix::identity(mats[0].dim()).neg());
    let (g, _) = generate_matrix_group(&gens)?;
    let abstract_group = identify_small_group(&g)?;
    Ok(ExtGroupClass { class, abelian, order_structure: counts, abstract_group, table })
}

pub fn classify_ext_group(ext: &ExtGroupMatrices) -> Result<ExtGroupClass> {
    classify_signed_set(&ext.mats)
}

/// Markdown rendering of a signed table with the given element names.
pub fn render_table(names: &[&str; 8], t: &SignedTable) -> String {
    let mut s = String::from("|   |");
    for n in names {
        s.push_str(&format!(" {} |", n));
    }
    s.push('\n');
    s.push_str(&"|---".repeat(9));
    s.push_str("|\n");
    for (i, row) in t.iter().enumerate() {
        s.push_str(&format!("| {} |", names[i]));
        for &(k, sg) in row {
            s.push_str(&format!(" {}{} |", if sg < 0 { "-" } else { "" }, names[k]));
        }
        s.push('\n');
    }
    s
}

/// Parse a printed table of cells like "-CP" into (index, sign).
pub fn parse_table(names: &[&str; 8], rows: &[[&str; 8]; 8]) -> Result<SignedTable> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|cell| {
                    let (sg, body) = match cell.strip_prefix('-') {
                        Some(b) => (-1, b),
                        None => (1, *cell),
                    };
                    names
                        .iter()
                        .position(|n| *n == body)
                        .map(|k| (k, sg))
                        .ok_or_else(|| Error::Parse(format!("unknown table cell {}", cell)))
                })
                .collect()
        })
        .collect()
}

/// The Dirac CPT set 1, γ0, γ1γ3, γ0γ1γ3, γ2γ0, γ2, γ2γ0γ1γ3, γ2γ1γ3.
pub fn dirac_cpt_set(basis: &SpinBasis) -> [SpinMatrix; 8] {
    let g = |idx: &[usize]| basis.product(idx);
    [g(&[]), g(&[0]), g(&[1, 3]), g(&[0, 1, 3]), g(&[2, 0]), g(&[2]), g(&[2, 0, 1, 3]), g(&[2, 1, 3])]
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtRecord {
    pub p: usize,
    pub q: usize,
    pub ring: String,
    pub signature: SignatureVector,
    pub group_class: String,
    pub order_structure: String,
    pub abstract_group: String,
    pub counts: BasisCounts,
    pub forms: Forms,
    pub provenance: String,
}

pub fn ext_record(basis: &SpinBasis) -> Result<ExtRecord> {
    let ext = ext_group_matrices(basis)?;
    let sv = signature_vector(&ext)?;
    let cls = classify_ext_group(&ext)?;
    Ok(ExtRecord {
        p: basis.sig.p,
        q: basis.sig.q,
        ring: division_ring(&basis.sig).ring.to_string(),
        signature: sv,
        group_class: cls.class.to_string(),
        order_structure: cls.order_structure_string(),
        abstract_group: cls.abstract_group,
        counts: basis.counts,
        forms: ext.forms,
        provenance: ext.provenance,
    })
}

/// Every (signature, variant) pair of the sweep up to p+q = n_max.
pub fn sweep_instances(n_max: usize) -> Vec<(SignatureSpec, Variant)> {
    sweep_signatures(n_max)
        .into_iter()
        .flat_map(|sig| sweep_variants(&sig).into_iter().map(move |v| (sig, v)))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SignatureCensus {
    pub instances: usize,
    /// signature -> group classes seen with it
    pub realized: BTreeMap<String, Vec<String>>,
    pub inadmissible: Vec<String>,
    pub failures: Vec<String>,
}

impl SignatureCensus {
    pub fn distinct(&self) -> usize {
        self.realized.len()
    }

    pub fn passed(&self) -> bool {
        self.inadmissible.is_empty() && self.failures.is_empty() && self.distinct() <= 64
    }
}

pub fn enumerate_signatures_with(mode: par::Mode, n_max: usize) -> Result<SignatureCensus> {
    if n_max > 10 {
        return Err(Error::Falsified(format!("sweep bound {} exceeds 10", n_max)));
    }
    let inst = sweep_instances(n_max);
    let recs = par::map_with(mode, &inst, |(sig, v)| {
        build_variant(sig, *v).and_then(|b| ext_record(&b)).map_err(|e| format!("{} {:?}: {}", sig, v, e))
    });
    let mut census =
        SignatureCensus { instances: inst.len(), realized: BTreeMap::new(), inadmissible: vec![], failures: vec![] };
    for r in recs {
        match r {
            Ok(rec) => {
                let key = rec.signature.to_string();
                if !rec.signature.is_admissible() {
                    census.inadmissible.push(format!("{} at ({},{})", key, rec.p, rec.q));
                }
                let e = census.realized.entry(key).or_default();
                if !e.contains(&rec.group_class) {
                    e.push(rec.group_class);
                }
            }
            Err(e) => census.failures.push(e),
        }
    }
    Ok(census)
}

pub fn enumerate_signatures(n_max: usize) -> Result<SignatureCensus> {
    enumerate_signatures_with(par::default_mode(), n_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::{build_spinbasis, gamma_basis};

    #[test]
    fn gamma_basis_matrices() {
        let b = gamma_basis();
        let ext = ext_group_matrices(&b).unwrap();
        let words: Vec<String> = (1..8).map(|j| unit_word(&b, ext.masks[j], 1)).collect();
        assert_eq!(words, ["γ0γ1γ2γ3", "γ1γ3", "γ0γ2", "γ0γ1γ3", "γ2", "γ0", "γ1γ2γ3"]);
        assert_eq!(signature_vector(&ext).unwrap().to_string(), "(-,-,+,-,-,+,+)");
    }

    #[test]
    fn mask_rule_matches_matrices() {
        let b = build_spinbasis(&SignatureSpec::real(2, 2)).unwrap();
        for x in 0..16u32 {
            for y in 0..16u32 {
                let (mx, my) = (b.blade_image(x), b.blade_image(y));
                assert_eq!(mx.commutes_with(&my), masks_commute(x, y));
            }
        }
    }

    #[test]
    fn real_ring_pi_is_identity() {
        let b = build_spinbasis(&SignatureSpec::real(2, 0)).unwrap();
        let ext = ext_group_matrices(&b).unwrap();
        assert_eq!(ext.mats[PI], SpinMatrix::identity(b.dim()));
        assert_eq!(ext.mats[K], ext.mats[W]);
    }
}
