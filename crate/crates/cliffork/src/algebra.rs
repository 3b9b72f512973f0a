//! Abstract Clifford algebras Cl(p,q) and C_n over exact Gaussian rationals.
//!
//! Blades are bitsets: bit `i` stands for generator `e_{i+1}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::GaussianScalar;

pub const MAX_GENERATORS: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Real,
    Complex,
}

/// Signature of a real algebra, or the marking (p,q) of the real
/// subalgebra inside a complex one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignatureSpec {
    pub p: usize,
    pub q: usize,
    pub field: Field,
}

impl SignatureSpec {
    pub fn real(p: usize, q: usize) -> Self {
        assert!(p + q <= MAX_GENERATORS, "too many generators");
        SignatureSpec { p, q, field: Field::Real }
    }

    /// C_n with the real subalgebra Cl(p,q) marked by {e_1..e_p, ie_{p+1}..ie_n}.
    pub fn complex_marked(p: usize, q: usize) -> Self {
        assert!(p + q <= MAX_GENERATORS, "too many generators");
        SignatureSpec { p, q, field: Field::Complex }
    }

    pub fn complex(n: usize) -> Self {
        SignatureSpec::complex_marked(n, 0)
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn dim(&self) -> usize {
        1 << self.n()
    }

    /// (p - q) mod 8.
    pub fn mod8(&self) -> u32 {
        (self.p as i64 - self.q as i64).rem_euclid(8) as u32
    }

    /// Square of e_i (1-based).
    pub fn square(&self, i: usize) -> i8 {
        match self.field {
            Field::Complex => 1,
            Field::Real => {
                if i <= self.p {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Bitmask of the generators with negative square (or marked with i).
    pub fn q_mask(&self) -> u32 {
        let all = if self.n() == 32 { u32::MAX } else { (1u32 << self.n()) - 1 };
        all & !((1u32 << self.p) - 1)
    }

    pub fn full_mask(&self) -> u32 {
        (1u32 << self.n()) - 1
    }
}

impl fmt::Display for SignatureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            Field::Real => write!(f, "Cl({},{})", self.p, self.q),
            Field::Complex => write!(f, "C_{}[{},{}]", self.n(), self.p, self.q),
        }
    }
}

/// Basis monomial e_{i1...ik} as a bitset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Blade(pub u32);

impl Blade {
    pub const UNIT: Blade = Blade(0);

    /// Build from 1-based indices; duplicates or order do not matter here,
    /// use [`MultiVector::monomial`] for products with signs.
    pub fn from_indices(indices: &[usize], n: usize) -> Result<Blade> {
        let mut bits = 0u32;
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            bits |= 1 << (i - 1);
        }
        Ok(Blade(bits))
    }

    pub fn generator(i: usize) -> Blade {
        Blade(1 << (i - 1))
    }

    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..32).filter(|k| self.0 >> k & 1 == 1).map(|k| k + 1).collect()
    }

    pub fn name(&self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let idx = self.indices();
        if idx.iter().all(|&i| i < 10) {
            let s: String = idx.iter().map(|i| i.to_string()).collect();
            format!("e{}", s)
        } else {
            let s: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            format!("e{{{}}}", s.join(","))
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n < 32 && self.0 >> n != 0 {
            let bad = 32 - self.0.leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        Ok(())
    }
}

impl Ord for Blade {
    // grade first, then lexicographic on the sorted index lists
    fn cmp(&self, other: &Self) -> Ordering {
        match self.grade().cmp(&other.grade()) {
            Ordering::Equal => {
                let d = self.0 ^ other.0;
                if d == 0 {
                    Ordering::Equal
                } else if self.0 & (d & d.wrapping_neg()) != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            o => o,
        }
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Number of transpositions needed to sort the concatenation a·b.
#[inline]
pub fn reorder_parity(a: u32, b: u32) -> u32 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    swaps & 1
}

/// Unchecked product on bitsets; callers guarantee the blades fit `sig`.
#[inline]
pub fn blade_mul_bits(a: u32, b: u32, sig: &SignatureSpec) -> (u32, i8) {
    let mut neg = reorder_parity(a, b) == 1;
    if sig.field == Field::Real {
        let contracted = a & b & sig.q_mask();
        if contracted.count_ones() & 1 == 1 {
            neg = !neg;
        }
    }
    (a ^ b, if neg { -1 } else { 1 })
}

pub fn blade_product(a: Blade, b: Blade, sig: &SignatureSpec) -> Result<(Blade, i8)> {
    a.check(sig.n())?;
    b.check(sig.n())?;
    let (c, s) = blade_mul_bits(a.0, b.0, sig);
    Ok((Blade(c), s))
}

/// Sign of the grade involution on grade k.
pub fn involution_sign(k: usize) -> i8 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of reversion on grade k: (-1)^{k(k-1)/2}.
pub fn reversion_sign(k: usize) -> i8 {
    if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of Clifford conjugation on grade k: (-1)^{k(k+1)/2}.
pub fn conjugation_sign(k: usize) -> i8 {
    if (k * (k + 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiVector {
    sig: SignatureSpec,
    terms: BTreeMap<Blade, GaussianScalar>,
}

impl MultiVector {
    pub fn zero(sig: SignatureSpec) -> Self {
        MultiVector { sig, terms: BTreeMap::new() }
    }

    pub fn scalar(sig: SignatureSpec, c: GaussianScalar) -> Self {
        MultiVector::blade(sig, Blade::UNIT, c)
    }

    pub fn one(sig: SignatureSpec) -> Self {
        MultiVector::scalar(sig, GaussianScalar::one())
    }

    pub fn blade(sig: SignatureSpec, b: Blade, c: GaussianScalar) -> Self {
        let mut mv = MultiVector::zero(sig);
        mv.add_term(b, c);
        mv
    }

    /// e_i, 1-based.
    pub fn generator(sig: SignatureSpec, i: usize) -> Result<Self> {
        if i == 0 || i > sig.n() {
            return Err(Error::IndexOutOfRange { index: i, n: sig.n() });
        }
        Ok(MultiVector::blade(sig, Blade::generator(i), GaussianScalar::one()))
    }

    /// Ordered product e_{i1} e_{i2} ... e_{ik}; repeated indices contract.
    pub fn monomial(sig: SignatureSpec, indices: &[usize]) -> Result<Self> {
        let mut acc = MultiVector::one(sig);
        for &i in indices {
            acc = acc.mul(&MultiVector::generator(sig, i)?)?;
        }
        Ok(acc)
    }

    pub fn from_terms<I>(sig: SignatureSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, GaussianScalar)>,
    {
        let mut mv = MultiVector::zero(sig);
        for (b, c) in terms {
            b.check(sig.n())?;
            mv.add_term(b, c);
        }
        Ok(mv)
    }

    /// Volume element ω = e_1 e_2 ... e_n.
    pub fn volume(sig: SignatureSpec) -> Self {
        MultiVector::blade(sig, Blade(sig.full_mask()), GaussianScalar::one())
    }

    pub fn sig(&self) -> &SignatureSpec {
        &self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &GaussianScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, b: Blade) -> GaussianScalar {
        self.terms.get(&b).copied().unwrap_or_else(GaussianScalar::zero)
    }

    pub fn scalar_part(&self) -> GaussianScalar {
        self.coefficient(Blade::UNIT)
    }

    pub fn as_scalar(&self) -> Option<GaussianScalar> {
        match self.terms.len() {
            0 => Some(GaussianScalar::zero()),
            1 => self.terms.get(&Blade::UNIT).copied(),
            _ => None,
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 0)
    }

    pub fn grade_part(&self, k: usize) -> Self {
        self.filter_map(|b, c| (b.grade() == k).then_some(c))
    }

    fn add_term(&mut self, b: Blade, c: GaussianScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(b).or_insert_with(GaussianScalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&b);
        }
    }

    fn same_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(self.sig.to_string(), other.sig.to_string()));
        }
        Ok(())
    }

    fn filter_map<F>(&self, mut f: F) -> Self
    where
        F: FnMut(Blade, GaussianScalar) -> Option<GaussianScalar>,
    {
        let mut out = MultiVector::zero(self.sig);
        for (&b, &c) in &self.terms {
            if let Some(v) = f(b, c) {
                out.add_term(b, v);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_sig(other)?;
        let mut out = self.clone();
        for (&b, &c) in &other.terms {
            out.add_term(b, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.filter_map(|_, c| Some(-c))
    }

    pub fn scale(&self, s: GaussianScalar) -> Self {
        self.filter_map(|_, c| Some(c * s))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_sig(other)?;
        let mut out = MultiVector::zero(self.sig);
        for (&a, &ca) in &self.terms {
            for (&b, &cb) in &other.terms {
                let (c, s) = blade_mul_bits(a.0, b.0, &self.sig);
                let v = ca * cb;
                out.add_term(Blade(c), if s < 0 { -v } else { v });
            }
        }
        Ok(out)
    }

    /// Grade involution A -> A*.
    pub fn involution(&self) -> Self {
        self.filter_map(|b, c| Some(signed(c, involution_sign(b.grade()))))
    }

    /// Reversion A -> A~.
    pub fn reversion(&self) -> Self {
        self.filter_map(|b, c| Some(signed(c, reversion_sign(b.grade()))))
    }

    /// Clifford conjugation A -> A~*.
    pub fn conjugation(&self) -> Self {
        self.filter_map(|b, c| Some(signed(c, conjugation_sign(b.grade()))))
    }

    /// Grade involution computed as ω A ω^{-1}; only valid for even n.
    pub fn involution_by_omega(&self) -> Result<Self> {
        let n = self.sig.n();
        if n % 2 == 1 {
            return Err(Error::OddDimension(n));
        }
        let w = MultiVector::volume(self.sig);
        let w_inv = w.scale(GaussianScalar::sign(volume_square(&self.sig)));
        w.mul(self)?.mul(&w_inv)
    }

    /// Complex conjugation of coefficients relative to the marked real
    /// basis {e_1..e_p, ie_{p+1}..ie_n}.
    pub fn pseudo_conjugation(&self) -> Self {
        let sig = self.sig;
        let qm = sig.q_mask();
        self.filter_map(|b, c| {
            let flip = sig.field == Field::Complex && (b.0 & qm).count_ones() % 2 == 1;
            Some(if flip { -c.conj() } else { c.conj() })
        })
    }

    pub fn apply(&self, a: Automorphism) -> Self {
        let x = if a.has_pseudo() { self.pseudo_conjugation() } else { self.clone() };
        match (a.has_star(), a.has_tilde()) {
            (false, false) => x,
            (true, false) => x.involution(),
            (false, true) => x.reversion(),
            (true, true) => x.conjugation(),
        }
    }

    /// Matrix of left multiplication on the blade basis (columns = inputs).
    pub fn left_matrix(&self) -> Vec<Vec<GaussianScalar>> {
        let d = self.sig.dim();
        let mut m = vec![vec![GaussianScalar::zero(); d]; d];
        for col in 0..d as u32 {
            for (&a, &c) in &self.terms {
                let (r, s) = blade_mul_bits(a.0, col, &self.sig);
                let v = signed(c, s);
                m[r as usize][col as usize] += v;
            }
        }
        m
    }

    /// Two-sided inverse, or `NotInvertible`.
    pub fn inverse(&self) -> Result<Self> {
        if let Some(c) = self.as_scalar() {
            let inv = c.inv().ok_or(Error::NotInvertible)?;
            return Ok(MultiVector::scalar(self.sig, inv));
        }
        // versors: x x~ is often a scalar
        let xr = self.reversion();
        if let Some(c) = self.mul(&xr)?.as_scalar() {
            if let Some(inv) = c.inv() {
                let cand = xr.scale(inv);
                if cand.mul(self)? == MultiVector::one(self.sig) {
                    return Ok(cand);
                }
            }
        }
        let d = self.sig.dim();
        let mut rhs = vec![GaussianScalar::zero(); d];
        rhs[0] = GaussianScalar::one();
        let sol = crate::matrix::solve(self.left_matrix(), rhs).ok_or(Error::NotInvertible)?;
        let y = MultiVector::from_terms(self.sig, sol.into_iter().enumerate().map(|(k, c)| (Blade(k as u32), c)))?;
        // in finite dimensions a right inverse is two-sided
        Ok(y)
    }
}

fn signed(c: GaussianScalar, s: i8) -> GaussianScalar {
    if s < 0 {
        -c
    } else {
        c
    }
}

pub fn mv_multiply(x: &MultiVector, y: &MultiVector) -> Result<MultiVector> {
    x.mul(y)
}

impl fmt::Display for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            let negative = c.is_real() && c.re < num_rational::Ratio::from_integer(0);
            let mag = if negative { -*c } else { *c };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let body = if *b == Blade::UNIT {
                if mag.is_real() {
                    mag.to_string()
                } else {
                    format!("({})", mag)
                }
            } else if mag.is_one() {
                b.name()
            } else if mag.is_real() {
                format!("{}*{}", mag, b.name())
            } else {
                format!("({})*{}", mag, b.name())
            };
            write!(f, "{}", body)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MvRepr {
    sig: SignatureSpec,
    terms: Vec<(String, GaussianScalar)>,
}

impl Serialize for MultiVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MvRepr { sig: self.sig, terms: self.terms.iter().map(|(b, c)| (b.name(), *c)).collect() }.serialize(s)
    }
}

/// ω² as a sign.
pub fn volume_square(sig: &SignatureSpec) -> i8 {
    let n = sig.n();
    let mut neg = (n * n.saturating_sub(1) / 2) % 2 == 1;
    if sig.field == Field::Real && sig.q % 2 == 1 {
        neg = !neg;
    }
    if neg {
        -1
    } else {
        1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CenterKind {
    UnitOnly,
    UnitAndOmega,
}

pub fn center(sig: &SignatureSpec) -> CenterKind {
    if sig.n() % 2 == 1 {
        CenterKind::UnitAndOmega
    } else {
        CenterKind::UnitOnly
    }
}

/// The eight elements of the extended automorphism group, named by
/// their discrete-symmetry counterparts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Automorphism {
    Identity,
    Involution,
    Reversion,
    Conjugation,
    Pseudo,
    PseudoInvolution,
    PseudoReversion,
    PseudoConjugation,
}

impl Automorphism {
    pub const ALL: [Automorphism; 8] = [
        Automorphism::Identity,
        Automorphism::Involution,
        Automorphism::Reversion,
        Automorphism::Conjugation,
        Automorphism::Pseudo,
        Automorphism::PseudoInvolution,
        Automorphism::PseudoReversion,
        Automorphism::PseudoConjugation,
    ];

    pub fn has_star(&self) -> bool {
        use Automorphism::*;
        matches!(self, Involution | Conjugation | PseudoInvolution | PseudoConjugation)
    }

    pub fn has_tilde(&self) -> bool {
        use Automorphism::*;
        matches!(self, Reversion | Conjugation | PseudoReversion | PseudoConjugation)
    }

    pub fn has_pseudo(&self) -> bool {
        use Automorphism::*;
        matches!(self, Pseudo | PseudoInvolution | PseudoReversion | PseudoConjugation)
    }

    /// Discrete symmetry label: 1, P, T, PT, C, CP, CT, CPT.
    pub fn symbol(&self) -> &'static str {
        use Automorphism::*;
        match self {
            Identity => "1",
            Involution => "P",
            Reversion => "T",
            Conjugation => "PT",
            Pseudo => "C",
            PseudoInvolution => "CP",
            PseudoReversion => "CT",
            PseudoConjugation => "CPT",
        }
    }

    /// Matrix name in the extended group: I, W, E, C, Π, K, S, F.
    pub fn matrix_name(&self) -> &'static str {
        use Automorphism::*;
        match self {
            Identity => "I",
            Involution => "W",
            Reversion => "E",
            Conjugation => "C",
            Pseudo => "Π",
            PseudoInvolution => "K",
            PseudoReversion => "S",
            PseudoConjugation => "F",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(r: i64) -> GaussianScalar {
        GaussianScalar::from_ints(r, 0)
    }

    #[test]
    fn cl20_products() {
        let s = SignatureSpec::real(2, 0);
        let e1 = Blade::generator(1);
        let e2 = Blade::generator(2);
        assert_eq!(blade_product(e1, e1, &s).unwrap(), (Blade::UNIT, 1));
        assert_eq!(blade_product(e2, e1, &s).unwrap(), (Blade(0b11), -1));
        assert_eq!(blade_product(Blade(3), Blade(3), &s).unwrap(), (Blade::UNIT, -1));
    }

    #[test]
    fn out_of_range() {
        let s = SignatureSpec::real(2, 0);
        assert!(blade_product(Blade(0b100), Blade(1), &s).is_err());
        assert!(MultiVector::generator(s, 3).is_err());
    }

    #[test]
    fn canonical_text() {
        let s = SignatureSpec::real(1, 0);
        let x = MultiVector::from_terms(s, [(Blade::UNIT, GaussianScalar::half()), (Blade(1), GaussianScalar::half())])
            .unwrap();
        assert_eq!(x.to_string(), "1/2 + 1/2*e1");
        assert_eq!(MultiVector::zero(s).to_string(), "0");
        let y = MultiVector::from_terms(s, [(Blade::UNIT, gs(1)), (Blade(1), gs(-1))]).unwrap();
        assert_eq!(y.to_string(), "1 - e1");
    }

    #[test]
    fn blade_order_is_grade_then_lex() {
        let mut v: Vec<Blade> = (0..16).map(Blade).collect();
        v.sort();
        let names: Vec<String> = v.iter().map(|b| b.name()).collect();
        assert_eq!(
            names,
            [
                "1", "e1", "e2", "e3", "e4", "e12", "e13", "e14", "e23", "e24", "e34", "e123", "e124", "e134", "e234",
                "e1234"
            ]
        );
    }

    #[test]
    fn inverse_of_generic_element() {
        let s = SignatureSpec::real(1, 1);
        let x = MultiVector::from_terms(s, [(Blade::UNIT, gs(2)), (Blade(0b11), gs(1))]).unwrap();
        let y = x.inverse().unwrap();
        assert_eq!(x.mul(&y).unwrap(), MultiVector::one(s));
        let z = MultiVector::from_terms(s, [(Blade::UNIT, gs(1)), (Blade(1), gs(1))]).unwrap();
        assert_eq!(z.inverse(), Err(Error::NotInvertible));
    }
}
