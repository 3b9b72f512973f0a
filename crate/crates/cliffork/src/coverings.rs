//! Double coverings Pin^{a,b,c} and Pin^{a,b,c,d,e,f,g}, group membership,
//! and the decomposition of Pin(p,q) in odd dimensions.

use std::fmt;

use serde::Serialize;

use crate::algebra::{volume_square, Field, MultiVector, SignatureSpec};
use crate::classification::{division_ring, Ring};
use crate::error::{Error, Result};
use crate::ext::{classify_ext_group, ext_group_matrices, signature_vector, ExtClass, SignatureVector};
use crate::spinor::build_spinbasis;

/// Signs of (W², E², C²) selecting one of the eight Pin^{a,b,c}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PtSignature(pub [i8; 3]);

impl fmt::Display for PtSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.0.iter().map(|&x| if x > 0 { "+" } else { "-" }).collect();
        write!(f, "({})", s.join(","))
    }
}

impl PtSignature {
    pub fn new(a: i8, b: i8, c: i8) -> Self {
        PtSignature([a, b, c])
    }

    fn parse(s: &str) -> Self {
        let v: Vec<i8> = s.chars().map(|c| if c == '+' { 1 } else { -1 }).collect();
        PtSignature([v[0], v[1], v[2]])
    }

    pub fn plus_count(&self) -> usize {
        self.0.iter().filter(|&&x| x > 0).count()
    }

    /// P and T commute iff abc = +1.
    pub fn is_abelian(&self) -> bool {
        self.0.iter().map(|&x| x as i32).product::<i32>() > 0
    }

    /// Finite group {±1, ±P, ±T, ±PT} and whether PT = −TP.
    pub fn cover_group(&self) -> (&'static str, bool) {
        let name = match (self.plus_count(), self.is_abelian()) {
            (3, _) => "Z2⊗Z2⊗Z2",
            (1, true) => "Z2⊗Z4",
            (0, _) => "Q4",
            _ => "D4",
        };
        (name, !self.is_abelian())
    }
}

const ABC_EVEN: [&str; 4] = ["+++", "+--", "+-+", "++-"];
const ABC_ODD: [&str; 4] = ["-+-", "--+", "---", "-++"];

fn set_of(xs: &[&str]) -> Vec<PtSignature> {
    xs.iter().map(|s| PtSignature::parse(s)).collect()
}

/// Admissible (a,b,c) for the real algebra Cl(p,q), with a note.
pub fn predicted_pt(p: usize, q: usize) -> (Vec<PtSignature>, String) {
    let sig = SignatureSpec::real(p, q);
    let (pm, qm) = (p % 4, q % 4);
    match sig.mod8() {
        0 => {
            let s = match (pm, qm) {
                (0, 0) => "+++",
                (2, 2) => "+--",
                (3, 3) => "+-+",
                _ => "++-",
            };
            (set_of(&[s]), "ring ℝ, p−q ≡ 0 (mod 8)".into())
        }
        2 => {
            let s = match (pm, qm) {
                (2, 0) => "-+-",
                (0, 2) => "--+",
                (3, 1) => "---",
                _ => "-++",
            };
            (set_of(&[s]), "ring ℝ, p−q ≡ 2 (mod 8)".into())
        }
        4 => (set_of(&ABC_EVEN), "ring ℍ, p−q ≡ 4 (mod 8)".into()),
        6 => (set_of(&ABC_ODD), "ring ℍ, p−q ≡ 6 (mod 8)".into()),
        1 | 5 => {
            let mut types = vec![];
            let drop = if q >= 1 { SignatureSpec::real(p, q - 1) } else { SignatureSpec::real(p - 1, 0) };
            types.push((drop, drop.mod8()));
            if p >= 1 {
                let ev = SignatureSpec::real(q, p - 1);
                types.push((ev, ev.mod8()));
            }
            let mut out = vec![];
            let mut parts = vec![];
            for (s, t) in types {
                let add = if t % 4 == 0 { set_of(&ABC_EVEN) } else { set_of(&ABC_ODD) };
                for x in add {
                    if !out.contains(&x) {
                        out.push(x);
                    }
                }
                parts.push(format!("{} (p−q ≡ {})", s, t));
            }
            out.sort();
            (out, format!("addendums {}", parts.join(", ")))
        }
        _ => {
            let s = if p.is_multiple_of(2) { "+++" } else { "---" };
            (set_of(&[s]), format!("Pin^{}({},ℂ) with ring ℂ", PtSignature::parse(s), p + q - 1))
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoveringReport {
    pub algebra: String,
    /// admissible signatures; a single entry when the type fixes it
    pub admissible: Vec<String>,
    pub cover_groups: Vec<String>,
    pub cliffordian: Vec<bool>,
    /// signature realised by the canonical spinbasis
    pub computed: Option<String>,
    pub computed_group: Option<String>,
    pub consistent: Option<bool>,
    pub note: String,
}

fn pt_from_squares(ext: &crate::ext::ExtGroupMatrices) -> Result<PtSignature> {
    let sv = signature_vector(ext)?;
    Ok(PtSignature::new(sv.0[0], sv.0[1], sv.0[2]))
}

/// Pin^{a,b,c}(n,ℂ) for the complex algebra C_n.
pub fn pt_structure_complex(n: usize) -> CoveringReport {
    let s = if n % 4 <= 1 { PtSignature::parse("+++") } else { PtSignature::parse("---") };
    let (g, cl) = s.cover_group();
    let note = if n % 2 == 1 {
        format!("Pin{}({},ℂ) ∪ e_1…e_{}·Pin{}({},ℂ)", s, n - 1, n, s, n - 1)
    } else {
        format!("n ≡ {} (mod 4)", n % 4)
    };
    CoveringReport {
        algebra: format!("C_{}", n),
        admissible: vec![s.to_string()],
        cover_groups: vec![g.into()],
        cliffordian: vec![cl],
        computed: None,
        computed_group: None,
        consistent: None,
        note,
    }
}

/// Pin^{a,b,c} for Cl(p,q), or for C_n when the field is complex. The
/// prediction is checked against (W², E², C²) of the canonical spinbasis
/// when the type admits one.
pub fn pt_structure(sig: &SignatureSpec) -> Result<CoveringReport> {
    if sig.field == Field::Complex {
        return Ok(pt_structure_complex(sig.n()));
    }
    let (adm, note) = predicted_pt(sig.p, sig.q);
    let mut rep = CoveringReport {
        algebra: sig.to_string(),
        admissible: adm.iter().map(|s| s.to_string()).collect(),
        cover_groups: adm.iter().map(|s| s.cover_group().0.to_string()).collect(),
        cliffordian: adm.iter().map(|s| s.cover_group().1).collect(),
        computed: None,
        computed_group: None,
        consistent: None,
        note,
    };
    if sig.n().is_multiple_of(2) && matches!(division_ring(sig).ring, Ring::R | Ring::H) {
        let basis = build_spinbasis(sig)?;
        let ext = ext_group_matrices(&basis)?;
        let got = pt_from_squares(&ext)?;
        rep.computed = Some(got.to_string());
        rep.computed_group = Some(got.cover_group().0.into());
        rep.consistent = Some(adm.contains(&got));
    }
    Ok(rep)
}

/// Finite group of Pin^{a,b,c,d,e,f,g} from the square signs and whether
/// the group of automorphism matrices is abelian.
pub fn cpt_cover_group(sv: &SignatureVector, abelian: bool) -> Option<&'static str> {
    match (sv.minus_count(), abelian) {
        (0, _) => Some("Z2⊗Z2⊗Z2⊗Z2"),
        (4, true) => Some("Z4⊗Z2⊗Z2"),
        (6, _) => Some("Q4⊗Z2"),
        (2, _) => Some("D4⊗Z2"),
        (4, false) => Some("*Z4⊗Z2⊗Z2"),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CptReport {
    pub algebra: String,
    pub signature: String,
    pub cover_group: String,
    pub abelian: bool,
    /// order-16 group generated by ±{W,E,C,Π,K,S,F}
    pub abstract_group: String,
    pub reduced: bool,
    pub note: String,
}

/// Pin^{a,b,c,d,e,f,g}(p,q). For ring ℝ the pseudoautomorphism is
/// trivial and the result reduces to the PT-structure.
pub fn cpt_structure(sig: &SignatureSpec) -> Result<CptReport> {
    let real = SignatureSpec::real(sig.p, sig.q);
    let ring = division_ring(&real).ring;
    if !matches!(ring, Ring::R | Ring::H) {
        return Err(Error::UnsupportedType { mod8: real.mod8(), what: "Pin^{a,b,c,d,e,f,g}".into() });
    }
    let basis = build_spinbasis(&real)?;
    let ext = ext_group_matrices(&basis)?;
    let sv = signature_vector(&ext)?;
    let cls = classify_ext_group(&ext)?;
    if ring == Ring::R {
        let pt = PtSignature::new(sv.0[0], sv.0[1], sv.0[2]);
        let (g, _) = pt.cover_group();
        return Ok(CptReport {
            algebra: real.to_string(),
            signature: pt.to_string(),
            cover_group: g.into(),
            abelian: pt.is_abelian(),
            abstract_group: cls.abstract_group,
            reduced: true,
            note: "Π = I; reduces to Pin^{a,b,c}".into(),
        });
    }
    let cover = cpt_cover_group(&sv, cls.abelian)
        .ok_or_else(|| Error::Falsified(format!("signature {} has an odd number of minuses", sv)))?;
    Ok(CptReport {
        algebra: real.to_string(),
        signature: sv.to_string(),
        cover_group: cover.into(),
        abelian: cls.abelian,
        abstract_group: cls.abstract_group,
        reduced: cls.class == ExtClass::Reduced,
        note: format!("{}", ext.forms),
    })
}

fn parity(x: &MultiVector) -> Option<bool> {
    let mut it = x.terms().map(|(b, _)| b.grade() % 2 == 0);
    let first = it.next()?;
    it.all(|e| e == first).then_some(first)
}

/// x ∈ Pin(p,q): homogeneous, N(x) = x·x̃ = ±1, and the twisted adjoint
/// action preserves the grade-1 subspace.
pub fn pin_membership(x: &MultiVector) -> Result<bool> {
    let inv = x.inverse()?;
    if parity(x).is_none() {
        return Ok(false);
    }
    let norm = x.mul(&x.reversion())?;
    match norm.as_scalar() {
        Some(c) if c.is_one() || (-c).is_one() => {}
        _ => return Ok(false),
    }
    let xs = x.involution();
    for i in 1..=x.sig().n() {
        let e = MultiVector::generator(*x.sig(), i)?;
        let y = xs.mul(&e)?.mul(&inv)?;
        if y.terms().any(|(b, _)| b.grade() != 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn spin_membership(x: &MultiVector) -> Result<bool> {
    Ok(pin_membership(x)? && x.is_even())
}

#[derive(Clone, Debug, Serialize)]
pub struct OddDecomposition {
    pub algebra: String,
    pub omega_square: i8,
    pub omega_central: bool,
    pub decompositions: Vec<String>,
    /// unitary form for the low-dimensional cases
    pub unitary: Option<String>,
    pub unitary_consistent: Option<bool>,
}

/// Pin(p,q) ≅ Pin(p,q−1) ∪ ωPin(p,q−1) ≅ Pin(q,p−1) ∪ ωPin(q,p−1) for
/// odd p+q.
pub fn odd_dimensional_decomposition_report(sig: &SignatureSpec) -> Result<OddDecomposition> {
    let n = sig.n();
    if n.is_multiple_of(2) {
        return Err(Error::EvenDimension(n));
    }
    let real = SignatureSpec::real(sig.p, sig.q);
    let (p, q) = (sig.p, sig.q);
    let w = MultiVector::volume(real);
    let mut central = true;
    for i in 1..=n {
        let e = MultiVector::generator(real, i)?;
        central &= w.mul(&e)? == e.mul(&w)?;
    }
    let mut decompositions = vec![];
    if q >= 1 {
        decompositions.push(format!("Pin({},{}) ≅ Pin({},{}) ∪ ωPin({},{})", p, q, p, q - 1, p, q - 1));
    }
    if p >= 1 {
        decompositions.push(format!("Pin({},{}) ≅ Pin({},{}) ∪ ωPin({},{})", p, q, q, p - 1, q, p - 1));
    }
    decompositions.push(format!("Pin({},{}) ≅ Spin({},{}) ∪ ωSpin({},{})", p, q, p, q, p, q));
    let sq = volume_square(&real);
    let unitary = match (p, q) {
        (3, 0) => Some("SU(2) ∪ iSU(2)"),
        (0, 3) => Some("SU(2) ∪ eSU(2)"),
        (5, 0) => Some("Sp(2) ∪ eSp(2)"),
        (0, 5) => Some("Sp(2) ∪ iSp(2)"),
        _ => None,
    };
    let unitary_consistent = unitary.map(|u| u.contains("∪ i") == (sq < 0));
    Ok(OddDecomposition {
        algebra: real.to_string(),
        omega_square: sq,
        omega_central: central,
        decompositions,
        unitary: unitary.map(String::from),
        unitary_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianScalar;

    #[test]
    fn ring_r_prediction_matches_basis() {
        for (p, q) in [(1, 1), (2, 0), (3, 3), (0, 6), (4, 4), (3, 1)] {
            let r = pt_structure(&SignatureSpec::real(p, q)).unwrap();
            assert_eq!(r.admissible.len(), 1);
            assert_eq!(r.consistent, Some(true), "{:?}", r);
        }
    }

    #[test]
    fn membership() {
        let sig = SignatureSpec::real(2, 0);
        let e12 = MultiVector::monomial(sig, &[1, 2]).unwrap();
        assert!(spin_membership(&e12).unwrap());
        let x = MultiVector::one(sig).add(&e12).unwrap();
        assert!(!pin_membership(&x).unwrap());
        let z = MultiVector::zero(sig);
        assert!(matches!(pin_membership(&z), Err(Error::NotInvertible)));
        let two = MultiVector::scalar(sig, GaussianScalar::from_ints(2, 0));
        assert!(!pin_membership(&two).unwrap());
    }
}
