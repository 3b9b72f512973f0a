//! Quotient map ε of an odd-dimensional algebra onto its simple summand,
//! transfer of the discrete symmetries through ε, and the resulting
//! quotient coverings.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{blade_mul_bits, volume_square, Automorphism, Blade, Field, MultiVector, SignatureSpec};
use crate::error::{Error, Result};
use crate::scalar::GaussianScalar;

/// Odd-dimensional algebra together with ε chosen so that (εω)² = 1.
#[derive(Clone, Debug)]
pub struct EpsilonContext {
    pub sig: SignatureSpec,
    pub eps: GaussianScalar,
    pub eps_omega: MultiVector,
}

impl EpsilonContext {
    pub fn new(sig: SignatureSpec) -> Result<Self> {
        if sig.n().is_multiple_of(2) {
            return Err(Error::EvenDimension(sig.n()));
        }
        let eps = if volume_square(&sig) > 0 { GaussianScalar::one() } else { GaussianScalar::i() };
        let eps_omega = MultiVector::volume(sig).scale(eps);
        Ok(EpsilonContext { sig, eps, eps_omega })
    }

    pub fn eps_label(&self) -> &'static str {
        if self.eps.is_one() {
            "1"
        } else {
            "i"
        }
    }

    /// Type of the marked real algebra, (p−q) mod 8.
    pub fn mod8(&self) -> u32 {
        self.sig.mod8()
    }

    /// Whether the complex description applies (complex field, or a real
    /// algebra with ring ℂ).
    pub fn complex_like(&self) -> bool {
        self.sig.field == Field::Complex || matches!(self.mod8(), 3 | 7)
    }
}

/// λ± = (1 ± εω)/2.
pub fn central_idempotents(ctx: &EpsilonContext) -> Result<(MultiVector, MultiVector)> {
    let one = MultiVector::one(ctx.sig);
    if ctx.eps_omega.mul(&ctx.eps_omega)? != one {
        return Err(Error::Falsified(format!("(εω)² ≠ 1 in {}", ctx.sig)));
    }
    let h = GaussianScalar::half();
    let plus = one.add(&ctx.eps_omega)?.scale(h);
    let minus = one.sub(&ctx.eps_omega)?.scale(h);
    Ok((plus, minus))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum QuotientTarget {
    /// drop the last generator: Cl(p,q−1), or C_{n−1}
    Drop,
    /// the even subalgebra: Cl(q,p−1)
    Even,
}

pub fn target_signature(ctx: &EpsilonContext, t: QuotientTarget) -> Result<SignatureSpec> {
    let (p, q) = (ctx.sig.p, ctx.sig.q);
    match t {
        QuotientTarget::Drop => Ok(match (ctx.sig.field, q) {
            (Field::Real, 0) => SignatureSpec::real(p - 1, 0),
            (Field::Real, _) => SignatureSpec::real(p, q - 1),
            (Field::Complex, 0) => SignatureSpec::complex_marked(p - 1, 0),
            (Field::Complex, _) => SignatureSpec::complex_marked(p, q - 1),
        }),
        QuotientTarget::Even => {
            if ctx.sig.field == Field::Complex || p == 0 {
                return Err(Error::UnsupportedType { mod8: ctx.mod8(), what: "even-subalgebra target".into() });
            }
            Ok(SignatureSpec::real(q, p - 1))
        }
    }
}

/// Targets available for the context.
pub fn targets(ctx: &EpsilonContext) -> Vec<QuotientTarget> {
    let mut out = vec![QuotientTarget::Drop];
    if ctx.sig.field == Field::Real && ctx.sig.p >= 1 {
        out.push(QuotientTarget::Even);
    }
    out
}

/// Source even blade → (target blade, sign), with target generators
/// e_{p+j}e_p (j = 1..q) followed by e_je_p (j = 1..p−1).
fn even_blade_map(sig: &SignatureSpec) -> HashMap<u32, (u32, i8)> {
    let (p, q) = (sig.p, sig.q);
    let ep = 1u32 << (p - 1);
    let gens: Vec<(u32, i8)> = (p + 1..=p + q).chain(1..p).map(|j| blade_mul_bits(1 << (j - 1), ep, sig)).collect();
    let m = gens.len();
    let mut map = HashMap::new();
    for t in 0u32..(1 << m) {
        let (mut bits, mut sign) = (0u32, 1i8);
        for (k, &(gb, gs)) in gens.iter().enumerate() {
            if t >> k & 1 == 1 {
                let (b, s) = blade_mul_bits(bits, gb, sig);
                bits = b;
                sign *= s * gs;
            }
        }
        map.insert(bits, (t, sign));
    }
    map
}

/// ε: A¹ + εω A² ↦ A¹ + A² onto the chosen target.
pub fn epsilon_map(x: &MultiVector, ctx: &EpsilonContext, t: QuotientTarget) -> Result<MultiVector> {
    if *x.sig() != ctx.sig {
        return Err(Error::SignatureMismatch(x.sig().to_string(), ctx.sig.to_string()));
    }
    let tsig = target_signature(ctx, t)?;
    match t {
        QuotientTarget::Drop => {
            let last = 1u32 << (ctx.sig.n() - 1);
            let a1 =
                MultiVector::from_terms(ctx.sig, x.terms().filter(|(b, _)| b.0 & last == 0).map(|(b, c)| (*b, *c)))?;
            let a0 =
                MultiVector::from_terms(ctx.sig, x.terms().filter(|(b, _)| b.0 & last != 0).map(|(b, c)| (*b, *c)))?;
            let y = a1.add(&ctx.eps_omega.mul(&a0)?)?;
            MultiVector::from_terms(tsig, y.terms().map(|(b, c)| (*b, *c)))
        }
        QuotientTarget::Even => {
            let even =
                MultiVector::from_terms(ctx.sig, x.terms().filter(|(b, _)| b.grade() % 2 == 0).map(|(b, c)| (*b, *c)))?;
            let odd = x.sub(&even)?;
            let y = even.add(&ctx.eps_omega.mul(&odd)?)?;
            let map = even_blade_map(&ctx.sig);
            let mut terms = vec![];
            for (b, c) in y.terms() {
                let &(tb, s) = map.get(&b.0).ok_or_else(|| Error::Falsified(format!("{} is not even", b.name())))?;
                terms.push((Blade(tb), if s < 0 { -*c } else { *c }));
            }
            MultiVector::from_terms(tsig, terms)
        }
    }
}

/// Symbol bits: P = 1, T = 2, C = 4, composition is XOR.
fn symbol_bits(s: &str) -> u8 {
    match s {
        "1" => 0,
        "P" => 1,
        "T" => 2,
        "PT" => 3,
        "C" => 4,
        "CP" => 5,
        "CT" => 6,
        "CPT" => 7,
        _ => panic!("unknown symbol {}", s),
    }
}

fn bits_symbol(b: u8) -> &'static str {
    Automorphism::ALL[b as usize].symbol()
}

/// Letter of a discrete symmetry in Pin^{a,b,c,d,e,f,g}.
fn symbol_letter(s: &str) -> char {
    match s {
        "P" => 'a',
        "T" => 'b',
        "PT" => 'c',
        "C" => 'd',
        "CP" => 'e',
        "CT" => 'f',
        _ => 'g',
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferRow {
    pub symbol: &'static str,
    pub predicted: bool,
    /// fixed point test φ(εω) = εω
    pub direct: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferReport {
    pub algebra: String,
    pub eps: &'static str,
    pub rows: Vec<TransferRow>,
}

impl TransferReport {
    pub fn conflicts(&self) -> Vec<&TransferRow> {
        self.rows.iter().filter(|r| r.predicted != r.direct).collect()
    }
}

/// Stated transfer rule for one of the seven nontrivial symmetries.
pub fn transfer_predicate(ctx: &EpsilonContext, a: Automorphism) -> bool {
    use Automorphism::*;
    let t = ctx.mod8();
    if ctx.complex_like() {
        let r = ctx.sig.n() % 4;
        let t15 = matches!(t, 1 | 5);
        let t37 = matches!(t, 3 | 7);
        match a {
            Identity => true,
            Involution => false,
            Reversion => r == 1,
            Conjugation => r == 3,
            Pseudo => (r == 3 && t37) || (r == 1 && t15),
            PseudoInvolution => (r == 3 && t15) || (r == 1 && t37),
            PseudoReversion => r == 3 && t15,
            PseudoConjugation => t37,
        }
    } else {
        let q_even = ctx.sig.q.is_multiple_of(2);
        match a {
            Identity | Reversion => true,
            Involution | Conjugation => false,
            Pseudo | PseudoReversion => q_even,
            PseudoInvolution | PseudoConjugation => !q_even,
        }
    }
}

/// The marked C_n context used for complex descriptions; a real algebra
/// of type 3, 7 is replaced by its complexification.
pub fn complex_view(ctx: &EpsilonContext) -> Result<EpsilonContext> {
    if ctx.sig.field == Field::Complex {
        return Ok(ctx.clone());
    }
    EpsilonContext::new(SignatureSpec::complex_marked(ctx.sig.p, ctx.sig.q))
}

/// Whether φ fixes εω. In the complex description ω = e_1…e_n in the
/// marked C_n; for real types 1, 5 the volume element is
/// e_1…e_p(ie_{p+1})…(ie_n) inside C_n with conjugation of coefficients.
pub fn transfer_direct(ctx: &EpsilonContext, a: Automorphism) -> Result<bool> {
    let eo = if ctx.complex_like() {
        complex_view(ctx)?.eps_omega
    } else {
        let c = SignatureSpec::complex(ctx.sig.n());
        MultiVector::volume(c).scale(GaussianScalar::i_pow(ctx.sig.q as i64))
    };
    Ok(eo.apply(a) == eo)
}

pub fn transfer_report(ctx: &EpsilonContext) -> Result<TransferReport> {
    let ctx = &if ctx.complex_like() { complex_view(ctx)? } else { ctx.clone() };
    let mut rows = vec![];
    for a in Automorphism::ALL.iter().skip(1) {
        rows.push(TransferRow {
            symbol: a.symbol(),
            predicted: transfer_predicate(ctx, *a),
            direct: transfer_direct(ctx, *a)?,
        });
    }
    Ok(TransferReport { algebra: ctx.sig.to_string(), eps: ctx.eps_label(), rows })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientClass {
    pub label: &'static str,
    /// surviving symmetries as `symbol` or `symbol∼equivalent`
    pub surviving: Vec<String>,
    /// the same set after the stated equivalences
    pub reduced: Vec<&'static str>,
}

fn class_rows(label: &str) -> &'static [(&'static str, &'static str, &'static str)] {
    // (symbol, equivalent shown, reduced symbol)
    match label {
        "a₁" => &[("T", "", "T"), ("C", "I", "1")],
        "a₂" => &[("T", "", "T"), ("C", "", "C")],
        "b" => &[("T", "", "T"), ("CP", "", "CP"), ("CPT", "", "CPT")],
        "c" => &[("PT", "", "PT"), ("C", "", "C"), ("CPT", "", "CPT")],
        "d₁" => &[("PT", "", "PT"), ("CP", "IP", "P"), ("CT", "IT", "T")],
        "d₂" => &[("PT", "", "PT"), ("CP", "", "CP"), ("CT", "", "CT")],
        "e₁" => &[("T", "", "T"), ("C", "I", "1"), ("CT", "IT", "T")],
        "e₂" => &[("T", "", "T"), ("CP", "IP", "P"), ("CPT", "IPT", "PT")],
        "f₁" => &[("T", "", "T"), ("C", "C′", "C"), ("CT", "C′T", "CT")],
        _ => &[("T", "", "T"), ("CP", "C′P", "CP"), ("CPT", "C′PT", "CPT")],
    }
}

/// Class a₁…f₂ of the quotient algebra.
pub fn quotient_class(ctx: &EpsilonContext) -> Result<QuotientClass> {
    let ctx = &if ctx.complex_like() { complex_view(ctx)? } else { ctx.clone() };
    let t = ctx.mod8();
    let label = if ctx.complex_like() {
        match (ctx.sig.n() % 4, t) {
            (1, 1) => "a₁",
            (1, 5) => "a₂",
            (1, _) => "b",
            (_, 1) => "d₁",
            (_, 5) => "d₂",
            _ => "c",
        }
    } else {
        match (t, ctx.sig.q % 2 == 0) {
            (1, true) => "e₁",
            (1, false) => "e₂",
            (_, true) => "f₁",
            (_, false) => "f₂",
        }
    };
    let rows = class_rows(label);
    let surviving =
        rows.iter().map(|(s, eq, _)| if eq.is_empty() { s.to_string() } else { format!("{}∼{}", s, eq) }).collect();
    let mut reduced: Vec<&'static str> = vec![];
    for (_, _, r) in rows {
        if *r != "1" && !reduced.contains(r) {
            reduced.push(r);
        }
    }
    reduced.sort_by_key(|s| symbol_bits(s));
    Ok(QuotientClass { label, surviving, reduced })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientGroup {
    pub class: String,
    pub label: String,
    pub targets: Vec<String>,
    pub elements: Vec<&'static str>,
    pub is_group: bool,
    pub cayley: Option<Vec<Vec<&'static str>>>,
    pub group_name: Option<String>,
}

/// Cayley table of a set of symmetries under composition, or None when
/// the set is not closed.
pub fn cayley_table(elements: &[&'static str]) -> Option<Vec<Vec<&'static str>>> {
    let bits: Vec<u8> = elements.iter().map(|s| symbol_bits(s)).collect();
    let mut out = vec![];
    for &a in &bits {
        let mut row = vec![];
        for &b in &bits {
            let c = a ^ b;
            if !bits.contains(&c) {
                return None;
            }
            row.push(bits_symbol(c));
        }
        out.push(row);
    }
    Some(out)
}

/// Quotient covering pin^{…} with its finite group.
pub fn quotient_group(ctx: &EpsilonContext) -> Result<QuotientGroup> {
    let cls = quotient_class(ctx)?;
    let letters: String = {
        let mut v: Vec<char> = cls.reduced.iter().map(|s| symbol_letter(s)).collect();
        v.sort();
        v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    };
    let label = if cls.reduced.len() == 1 { format!("pin^{}", letters) } else { format!("pin^{{{}}}", letters) };
    let mut elements = vec!["1"];
    elements.extend(cls.reduced.iter().copied());
    let cayley = cayley_table(&elements);
    let group_name = cayley.as_ref().map(|_| {
        let names: Vec<String> = elements.iter().map(|s| s.to_string()).collect();
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| elements.iter().position(|c| symbol_bits(c) == symbol_bits(a) ^ symbol_bits(b)).unwrap())
                    .collect()
            })
            .collect();
        let g = crate::groups::GroupTable { elements: names, table, neutral: 0 };
        crate::groups::identify_small_group(&g).unwrap_or_else(|_| "?".into())
    });
    let mut tnames = vec![];
    for t in targets(ctx) {
        tnames.push(target_signature(ctx, t)?.to_string());
    }
    Ok(QuotientGroup {
        class: cls.label.into(),
        label,
        targets: tnames,
        is_group: cayley.is_some(),
        elements,
        cayley,
        group_name,
    })
}

/// Printed covering label for each quotient class.
pub fn stated_quotient_label(class: &str) -> &'static str {
    match class {
        "a₁" | "e₁" => "pin^b",
        "a₂" => "pin^{b,d}",
        "b" | "f₂" => "pin^{b,e,g}",
        "c" => "pin^{c,d,g}",
        "d₁" | "e₂" => "pin^{a,b,c}",
        "d₂" => "pin^{c,e,f}",
        _ => "pin^{b,d,f}",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotents_cl_3_0() {
        let ctx = EpsilonContext::new(SignatureSpec::real(3, 0)).unwrap();
        assert_eq!(ctx.eps_label(), "i");
        let (lp, lm) = central_idempotents(&ctx).unwrap();
        assert_eq!(lp.mul(&lp).unwrap(), lp);
        assert!(lp.mul(&lm).unwrap().is_zero());
    }

    #[test]
    fn even_target_is_homomorphism() {
        let sig = SignatureSpec::real(2, 1);
        let ctx = EpsilonContext::new(sig).unwrap();
        assert_eq!(target_signature(&ctx, QuotientTarget::Even).unwrap(), SignatureSpec::real(1, 1));
        for a in 0..8u32 {
            for b in 0..8u32 {
                let x = MultiVector::blade(sig, Blade(a), GaussianScalar::one());
                let y = MultiVector::blade(sig, Blade(b), GaussianScalar::one());
                let lhs = epsilon_map(&x.mul(&y).unwrap(), &ctx, QuotientTarget::Even).unwrap();
                let rhs = epsilon_map(&x, &ctx, QuotientTarget::Even)
                    .unwrap()
                    .mul(&epsilon_map(&y, &ctx, QuotientTarget::Even).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn class_a1() {
        let ctx = EpsilonContext::new(SignatureSpec::complex_marked(3, 2)).unwrap();
        assert_eq!(quotient_class(&ctx).unwrap().label, "a₁");
        let g = quotient_group(&ctx).unwrap();
        assert_eq!(g.label, "pin^b");
        assert_eq!(g.group_name.as_deref(), Some("Z2"));
    }
}
