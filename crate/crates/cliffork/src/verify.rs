//! Verification suites. Each runs exact checks and keeps a bounded list
//! of counterexamples.

use std::time::Instant;

use serde::Serialize;

use crate::algebra::{center, volume_square, Automorphism, Blade, CenterKind, Field, MultiVector, SignatureSpec};
use crate::classification::{division_ring, periodic_table, Ring, TableKind};
use crate::error::{Error, Result};
use crate::ext::{
    classify_ext_group, classify_signed_set, dirac_cpt_set, enumerate_signatures, ext_group_matrices, masks_commute,
    parse_table, pi_bar_product, rule_commutes, rule_square, signature_of, signature_vector, signed_table,
    sweep_instances, unit_word, ExtClass, ExtGroupMatrices, CPT_NAMES, F, K, NAMES, PI, S,
};
use crate::groups::vee_factor_check;
use crate::par;
use crate::quotient::{
    central_idempotents, epsilon_map, quotient_class, quotient_group, stated_quotient_label, targets, transfer_report,
    EpsilonContext,
};
use crate::reference;
use crate::scalar::GaussianScalar;
use crate::spinor::{build_variant, gamma_basis, SpinBasis};

/// Counterexamples kept per suite.
pub const MAX_COUNTEREXAMPLES: usize = 25;

pub const SUITES: [&str; 10] =
    ["tables", "gamma", "dirac", "pseudo", "conditions", "commutation", "census", "vee", "quotient", "core"];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub id: usize,
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: usize,
    pub counterexamples: Vec<String>,
    pub notes: Vec<String>,
    pub millis: u128,
}

struct Tally {
    checked: usize,
    failures: usize,
    examples: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failures: 0, examples: vec![], notes: vec![] }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_COUNTEREXAMPLES {
                self.examples.push(what());
            }
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(self, id: usize, start: Instant) -> SuiteReport {
        SuiteReport {
            id,
            name: SUITES[id - 1].into(),
            passed: self.failures == 0,
            checked: self.checked,
            failures: self.failures,
            counterexamples: self.examples,
            notes: self.notes,
            millis: start.elapsed().as_millis(),
        }
    }
}

pub fn suite_id(name: &str) -> Result<usize> {
    SUITES
        .iter()
        .position(|s| *s == name)
        .map(|i| i + 1)
        .or_else(|| name.parse().ok().filter(|i| (1..=10).contains(i)))
        .ok_or_else(|| Error::Parse(format!("unknown suite '{}'", name)))
}

pub fn run_suite(id: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let t = match id {
        1 => tables()?,
        2 => gamma_suite()?,
        3 => dirac_suite()?,
        4 => pseudo()?,
        5 => conditions()?,
        6 => commutation()?,
        7 => census()?,
        8 => vee()?,
        9 => quotient()?,
        10 => core()?,
        _ => return Err(Error::Parse(format!("suite {} out of range", id))),
    };
    Ok(t.finish(id, start))
}

pub fn run_all() -> Result<Vec<SuiteReport>> {
    (1..=10).map(run_suite).collect()
}

fn tables() -> Result<Tally> {
    let mut t = Tally::new();
    for (kind, printed) in [
        (TableKind::Rings, &reference::RINGS),
        (TableKind::Salingaros, &reference::SALINGAROS),
        (TableKind::Representations, &reference::REPRESENTATIONS),
    ] {
        let tbl = periodic_table(7, 7, kind);
        for (q, row) in printed.iter().enumerate() {
            for (p, want) in row.iter().enumerate() {
                let got = &tbl.cell(p, q).expect("cell").label;
                t.check(got == want, || format!("{:?} ({},{}): got {} printed {}", kind, p, q, got, want));
            }
        }
    }
    Ok(t)
}

fn compare_tables(t: &mut Tally, names: &[&str; 8], got: &[Vec<(usize, i8)>], printed: &[[&str; 8]; 8]) -> Result<()> {
    let want = parse_table(names, printed)?;
    let show = |(k, s): (usize, i8)| format!("{}{}", if s < 0 { "-" } else { "" }, names[k]);
    for i in 0..8 {
        for j in 0..8 {
            t.check(got[i][j] == want[i][j], || {
                format!("{}·{}: computed {} printed {}", names[i], names[j], show(got[i][j]), show(want[i][j]))
            });
        }
    }
    Ok(())
}

/// Units of the extended group for the bundled γ basis.
pub const GAMMA_WORDS: [&str; 7] = ["γ0γ1γ2γ3", "γ1γ3", "γ0γ2", "γ0γ1γ3", "γ2", "γ0", "γ1γ2γ3"];

#[allow(clippy::needless_range_loop)]
fn gamma_suite() -> Result<Tally> {
    let mut t = Tally::new();
    let b = gamma_basis();
    let ext = ext_group_matrices(&b)?;
    for j in 1..8 {
        let w = unit_word(&b, ext.masks[j], 1);
        t.check(w == GAMMA_WORDS[j - 1], || format!("{} = {} expected {}", NAMES[j], w, GAMMA_WORDS[j - 1]));
        if ext.signs[j] < 0 {
            t.note(format!("{} = −{}", NAMES[j], w));
        }
    }
    let sv = signature_vector(&ext)?;
    t.check(sv.to_string() == "(-,-,+,-,-,+,+)", || format!("signature {}", sv));
    let cls = classify_ext_group(&ext)?;
    t.check(cls.class == ExtClass::StarZ4Z2, || format!("class {}", cls.class));
    t.check(cls.order_structure == (3, 4, 0), || format!("order structure {}", cls.order_structure_string()));
    t.note(format!("abstract group with −I: {}", cls.abstract_group));
    // compare with the representatives named by the words, signs dropped
    let mut reps = ext.mats.clone();
    for j in 1..8 {
        if ext.signs[j] < 0 {
            reps[j] = reps[j].neg();
        }
    }
    compare_tables(&mut t, &NAMES, &signed_table(&reps)?, &reference::GAMMA_B_TABLE)?;
    Ok(t)
}

fn dirac_suite() -> Result<Tally> {
    let mut t = Tally::new();
    let set = dirac_cpt_set(&gamma_basis());
    let cls = classify_signed_set(&set)?;
    t.check(!cls.abelian, || "abelian".into());
    t.check(cls.order_structure == (3, 4, 0), || format!("order structure {}", cls.order_structure_string()));
    let sv = signature_of(&set)?;
    t.check(sv.to_string() == "(+,-,-,+,-,-,+)", || format!("signature {}", sv));
    t.note(format!("class {}, abstract group with −1: {}", cls.class, cls.abstract_group));
    compare_tables(&mut t, &CPT_NAMES, &signed_table(&set)?, &reference::DIRAC_TABLE)?;
    Ok(t)
}

fn sweep_bases(n_max: usize, filter: impl Fn(&SignatureSpec) -> bool) -> Vec<(String, Result<SpinBasis>)> {
    let inst: Vec<_> = sweep_instances(n_max).into_iter().filter(|(s, _)| filter(s)).collect();
    par::map(&inst, |(sig, v)| (format!("{} {:?}", sig, v), build_variant(sig, *v)))
}

fn pseudo() -> Result<Tally> {
    let mut t = Tally::new();
    let bases = sweep_bases(8, |s| division_ring(s).ring == Ring::H);
    let rows = par::map(&bases, |(label, b)| {
        let b = b.as_ref().map_err(|e| e.to_string())?;
        let n = b.n();
        let ext = ext_group_matrices(b).map_err(|e| e.to_string())?;
        let pi = &ext.mats[PI];
        let cond = (0..n).all(|i| b.mats[i].mul(pi) == pi.mul(&b.mats[i].conj()));
        let r = pi_bar_product(b).map_err(|e| e.to_string())?;
        Ok::<_, String>((label.clone(), cond, r, b.counts))
    });
    for row in rows {
        match row {
            Err(e) => t.check(false, || e),
            Ok((label, cond, r, c)) => {
                t.check(cond, || format!("{}: ℰΠ ≠ ΠĖ", label));
                t.check(r.agrees(), || {
                    format!("{} (a={}, b={}): ΠΠ̇ = {:?}·I, rule gives {:?}", label, c.a, c.b, r.actual, r.predicted)
                });
            }
        }
    }
    Ok(t)
}

type ExtOutcome = std::result::Result<(SpinBasis, ExtGroupMatrices), String>;

fn sweep_ext(n_max: usize) -> Vec<(String, ExtOutcome)> {
    let bases = sweep_bases(n_max, |_| true);
    par::map(&bases, |(label, b)| {
        let r = b
            .as_ref()
            .map_err(|e| e.to_string())
            .and_then(|b| ext_group_matrices(b).map(|e| (b.clone(), e)).map_err(|e| e.to_string()));
        (label.clone(), r)
    })
}

fn conditions() -> Result<Tally> {
    let mut t = Tally::new();
    for (label, r) in sweep_ext(8) {
        let (b, ext) = match r {
            Ok(x) => x,
            Err(e) => {
                t.check(false, || format!("{}: {}", label, e));
                continue;
            }
        };
        let n = b.n();
        let (k, s, f) = (&ext.mats[K], &ext.mats[S], &ext.mats[F]);
        for i in 0..n {
            let e = &b.mats[i];
            let ed = e.conj();
            t.check(e.mul(k).neg() == k.mul(&ed), || format!("{}: −ℰ{}K ≠ KĖ{}", label, i + 1, i + 1));
            t.check(e.mul(s) == s.mul(&ed.transpose()), || format!("{}: ℰ{}S ≠ SĖ{}ᵀ", label, i + 1, i + 1));
            t.check(e.mul(f).neg() == f.mul(&ed.transpose()), || format!("{}: −ℰ{}F ≠ FĖ{}ᵀ", label, i + 1, i + 1));
        }
        let sv = signature_vector(&ext)?;
        for which in [K, S, F] {
            if let Some(pred) = rule_square(which, &b.counts, &ext.forms) {
                let got = sv.0[which - 1];
                t.check(pred == got, || {
                    format!("{}: {}² = {} but the parity rule gives {} ({})", label, NAMES[which], got, pred, ext.forms)
                });
            }
        }
    }
    Ok(t)
}

#[allow(clippy::needless_range_loop)]
fn commutation() -> Result<Tally> {
    let mut t = Tally::new();
    for (label, r) in sweep_ext(8) {
        let (b, ext) = match r {
            Ok(x) => x,
            Err(e) => {
                t.check(false, || format!("{}: {}", label, e));
                continue;
            }
        };
        for x in 1..8 {
            for y in x + 1..8 {
                let actual = ext.mats[x].commutes_with(&ext.mats[y]);
                let by_mask = masks_commute(ext.masks[x], ext.masks[y]);
                t.check(actual == by_mask, || format!("{}: mask rule fails for {}{}", label, NAMES[x], NAMES[y]));
                let pred = rule_commutes(x, y, &b.counts, &ext.forms);
                t.check(pred == actual, || {
                    let c = b.counts;
                    format!(
                        "{} (l={} m={} u={} v={}, {}): {} and {} {} but the parity rule says they {}",
                        label,
                        c.l,
                        c.m,
                        c.u,
                        c.v,
                        ext.forms,
                        NAMES[x],
                        NAMES[y],
                        if actual { "commute" } else { "anticommute" },
                        if pred { "commute" } else { "anticommute" }
                    )
                });
            }
        }
    }
    Ok(t)
}

fn census() -> Result<Tally> {
    let mut t = Tally::new();
    let c = enumerate_signatures(8)?;
    for f in &c.failures {
        t.check(false, || f.clone());
    }
    for s in &c.inadmissible {
        t.check(false, || format!("inadmissible signature {}", s));
    }
    t.check(c.distinct() <= 64, || format!("{} distinct signatures", c.distinct()));
    t.checked += c.instances;
    t.note(format!("{} instances, {} distinct signatures realized", c.instances, c.distinct()));
    Ok(t)
}

fn vee() -> Result<Tally> {
    let mut t = Tally::new();
    let sigs: Vec<SignatureSpec> = (0..=6).flat_map(|n| (0..=n).map(move |p| SignatureSpec::real(p, n - p))).collect();
    for r in par::map(&sigs, vee_factor_check) {
        let r = r?;
        t.check(r.passed, || {
            format!(
                "{}: |G/Z| = {} expected {}, elementary abelian {}, center {} expected {}",
                r.sig, r.factor_order, r.expected_factor_order, r.elementary_abelian, r.center_type, r.expected_center
            )
        });
    }
    Ok(t)
}

fn blade_mv(sig: SignatureSpec, b: u32) -> MultiVector {
    MultiVector::blade(sig, Blade(b), GaussianScalar::one())
}

fn odd_contexts(n_max: usize) -> Vec<SignatureSpec> {
    let mut v = vec![];
    for n in (1..=n_max).step_by(2) {
        for p in 0..=n {
            v.push(SignatureSpec::real(p, n - p));
            v.push(SignatureSpec::complex_marked(p, n - p));
        }
    }
    v
}

fn quotient() -> Result<Tally> {
    let mut t = Tally::new();
    for sig in odd_contexts(7) {
        let ctx = EpsilonContext::new(sig)?;
        match central_idempotents(&ctx) {
            Err(e) => t.check(false, || format!("{}: {}", sig, e)),
            Ok((lp, lm)) => {
                let one = MultiVector::one(sig);
                t.check(lp.mul(&lp)? == lp, || format!("{}: λ+² ≠ λ+", sig));
                t.check(lm.mul(&lm)? == lm, || format!("{}: λ−² ≠ λ−", sig));
                t.check(lp.mul(&lm)?.is_zero(), || format!("{}: λ+λ− ≠ 0", sig));
                t.check(lp.add(&lm)? == one, || format!("{}: λ+ + λ− ≠ 1", sig));
            }
        }
        let rep = transfer_report(&ctx)?;
        for row in &rep.rows {
            t.check(row.predicted == row.direct, || {
                format!(
                    "{} (ε = {}): {} {} by the rule, direct test on εω says {}",
                    sig,
                    rep.eps,
                    row.symbol,
                    if row.predicted { "transfers" } else { "does not transfer" },
                    row.direct
                )
            });
        }
        let cls = quotient_class(&ctx)?;
        let g = quotient_group(&ctx)?;
        let stated = stated_quotient_label(cls.label);
        t.check(g.label == stated, || format!("{} class {}: {} vs stated {}", sig, cls.label, g.label, stated));
        if !g.is_group {
            t.note(format!("{} class {}: {{{}}} does not form a group", sig, cls.label, g.elements.join(",")));
        }
    }
    let homs: Vec<SignatureSpec> = odd_contexts(5);
    let results = par::map(&homs, |&sig| epsilon_checks(sig));
    for r in results {
        for msg in r? {
            t.check(msg.is_none(), || msg.unwrap_or_default());
        }
    }
    Ok(t)
}

/// Homomorphism, kernel and surjectivity of ε for every target.
fn epsilon_checks(sig: SignatureSpec) -> Result<Vec<Option<String>>> {
    let ctx = EpsilonContext::new(sig)?;
    let d = sig.dim() as u32;
    let mut out = vec![];
    for tgt in targets(&ctx) {
        let images: Vec<MultiVector> =
            (0..d).map(|a| epsilon_map(&blade_mv(sig, a), &ctx, tgt)).collect::<Result<_>>()?;
        for a in 0..d {
            for b in 0..d {
                let prod = blade_mv(sig, a).mul(&blade_mv(sig, b))?;
                let lhs = epsilon_map(&prod, &ctx, tgt)?;
                let rhs = images[a as usize].mul(&images[b as usize])?;
                out.push((lhs != rhs).then(|| format!("{} {:?}: ε(e{}·e{}) ≠ ε·ε", sig, tgt, a, b)));
            }
            let x = blade_mv(sig, a);
            let k = x.sub(&ctx.eps_omega.mul(&x)?)?;
            let img = epsilon_map(&k, &ctx, tgt)?;
            out.push((!img.is_zero()).then(|| format!("{} {:?}: ε(x − εωx) ≠ 0 for blade {}", sig, tgt, a)));
        }
        let tsig = *images[0].sig();
        let mut hit = vec![false; tsig.dim()];
        for im in &images {
            if im.len() == 1 {
                let (b, _) = im.terms().next().expect("one term");
                hit[b.0 as usize] = true;
            }
        }
        out.push(hit.iter().any(|h| !h).then(|| format!("{} {:?}: image misses target blades", sig, tgt)));
        let unit = epsilon_map(&ctx.eps_omega, &ctx, tgt)?;
        out.push((unit != MultiVector::one(tsig)).then(|| format!("{} {:?}: εω does not map to 1", sig, tgt)));
    }
    Ok(out)
}

fn core_sigs() -> Vec<SignatureSpec> {
    let mut v = vec![];
    for n in 0..=6 {
        for p in 0..=n {
            v.push(SignatureSpec::real(p, n - p));
            v.push(SignatureSpec::complex_marked(p, n - p));
        }
    }
    v
}

/// Product of the generators of a blade taken in the given order.
fn ordered_product(sig: SignatureSpec, idx: &[usize], neg: bool) -> Result<MultiVector> {
    let mut x = MultiVector::one(sig);
    for &i in idx {
        let g = MultiVector::generator(sig, i + 1)?;
        x = x.mul(&if neg { g.neg() } else { g })?;
    }
    Ok(x)
}

fn core_one(sig: SignatureSpec) -> Result<Vec<Option<String>>> {
    let d = sig.dim() as u32;
    let n = sig.n();
    let mut out = vec![];
    let mut push = |ok: bool, msg: &dyn Fn() -> String| out.push((!ok).then(msg));
    for a in 0..d {
        let x = blade_mv(sig, a);
        let idx: Vec<usize> = (0..n).filter(|k| a >> k & 1 == 1).collect();
        let rev: Vec<usize> = idx.iter().rev().copied().collect();
        push(x.involution() == ordered_product(sig, &idx, true)?, &|| format!("{}: involution of blade {}", sig, a));
        push(x.reversion() == ordered_product(sig, &rev, false)?, &|| format!("{}: reversion of blade {}", sig, a));
        push(x.conjugation() == ordered_product(sig, &rev, true)?, &|| format!("{}: conjugation of blade {}", sig, a));
        if n.is_multiple_of(2) {
            push(x.involution_by_omega()? == x.involution(), &|| format!("{}: ωxω⁻¹ ≠ x* for blade {}", sig, a));
        }
    }
    let c = GaussianScalar::from_ints(2, 3);
    for a in 0..d {
        let x = blade_mv(sig, a).scale(c);
        for b in 0..d {
            let y = blade_mv(sig, b).scale(GaussianScalar::from_ints(1, -1));
            let xy = x.mul(&y)?;
            push(xy.involution() == x.involution().mul(&y.involution())?, &|| format!("{}: (xy)* at {},{}", sig, a, b));
            push(xy.reversion() == y.reversion().mul(&x.reversion())?, &|| format!("{}: (xy)~ at {},{}", sig, a, b));
            push(xy.conjugation() == y.conjugation().mul(&x.conjugation())?, &|| {
                format!("{}: (xy)~* at {},{}", sig, a, b)
            });
            push(xy.pseudo_conjugation() == x.pseudo_conjugation().mul(&y.pseudo_conjugation())?, &|| {
                format!("{}: bar(xy) at {},{}", sig, a, b)
            });
        }
    }
    let w = MultiVector::volume(sig);
    let w2 = w.mul(&w)?;
    push(w2 == MultiVector::scalar(sig, GaussianScalar::sign(volume_square(&sig))), &|| format!("{}: ω² law", sig));
    let central = (1..=n).all(|i| {
        let e = MultiVector::generator(sig, i).expect("generator");
        w.mul(&e).expect("mul") == e.mul(&w).expect("mul")
    });
    let expect_central = center(&sig) == CenterKind::UnitAndOmega || n == 0;
    push(central == expect_central, &|| format!("{}: ω central = {}", sig, central));
    if sig.field == Field::Complex {
        // the marked real basis is fixed by bar
        for i in 1..=n {
            let mut g = MultiVector::generator(sig, i)?;
            if i > sig.p {
                g = g.scale(GaussianScalar::i());
            }
            push(g.apply(Automorphism::Pseudo) == g, &|| format!("{}: marked unit {} not fixed", sig, i));
        }
    }
    Ok(out)
}

fn core() -> Result<Tally> {
    let mut t = Tally::new();
    let sigs = core_sigs();
    for r in par::map(&sigs, |&s| core_one(s)) {
        for msg in r? {
            t.check(msg.is_none(), || msg.unwrap_or_default());
        }
    }
    Ok(t)
}

/// One line per suite.
pub fn summary_line(r: &SuiteReport) -> String {
    format!(
        "criterion {:>2} {:<12} {} checked={} failures={} ({} ms)",
        r.id,
        r.name,
        if r.passed { "PASS" } else { "FAIL" },
        r.checked,
        r.failures,
        r.millis
    )
}
