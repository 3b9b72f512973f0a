//! Mod-8 structure: division rings, Radon-Hurwitz numbers, primitive
//! idempotents, Salingaros labels and the periodic tables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{blade_mul_bits, Blade, MultiVector, SignatureSpec};
use crate::error::{Error, Result};
use crate::scalar::GaussianScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    R,
    C,
    H,
    /// R ⊕ R
    RR,
    /// H ⊕ H
    HH,
}

impl Ring {
    pub fn from_mod8(t: u32) -> Ring {
        match t % 8 {
            0 | 2 => Ring::R,
            3 | 7 => Ring::C,
            4 | 6 => Ring::H,
            1 => Ring::RR,
            _ => Ring::HH,
        }
    }

    fn letter(&self) -> &'static str {
        match self {
            Ring::R | Ring::RR => "ℝ",
            Ring::C => "ℂ",
            Ring::H | Ring::HH => "ℍ",
        }
    }

    pub fn is_double(&self) -> bool {
        matches!(self, Ring::RR | Ring::HH)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_double() {
            write!(f, "²")?;
        }
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraClass {
    pub mod8: u32,
    pub ring: Ring,
    pub simple: bool,
    /// Complex spinor dimension 2^m, m = floor(n/2).
    pub matrix_dim: usize,
    /// Size of the matrices over the division ring, as printed in the
    /// periodic table (per summand for the doubled rings).
    pub ring_matrix_size: usize,
}

impl AlgebraClass {
    /// Periodic-table label such as `ℍ(2)` or `²ℝ`.
    pub fn label(&self) -> String {
        if self.ring_matrix_size == 1 {
            self.ring.to_string()
        } else {
            format!("{}({})", self.ring, self.ring_matrix_size)
        }
    }
}

pub fn division_ring(sig: &SignatureSpec) -> AlgebraClass {
    let mod8 = sig.mod8();
    let ring = Ring::from_mod8(mod8);
    let n = sig.n() as u32;
    let exp = match ring {
        Ring::R => n / 2,
        Ring::C | Ring::RR => (n - 1) / 2,
        Ring::H => (n - 2) / 2,
        Ring::HH => (n - 3) / 2,
    };
    AlgebraClass { mod8, ring, simple: !ring.is_double(), matrix_dim: 1 << (n / 2), ring_matrix_size: 1 << exp }
}

const RH_BASE: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];

/// Radon-Hurwitz number r_i for i >= 0.
pub fn radon_hurwitz(i: i64) -> Result<i64> {
    if i < 0 {
        return Err(Error::NegativeArgument(i));
    }
    Ok(radon_hurwitz_ext(i))
}

/// r_i extended to all integers by r_{i-8} = r_i - 4.
pub fn radon_hurwitz_ext(i: i64) -> i64 {
    RH_BASE[i.rem_euclid(8) as usize] + 4 * i.div_euclid(8)
}

/// k = q - r_{q-p}: number of commuting factors of a primitive idempotent.
pub fn idempotent_factor_count(sig: &SignatureSpec) -> i64 {
    let (p, q) = (sig.p as i64, sig.q as i64);
    q - radon_hurwitz_ext(q - p)
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimitiveIdempotent {
    pub generators: Vec<Blade>,
    pub f: MultiVector,
}

fn independent(basis: &mut Vec<u32>, v: u32) -> bool {
    // xor basis over GF(2), kept sorted in decreasing order
    let x = basis.iter().fold(v, |x, &b| x.min(x ^ b));
    if x == 0 {
        return false;
    }
    basis.push(x);
    basis.sort_unstable_by(|a, b| b.cmp(a));
    true
}

/// f = ∏ (1 + e_α)/2 over k greedily chosen commuting blades with square +1.
pub fn primitive_idempotent(sig: &SignatureSpec) -> Result<PrimitiveIdempotent> {
    let cls = division_ring(sig);
    if !cls.simple {
        return Err(Error::UnsupportedType { mod8: cls.mod8, what: "primitive idempotent".into() });
    }
    let k = idempotent_factor_count(sig);
    let mut blades: Vec<Blade> = (1..sig.dim() as u32).map(Blade).collect();
    blades.sort();
    let mut chosen: Vec<Blade> = Vec::new();
    let mut span: Vec<u32> = Vec::new();
    for b in blades {
        if chosen.len() as i64 >= k {
            break;
        }
        let (_, sq) = blade_mul_bits(b.0, b.0, sig);
        if sq != 1 {
            continue;
        }
        let commutes = chosen.iter().all(|c| blade_mul_bits(b.0, c.0, sig).1 == blade_mul_bits(c.0, b.0, sig).1);
        if !commutes {
            continue;
        }
        let mut trial = span.clone();
        if independent(&mut trial, b.0) {
            span = trial;
            chosen.push(b);
        }
    }
    if (chosen.len() as i64) < k {
        return Err(Error::NoIdempotentFamily);
    }
    let mut f = MultiVector::one(*sig);
    for b in &chosen {
        let factor =
            MultiVector::from_terms(*sig, [(Blade::UNIT, GaussianScalar::half()), (*b, GaussianScalar::half())])?;
        f = f.mul(&factor)?;
    }
    Ok(PrimitiveIdempotent { generators: chosen, f })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SalingarosFamily {
    NOdd,
    NEven,
    OmegaOdd,
    OmegaEven,
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SalingarosLabel {
    pub family: SalingarosFamily,
    pub index: usize,
}

impl fmt::Display for SalingarosLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            SalingarosFamily::NOdd | SalingarosFamily::NEven => "N",
            SalingarosFamily::OmegaOdd | SalingarosFamily::OmegaEven => "Ω",
            SalingarosFamily::S => "S",
        };
        write!(f, "{}_{}", letter, self.index)
    }
}

pub fn salingaros_family(sig: &SignatureSpec) -> SalingarosFamily {
    match sig.mod8() {
        0 | 2 => SalingarosFamily::NOdd,
        4 | 6 => SalingarosFamily::NEven,
        1 => SalingarosFamily::OmegaOdd,
        5 => SalingarosFamily::OmegaEven,
        _ => SalingarosFamily::S,
    }
}

/// Salingaros label with the subscript derived from n and the family.
///
/// The printed table writes N_1 for Cl(0,0); this function returns the
/// derived value there and [`periodic_table`] applies the printed cell.
pub fn salingaros_type(sig: &SignatureSpec) -> SalingarosLabel {
    let n = sig.n();
    let family = salingaros_family(sig);
    let index = match family {
        SalingarosFamily::NOdd => n.saturating_sub(1),
        SalingarosFamily::NEven => n,
        SalingarosFamily::OmegaOdd => n.max(2) - 2,
        SalingarosFamily::OmegaEven => n - 1,
        SalingarosFamily::S => (n - 1) / 2,
    };
    SalingarosLabel { family, index }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CenterType {
    Z2,
    Z2xZ2,
    Z4,
}

impl fmt::Display for CenterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CenterType::Z2 => "Z2",
            CenterType::Z2xZ2 => "Z2⊗Z2",
            CenterType::Z4 => "Z4",
        })
    }
}

pub fn group_center_type(sig: &SignatureSpec) -> CenterType {
    match sig.mod8() {
        1 | 5 => CenterType::Z2xZ2,
        3 | 7 => CenterType::Z4,
        _ => CenterType::Z2,
    }
}

/// Real representation label of Pin(p,q) in the form `R^0_1`, `²H^4_2`.
pub fn representation_label(sig: &SignatureSpec, quotient: bool) -> String {
    let cls = division_ring(sig);
    let (letter, sup) = match cls.ring {
        Ring::R => ("R", cls.mod8),
        Ring::RR => ("R", 0),
        Ring::C => ("C", cls.mod8),
        Ring::H => ("H", cls.mod8),
        Ring::HH => ("H", 4),
    };
    let prefix = match (cls.ring.is_double(), quotient) {
        (false, _) => "",
        (true, false) => "²",
        (true, true) => "ε",
    };
    format!("{}{}^{}_{}", prefix, letter, sup, cls.ring_matrix_size / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableKind {
    Rings,
    Salingaros,
    Representations,
    Quotient,
}

impl std::str::FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rings" => Ok(TableKind::Rings),
            "salingaros" => Ok(TableKind::Salingaros),
            "representations" => Ok(TableKind::Representations),
            "quotient" => Ok(TableKind::Quotient),
            other => Err(Error::Parse(format!("unknown table kind '{}'", other))),
        }
    }
}

impl TableKind {
    pub fn title(&self) -> &'static str {
        match self {
            TableKind::Rings => "Distribution of the real Clifford algebras",
            TableKind::Salingaros => "Finite group structure of the real Clifford algebras",
            TableKind::Representations => "Real representations of Pin(p,q)",
            TableKind::Quotient => "Quotient representations of Pin(p,q)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub p: usize,
    pub q: usize,
    pub label: String,
    /// True when the cell lies outside the printed 0..=7 range.
    pub derived: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicTable {
    pub kind: TableKind,
    pub p_max: usize,
    pub q_max: usize,
    /// Row-major by q, then p.
    pub cells: Vec<TableCell>,
}

pub fn table_cell(p: usize, q: usize, kind: TableKind) -> String {
    let sig = SignatureSpec::real(p, q);
    match kind {
        TableKind::Rings => division_ring(&sig).label(),
        TableKind::Salingaros => {
            if p == 0 && q == 0 {
                // printed as N_1 although the family rule gives N_{-1}
                "N_1".to_string()
            } else {
                salingaros_type(&sig).to_string()
            }
        }
        TableKind::Representations => representation_label(&sig, false),
        TableKind::Quotient => representation_label(&sig, true),
    }
}

pub fn periodic_table(p_max: usize, q_max: usize, kind: TableKind) -> PeriodicTable {
    let coords: Vec<(usize, usize)> = (0..=q_max).flat_map(|q| (0..=p_max).map(move |p| (p, q))).collect();
    let cells =
        crate::par::map(&coords, |&(p, q)| TableCell { p, q, label: table_cell(p, q, kind), derived: p > 7 || q > 7 });
    PeriodicTable { kind, p_max, q_max, cells }
}

impl PeriodicTable {
    pub fn cell(&self, p: usize, q: usize) -> Option<&TableCell> {
        if p > self.p_max || q > self.q_max {
            return None;
        }
        self.cells.get(q * (self.p_max + 1) + p)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("**{}**\n\n| q\\p |", self.kind.title());
        for p in 0..=self.p_max {
            out.push_str(&format!(" {} |", p));
        }
        out.push_str("\n|---|");
        for _ in 0..=self.p_max {
            out.push_str("---|");
        }
        out.push('\n');
        for q in 0..=self.q_max {
            out.push_str(&format!("| {} |", q));
            for p in 0..=self.p_max {
                let c = self.cell(p, q).expect("cell in range");
                let mark = if c.derived { "*" } else { "" };
                out.push_str(&format!(" {}{} |", c.label, mark));
            }
            out.push('\n');
        }
        if self.cells.iter().any(|c| c.derived) {
            out.push_str("\n`*` derived outside the printed range\n");
        }
        out
    }

    /// JSON object with cells keyed "p,q".
    pub fn to_json(&self) -> serde_json::Value {
        let mut cells = serde_json::Map::new();
        for c in &self.cells {
            cells.insert(format!("{},{}", c.p, c.q), serde_json::json!({ "label": c.label, "derived": c.derived }));
        }
        serde_json::json!({
            "kind": self.kind,
            "title": self.kind.title(),
            "p_max": self.p_max,
            "q_max": self.q_max,
            "cells": cells,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rings_of_small_algebras() {
        assert_eq!(division_ring(&SignatureSpec::real(0, 2)).ring, Ring::H);
        assert_eq!(division_ring(&SignatureSpec::real(1, 0)).ring, Ring::RR);
        assert_eq!(division_ring(&SignatureSpec::real(0, 1)).ring, Ring::C);
        assert_eq!(table_cell(3, 1, TableKind::Rings), "ℝ(4)");
        assert_eq!(table_cell(1, 3, TableKind::Rings), "ℍ(2)");
        assert_eq!(table_cell(0, 0, TableKind::Rings), "ℝ");
        assert_eq!(table_cell(3, 0, TableKind::Salingaros), "S_1");
    }

    #[test]
    fn radon_hurwitz_values() {
        assert_eq!(radon_hurwitz(0).unwrap(), 0);
        assert_eq!(radon_hurwitz(4).unwrap(), 3);
        assert_eq!(radon_hurwitz(8).unwrap(), 4);
        assert!(radon_hurwitz(-1).is_err());
    }

    #[test]
    fn factor_counts() {
        assert_eq!(idempotent_factor_count(&SignatureSpec::real(8, 0)), 4);
        assert_eq!(idempotent_factor_count(&SignatureSpec::real(1, 3)), 1);
        assert_eq!(idempotent_factor_count(&SignatureSpec::real(0, 0)), 0);
        assert_eq!(idempotent_factor_count(&SignatureSpec::real(2, 0)), 1);
    }

    #[test]
    fn centers() {
        assert_eq!(group_center_type(&SignatureSpec::real(1, 0)), CenterType::Z2xZ2);
        assert_eq!(group_center_type(&SignatureSpec::real(0, 1)), CenterType::Z4);
        assert_eq!(group_center_type(&SignatureSpec::real(1, 3)), CenterType::Z2);
    }
}
