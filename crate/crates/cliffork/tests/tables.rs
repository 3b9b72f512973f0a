use cliffork::classification::{division_ring, periodic_table, TableKind};
use cliffork::reference::{QUOTIENT, REPRESENTATIONS, RINGS, SALINGAROS};
use cliffork::SignatureSpec;

fn assert_matches(kind: TableKind, printed: &[[&str; 8]; 8]) {
    let t = periodic_table(7, 7, kind);
    for (q, row) in printed.iter().enumerate() {
        for (p, want) in row.iter().enumerate() {
            let got = &t.cell(p, q).expect("cell").label;
            assert_eq!(got, want, "{:?} at p={} q={}", kind, p, q);
        }
    }
}

#[test]
fn rings_table_matches_print() {
    assert_matches(TableKind::Rings, &RINGS);
}

#[test]
fn salingaros_table_matches_print() {
    assert_matches(TableKind::Salingaros, &SALINGAROS);
}

#[test]
fn representation_table_matches_print() {
    assert_matches(TableKind::Representations, &REPRESENTATIONS);
}

#[test]
fn quotient_table_matches_print() {
    assert_matches(TableKind::Quotient, &QUOTIENT);
}

/// Real dimension of a label like "²ℍ(4)".
fn label_dim(label: &str) -> usize {
    let double = label.starts_with('²');
    let body = label.trim_start_matches('²');
    let mut chars = body.chars();
    let d = match chars.next() {
        Some('ℝ') => 1,
        Some('ℂ') => 2,
        Some('ℍ') => 4,
        other => panic!("ring letter {:?}", other),
    };
    let rest: String = chars.collect();
    let m: usize = rest.trim_matches(|c| c == '(' || c == ')').parse().unwrap_or(1);
    d * m * m * if double { 2 } else { 1 }
}

fn omega_square(p: usize, q: usize) -> i8 {
    let n = p + q;
    let s = (n * (n - 1) / 2 + q) % 2;
    if s == 0 {
        1
    } else {
        -1
    }
}

#[test]
fn ring_labels_have_algebra_dimension() {
    for p in 0..8 {
        for q in 0..8 {
            let c = division_ring(&SignatureSpec::real(p, q));
            assert_eq!(label_dim(&c.label()), 1 << (p + q), "Cl({},{})", p, q);
        }
    }
}

#[test]
fn odd_dimension_center_decides_ring() {
    for p in 0..8 {
        for q in 0..8 {
            if (p + q) % 2 == 0 {
                continue;
            }
            let l = division_ring(&SignatureSpec::real(p, q)).label();
            if omega_square(p, q) > 0 {
                assert!(l.starts_with('²'), "Cl({},{}) = {}", p, q, l);
            } else {
                assert!(l.starts_with('ℂ'), "Cl({},{}) = {}", p, q, l);
            }
        }
    }
}
