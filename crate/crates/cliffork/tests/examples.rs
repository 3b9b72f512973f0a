use cliffork::ext::{
    classify_ext_group, classify_signed_set, dirac_cpt_set, ext_group_matrices, parse_table, signature_of,
    signature_vector, signed_table, unit_word, ExtClass, CPT_NAMES, NAMES,
};
use cliffork::reference::{DIRAC_TABLE, GAMMA_B_TABLE};
use cliffork::spinor::gamma_basis;
use cliffork::SpinMatrix;

fn diff_cells(computed: &[Vec<(usize, i8)>], printed: &[Vec<(usize, i8)>]) -> Vec<(usize, usize)> {
    let mut out = vec![];
    for i in 0..8 {
        for j in 0..8 {
            if computed[i][j] != printed[i][j] {
                out.push((i, j));
            }
        }
    }
    out
}

#[test]
fn gamma_basis_is_spacetime() {
    let b = gamma_basis();
    assert_eq!((b.sig.p, b.sig.q), (1, 3));
    let sq: Vec<_> = b.mats.iter().map(|g| g.mul(g).as_sign()).collect();
    assert_eq!(sq, vec![Some(1), Some(-1), Some(-1), Some(-1)]);
}

#[test]
fn gamma_units_and_signature() {
    let b = gamma_basis();
    let ext = ext_group_matrices(&b).unwrap();
    let words: Vec<String> = (1..8).map(|j| unit_word(&b, ext.masks[j], 1)).collect();
    assert_eq!(words, ["γ0γ1γ2γ3", "γ1γ3", "γ0γ2", "γ0γ1γ3", "γ2", "γ0", "γ1γ2γ3"]);
    assert_eq!(signature_vector(&ext).unwrap().to_string(), "(-,-,+,-,-,+,+)");
    let cls = classify_ext_group(&ext).unwrap();
    assert_eq!(cls.class, ExtClass::StarZ4Z2);
    assert!(!cls.abelian);
    assert_eq!(cls.order_structure, (3, 4, 0));
}

#[test]
fn gamma_table_has_one_misprinted_cell() {
    let ext = ext_group_matrices(&gamma_basis()).unwrap();
    let reps: Vec<SpinMatrix> =
        (0..8).map(|j| if ext.signs[j] < 0 { ext.mats[j].neg() } else { ext.mats[j].clone() }).collect();
    let reps: [SpinMatrix; 8] = reps.try_into().unwrap();
    let computed = signed_table(&reps).unwrap();
    let printed = parse_table(&NAMES, &GAMMA_B_TABLE).unwrap();
    let d = diff_cells(&computed, &printed);
    assert_eq!(d, vec![(1, 3)]);
    // W·C = −E, not −Π
    assert_eq!(computed[1][3], (2, -1));
}

#[test]
fn dirac_set() {
    let set = dirac_cpt_set(&gamma_basis());
    let cls = classify_signed_set(&set).unwrap();
    assert!(!cls.abelian);
    assert_eq!(cls.order_structure, (3, 4, 0));
    assert_eq!(signature_of(&set).unwrap().to_string(), "(+,-,-,+,-,-,+)");
    let computed = signed_table(&set).unwrap();
    let printed = parse_table(&CPT_NAMES, &DIRAC_TABLE).unwrap();
    // CT·PT = −CP
    assert_eq!(diff_cells(&computed, &printed), vec![(6, 3)]);
    assert_eq!(computed[6][3], (5, -1));
}
