//! Printed periodic tables, rows q = 0..7, columns p = 0..7.

pub const RINGS: [[&str; 8]; 8] = [
    ["ℝ", "²ℝ", "ℝ(2)", "ℂ(2)", "ℍ(2)", "²ℍ(2)", "ℍ(4)", "ℂ(8)"],
    ["ℂ", "ℝ(2)", "²ℝ(2)", "ℝ(4)", "ℂ(4)", "ℍ(4)", "²ℍ(4)", "ℍ(8)"],
    ["ℍ", "ℂ(2)", "ℝ(4)", "²ℝ(4)", "ℝ(8)", "ℂ(8)", "ℍ(8)", "²ℍ(8)"],
    ["²ℍ", "ℍ(2)", "ℂ(4)", "ℝ(8)", "²ℝ(8)", "ℝ(16)", "ℂ(16)", "ℍ(16)"],
    ["ℍ(2)", "²ℍ(2)", "ℍ(4)", "ℂ(8)", "ℝ(16)", "²ℝ(16)", "ℝ(32)", "ℂ(32)"],
    ["ℂ(4)", "ℍ(4)", "²ℍ(4)", "ℍ(8)", "ℂ(16)", "ℝ(32)", "²ℝ(32)", "ℝ(64)"],
    ["ℝ(8)", "ℂ(8)", "ℍ(8)", "²ℍ(8)", "ℍ(16)", "ℂ(32)", "ℝ(64)", "²ℝ(64)"],
    ["²ℝ(8)", "ℝ(16)", "ℂ(16)", "ℍ(16)", "²ℍ(16)", "ℍ(32)", "ℂ(64)", "ℝ(128)"],
];

pub const SALINGAROS: [[&str; 8]; 8] = [
    ["N_1", "Ω_0", "N_1", "S_1", "N_4", "Ω_4", "N_6", "S_3"],
    ["S_0", "N_1", "Ω_1", "N_3", "S_2", "N_6", "Ω_6", "N_8"],
    ["N_2", "S_1", "N_3", "Ω_3", "N_5", "S_3", "N_8", "Ω_8"],
    ["Ω_2", "N_4", "S_2", "N_5", "Ω_5", "N_7", "S_4", "N_10"],
    ["N_4", "Ω_4", "N_6", "S_3", "N_7", "Ω_7", "N_9", "S_5"],
    ["S_2", "N_6", "Ω_6", "N_8", "S_4", "N_9", "Ω_9", "N_11"],
    ["N_5", "S_3", "N_8", "Ω_8", "N_10", "S_5", "N_11", "Ω_11"],
    ["Ω_5", "N_7", "S_4", "N_10", "Ω_10", "N_12", "S_6", "N_13"],
];

pub const REPRESENTATIONS: [[&str; 8]; 8] = [
    ["R^0_0", "²R^0_0", "R^2_1", "C^3_1", "H^4_1", "²H^4_1", "H^6_2", "C^7_4"],
    ["C^7_0", "R^0_1", "²R^0_1", "R^2_2", "C^3_2", "H^4_2", "²H^4_2", "H^6_4"],
    ["H^6_0", "C^7_1", "R^0_2", "²R^0_2", "R^2_4", "C^3_4", "H^4_4", "²H^4_4"],
    ["²H^4_0", "H^6_1", "C^7_2", "R^0_4", "²R^0_4", "R^2_8", "C^3_8", "H^4_8"],
    ["H^4_1", "²H^4_1", "H^6_2", "C^7_4", "R^0_8", "²R^0_8", "R^2_16", "C^3_16"],
    ["C^3_2", "H^4_2", "²H^4_2", "H^6_4", "C^7_8", "R^0_16", "²R^0_16", "R^2_32"],
    ["R^2_4", "C^3_4", "H^4_4", "²H^4_4", "H^6_8", "C^7_16", "R^0_32", "²R^0_32"],
    ["²R^0_4", "R^2_8", "C^3_8", "H^4_8", "²H^4_8", "H^6_16", "C^7_32", "R^0_64"],
];

pub const QUOTIENT: [[&str; 8]; 8] = [
    ["R^0_0", "εR^0_0", "R^2_1", "C^3_1", "H^4_1", "εH^4_1", "H^6_2", "C^7_4"],
    ["C^7_0", "R^0_1", "εR^0_1", "R^2_2", "C^3_2", "H^4_2", "εH^4_2", "H^6_4"],
    ["H^6_0", "C^7_1", "R^0_2", "εR^0_2", "R^2_4", "C^3_4", "H^4_4", "εH^4_4"],
    ["εH^4_0", "H^6_1", "C^7_2", "R^0_4", "εR^0_4", "R^2_8", "C^3_8", "H^4_8"],
    ["H^4_1", "εH^4_1", "H^6_2", "C^7_4", "R^0_8", "εR^0_8", "R^2_16", "C^3_16"],
    ["C^3_2", "H^4_2", "εH^4_2", "H^6_4", "C^7_8", "R^0_16", "εR^0_16", "R^2_32"],
    ["R^2_4", "C^3_4", "H^4_4", "εH^4_4", "H^6_8", "C^7_16", "R^0_32", "εR^0_32"],
    ["εR^0_4", "R^2_8", "C^3_8", "H^4_8", "εH^4_8", "H^6_16", "C^7_32", "R^0_64"],
];

/// Printed multiplication table of the Dirac set, rows and columns 1 P T PT C CP CT CPT.
pub const DIRAC_TABLE: [[&str; 8]; 8] = [
    ["1", "P", "T", "PT", "C", "CP", "CT", "CPT"],
    ["P", "1", "PT", "T", "-CP", "-C", "-CPT", "-CT"],
    ["T", "PT", "-1", "-P", "CT", "CPT", "-C", "-CP"],
    ["PT", "T", "-P", "-1", "-CPT", "-CT", "CP", "C"],
    ["C", "CP", "CT", "CPT", "1", "P", "T", "PT"],
    ["CP", "C", "CPT", "CT", "-P", "-1", "-PT", "-T"],
    ["CT", "CPT", "-C", "CP", "T", "PT", "-1", "-P"],
    ["CPT", "CT", "-CP", "-C", "-PT", "-T", "P", "1"],
];

/// Printed multiplication table for the bundled γ basis, rows and columns I W E C Π K S F.
pub const GAMMA_B_TABLE: [[&str; 8]; 8] = [
    ["I", "W", "E", "C", "Π", "K", "S", "F"],
    ["W", "-I", "C", "-Π", "-K", "Π", "-F", "S"],
    ["E", "C", "-I", "-W", "-S", "-F", "Π", "K"],
    ["C", "-E", "-W", "I", "F", "-S", "-K", "Π"],
    ["Π", "K", "-S", "-F", "-I", "-W", "E", "C"],
    ["K", "-Π", "-F", "S", "W", "-I", "-C", "E"],
    ["S", "F", "Π", "K", "E", "C", "I", "W"],
    ["F", "-S", "K", "-Π", "-C", "E", "-W", "I"],
];
