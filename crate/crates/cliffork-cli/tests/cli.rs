use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffork")).args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_spacetime() {
    let o = run(&["classify", "--p", "1", "--q", "3", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["label"], "ℍ(2)");
    assert_eq!(v["mod8"], 6);
}

#[test]
fn table_markdown() {
    let o = run(&["table", "--kind", "rings", "--max", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("²ℝ"));
}

#[test]
fn ext_group_gamma() {
    let o = run(&["ext-group", "--basis", "gamma", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["signature"], "(-,-,+,-,-,+,+)");
    assert_eq!(v["class"], "*Z4⊗Z2");
}

#[test]
fn quotient_and_cover() {
    let o = run(&["quotient", "--p", "3", "--q", "0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("pin^{c,d,g}"));
    let o = run(&["cover", "--complex", "3"]);
    assert!(o.status.success());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["classify", "--p", "1"]).status.code(), Some(2));
    assert_eq!(run(&["quotient", "--p", "2", "--q", "2"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--kind", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "--suite", "tables"]).status.code(), Some(0));
    let o = run(&["verify", "--suite", "gamma", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!v[0]["counterexamples"].as_array().unwrap().is_empty());
}

#[test]
fn ext_group_from_file_matches_bundled() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../cliffork/assets/gamma_b.json");
    let a = run(&["ext-group", "--basis", path, "--format", "json"]);
    let b = run(&["ext-group", "--basis", "gamma", "--format", "json"]);
    assert!(a.status.success());
    let (va, vb): (serde_json::Value, serde_json::Value) =
        (serde_json::from_str(&stdout(&a)).unwrap(), serde_json::from_str(&stdout(&b)).unwrap());
    assert_eq!(va["signature"], vb["signature"]);
    assert_eq!(va["table"], vb["table"]);
    assert_eq!(run(&["ext-group", "--basis", "/nonexistent.json"]).status.code(), Some(2));
}
