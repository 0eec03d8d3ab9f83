use std::path::PathBuf;
use std::process::{Command, Output};

use hopf_galois::io::Bundle;
use hopf_galois::report::Report;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-galois"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn json(args: &[&str]) -> Report {
    let mut full = vec!["--output", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn passing_commands_exit_zero() {
    let m2 = fixture("m2_graded");
    for args in [
        vec!["validate", m2.as_str()],
        vec!["galois", m2.as_str()],
        vec!["translation-map", "builtin:h4"],
        vec!["cat-iso-check", "builtin:h4", "--module", "k"],
        vec!["cleft", m2.as_str(), "--field", "F3"],
        vec!["crossed-product", "builtin:cp_minus1"],
        vec!["smash-check", "builtin:kc2"],
        vec!["cohomology", "h1", m2.as_str(), "--field", "F3"],
        vec!["cohomology", "h1", "builtin:kc2", "--action", "trivial"],
        vec!["lift", m2.as_str(), "--field", "F3", "--module", "B"],
        vec!["classify", m2.as_str(), "--field", "F3", "--module", "k"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}\n{}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn failures_exit_one() {
    assert_eq!(code(&["galois", &fixture("trivial_kxk")]), 1);
    assert_eq!(code(&["cat-iso-check", "builtin:h4", "--module", "k", "--tamper", "omit-antipode"]), 1);
    let r = json(&["crossed-product", &fixture("broken_cocycle")]);
    assert!(r.checks.iter().any(|c| !c.passed() && c.name.contains("cocycle")));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = run(&["galois", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse"));

    assert_eq!(code(&["galois", "builtin:no_such_fixture"]), 2);
    assert_eq!(code(&["galois", dir.path().join("missing.json").to_str().unwrap()]), 2);
    // Sweedler cohomology needs a cocommutative Hopf algebra.
    assert_eq!(code(&["cohomology", "h1", "builtin:h4"]), 2);
}

#[test]
fn json_reports_carry_values_and_checks() {
    let r = json(&["galois", &fixture("kc2")]);
    assert_eq!(r.command, "galois");
    assert_eq!(r.fixtures, vec!["kc2.json:kc2".to_string()]);
    assert!(r.values.iter().any(|v| v.name == "galois" && v.value == "true"));
    assert!(r.checks.iter().all(|c| c.passed()));
    assert!(r.timing_ms.is_none());
    assert!(json(&["--timing", "galois", "builtin:kc2"]).timing_ms.is_some());
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let m2 = fixture("m2_graded");
    for args in [
        vec!["--output", "json", "lift", m2.as_str(), "--field", "F3", "--module", "B"],
        vec!["--seed", "9", "cleft", "builtin:cp_minus1"],
        vec!["cohomology", "h1", m2.as_str(), "--field", "F3"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}

#[test]
fn crossed_product_emits_a_loadable_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cp.json");
    assert_eq!(code(&["crossed-product", "builtin:cp_minus1", "--emit", out.to_str().unwrap()]), 0);
    let bundle = Bundle::load(&out, None).unwrap();
    assert_eq!(bundle.comodule_algebras.len(), 1);
    assert_eq!(code(&["galois", out.to_str().unwrap()]), 0);
}

#[test]
fn field_override_changes_the_ground_field() {
    let r = json(&["--field", "F3", "validate", &fixture("kc2")]);
    assert!(r.values.iter().any(|v| v.name == "field" && v.value == "F_3"));
}
