use std::path::PathBuf;
use std::process::{Command, Output};

use flagcert::document::{CertificateDocument, EngineName};
use flagcert_core::certify_no_equivariant_map;
use proptest::prelude::*;

fn flagcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagcert"))
        .args(args)
        .env_remove(flagcert::BUDGET_ENV)
        .output()
        .expect("binary runs")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("flagcert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn certificate_documents_round_trip(n in 2u32..=9, ell_seed in 0u32..100, engine in 0usize..3) {
        let ell = 1 + ell_seed % (n - 1);
        let engine = [EngineName::Groebner, EngineName::Oracle, EngineName::Both][engine];
        let engine = if n > 6 { EngineName::Groebner } else { engine };
        let v = certify_no_equivariant_map(n, ell).unwrap();
        let doc = CertificateDocument::new(n, ell, &v, engine);
        let text = doc.to_json();
        let back = CertificateDocument::from_json(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_json(), text);
    }
}

#[test]
fn euler_with_relations_file() {
    let rep = temp_file("rep_rel.txt", "# chi0^3 + chi0 chi1 + chi1\n10 3\n11 1\n01 1\n");
    let rels = temp_file("rels.txt", "x0^4   # RP^3\nx1^3\n");
    let out = flagcert(&[
        "euler",
        "--rep",
        rep.to_str().unwrap(),
        "--base",
        "relations",
        rels.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("euler class: x0^3*x1^2\n"), "{text}");
}

#[test]
fn euler_flag_base_json() {
    let rep = temp_file("rep_json.txt", "100 3\n110 1\n010 1\n101 1\n");
    let out = flagcert(&[
        "euler", "--rep", rep.to_str().unwrap(), "--base", "flag", "--n", "3", "--ell", "2",
        "--format", "json", "--engine", "both",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["verdict"]["certificate"], "x0^3*x1^2*x2");
    assert_eq!(doc["engine"], "both");
}

#[test]
fn euler_inconclusive_and_trivial() {
    let rep = temp_file("rep_zero.txt", "10 4\n");
    let out = flagcert(&["euler", "--rep", rep.to_str().unwrap(), "--base", "flag", "--n", "3", "--ell", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let rep = temp_file("rep_triv.txt", "00 1\n10 2\n");
    let out = flagcert(&["euler", "--rep", rep.to_str().unwrap(), "--base", "flag", "--n", "3", "--ell", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stdout).unwrap().contains("trivial summand"));
}

#[test]
fn euler_diagnostics_name_the_offender() {
    let rep = temp_file("rep_ok.txt", "10 1\n01 1\n");
    let rels = temp_file("rels_bad.txt", "x0^3\nx0*x5\n");
    let out = flagcert(&["euler", "--rep", rep.to_str().unwrap(), "--base", "relations", rels.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2") && err.contains("x5"), "{err}");

    let out = flagcert(&["euler", "--rep", rep.to_str().unwrap(), "--base", "flag", "--n", "4", "--ell", "2"]);
    assert_eq!(out.status.code(), Some(1));

    let out = flagcert(&["euler", "--rep", rep.to_str().unwrap(), "--base", "sphere"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("sphere"));

    let out = flagcert(&["euler", "--rep", "/nonexistent/rep.txt", "--base", "flag", "--n", "3", "--ell", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn budget_override_and_malformed_budget() {
    let out = Command::new(env!("CARGO_BIN_EXE_flagcert"))
        .args(["certify", "--n", "4", "--ell", "2", "--engine", "oracle"])
        .env(flagcert::BUDGET_ENV, "64")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("budget"));

    let out = Command::new(env!("CARGO_BIN_EXE_flagcert"))
        .args(["certify", "--n", "4", "--ell", "2"])
        .env(flagcert::BUDGET_ENV, "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn selftest_runs() {
    let out = flagcert(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!String::from_utf8(out.stdout).unwrap().contains("FAIL"));
}
