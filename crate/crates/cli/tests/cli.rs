use std::process::{Command, Output};

fn adjoint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adjoint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let out = adjoint(args);
    let doc = serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    (out.status.code().unwrap(), doc)
}

#[test]
fn identities_pass_at_degree_8() {
    let out = adjoint(&["verify", "identities", "--degree", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS poincare/sym-oracle-vs-closed-form"));
    assert!(text.contains("PASS split-identity/lattice-sum-vs-closed-form"));
    assert!(text.contains("PASS nonsplit-identity/product-vs-single-sum"));
}

#[test]
fn all_emits_six_suites_and_ledger() {
    let (code, doc) = json(&["verify", "all", "--format", "json", "--no-timestamp"]);
    assert_eq!(code, 0);
    let suites: Vec<&str> = doc["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    assert_eq!(suites, ["lie", "iwasawa", "identities", "lfactor", "integral", "orbits"]);
    assert!(doc["typo_ledger"].as_array().unwrap().len() >= 5);
    assert!(doc.get("timestamp").is_none());
    assert_eq!(doc["passed"], true);
}

#[test]
fn orbits_report_two_parabolic_orbits() {
    let (code, doc) = json(&["verify", "orbits", "--q", "5", "--rho", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let s = &doc["suites"][0];
    assert_eq!(s["params"]["orbit_size"], "15500");
    assert_eq!(s["params"]["p_orbit_sizes"], "500+15000");
    assert!(doc["timestamp"].is_u64());
}

#[test]
fn integral_names_winning_triple() {
    let (code, doc) = json(&["verify", "integral", "--case", "nonsplit", "--degree", "6", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(doc["suites"][0]["params"]["winning_triple"], "nonsplit: {3s, 6s-2, 9s-3}");
}

#[test]
fn iwasawa_prints_case_two_factors() {
    let (code, doc) = json(&["verify", "iwasawa", "--format", "json"]);
    assert_eq!(code, 0);
    let k = doc["suites"][0]["matrices"]["case2-k"].as_array().unwrap();
    assert_eq!(k.len(), 8);
    assert!(k.iter().all(|row| row.as_array().unwrap().len() == 8));
}

#[test]
fn json_is_deterministic() {
    let args = ["verify", "lfactor", "--case", "split", "--format", "json", "--no-timestamp"];
    assert_eq!(adjoint(&args).stdout, adjoint(&args).stdout);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("adjoint-cli-test-{}.txt", std::process::id()));
    let out = adjoint(&["verify", "lie", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("== lie"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(adjoint(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(adjoint(&["verify", "orbits", "--q", "4"]).status.code(), Some(2));
    assert_eq!(adjoint(&["verify", "lfactor", "--case", "sideways"]).status.code(), Some(2));
}
