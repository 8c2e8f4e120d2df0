use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mahonian"))
        .args(args)
        .env("MAHONIAN_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid JSON")
}

#[test]
fn statistics() {
    assert_eq!(stdout(&["stat", "2121312", "--maj", "--inv", "--des"]), "maj=9 inv=7 des=3");
    assert_eq!(stdout(&["stat", "", "--maj"]), "0");
    assert_eq!(stdout(&["stat", "112211212", "--inv"]), "7");
    assert_eq!(stdout(&["stat", "2213112", "--inv"]), "9");
    let j = json(&["stat", "1212", "--e", "--pairs", "--ballot"]);
    assert_eq!(j["e"], 0);
    assert_eq!(j["p"], 2);
    assert_eq!(j["ballot"], true);
}

#[test]
fn bad_word_is_a_usage_error() {
    let out = run(&["stat", "12x", "--maj"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn phi_trace_table() {
    let text = stdout(&["map", "phi", "2121312", "--trace"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[5], "w_6 = 223111 = 2·2·31·1·1 since a_7=2");
    assert_eq!(lines[6], "w_7 = 2213112 = φ(2121312)");
    assert_eq!(stdout(&["trace", "phi", "2121312"]), text);
}

#[test]
fn csv_trace_table() {
    let text = stdout(&["map", "csv", "(8,8,6,5,2,1)", "--trace"]);
    assert!(text.contains("ρ=[2,3,2,1]  r=3  i=2\nw=21212221212211\nv=22122112221121\nε=[2,3,4,3,2]"));
    assert!(text.contains("stage 5: λ = (8,4,3,3,3,3,2,2,1,1)"));
    let j = json(&["map", "csv", "(8,8,6,5,2,1)", "--trace"]);
    assert_eq!(j["output"], "(8,4,3,3,3,3,2,2,1,1)");
    assert_eq!(j["trace"].as_array().unwrap().len(), 5);
}

#[test]
fn simple_maps() {
    assert_eq!(stdout(&["map", "prime", "12"]), "12");
    assert_eq!(stdout(&["map", "phi", "1212"]), "2112");
    assert_eq!(stdout(&["map", "phi-inv", "2112"]), "1212");
    assert_eq!(stdout(&["map", "gk", "2121"]), "11221");
    assert_eq!(stdout(&["map", "gk-inv", "11221"]), "2121");
    assert_eq!(stdout(&["map", "lambda", "112211212"]), "(3,2,2)");
    assert_eq!(stdout(&["map", "boundary", "(3,1)"]), "21221");
}

#[test]
fn domain_errors_explain() {
    let out = run(&["map", "beta", "2112"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a ballot sequence"));
}

#[test]
fn polynomials() {
    assert_eq!(stdout(&["genfun", "catalan-qt", "2"]), "1 + q^2*t");
    assert_eq!(stdout(&["genfun", "lucanomial", "4", "2"]), "s^4 + 3*s^2*t + 2*t^2");
    assert_eq!(stdout(&["genfun", "qbinom", "4", "2"]), "1 + q + 2*q^2 + q^3 + q^4");
    assert_eq!(stdout(&["genfun", "catalan-qt", "3", "--vars", "q"]), "1 + q^2 + q^3 + q^4 + q^6");
    assert_eq!(
        stdout(&["genfun", "product-no-part", "1", "--truncate", "6"]),
        "1 + q^2 + q^3 + 2*q^4 + 2*q^5 + 4*q^6"
    );
    let j = json(&["genfun", "qbinom", "2", "1"]);
    assert_eq!(j["polynomial"], "1 + q");
    assert_eq!(j["terms"][1]["exponents"], serde_json::json!([1, 0, 0, 0]));
}

#[test]
fn enumeration() {
    assert_eq!(stdout(&["enumerate", "catalan", "2"]), "1122\n1212");
    assert_eq!(stdout(&["enumerate", "no-11", "10", "--count"]), "144");
    assert_eq!(
        stdout(&["enumerate", "catalan", "3", "--stats", "maj:q,des:t"]),
        stdout(&["genfun", "catalan-qt", "3"])
    );
    let out = run(&["enumerate", "suffix", "21"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_and_all() {
    assert!(stdout(&["verify", "csv-gk-conjugacy", "--max-size", "22"]).starts_with("PASS"));
    let reports = json(&["verify", "--all", "--profile", "quick", "--seed", "7"]);
    let reports = reports.as_array().unwrap();
    assert!(reports.len() > 40);
    assert!(reports.iter().all(|r| r["verdict"] == "pass"));
}

#[test]
fn verify_usage_errors() {
    let out = run(&["verify", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("phi-worked-example"));
    let out = run(&["verify", "phi-Bn", "--degree", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "phi-Bn", "--profile", "slow"]);
    assert_eq!(out.status.code(), Some(2));
}
