//! End-to-end tests of the `pindex` binary: output shapes, exact values,
//! exit codes, and JSON determinism.

use std::path::Path;
use std::process::{Command, Output};

fn pindex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pindex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn data_file(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn ko_order_and_index() {
    let out = pindex(&["ko", "order", "--k", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("order: 64"));

    let out = pindex(&["ko", "index", "--k", "0", "--m", "1", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("q_index: 7/4"));
    assert!(text.contains("eta_prediction: 7/4"));

    // negative ranks are legal
    let out = pindex(&["ko", "index", "--k", "0", "--m", "-1", "--n", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("q_index: 7/4")); // −1/4 ≡ 7/4 (mod 2)
}

#[test]
fn clifford_commands() {
    let out = pindex(&["clifford", "classify", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("M_1(H) (+) M_1(H)"));
    assert!(text.contains("irrep_real_dim: 4"));

    let out = pindex(&["clifford", "rep-check", "--n", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("relations_exact: true"));
    assert!(text.contains("result: pass"));

    // size guard is a usage error
    let out = pindex(&["clifford", "rep-check", "--n", "13"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exterior_commands() {
    let out = pindex(&["exterior", "s-spectrum", "--m", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("lowest: -2"));
    assert!(text.contains("lowest_multiplicity: 1"));

    let out = pindex(&["exterior", "oscillator", "--m", "2", "--deg", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("kernel_dim: 1"));

    // odd rank and guard violations are usage errors
    assert_eq!(pindex(&["exterior", "s-spectrum", "--m", "3"]).status.code(), Some(2));
    assert_eq!(
        pindex(&["exterior", "oscillator", "--m", "8", "--deg", "4"]).status.code(),
        Some(2)
    );
}

#[test]
fn rp_commands() {
    let out = pindex(&["rp", "sw", "--q", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("total_class: 1 + a + a^2"));

    let out = pindex(&["rp", "kind", "--q", "10"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pin- (non-orientable)"));

    let out = pindex(&["rp", "kind", "--q", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("not pin-"));
}

#[test]
fn series_commands() {
    let out = pindex(&["series", "identity", "--which", "a8", "--order", "24"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("result: pass"));

    let out = pindex(&["series", "identity", "--which", "a45", "--order", "24"]);
    assert_eq!(out.status.code(), Some(0));

    // too-small truncation is a usage error
    assert_eq!(
        pindex(&["series", "identity", "--which", "a8", "--order", "3"]).status.code(),
        Some(2)
    );

    let out = pindex(&["series", "ahat", "--max-i", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("-1/24*p1"));
    assert!(text.contains("7/5760*p1^2"));
    assert_eq!(pindex(&["series", "ahat", "--max-i", "9"]).status.code(), Some(2));
}

#[test]
fn congruence_exit_codes() {
    let out = pindex(&["congruence", "check", "--which", "a8", "--data", &data_file("a8_pass.txt")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("result: pass"));

    let out = pindex(&["congruence", "check", "--which", "a8", "--data", &data_file("a8_fail.txt")]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("residue: 1/2"));
    assert!(text.contains("result: FAIL"));

    let out = pindex(&["congruence", "check", "--which", "a1", "--data", &data_file("a1_zero.txt")]);
    assert_eq!(out.status.code(), Some(0));

    // float literal in the data: usage error, with the offending value named
    let out = pindex(&["congruence", "check", "--which", "a8", "--data", &data_file("malformed.txt")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("floating-point"));

    assert_eq!(
        pindex(&["congruence", "check", "--which", "a3", "--data", &data_file("a8_pass.txt")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pindex(&["congruence", "check", "--which", "a8", "--data", "/nonexistent.txt"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn usage_errors_are_exit_2() {
    assert_eq!(pindex(&["ko", "order", "--bogus"]).status.code(), Some(2));
    assert_eq!(pindex(&["nonsense"]).status.code(), Some(2));
    assert_eq!(pindex(&[]).status.code(), Some(2));
}

#[test]
fn json_output_is_valid_and_deterministic() {
    let args = ["ko", "index", "--k", "1", "--m", "2", "--n", "5", "--json"];
    let a = pindex(&args);
    let b = pindex(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "identical inputs must render identically");
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).expect("valid JSON");
    assert_eq!(v["command"], "ko index --k 1 --m 2 --n 5");
    // exact rational rendering, never floating point
    let q = v["q_index"].as_str().unwrap();
    assert!(q.chars().all(|c| c.is_ascii_digit() || c == '/' || c == '-'));

    let spec = pindex(&["exterior", "s-spectrum", "--m", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&spec.stdout).expect("valid JSON");
    assert_eq!(v["spectrum"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_all_passes_and_reports_every_suite() {
    let out = pindex(&["verify-all", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(v["pass"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 14);
    for c in checks {
        assert_eq!(c["pass"], true, "{} failed", c["name"]);
    }
}
