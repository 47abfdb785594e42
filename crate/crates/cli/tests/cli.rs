use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run_file(name: &str, extra: &[&str]) -> (Value, i32) {
    let path = fixture(name);
    let input: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let cmd = input["command"].as_str().unwrap().to_string();
    let out = Command::new(env!("CARGO_BIN_EXE_coxkit")).arg(&cmd).arg(&path).args(extra).output().unwrap();
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (v, out.status.code().unwrap())
}

fn run_stdin(cmd: &str, input: &str) -> (Value, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_coxkit"))
        .args([cmd, "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (serde_json::from_slice(&out.stdout).expect("stdout is JSON"), out.status.code().unwrap())
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

fn grid(v: &Value) -> Vec<Vec<String>> {
    v.as_array().unwrap().iter().map(strs).collect()
}

fn g(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
}

#[test]
fn monoid_469() {
    let (v, code) = run_file("monoid-469.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["free_rank"], "2");
    assert_eq!(grid(&v["images"]), g(&[&["2", "0"], &["1", "1"], &["0", "2"]]));
}

#[test]
fn monoid_10_14_15_21() {
    let (v, code) = run_file("monoid-10-14-15-21.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["free_rank"], "4");
    assert_eq!(grid(&v["ambient_functionals"]).len(), 4);
}

#[test]
fn extension_violations() {
    let (v, code) = run_file("ext-star-violation.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "violation_star");
    assert_eq!(strs(&v["s"]), ["0", "0", "1", "0"]);
    let (v, _) = run_file("ext-star-star-violation.json", &[]);
    assert_eq!(v["kind"], "violation_star_star");
    assert_eq!(v["common_prime_index"], "2");
}

#[test]
fn quadric_cox_data() {
    let (v, code) = run_file("quadric-cox.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["cl_group"]["free_rank"], "1");
    assert_eq!(grid(&v["var_degrees"]), g(&[&["1"], &["1"], &["-1"], &["-1"]]));
    assert_eq!(strs(&v["pullbacks"]), ["y1*y3", "y1*y4", "y2*y3", "y2*y4"]);
}

#[test]
fn tau_lifts_to_zeta() {
    let (v, code) = run_file("lift-tau-zeta.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["lift"], true);
    assert_eq!(v["normalization"]["kind"], "preserves");
    assert!(v["violated_relation"].is_null());
}

#[test]
fn chain_composes_to_zeta() {
    let (v, _) = run_file("chain5.json", &[]);
    assert_eq!(strs(&v["images"]), ["y1", "y1^2*y4 - y1*y2*y3 + y2", "y3", "y1*y3*y4 - y2*y3^2 + y4", "y5"]);
}

#[test]
fn nagata_jacobian() {
    let (v, _) = run_file("nagata.json", &[]);
    assert_eq!(v["determinant"], "1");
}

#[test]
fn wildness_certificate() {
    let (v, code) = run_file("wildness-cert.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["decomposition"]["kind"], "not_zeta");
    assert_eq!(v["decomposition"]["var"], "3");
    let c = &v["rho_certificate"];
    assert_eq!(c["det_j"], "-y1*y3 + 1");
    assert_eq!(c["holds"], true);
    assert_eq!(c["f"], "0");
    assert!(v["tame_search"]["found"].is_null());
}

#[test]
fn shear_family_probe() {
    let (v, _) = run_file("shear-family.json", &[]);
    assert_eq!(v["probe_total_degree"], "8");
    assert_eq!(v["normalization"]["kind"], "preserves");
}

#[test]
fn q8_report() {
    let (v, _) = run_file("q8.json", &[]);
    assert_eq!(v["order_g"], "8");
    assert_eq!(v["order_h"], "1");
    assert_eq!(v["order_htilde"], "2");
    assert_eq!(v["f_abelian"], false);
    assert_eq!(strs(&v["n_invariants"]), ["2", "2"]);
    assert_eq!(v["is_toric"], false);
}

#[test]
fn small_quotients() {
    let (v, _) = run_file("cyclic3.json", &[]);
    assert_eq!(v["is_toric"], true);
    assert_eq!(strs(&v["n_invariants"]), ["3"]);
    let (v, _) = run_file("reflection2.json", &[]);
    assert_eq!(v["order_h"], "2");
    assert_eq!(strs(&v["n_invariants"]).len(), 0);
    let (v, _) = run_file("pm-identity-reynolds.json", &[]);
    assert_eq!(v["dimension"], "3");
}

#[test]
fn closure_cap_is_domain_error() {
    let (v, code) = run_file("q8.json", &["--cap", "4"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "domain_error");
}

#[test]
fn malformed_inputs_exit_2() {
    for (cmd, text) in [
        ("parse-poly", "{not json"),
        ("parse-poly", r#"{"text": "y1 +", "num_vars": 2}"#),
        ("parse-poly", r#"{"text": "y9", "num_vars": 2}"#),
        ("divisor-theory", r#"{"generators": [[1]]}"#),
        ("compose", r#"{"num_vars": 2, "maps": [["y1"]]}"#),
    ] {
        let (v, code) = run_stdin(cmd, text);
        assert_eq!(code, 2, "{cmd} {text}: {v}");
        assert_eq!(v["error"]["kind"], "malformed_input");
    }
}

#[test]
fn domain_errors_exit_1() {
    let (_, code) = run_stdin("divisor-theory", r#"{"ambient_rank": 1, "generators": [[2], [3]]}"#);
    assert_eq!(code, 1);
    let (_, code) = run_stdin("cox-data", r#"{"ambient_rank": 3, "rays": [[1, 0, 0], [0, 1, 0]]}"#);
    assert_eq!(code, 1);
}

#[test]
fn output_is_deterministic() {
    for name in ["quadric-cox.json", "wildness-cert.json", "q8.json"] {
        assert_eq!(run_file(name, &[]), run_file(name, &[]));
    }
}

#[test]
fn missing_file_is_malformed() {
    let out = Command::new(env!("CARGO_BIN_EXE_coxkit")).args(["saturate", "/nonexistent/input.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
