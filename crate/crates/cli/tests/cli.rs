use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circtrans")).args(args).env_remove("CIRCTRANS_ORACLE_CAP").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

fn decimal(c: &[i64]) -> Vec<String> {
    c.iter().map(|v| v.to_string()).collect()
}

#[test]
fn torus_polynomial_as_json() {
    let v = json(&["indpoly", "--n", "7", "--d", "7", "--boundary", "torus"]);
    assert_eq!(v["schema"], "circtrans/1");
    assert_eq!(v["config"]["command"], "indpoly");
    assert_eq!(v["config"]["boundary"], "torus");
    assert_eq!(
        strings(&v["result"]["coefficients"]),
        decimal(&[1, 49, 980, 10388, 63553, 229908, 486668, 576856, 346381, 81095, 980])
    );
    assert_eq!(v["result"]["value_at_one"], "1796859");
}

#[test]
fn factor_seven() {
    let v = json(&["factor", "--n", "7"]);
    let f = &v["result"]["factorization"];
    assert_eq!(f["nu"], 13);
    assert_eq!(strings(&f["f_anom"]), decimal(&[42, 47, -29, -5, 1]));
    assert_eq!(strings(&f["f_cyc"]), decimal(&[-13, 1, 24, -7, -9, 2, 1]));
    assert_eq!(v["result"]["table_tsv"], "7\t13\tx^4-5x^3-29x^2+47x+42\t6\t[2,2,2]");
}

#[test]
fn factor_tsv_row() {
    let out = run(&["factor", "--n", "5", "--format", "tsv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, ["n\tker\tf_anom\tdeg(f_cyc)\tf_cyc over K", "5\t4\t(x-1)(x^2-2x-10)\t2\t[1,1]"]);
}

#[test]
fn verify_five_passes() {
    let out = run(&["verify", "--n", "5", "--level", "full"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["failed"], 0);
    assert!(v["result"]["checks"].as_array().unwrap().iter().any(|c| c["name"] == "oracle equivalence"));
}

#[test]
fn verify_seven_passes() {
    let out = run(&["verify", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["report", "--n", "7"]);
    let b = run(&["report", "--n", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_contains_every_section() {
    let v = json(&["report", "--n", "7"]);
    for key in ["orbits", "orbit_matrix", "factorization", "sectors", "spectral", "galois"] {
        assert!(v["result"].get(key).is_some(), "missing {key}");
    }
    assert_eq!(strings(&v["result"]["sectors"]["cyclotomic"])[7..], decimal(&[-578, -3402, -5740, -2520]));
    assert_eq!(v["result"]["galois"][0]["group"], "S4");
}

#[test]
fn invalid_config_exits_two() {
    assert_eq!(run(&["states", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["states", "--connection", "7"]).status.code(), Some(2));
    assert_eq!(run(&["galois", "--primes", "4"]).status.code(), Some(2));
    assert_eq!(run(&["factor", "--n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["galois", "--poly", "1,2,1"]).status.code(), Some(2));
    assert_eq!(run(&["states", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn oracle_cap_exits_three_and_env_overrides() {
    let args = ["indpoly", "--d", "8", "--boundary", "strip", "--level", "oracle"];
    assert_eq!(run(&args).status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_circtrans")).args(args).env("CIRCTRANS_ORACLE_CAP", "56").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["oracle_cap"], 56);
    assert_eq!(v["result"]["oracle"]["equal"], true);
}

#[test]
fn states_and_orbits() {
    let v = json(&["states"]);
    assert_eq!(v["result"]["count"], 29);
    assert_eq!(v["result"]["weight_histogram"], serde_json::json!([1, 7, 14, 7]));
    let o = json(&["orbits", "--group", "cyclic", "--n", "11"]);
    assert_eq!(o["result"]["multiplicities"]["m_chi1"], 3);
    let text = String::from_utf8(run(&["orbits", "--format", "tsv"]).stdout).unwrap();
    assert!(text.lines().any(|l| l == "4\t{0,2,4}\t7\t3\tno"));
}

#[test]
fn spectral_text_mentions_caveat() {
    let out = run(&["spectral", "--format", "text", "--horizon", "5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("7.845764833"));
    assert!(text.contains("not asserted to equal the Shannon capacity"));
}

#[test]
fn spectral_cap_reports_failure() {
    let out = run(&["spectral", "--iteration-cap", "2"]);
    assert_eq!(out.status.code(), Some(1));
}
