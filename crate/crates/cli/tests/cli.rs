use std::process::{Command, Output};

use serde_json::Value;

fn lrsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrsg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = lrsg(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.ends_with('\n'));
    serde_json::from_str(&stdout).unwrap()
}

#[test]
fn coeff_both_methods_agree() {
    let v = json(&[
        "coeff", "--lambda", "3,2,1", "--mu", "2,1,0", "--nu", "2,1,0", "--method", "both",
    ]);
    assert_eq!(v["result"]["tableau"], "2");
    assert_eq!(v["result"]["hive"], "2");
    assert_eq!(v["result"]["agree"], true);
    assert_eq!(v["status"], "ok");

    let v = json(&["coeff", "--lambda", "1,1", "--mu", "1,0", "--nu", "1,0"]);
    assert_eq!(v["result"]["tableau"], "1");

    let v = json(&["coeff", "--lambda", "2,2", "--mu", "1,1", "--nu", "1,1"]);
    assert_eq!(v["result"]["agree"], true);
}

#[test]
fn coeff_single_method_and_padding() {
    let v = json(&[
        "coeff", "--lambda", "2,1", "--mu", "1", "--nu", "1,1", "--method", "hive",
    ]);
    assert_eq!(v["result"]["hive"], "1");
    assert!(v["result"].get("tableau").is_none());
    assert_eq!(v["result"]["triple"]["mu"], "1,0");
}

#[test]
fn horn_counts() {
    for (r, n) in [(1, 0), (2, 3), (3, 12), (4, 41)] {
        let v = json(&["horn", "--r", &r.to_string()]);
        assert_eq!(v["result"]["count"], n);
        assert_eq!(v["result"]["inequalities"].as_array().unwrap().len(), n);
    }
    let out = lrsg(&["horn", "--r", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "λ2+λ3 ≤ μ1+μ3+ν1+ν3"));
    assert_eq!(text.lines().count(), 12);
}

#[test]
fn member_examples() {
    let check = |l, m, n, cone: bool, semigroup: Value| {
        let v = json(&["member", "--lambda", l, "--mu", m, "--nu", n]);
        assert_eq!(v["result"]["cone"], cone, "{l} {m} {n}");
        assert_eq!(v["result"]["semigroup"], semigroup, "{l} {m} {n}");
    };
    check("2,1,0", "1,1,0", "1,0,0", true, Value::Bool(true));
    check("2,2,0", "1,1,0", "1,0,0", false, Value::Bool(false));
    check("1,1", "1,0", "1,0", true, Value::Bool(true));
    check("1/2,-1", "1/2,0", "0,-1", true, Value::Null);
}

#[test]
fn consistent_rank_three_pairs() {
    let v = json(&["consistent", "--r", "3", "--cardinality", "2"]);
    let listed = v["result"]["consistent"].as_array().unwrap();
    assert!(listed.iter().any(|st| st["I"] == serde_json::json!([2, 3])
        && st["J"] == serde_json::json!([1, 3])
        && st["K"] == serde_json::json!([1, 3])));
    assert_eq!(listed.len(), 6);
    assert!(v["result"]["disagreements"].as_array().unwrap().is_empty());
}

#[test]
fn saturation_rank_two_is_clean() {
    let v = json(&["saturation", "--r", "2", "--max-weight", "8", "--max-stretch", "4"]);
    assert!(v["result"]["candidates"].as_array().unwrap().is_empty());
}

#[test]
fn spectra_is_deterministic_without_violations() {
    let args = ["spectra", "--r", "3", "--trials", "1000", "--seed", "42"];
    let v = json(&args);
    assert!(v["result"]["violations"].as_array().unwrap().is_empty());
    assert_eq!(v, json(&args));
    let text = String::from_utf8(lrsg(&args).stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
}

#[test]
fn json_keys_are_sorted() {
    let out = lrsg(&["coeff", "--lambda", "1", "--mu", "1", "--nu", "0", "--format", "json"]);
    let s = String::from_utf8(out.stdout).unwrap();
    let order = ["\"command\"", "\"result\"", "\"status\""].map(|k| s.find(k).unwrap());
    assert!(order.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn bad_input_exits_one() {
    for args in [
        &["coeff", "--lambda", "1,x", "--mu", "1", "--nu", "0"][..],
        &["coeff", "--lambda", "1,2", "--mu", "1", "--nu", "0"],
        &["member", "--lambda", "1", "--mu", "1,0", "--nu", "0,0"],
        &["horn", "--r", "0"],
        &["consistent", "--r", "3", "--cardinality", "4"],
        &["spectra", "--r", "0"],
        &["frobnicate"],
        &["horn"],
    ] {
        assert_eq!(lrsg(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(lrsg(&["--help"]).status.code(), Some(0));
}
