use std::process::{Command, Output};

use serde_json::Value;

fn scb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scb")).args(args).output().expect("spawn scb")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = scb(args);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), v)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn check_bdf1_large_gamma_is_feasible() {
    let (code, v) = json(&["check", "--method", "bdf1", "--gamma", "1000000"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "Feasible");
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn check_ab4_has_witness_at_two() {
    let (code, v) = json(&["check", "--method", "ab4", "--gamma", "1/100"]);
    assert_eq!(code, 1);
    assert_eq!(v["evidence"]["type"], "witness");
    assert_eq!(v["evidence"]["n"], 2);
}

#[test]
fn check_bdf4_far_witnesses() {
    let (code, v) = json(&[
        "check", "--method", "bdf4", "--gamma", "48625/100000", "--horizon", "27000", "--precision", "16000",
    ]);
    assert_eq!(code, 1);
    let neg: Vec<u64> = v["evidence"]["negatives"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(neg, [26814, 26875, 26886, 26936, 26947, 26997]);
}

#[test]
fn decimal_gamma_is_exact() {
    let (_, v) = json(&["check", "--method", "bdf2", "--gamma", "0.48625"]);
    assert_eq!(v["gamma"], "389/800");
}

#[test]
fn gamma_sup_bdf5_confirmed() {
    let (code, v) = json(&["gamma-sup", "--method", "bdf5", "--tol", "1e-9"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "Enclosure");
    assert_eq!(v["poly_check"]["result"], "Confirmed");
    let lo: f64 = v["enclosure"]["lo_decimal"].as_str().unwrap().parse().unwrap();
    let hi: f64 = v["enclosure"]["hi_decimal"].as_str().unwrap().parse().unwrap();
    assert!(lo <= 0.304213712525 && 0.304213712525 <= hi + 1e-12, "{lo} {hi}");
}

#[test]
fn gamma_sup_ab2_and_ab4() {
    let (code, v) = json(&["gamma-sup", "--method", "ab2", "--tol", "1e-12"]);
    assert_eq!(code, 0);
    let lo: f64 = v["enclosure"]["lo_decimal"].as_str().unwrap().parse().unwrap();
    let hi: f64 = v["enclosure"]["hi_decimal"].as_str().unwrap().parse().unwrap();
    assert!(lo <= 4.0 / 9.0 && 4.0 / 9.0 <= hi);
    assert!(hi - lo < 1e-11);

    let (code, v) = json(&["gamma-sup", "--method", "ab4"]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "NonePositive");
}

#[test]
fn tau_ebdf_values() {
    let (code, v) = json(&["tau", "--method", "ebdf4", "--n", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "Exists");
    let taus: Vec<&str> = v["tau"].as_array().unwrap().iter().map(|t| t["tau"].as_str().unwrap()).collect();
    assert_eq!(taus.len(), 10);
    assert_eq!(taus[..4], ["48/25", "504/625", "10992/15625", "366516/390625"]);

    let out = scb(&["tau", "--method", "ebdf3", "--n", "3", "--format", "csv"]);
    let s = stdout(&out);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "n,tau,decimal");
    assert!(lines[1].starts_with("1,18/11,"));
    assert!(lines[2].starts_with("2,126/121,"));
    assert!(lines[3].starts_with("3,1212/1331,"));
}

#[test]
fn tau_ab1_constant() {
    let (_, v) = json(&["tau", "--method", "ab1", "--n", "5"]);
    for t in v["tau"].as_array().unwrap() {
        assert_eq!(t["tau"], "1");
    }
}

#[test]
fn reproduce_ab_table() {
    let (code, v) = json(&["reproduce", "--target", "ab-table"]);
    assert_eq!(code, 0);
    let items: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["expected"].as_str().unwrap()).collect();
    assert_eq!(items, ["1", "4/9", "84/529", "none"]);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["pass"] == true));
}

#[test]
fn reproduce_ebdf_existence() {
    let (code, v) = json(&["reproduce", "--target", "ebdf-existence"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "Pass");
}

#[test]
fn mu_curve_bdf1_closed_form() {
    let out = scb(&["mu-curve", "--method", "bdf1", "--n", "1..3", "--gamma", "0:2:1/2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    let mut rows = 0;
    for line in s.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let g = scb_core::arith::parse_rational(f[0]).unwrap();
        let n: usize = f[1].parse().unwrap();
        let v = scb_core::arith::parse_rational(f[2]).unwrap();
        let one = scb_core::arith::rat(1, 1);
        let expect = num_traits::pow(one.clone() / (g + one), n + 1);
        assert_eq!(v, expect, "{line}");
        rows += 1;
    }
    assert_eq!(rows, 15);
}

#[test]
fn mu_curve_bdf5_grid_with_marker() {
    let out = scb(&[
        "mu-curve", "--method", "bdf5", "--n", "1..21", "--gamma", "0:1:1/1000", "--mark", "0.3042137", "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    let body: Vec<&str> = s.lines().skip(1).collect();
    assert_eq!(body.len(), 21 * 1002);
    assert_eq!(body.iter().filter(|l| l.ends_with(",marker")).count(), 21);
}

#[test]
fn usage_errors_exit_ten() {
    assert_eq!(scb(&["mu-curve", "--method", "bdf1", "--gamma", "1:0:1/2"]).status.code(), Some(10));
    assert_eq!(scb(&["check", "--method", "bdf1"]).status.code(), Some(10));
    assert_eq!(scb(&["check", "--method", "nope", "--gamma", "1"]).status.code(), Some(10));
    assert_eq!(scb(&["check", "--method", "bdf1", "--gamma", "-1"]).status.code(), Some(10));
    assert_eq!(scb(&["check", "--method", "bdf1", "--gamma", "1", "--precision", "3"]).status.code(), Some(10));
}

#[test]
fn json_is_deterministic_apart_from_timings() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timings");
        serde_json::to_string(&v).unwrap()
    };
    let args = ["gamma-sup", "--method", "bdf3"];
    assert_eq!(strip(json(&args).1), strip(json(&args).1));
}

#[test]
fn custom_method_file_and_output_path() {
    let dir = std::env::temp_dir().join(format!("scb-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("m.json");
    std::fs::write(&file, r#"{"name": "my-ab2", "k": 2, "a": ["1", "0"], "b": ["0", "3/2", "-1/2"]}"#).unwrap();
    let report = dir.join("out.json");
    let out = scb(&[
        "check", "--custom", file.to_str().unwrap(), "--gamma", "4/9", "--output", report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["method"], "my-ab2");
    assert_eq!(v["status"], "Feasible");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn catalog_lists_all_methods() {
    let (code, v) = json(&["catalog"]);
    assert_eq!(code, 0);
    assert_eq!(v["methods"].as_array().unwrap().len(), 13);
    let text = stdout(&scb(&["catalog", "--format", "text"]));
    assert!(text.lines().next().unwrap().starts_with("name"));
}
