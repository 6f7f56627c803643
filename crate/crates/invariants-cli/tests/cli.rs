//! End-to-end runs of the `invariants` binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invariants")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn invariant_output_follows_the_schema() {
    let v = json(&["invariant", "corpus:hopf", "--p", "2", "--variant", "small", "--mode", "unrefined"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["p", "variant", "mode", "omega", "value_exact", "value_approx", "sigma", "chi", "diagnostics"] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert_eq!(v["value_exact"], "1 [N=16]");
    assert_eq!(v["value_approx"], serde_json::json!([1.0, 0.0]));
    assert_eq!((v["sigma"].as_i64(), v["chi"].as_i64()), (Some(0), Some(3)));
    assert_eq!(v["omega"], serde_json::Value::Null);
}

#[test]
fn refined_invariant_uses_omega() {
    let v = json(&["invariant", "corpus:plus_one", "--omega", "0"]);
    assert_eq!(v["value_exact"], "z^4 [N=16]");
    assert_eq!(v["omega"], serde_json::json!([0]));
    let v = json(&["invariant", "corpus:plus_one", "--omega", "1"]);
    assert_eq!(v["value_exact"], "0 [N=16]");
    let full = json(&["invariant", "corpus:plus_one", "--omega", "0", "--evaluation", "full"]);
    assert_eq!(full["value_exact"], "z^4 [N=16]");
}

#[test]
fn output_is_deterministic() {
    let args = ["invariant", "corpus:trefoil", "--mode", "unrefined"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn text_format_is_readable() {
    let out = run(&["invariant", "corpus:plus_one", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("value: z^4 [N=16]") && text.contains("sigma: 1"), "{text}");
}

#[test]
fn boundary_invariant_of_the_sphere() {
    let v = json(&["boundary", "corpus:plus_one", "--p", "4", "--omega", "1"]);
    assert_eq!(v["mode"], "boundary-spin");
    assert_eq!(v["value_exact"], "1 [N=32]");
    let v = json(&["boundary", "corpus:unknot", "--p", "2", "--omega", "0", "--mode", "coh"]);
    assert_eq!(v["mode"], "boundary-coh");
}

#[test]
fn input_errors_exit_with_two() {
    let cases: [&[&str]; 6] = [
        &["invariant", "/nonexistent.kd"],
        &["invariant", "corpus:hopf", "--omega", "1"],
        &["boundary", "corpus:plus_one", "--p", "4", "--omega", "0"],
        &["boundary", "corpus:unknot", "--p", "4", "--omega", "0", "--mode", "coh"],
        &["boundary", "corpus:unknot", "--p", "3", "--omega", "0"],
        &["rescale-check", "corpus:hopf", "--xi", "0"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn not_characteristic_is_reported() {
    let out = run(&["boundary", "corpus:plus_one", "--p", "4", "--omega", "0"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a characteristic sublink"));
}

#[test]
fn decompose_and_rescale_pass() {
    let v = json(&["decompose", "corpus:dot_pierced_twice", "--p", "2", "--format", "json"]);
    assert_eq!(v["passed"], true);
    assert!(v["checks"]["checks"].as_array().unwrap().len() >= 3);
    let v = json(&["rescale-check", "corpus:hopf", "--p", "2", "--xi", "i", "--format", "json"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn trade_prints_a_dot_free_link() {
    let v = json(&["trade", "corpus:dot_pierced_twice", "--format", "json"]);
    assert!(!v["link"].as_str().unwrap().contains("dot("));
    assert_eq!(v["fresh"].as_array().unwrap().len(), 1);
    let link = v["link"].as_str().unwrap();
    assert!(diagram::parse(link).unwrap().is_dot_free());
}

#[test]
fn verify_at_p3_runs_the_ungraded_subset() {
    let out = run(&["verify", "--p", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("[oracles]") && !text.contains("[gk-moves]"));
}
