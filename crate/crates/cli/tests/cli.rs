use std::process::{Command, Output};

use akalg::combinatorics::{gamma_recursive, std_tableaux, Multipartition};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_akalg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("one JSON record per line")).collect()
}

fn of_kind<'a>(records: &'a [Value], kind: &str) -> Vec<&'a Value> {
    records.iter().filter(|r| r["kind"] == kind).collect()
}

#[test]
fn schur_one_parameter_n2() {
    let o = run(&["schur", "--r", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS ((2))"), "{text}");
    assert!(text.contains("= q + 1\n"), "{text}");
    assert!(text.contains("= (q + 1)/(q)\n"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn schur_two_parameters_n1_json() {
    let o = run(&["schur", "--r", "2", "--n", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_lines(&o);
    assert!(recs.iter().all(|r| r["schema"] == 1));
    let schur = of_kind(&recs, "schur");
    assert_eq!(schur.len(), 2);
    assert_eq!(schur[0]["lambda"], "((1),())");
    assert_eq!(schur[1]["lambda"], "((),(1))");
    for (rec, expect) in schur.iter().zip(["(-Q1 + Q2)/(Q2)", "(Q1 - Q2)/(Q1)"]) {
        let values = rec["values"].as_array().unwrap();
        assert_eq!(values.len(), 4);
        assert!(values.iter().all(|v| v["value"] == expect), "{rec}");
        assert_eq!(rec["status"], "PASS");
    }
    assert_eq!(of_kind(&recs, "summary")[0]["status"], "PASS");
}

#[test]
fn group_algebra_specialization() {
    let o = run(&["schur", "--r", "2", "--n", "2", "--specialize", "q=1,Q1=-1,Q2=1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_lines(&o);
    let schur = of_kind(&recs, "schur");
    assert_eq!(schur.len(), 5);
    for rec in schur {
        let dim = BigRational::from_integer(BigInt::from(rec["dim"].as_u64().unwrap()));
        for v in rec["values"].as_array().unwrap() {
            let s: BigRational = v["value"].as_str().unwrap().parse().unwrap();
            assert_eq!(s * &dim, BigRational::from_integer(8.into()), "{rec}");
        }
    }
}

#[test]
fn degenerate_specialization_is_rejected_for_trace() {
    let o = run(&["schur", "--r", "2", "--n", "2", "--specialize", "q=2,Q1=1,Q2=1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("semisimplicity criterion"), "{err}");
    let ok = run(&["schur", "--r", "2", "--n", "2", "--specialize", "q=2,Q1=1,Q2=1", "--method", "gamma,hook"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn verify_seminormal_r2_n2() {
    let o = run(&["verify", "--suite", "seminormal", "--r", "2", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_lines(&o);
    let checks = of_kind(&recs, "check");
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "PASS" && c["suite"] == "seminormal"));
}

#[test]
fn verify_trace_on_an_evaluation_point() {
    let o = run(&["verify", "--suite", "trace", "--r", "2", "--n", "3", "--backend", "eval", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS verify:"));
}

#[test]
fn verify_all_r3_n2() {
    let o = run(&["verify", "--suite", "all", "--r", "3", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_lines(&o);
    let suites: Vec<&str> = of_kind(&recs, "check").iter().map(|c| c["suite"].as_str().unwrap()).collect();
    let mut order = suites.clone();
    order.dedup();
    assert_eq!(order, ["engine", "combinatorics", "cellular", "seminormal", "psi", "dual", "trace", "schur"]);
    assert_eq!(of_kind(&recs, "summary")[0]["failed"], 0);
}

#[test]
fn verify_lambda_filter_keeps_global_records() {
    let o = run(&["verify", "--suite", "psi", "--r", "2", "--n", "2", "--lambda", "((1),(1))", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_lines(&o);
    let checks = of_kind(&recs, "check");
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["lambda"].is_null() || c["lambda"] == "((1),(1))"));
}

#[test]
fn tableaux_listing_for_the_column_example() {
    let o = run(&["tableaux", "--r", "3", "--n", "9", "--lambda", "((2,1,1),(2,1),(2))", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_lines(&o);
    let markers = of_kind(&recs, "marker");
    let get = |name: &str| markers.iter().find(|m| m["name"] == name).unwrap()["value"].clone();
    assert_eq!(get("t_bottom"), "([[6,9],[7],[8]],[[3,5],[4]],[[1,2]])");
    assert_eq!(get("w_lambda"), "(1,6,5,3,7,4,8)(2,9)");
    let tabs = of_kind(&recs, "tableau");
    let bottom = tabs.iter().find(|t| t["tableau"] == "([[6,9],[7],[8]],[[3,5],[4]],[[1,2]])").unwrap();
    assert_eq!(bottom["d_cycles"], "(1,6,5,3,7,4,8)(2,9)");
    // Inversions of [6,9,7,8,3,5,4,1,2]: 5+7+5+5+2+3+2.
    assert_eq!(bottom["length"], 29);
}

#[test]
fn tableaux_listing_contains_both_display_tableaux() {
    let o = run(&["tableaux", "--r", "3", "--n", "9", "--lambda", "((3,1),(2,1),(1,1))"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(" ([[1,2,3],[4]],[[5,6],[7]],[[8],[9]]) "));
    assert!(text.contains(" ([[1,3,6],[2]],[[4,9],[7]],[[5],[8]]) "));
}

#[test]
fn tableaux_gammas_match_the_recursion() {
    let o = run(&["tableaux", "--r", "2", "--n", "2", "--lambda", "((1),(1))", "--format", "json"]);
    let recs = json_lines(&o);
    let tabs = of_kind(&recs, "tableau");
    let lam: Multipartition = "((1),(1))".parse().unwrap();
    let expect = std_tableaux(&lam);
    assert_eq!(tabs.len(), 2);
    for (rec, t) in tabs.iter().zip(&expect) {
        assert_eq!(rec["tableau"], t.to_string());
        assert_eq!(rec["gamma"], gamma_recursive(t).to_string());
    }
}

#[test]
fn units_are_emitted_per_pair() {
    let o = run(&["units", "--r", "2", "--n", "2", "--lambda", "((1),(1))", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_lines(&o);
    let units = of_kind(&recs, "matrix_unit");
    assert_eq!(units.len(), 4);
    assert!(units.iter().all(|u| !u["terms"].as_array().unwrap().is_empty()));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["verify", "--suite", "engine", "--r", "2", "--n", "3", "--backend", "eval", "--seed", "4"][..],
        &["schur", "--r", "2", "--n", "2", "--format", "json"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["schur", "--r", "2", "--n", "2", "--lambda", "((1),(1),())"][..],
        &["schur", "--r", "2", "--n", "2", "--lambda", "((1),(2))"][..],
        &["verify", "--suite", "bogus", "--r", "2", "--n", "2"][..],
        &["schur", "--r", "2", "--n", "2", "--backend", "eval"][..],
        &["schur", "--r", "0", "--n", "2"][..],
        &["schur", "--r", "3", "--n", "4"][..],
        &["schur", "--r", "2", "--n", "2", "--method", "foo"][..],
        &["schur", "--r", "2", "--n", "2", "--specialize", "q=1,Q1=1"][..],
        &["tableaux", "--r", "2", "--n", "2"][..],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
