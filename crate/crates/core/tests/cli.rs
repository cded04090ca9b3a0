use std::process::{Command, Output};

use serde_json::Value;

fn jetdiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jetdiff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn decompose_order_five() {
    let out = jetdiff(&[
        "decompose",
        "--flavor",
        "ds",
        "--jets",
        "3",
        "--dim",
        "3",
        "--order",
        "5",
        "--cross-check",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"], "decompose");
    assert_eq!(v["results"][0]["terms"], 3);
    assert_eq!(v["results"][0]["total_dimension"], 44);
    assert_eq!(v["checks"][0]["pass"], true);
    assert_eq!(v["checks"][0]["computed"], "44");
}

#[test]
fn relation_suite_passes() {
    let out = jetdiff(&["verify", "--suite", "relations"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["name"] == "relation R expands to zero" && c["pass"] == true));
    assert!(checks
        .iter()
        .all(|c| c["anchor"].as_str().is_some_and(|a| !a.is_empty())));
}

#[test]
fn threshold_compact_three_jets() {
    let out = jetdiff(&[
        "threshold",
        "--geometry",
        "hypersurface-p4",
        "--flavor",
        "ds",
        "--jets",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"][0]["threshold"], 43);
    assert_eq!(
        v["results"][0]["boundary_signs"],
        serde_json::json!([[42, -1], [43, 1]])
    );
}

#[test]
fn threshold_without_sign_change() {
    let out = jetdiff(&[
        "threshold",
        "--geometry",
        "hypersurface-p4",
        "--flavor",
        "ds",
        "--jets",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"][0]["threshold"], Value::Null);
}

#[test]
fn leading_polynomial_and_rationals() {
    let out = jetdiff(&[
        "leading",
        "--geometry",
        "log-p3",
        "--flavor",
        "ds",
        "--jets",
        "1",
        "--poly-in-d",
        "--degree",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"][1]["value"], "1/4");
    assert_eq!(v["results"][2]["polynomial_in_d"], "1/12*d - 1/6");
}

#[test]
fn euler_example() {
    let out = jetdiff(&[
        "euler",
        "--geometry",
        "hypersurface-p4",
        "--degree",
        "1",
        "--flavor",
        "ds",
        "--jets",
        "3",
        "--order",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"][0]["chi"], "-1");
}

#[test]
fn usage_errors() {
    for args in [
        &["decompose", "--flavor", "ds", "--jets", "4", "--order", "3"][..],
        &["report"],
        &["oracle", "--dim", "3", "--max-order", "17"],
        &["--format", "csv", "verify"],
        &["frobnicate"],
    ] {
        assert_eq!(jetdiff(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn oracle_csv() {
    let out = jetdiff(&[
        "--format",
        "csv",
        "oracle",
        "--dim",
        "2",
        "--max-order",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "m,oracle,theorem,pass\n1,2,2,true\n2,3,3,true\n3,5,5,true\n4,7,7,true\n5,11,11,true\n"
    );
}

#[test]
fn reference_report_is_stable_and_flags_two_constants() {
    let first = jetdiff(&["report", "--paper"]);
    let second = jetdiff(&["report", "--paper"]);
    assert_eq!(first.stdout, second.stdout);
    // the two printed log constants that disagree with the computation
    assert_eq!(first.status.code(), Some(1));
    let v = json(&first);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        failed,
        [
            "ds k=2 log-p3 coefficient of d^0",
            "ds k=3 log-p3 coefficient of d^0"
        ]
    );
    let computed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["computed"].as_str().unwrap())
        .collect();
    assert_eq!(computed, ["-1/729", "-1513/637875000"]);
}
