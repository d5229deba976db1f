use std::process::{Command, Output};

use serde_json::Value;

fn mckay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckay")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verify_all_is_deterministic() {
    let args = ["verify", "--all", "--max-rank", "6", "--format", "json"];
    let (a, b) = (mckay(&args), mckay(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_json_shape() {
    let out = mckay(&["verify", "--family", "E", "--rank", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let case = &v[0];
    assert_eq!(case["type"], "E7");
    let checks = case["checks"].as_array().unwrap();
    assert_eq!(checks[0]["name"], "group order");
    assert_eq!(checks[0]["actual"], "48");
    for c in checks {
        assert!(["pass", "flagged", "skipped"].contains(&c["status"].as_str().unwrap()), "{c}");
        assert!(c["oracle"].is_string() && c["expected"].is_string());
    }
    assert_eq!(case["comparison"]["mu"], 7);
    assert_eq!(case["comparison"]["classes"], 8);
}

#[test]
fn d_spectrum_is_flagged() {
    let out = mckay(&["verify", "--family", "D", "--rank", "6", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    let line = stdout(&out).lines().find(|l| l.split('\t').nth(1) == Some("spectrum")).unwrap().to_string();
    assert_eq!(line.split('\t').nth(2), Some("flagged"));
}

#[test]
fn spectrum_json_for_e6() {
    let out = mckay(&["spectrum", "--family", "E", "--rank", "6", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["mu"], 6);
    assert_eq!(v["d"], 12);
    let lambdas: Vec<&str> = v["spectrum"].as_array().unwrap().iter().map(|e| e["lambda"].as_str().unwrap()).collect();
    assert_eq!(lambdas, ["1/12", "1/3", "5/12", "7/12", "2/3", "11/12"]);
}

#[test]
fn spectrum_of_user_polynomial() {
    let out = mckay(&["spectrum", "--poly", "x^2 + y^3 + z^7", "--format", "tsv", "--raw-grading"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let total: u64 = text.lines().map(|l| l.split('\t').nth(1).unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 12);
    assert!(text.starts_with("41/42\t1"));
}

#[test]
fn quiver_dot_output() {
    let out = mckay(&["quiver", "--family", "E", "--rank", "8", "--extended", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("graph "));
    assert_eq!(text.matches(" -- ").count(), 8);
    assert!(text.trim_end().ends_with('}'));
}

#[test]
fn coxeter_tsv() {
    let out = mckay(&["coxeter", "--family", "E", "--rank", "8", "--format", "tsv"]);
    let exps: Vec<String> = stdout(&out).lines().map(|l| l.split('\t').next().unwrap().to_string()).collect();
    assert_eq!(exps, ["1/30", "7/30", "11/30", "13/30", "17/30", "19/30", "23/30", "29/30"]);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["group", "--family", "Q", "--rank", "3"],
        vec!["group", "--family", "A", "--rank", "0"],
        vec!["group", "--family", "D", "--rank", "3"],
        vec!["chartable", "--family", "A", "--rank", "2", "--format", "dot"],
        vec!["spectrum", "--poly", "x^3 + y^2 + z^2 + x*y"],
        vec!["spectrum", "--poly", "x^2*y + z^2"],
        vec!["frobnicate"],
    ] {
        let out = mckay(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}
