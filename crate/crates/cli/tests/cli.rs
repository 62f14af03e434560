use std::process::{Command, Output};

use serde_json::Value;

fn omin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omin")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_single_suite() {
    let out = omin(&["verify", "flags", "--seed", "3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["suite"], "flags");
    assert_eq!(v["failed"], 0);
    assert_eq!(v["elapsed_ms"], 0);
}

#[test]
fn suite_flag_overrides_positional() {
    let v = json(&omin(&["verify", "--suite", "chevalley", "--json"]));
    assert_eq!(v["suite"], "chevalley");
    assert_eq!(v["cases"], 21);
}

#[test]
fn trials_scale_the_sampled_suites() {
    let small = json(&omin(&["verify", "kks", "--trials", "2"]));
    let big = json(&omin(&["verify", "kks", "--trials", "4"]));
    assert_eq!(small["failed"], 0);
    assert!(big["cases"].as_u64() > small["cases"].as_u64());
}

#[test]
fn samples_are_seeded() {
    for kind in ["orbit", "quiver", "window"] {
        let a = omin(&["sample", kind, "--seed", "9", "--count", "3"]);
        assert!(a.status.success());
        assert_eq!(json(&a).as_array().map(Vec::len), Some(3));
        assert_eq!(a.stdout, omin(&["sample", kind, "--seed", "9", "--count", "3"]).stdout);
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(omin(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(omin(&["sample"]).status.code(), Some(2));
    assert_eq!(omin(&["verify", "--seed", "x"]).status.code(), Some(2));
}
