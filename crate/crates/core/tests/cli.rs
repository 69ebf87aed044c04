use std::process::{Command, Output};

use serde_json::Value;

fn anisokin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anisokin"))
        .args(args)
        .env_remove("ANISOKIN_ATOL")
        .env_remove("ANISOKIN_RTOL")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn compose_example() {
    let out = anisokin(&["compose", "--a", "0.1,0,0", "--b", "0.2,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let r = v["result"].as_array().unwrap();
    assert!((r[0].as_f64().unwrap() - 0.2941176).abs() < 1e-7);
    assert_eq!(r[1].as_f64(), Some(0.0));
    assert_eq!(r[2].as_f64(), Some(0.0));
}

#[test]
fn dispersion_at_rest() {
    let out = anisokin(&["dispersion", "--mass", "1", "--momentum", "0,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["energy"].as_f64(), Some(1.0));
}

#[test]
fn ledger_group_law_entry() {
    let out = anisokin(&["ledger", "--seed", "7", "--samples", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let entry = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["identity_id"] == "3.30")
        .unwrap();
    assert_eq!(entry["verdict"], "holds-exactly");
    assert_eq!(entry["seed"], 7);
    assert_eq!(entry["samples"], 5);
}

#[test]
fn domain_error_exit_code_and_message() {
    let out = anisokin(&["invert", "--s", "0.9,0.5,-0.9"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("1−s¹−s²+s³ ≤ 0"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn unchecked_admits_boundary_velocities() {
    let out = anisokin(&[
        "--unchecked",
        "compose",
        "--a",
        "1,1,1",
        "--b",
        "0.1,0.2,0.3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r: Vec<f64> = json(&out)["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    for x in r {
        assert!((x - 1.0).abs() < 1e-15);
    }
    assert_eq!(
        anisokin(&["compose", "--a", "1,1,1", "--b", "0,0,0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["compose", "--a", "0.1,0"][..],
        &["length"],
        &["--format", "xml", "invert", "--s", "0,0,0"],
        &["--rtol", "-1", "invert", "--s", "0,0,0"],
        &["verify", "--suite", "no-such-suite", "--samples", "1"],
    ] {
        assert_eq!(anisokin(args).status.code(), Some(64), "{args:?}");
    }
}

#[test]
fn verification_failure_exit_3() {
    let out = anisokin(&[
        "--rtol",
        "1e-30",
        "--atol",
        "1e-300",
        "verify",
        "--suite",
        "oracle-agreement",
        "--samples",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["passed"], false);

    let out = anisokin(&["sync-check", "--u", "0.1,0.2,0.3", "--threshold", "1e-30"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_passes_and_respects_env_tolerance() {
    let out = anisokin(&["verify", "--suite", "length-invariance", "--samples", "200"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["suites"][0]["threshold"].as_f64(), Some(1e-12));

    let out = Command::new(env!("CARGO_BIN_EXE_anisokin"))
        .args(["verify", "--suite", "length-invariance", "--samples", "200"])
        .env("ANISOKIN_RTOL", "1e-9")
        .output()
        .unwrap();
    assert_eq!(json(&out)["suites"][0]["threshold"].as_f64(), Some(1e-9));
}

#[test]
fn sweep_prints_csv_table() {
    let out = anisokin(&[
        "approx",
        "--op",
        "a-series",
        "--s",
        "0.1,0.2,0.3",
        "--sweep",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "level,scale,abs_error");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("0,1,"));

    let out = anisokin(&[
        "--format",
        "json",
        "approx",
        "--op",
        "compose-series",
        "--a",
        "0.1,0,0",
        "--b",
        "0,0.1,0",
        "--sweep",
        "2",
    ]);
    assert_eq!(json(&out)["claimed_order"], 3);
}

#[test]
fn single_series_evaluation() {
    let out = anisokin(&[
        "approx",
        "--op",
        "energy-series",
        "--mass",
        "1",
        "--momentum",
        "0.1,0,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["series"]["value"].as_f64().is_some());
    assert!((v["exact"].as_f64().unwrap() - 1.01f64.sqrt()).abs() < 1e-15);

    let out = anisokin(&["approx", "--op", "a-series"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn other_single_shot_commands() {
    let out = anisokin(&["transform", "--s", "0.6,0,0", "--y", "1,0,0,0"]);
    let y: Vec<f64> = json(&out)["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert!((y[0] - 1.25).abs() < 1e-15 && (y[1] - 0.75).abs() < 1e-15);

    let out = anisokin(&["boost-matrix", "--s", "0,0,0"]);
    assert_eq!(json(&out)["result"][2][2].as_f64(), Some(1.0));

    let out = anisokin(&["length", "--y", "2,0,0,0"]);
    assert_eq!(json(&out)["length"].as_f64(), Some(2.0));

    let out = anisokin(&["hamiltonian", "--p", "3,0,0,0"]);
    assert_eq!(json(&out)["hamiltonian"].as_f64(), Some(3.0));

    let out = anisokin(&["momentum", "--mass", "2", "--v", "1,0,0,0"]);
    let v = json(&out);
    assert_eq!(v["momentum"][0].as_f64(), Some(2.0));
    assert_eq!(v["hamiltonian"].as_f64(), Some(2.0));

    let out = anisokin(&["subtract", "--a", "0.1,0.2,0.3", "--b", "0.1,0.2,0.3"]);
    assert_eq!(json(&out)["result"], serde_json::json!([0.0, 0.0, 0.0]));
}

#[test]
fn csv_output_for_ledger_and_results() {
    let out = anisokin(&[
        "--format",
        "csv",
        "ledger",
        "--id",
        "3.28",
        "--samples",
        "3",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("identity_id,verdict,contested,seed,samples,witness_inputs,witness_detail")
    );
    assert!(lines.next().unwrap().starts_with("3.28,fails,true,7,3,"));

    let out = anisokin(&[
        "--format",
        "csv",
        "dispersion",
        "--mass",
        "1",
        "--momentum",
        "0,0,0",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("energy,iterations,residual"));
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let args = ["ledger", "--seed", "11", "--samples", "4"];
    assert_eq!(anisokin(&args).stdout, anisokin(&args).stdout);

    let out = anisokin(&["invert", "--s", "0.1,0.2,0.3"]);
    let parsed: Vec<f64> = json(&out)["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    let direct = anisokin::invert(&anisokin::Velocity3::new(0.1, 0.2, 0.3).unwrap()).unwrap();
    assert_eq!(parsed, direct.components().to_vec());
}
