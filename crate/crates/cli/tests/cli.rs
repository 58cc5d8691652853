use std::path::Path;
use std::process::{Command, Output};

use affwhit_cli::config::{self, RunConfig};
use serde_json::Value;

fn affwhit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affwhit")).args(args).output().expect("binary runs")
}

fn report(args: &[&str], out: &Path) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--out", out.to_str().unwrap()]);
    let o = affwhit(&full);
    let text = std::fs::read_to_string(out).expect("report written");
    (o.status.code().unwrap(), serde_json::from_str(&text).unwrap())
}

#[test]
fn exit_code_tracks_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let (code, r) = report(&["whittaker", "--preset", "sl2"], &out);
    assert_eq!(r["dimension"], 3);
    assert_eq!(code, 2);
    let (code, r) = report(&["whittaker", "--preset", "sl2", "-J", "4"], &out);
    assert_eq!(r["dimension"], 1);
    assert_eq!(code, 0);
    let (code, r) = report(&["whittaker", "--preset", "sl2-loop"], &out);
    assert_eq!((code, r["dimension"].as_u64()), (0, Some(1)));
}

#[test]
fn errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let improper = dir.path().join("improper.json");
    std::fs::write(&improper, r#"{"algebra":{"type":"A","rank":1,"levi":[1]}}"#).unwrap();
    let typo = dir.path().join("typo.json");
    std::fs::write(&typo, r#"{"algebra":{"type":"A","rank":1},"lamda":{}}"#).unwrap();
    let missing = dir.path().join("missing.json");
    for args in [
        vec!["describe", "--config", improper.to_str().unwrap()],
        vec!["describe", "--config", typo.to_str().unwrap()],
        vec!["describe", "--config", missing.to_str().unwrap()],
        vec!["whittaker", "--preset", "sl2", "--config", typo.to_str().unwrap()],
        vec!["bracket", "X[a1]@t^", "d"],
    ] {
        let o = affwhit(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for args in [
        ["tensor", "--preset", "sl2-tensor"],
        ["whittaker", "--preset", "sl3-borel"],
        ["check-seq", "--preset", "geometric-family"],
    ] {
        report(&args, &a);
        report(&args, &b);
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap(), "{args:?}");
    }
}

#[test]
fn echoed_config_reproduces_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let (_, r) = report(&["whittaker", "--preset", "sl3-borel", "-J", "3"], &first);
    let cfg: RunConfig = serde_json::from_value(r["config"].clone()).unwrap();
    assert_eq!(cfg.truncation.window, 3);
    let saved = dir.path().join("cfg.json");
    std::fs::write(&saved, serde_json::to_string(&cfg).unwrap()).unwrap();
    let second = dir.path().join("second.json");
    let (code, again) = report(&["whittaker", "--config", saved.to_str().unwrap()], &second);
    assert_eq!(code, 0);
    assert_eq!(again, r);
}

#[test]
fn tensor_rejects_mismatched_algebras() {
    let dir = tempfile::tempdir().unwrap();
    let partner = dir.path().join("partner.json");
    let cfg = config::preset("sl3-borel").unwrap();
    std::fs::write(&partner, serde_json::to_string(&cfg).unwrap()).unwrap();
    let o = affwhit(&["tensor", "--preset", "sl2", "--partner", partner.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bracket_prints_central_term() {
    let o = affwhit(&["bracket", "X[a1]@t^1", "X[-a1]@t^-1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.contains("H[1]@t^0 + 4*c"), "{s}");
}

#[test]
fn json_flag_prints_the_report() {
    let o = affwhit(&["describe", "--preset", "sl3-borel", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "describe");
}
