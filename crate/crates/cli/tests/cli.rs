//! End-to-end runs of the `klab` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn klab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klab"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

const FIG1: &str = "1,4,1,1,2,3";
const FIG2: &str = "1,1,2,0,1,1";

#[test]
fn classify_figure_one() {
    let v = json(&klab(&["classify", "--xi", FIG1]));
    let c = &v["classification"];
    assert_eq!(c["kind"], "origin-ellipses");
    assert_eq!(c["mode"]["kind"], "exact");
    let e = c["ellipses"].as_array().unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e[0]["minor_sq"]["rational"], "5");
    assert_eq!(e[0]["half_focal"]["sqrt2"], serde_json::json!(["0", "1"]));
}

#[test]
fn zero_xi_gives_degenerate_concentric_segments() {
    let v = json(&klab(&["classify", "--xi", "0,0,0,0,0,0"]));
    let c = &v["classification"];
    assert_eq!(c["kind"], "all-concentric");
    assert!(c["ellipses"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["degenerate"] == true));
}

#[test]
fn verify_figure_two() {
    let v = json(&klab(&[
        "classify", "--xi", FIG2, "--verify", "--grid", "512",
    ]));
    assert_eq!(v["classification"]["kind"], "all-concentric");
    assert_eq!(v["verification"]["agrees"], true);
    assert!(
        v["verification"]["verification"]["max_residual"]
            .as_f64()
            .unwrap()
            < 1e-7
    );
}

#[test]
fn input_file_matches_inline_entries() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("xi.json");
    std::fs::write(&path, r#"{"n": 7, "xi": [1, 4, 1, 1, 2, 3]}"#).unwrap();
    let from_file = json(&klab(&["classify", "--input", path.to_str().unwrap()]));
    let inline = json(&klab(&["classify", "--xi", FIG1]));
    assert_eq!(from_file["classification"], inline["classification"]);
}

#[test]
fn reproduce_writes_json_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = klab(&[
        "reproduce",
        "3",
        "--grid",
        "512",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    let printed = json(&out);
    let written: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("fig3.json")).unwrap())
            .unwrap();
    assert_eq!(printed, written);
    let svg = std::fs::read_to_string(dir.path().join("fig3.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<polyline"));
}

#[test]
fn catalog_lists_sixteen_verified_entries() {
    let v = json(&klab(&["catalog"]));
    assert_eq!(v["total"], 16);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 16);
    assert!(entries.iter().all(|e| e["verified"] == true));
}

#[test]
fn sample_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curve.csv");
    let out = klab(&[
        "sample",
        "--xi",
        FIG1,
        "--grid",
        "64",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta,branch,x,y,flag"));
    assert_eq!(lines.count(), 64 * 7);
}

#[test]
fn check_commands() {
    let v = json(&klab(&["check-origin", "--xi", FIG1, "--k", "2"]));
    assert_eq!(v["reports"][0]["verdict"], "holds");
    let v = json(&klab(&["check-origin", "--xi", FIG1]));
    assert_eq!(v["reports"].as_array().unwrap().len(), 3);
    let v = json(&klab(&["check-concentric", "--xi", FIG2]));
    assert_eq!(v["report"]["verdict"], "holds");
    let v = json(&klab(&[
        "check-shifted",
        "--xi",
        "sqrt2+1,0,sqrt2+1,0,sqrt2-1,2",
        "--p",
        "(sqrt(2+sqrt2)-sqrt(2-sqrt2))/2",
        "--x",
        "(sqrt(2+sqrt2)+sqrt(2-sqrt2))/2",
    ]));
    assert_eq!(v["report"]["verdict"], "holds");
}

#[test]
fn exit_codes() {
    assert_eq!(klab(&["classify", "--xi", "1,x"]).status.code(), Some(1));
    assert_eq!(
        klab(&["classify", "--xi", "1.5,2", "--exact"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(klab(&["reproduce", "7"]).status.code(), Some(1));
    assert_eq!(
        klab(&["check-origin", "--xi", FIG1, "--k", "9"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(klab(&["--help"]).status.code(), Some(0));
    assert_eq!(
        klab(&["classify", "--input", "/nonexistent/xi.json"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_klab"))
            .args(["sample", "--xi", FIG1, "--grid", "256"])
            .env("KLAB_THREADS", threads)
            .output()
            .unwrap()
    };
    let (one, four) = (run("1"), run("4"));
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(
        klab(&["classify", "--xi", FIG2]).stdout,
        klab(&["classify", "--xi", FIG2]).stdout
    );
    assert_eq!(run("zero").status.code(), Some(1));
}

#[test]
fn out_flag_writes_file_instead_of_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = klab(&["classify", "--xi", FIG1, "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert!(Path::new(&path).exists());
}
