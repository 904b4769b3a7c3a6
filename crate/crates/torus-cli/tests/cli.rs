//! End-to-end checks of the `torusdeg` binary: exit codes, file round-trips,
//! and the frozen sweep CSV header.

use std::path::Path;
use std::process::{Command, Output};

fn torusdeg(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torusdeg"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn construct_verify_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let poly = dir.path().join("delta.json");
    let func = dir.path().join("delta_fn.json");
    std::fs::write(
        &func,
        "{\"kind\": \"profile\", \"n\": 8, \"bits\": \"000100000\"}\n",
    )
    .unwrap();

    let out = torusdeg(
        &["construct-delta", "--n", "8", "--w", "3", "--eps", "1/4", "--out", "delta.json"],
        dir.path(),
    );
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(poly.exists());

    // recomputed error is within budget: exit 0
    let ok = torusdeg(
        &["verify", "--poly", "delta.json", "--function", "delta_fn.json", "--eps", "1/4"],
        dir.path(),
    );
    assert!(ok.status.success());
    assert!(stdout(&ok).contains("error:"));

    // an unreachable budget: exit 1
    let tight = torusdeg(
        &["verify", "--poly", "delta.json", "--function", "delta_fn.json", "--eps", "1/1000000"],
        dir.path(),
    );
    assert_eq!(tight.status.code(), Some(1));
}

#[test]
fn usage_and_cap_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // unknown flag: clap exits 2
    let usage = torusdeg(&["construct-delta", "--bogus"], dir.path());
    assert_eq!(usage.status.code(), Some(2));
    // missing input file: exit 2
    let missing = torusdeg(
        &["verify", "--poly", "nope.json", "--function", "nope.json"],
        dir.path(),
    );
    assert_eq!(missing.status.code(), Some(2));
    // oracle cap exceeded: exit 3
    let func = dir.path().join("f.json");
    std::fs::write(&func, "{\"kind\": \"profile\", \"n\": 4, \"bits\": \"01010\"}\n").unwrap();
    let cap = torusdeg(
        &["degree", "--function", "f.json", "--eps", "1/4", "--max-n", "2"],
        dir.path(),
    );
    assert_eq!(cap.status.code(), Some(3));
}

#[test]
fn degree_certificate_file() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("parity.json"),
        "{\"kind\": \"profile\", \"n\": 4, \"bits\": \"01010\"}\n",
    )
    .unwrap();
    let out = torusdeg(
        &["degree", "--function", "parity.json", "--eps", "0", "--out", "cert.json"],
        dir.path(),
    );
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("d_min: 1"));
    let cert: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("cert.json")).unwrap())
            .unwrap();
    assert_eq!(cert["d_min"], 1);
    assert_eq!(cert["witness"]["kind"], "symmetric");
    assert_eq!(cert["infeasible_below"]["degree"], 0);
}

#[test]
fn sweep_csv_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = torusdeg(
        &["sweep", "--n-list", "4", "--w-list", "0,2", "--eps-list", "1/2"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = stdout(&out);
    let header = text.lines().next().unwrap();
    assert_eq!(
        header,
        "construction,n,w,eps,degree,verified_error,verified_error_decimal,oracle_degree,wall_ms"
    );
    assert_eq!(text.lines().filter(|l| l.starts_with("delta,4,")).count(), 2);
}
