//! End-to-end tests of the `isoplex` binary: exit codes, text and JSON
//! output, certificate round trips, and geometry export.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const CONIC: &str = "x0^2 + x1^2 - x2^2\n";
const POSITIVE: &str = "x0^2 + x1^2 + x2^2\n";
/// Indefinite quartic with four ovals; certifying it needs many refinements,
/// so a zero budget is guaranteed to exhaust.
const QUARTIC: &str = "x0^4 + 2 x0^2 x1^2 + x1^4 - 2 x0^2 x2^2 - 2 x1^2 x2^2 \
                       + x2^4 + 1/2 x0^3 x1 - 1/2 x0 x1^3\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_isoplex"))
}

fn write(dir: &TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn run(cmd: &mut Command) -> (Output, String, String) {
    let out = cmd.output().expect("spawning the isoplex binary");
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();
    (out, stdout, stderr)
}

#[track_caller]
fn expect_code(cmd: &mut Command, want: i32) -> (String, String) {
    let (out, stdout, stderr) = run(cmd);
    assert_eq!(
        out.status.code(),
        Some(want),
        "expected exit {want}\n--- stdout ---\n{stdout}\n--- stderr ---\n{stderr}"
    );
    (stdout, stderr)
}

fn solve_to_cert(dir: &TempDir, sys_path: &Path) -> PathBuf {
    let cert = dir.path().join("model.cert");
    expect_code(bin().arg("solve").arg(sys_path).arg("--out").arg(&cert), 0);
    cert
}

// ---------------------------------------------------------------------------
// solve

#[test]
fn solve_certifies_a_conic_and_writes_the_certificate() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "conic.sys", CONIC);
    let cert = dir.path().join("conic.cert");
    let (stdout, _) = expect_code(bin().arg("solve").arg(&sys).arg("--out").arg(&cert), 0);
    assert!(stdout.contains("status: certified"), "stdout:\n{stdout}");
    assert!(
        stdout.contains("verify:"),
        "fresh certificates are replayed by default\n{stdout}"
    );
    assert!(stdout.contains("guarantee:"), "stdout:\n{stdout}");
    let text = std::fs::read_to_string(&cert).unwrap();
    for section in ["[header]", "[vertices]", "[cones]", "[tilde]", "[face "] {
        assert!(text.contains(section), "certificate lacks {section}");
    }
}

#[test]
fn solve_reports_budget_exhaustion() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "quartic.sys", QUARTIC);
    let (stdout, _) = expect_code(
        bin()
            .arg("solve")
            .arg(&sys)
            .arg("--max-refinements")
            .arg("0"),
        2,
    );
    assert!(
        stdout.contains("status: budget-exhausted"),
        "stdout:\n{stdout}"
    );
}

#[test]
fn solve_rejects_malformed_input() {
    let dir = TempDir::new().unwrap();
    // inhomogeneous polynomial
    let sys = write(&dir, "bad.sys", "x0^2 + x1\n");
    let (_, stderr) = expect_code(bin().arg("solve").arg(&sys), 1);
    assert!(stderr.contains("error:"), "stderr:\n{stderr}");
}

#[test]
fn solve_rejects_a_missing_file() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("nope.sys");
    let (_, stderr) = expect_code(bin().arg("solve").arg(&missing), 1);
    assert!(stderr.contains("error:"), "stderr:\n{stderr}");
}

#[test]
fn solve_json_output_is_machine_readable() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "conic.sys", CONIC);
    let (stdout, _) = expect_code(bin().arg("solve").arg(&sys).arg("--format").arg("json"), 0);
    let obj: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(obj["status"], "certified");
    assert_eq!(obj["verified"], true);
    assert_eq!(obj["m"], 1);
    assert_eq!(obj["nvars"], 3);
    assert!(obj["cones"].as_u64().unwrap() > 0);
    assert!(obj["solve_ms"].as_f64().unwrap() >= 0.0);
    assert!(obj["certificate"].is_null());
}

// ---------------------------------------------------------------------------
// verify

#[test]
fn verify_accepts_a_fresh_certificate() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "conic.sys", CONIC);
    let cert = solve_to_cert(&dir, &sys);
    let (stdout, _) = expect_code(bin().arg("verify").arg(&sys).arg(&cert), 0);
    assert!(stdout.contains("verify:"), "stdout:\n{stdout}");
    let (stdout, _) = expect_code(
        bin()
            .arg("verify")
            .arg(&sys)
            .arg(&cert)
            .arg("--format")
            .arg("json"),
        0,
    );
    let obj: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(obj["ok"], true);
    assert!(obj["faces"].as_u64().unwrap() > 0);
}

#[test]
fn verify_rejects_a_flipped_sign_claim() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "conic.sys", CONIC);
    let cert = solve_to_cert(&dir, &sys);
    let text = std::fs::read_to_string(&cert).unwrap();
    let tampered = if text.contains("+)") {
        text.replacen("+)", "-)", 1)
    } else {
        text.replacen("-)", "+)", 1)
    };
    let bad = write(&dir, "tampered.cert", &tampered);
    let (_, stderr) = expect_code(bin().arg("verify").arg(&sys).arg(&bad), 3);
    assert!(stderr.contains("rejected at face"), "stderr:\n{stderr}");
}

#[test]
fn verify_flags_a_corrupt_certificate_as_malformed() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "conic.sys", CONIC);
    let cert = solve_to_cert(&dir, &sys);
    let text = std::fs::read_to_string(&cert).unwrap();
    let bad = write(
        &dir,
        "corrupt.cert",
        &text.replacen("[header]", "[helder]", 1),
    );
    let (_, stderr) = expect_code(bin().arg("verify").arg(&sys).arg(&bad), 1);
    assert!(stderr.contains("error:"), "stderr:\n{stderr}");
}

#[test]
fn verify_rejects_a_certificate_for_a_different_system() {
    let dir = TempDir::new().unwrap();
    let conic = write(&dir, "conic.sys", CONIC);
    let cert = solve_to_cert(&dir, &conic);
    let positive = write(&dir, "positive.sys", POSITIVE);
    // same shape (one quadric in three variables), different zero set
    expect_code(bin().arg("verify").arg(&positive).arg(&cert), 3);
}

// ---------------------------------------------------------------------------
// topo

#[test]
fn topo_analyzes_a_certificate_and_exports_geometry() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "conic.sys", CONIC);
    let cert = solve_to_cert(&dir, &sys);
    let off = dir.path().join("model.off");
    let (stdout, _) = expect_code(
        bin()
            .arg("topo")
            .arg(&sys)
            .arg("--cert")
            .arg(&cert)
            .arg("--off")
            .arg(&off),
        0,
    );
    assert!(stdout.contains("components: 1"), "stdout:\n{stdout}");
    assert!(stdout.contains("betti:"), "stdout:\n{stdout}");
    let off_text = std::fs::read_to_string(&off).unwrap();
    assert!(off_text.starts_with("OFF\n"), "off:\n{off_text}");
    // a projective conic is a curve, so the cells live in the edge sidecar
    let edges = std::fs::read_to_string(dir.path().join("model.off.edges")).unwrap();
    assert!(!edges.trim().is_empty());
}

#[test]
fn topo_reports_an_empty_variety() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "positive.sys", POSITIVE);
    let (stdout, _) = expect_code(bin().arg("topo").arg(&sys), 0);
    assert!(stdout.contains("empty"), "stdout:\n{stdout}");
}

#[test]
fn topo_propagates_budget_exhaustion() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "quartic.sys", QUARTIC);
    expect_code(
        bin()
            .arg("topo")
            .arg(&sys)
            .arg("--max-refinements")
            .arg("0"),
        2,
    );
}

#[test]
fn topo_json_matches_the_text_report() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "conic.sys", CONIC);
    let (stdout, _) = expect_code(bin().arg("topo").arg(&sys).arg("--format").arg("json"), 0);
    let obj: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(obj["components"], 1);
    assert_eq!(obj["betti"][0], 1);
    assert_eq!(obj["euler"], 0);
    assert!(obj["off"].is_null());
}

// ---------------------------------------------------------------------------
// bench

#[test]
fn bench_runs_and_summarizes() {
    let (stdout, _) = expect_code(
        bin()
            .arg("bench")
            .arg("--count")
            .arg("2")
            .arg("--nvars")
            .arg("3")
            .arg("--degree")
            .arg("2")
            .arg("--rng-seed")
            .arg("1"),
        0,
    );
    assert!(stdout.contains("summary:"), "stdout:\n{stdout}");
    assert!(stdout.contains("/2 certified"), "stdout:\n{stdout}");
}

#[test]
fn bench_json_emits_a_summary_record() {
    let (stdout, _) = expect_code(
        bin()
            .arg("bench")
            .arg("--count")
            .arg("1")
            .arg("--degree")
            .arg("2")
            .arg("--rng-seed")
            .arg("1")
            .arg("--format")
            .arg("json"),
        0,
    );
    let last = stdout.trim().lines().last().unwrap();
    let obj: serde_json::Value = serde_json::from_str(last).unwrap();
    assert_eq!(obj["cmd"], "bench-summary");
    assert_eq!(obj["count"], 1);
}

#[test]
fn bench_validates_its_arguments() {
    let (_, stderr) = expect_code(bin().arg("bench").arg("--nvars").arg("1"), 1);
    assert!(stderr.contains("error:"), "stderr:\n{stderr}");
}
