//! End-to-end tests of the binary: exit codes, JSON report shape, and the
//! documented command examples.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_periods-lab"))
}

#[test]
fn verify_prec_out_of_bounds_is_usage_error() {
    let out = bin().args(["verify", "--prec", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["verify", "--prec", "101"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = bin().args(["verify", "--bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn list_prints_registry_without_running() {
    let out = bin().args(["verify", "--list"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), periods_core_registry_len());
    assert!(text.contains("legendre_relation_lemniscatic"));
}

fn periods_core_registry_len() -> usize {
    32
}

#[test]
fn filtered_verify_writes_json_with_two_results() {
    let dir = std::env::temp_dir().join("periods_lab_test_json");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let out = bin()
        .args([
            "verify",
            "--filter",
            "legendre_*",
            "--prec",
            "40",
            "--json",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let body = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
    assert_eq!(v["summary"]["passed"], 2);
    assert_eq!(v["prec"], 40);
    // defects travel as decimal strings, never binary floats
    assert!(v["results"][0]["defect"].is_string());
    // round-trip is byte-identical
    let reparsed: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&reparsed).unwrap(),
        serde_json::to_string_pretty(&v).unwrap()
    );
}

#[test]
fn empty_filter_matches_nothing_and_passes() {
    let out = bin()
        .args(["verify", "--filter", "no_match_*", "--prec", "12"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("passed 0 / failed 0"));
}

#[test]
fn elliptic_command_examples() {
    // CM curve at prec 40 prints the lemniscatic period
    let out = bin()
        .args(["elliptic", "--g2", "4", "--g3", "0", "--prec", "40"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("2.622057554292119810464839589891119413683"));
    // negative discriminant: unsupported domain
    let out = bin()
        .args(["elliptic", "--g2", "1", "--g3", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // generic curve at prec 30 keeps the Legendre defect under 1e-20
    let out = bin()
        .args(["elliptic", "--g2", "8", "--g3", "1", "--prec", "30"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let defect_line = text
        .lines()
        .find(|l| l.contains("legendre defect"))
        .unwrap();
    let mag: f64 = defect_line
        .rsplit_once('=')
        .map(|(_, v)| v.trim().parse().unwrap_or(1.0))
        .unwrap();
    assert!(mag < 1e-20, "defect line: {defect_line}");
}

#[test]
fn reduce_command_examples() {
    let out = bin()
        .args([
            "reduce", "--space", "elliptic", "--g2", "4", "--g3", "0", "--R", "x^2", "--S", "0",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1/3 * [dx/y] + 0 * [x dx/y]"));

    let out = bin()
        .args(["reduce", "--space", "gm", "--form", "2*x^-1 + 5*x"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("2 * [dx/x]"));

    let out = bin()
        .args([
            "reduce",
            "--space",
            "twisted-power",
            "--n",
            "2",
            "--form",
            "x^2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("1/2 * [dx]"));

    // parse errors exit 2
    let out = bin()
        .args(["reduce", "--space", "gm", "--form", "2x + y"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // unsupported space value
    let out = bin()
        .args(["reduce", "--space", "weird", "--form", "x"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn relative_log_reduce_matches_pairing() {
    // (dx, (0,0)) on q = 2 reduces to (q−1)·[dx/(q−1)] = 1·[dx/(q−1)]
    let out = bin()
        .args([
            "reduce",
            "--space",
            "relative-log",
            "--q",
            "2",
            "--form",
            "1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1 * [dx/(q-1)] + 0 * [dx/x]"), "{text}");
}

#[test]
fn thread_cap_env_is_honored() {
    let out = bin()
        .env("PERIODS_LAB_THREADS", "1")
        .args(["verify", "--filter", "zeta_*", "--prec", "30"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reduce_json_serializes_certificates() {
    let dir = std::env::temp_dir().join("periods_lab_test_json");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reduction.json");
    let out = bin()
        .args([
            "reduce",
            "--space",
            "elliptic",
            "--g2",
            "4",
            "--g3",
            "0",
            "--R",
            "x^2",
            "--S",
            "0",
            "--json",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["basis"][0]["coefficient"], "1/3");
    assert_eq!(v["certificate"][1]["value"], "1/6");
}
