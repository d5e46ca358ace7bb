//! End-to-end tests of the `ekr` binary: every documented exit code,
//! format handling, and byte-identical determinism.

use std::process::{Command, Output};

fn ekr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ekr"))
        .args(args)
        .env_remove("EKR_WORKERS")
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn exit_0_construct_ok() {
    let out = ekr(&["construct", "nobo", "--p", "3", "--d", "1"]);
    assert_eq!(exit_code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"schema\": \"ekr/1\""));
    assert!(text.contains("\"name\": \"nobo-q3\""));
}

#[test]
fn exit_1_verify_mismatch() {
    let out = ekr(&["verify-paper", "--only", "sl23-non-coset-witness"]);
    assert_eq!(exit_code(&out), 1);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"status\": \"fail\""));
    assert!(String::from_utf8_lossy(&out.stderr).contains("sl23-non-coset-witness"));
}

#[test]
fn exit_2_invalid_params() {
    // Missing required flag.
    assert_eq!(exit_code(&ekr(&["construct", "nobo"])), 2);
    // Unknown construction.
    assert_eq!(exit_code(&ekr(&["construct", "no-such-thing"])), 2);
    // Composite characteristic.
    assert_eq!(
        exit_code(&ekr(&["construct", "nobo", "--p", "4", "--d", "1"])),
        2
    );
    // Unknown claim id.
    assert_eq!(exit_code(&ekr(&["verify-paper", "--only", "nope"])), 2);
    // Structured report in csv.
    assert_eq!(
        exit_code(&ekr(&[
            "analyze", "nobo", "--p", "3", "--d", "1", "--checks", "max", "--format", "csv",
        ])),
        2
    );
}

#[test]
fn exit_3_cap_exceeded() {
    let out = ekr(&["construct", "nobo", "--p", "5", "--d", "1", "--cap", "100"]);
    assert_eq!(exit_code(&out), 3);
    let out = ekr(&[
        "analyze",
        "table1",
        "--row",
        "1",
        "--checks",
        "max",
        "--clique-cap",
        "10",
    ]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn exit_4_not_computed() {
    let dir = std::env::temp_dir().join("ekr-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sym4.json");
    std::fs::write(
        &path,
        r#"{"schema":"ekr/1","kind":"group","degree":4,"generators":["(0 1)","(0 1 2 3)"]}"#,
    )
    .unwrap();
    let out = ekr(&[
        "analyze",
        "--input",
        path.to_str().unwrap(),
        "--checks",
        "strict",
        "--enum-limit",
        "1",
    ]);
    assert_eq!(exit_code(&out), 4);
    // The partial report is still printed before the exit.
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"strict-ekr\": \"not-computed\""));
    // With the default budget the same analysis completes.
    let out = ekr(&["analyze", "--input", path.to_str().unwrap(), "--checks", "strict"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn construct_output_is_byte_identical() {
    for format in ["json", "csv", "table"] {
        let a = ekr(&["construct", "asc", "--f", "2", "--format", format]);
        let b = ekr(&["construct", "asc", "--f", "2", "--format", format]);
        assert_eq!(exit_code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "format {format}");
    }
}

#[test]
fn csv_is_flat_key_value() {
    let out = ekr(&["construct", "wreath", "--n", "3", "--ell", "2", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().contains("key,value"));
    assert!(text.contains("degree,9"));
}

#[test]
fn workers_env_fallback_and_flag() {
    let flag = Command::new(env!("CARGO_BIN_EXE_ekr"))
        .args(["verify-paper", "--only", "rms-bounds", "--workers", "2"])
        .output()
        .unwrap();
    let env = Command::new(env!("CARGO_BIN_EXE_ekr"))
        .args(["verify-paper", "--only", "rms-bounds"])
        .env("EKR_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(flag.status.code(), Some(0));
    assert_eq!(flag.stdout, env.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_ekr"))
        .args(["verify-paper", "--only", "rms-bounds"])
        .env("EKR_WORKERS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn analyze_psl2_construction() {
    let out = ekr(&[
        "analyze", "psl2", "--p", "5", "--family", "d-plus", "--checks", "max",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    // A4 of order 12 beats the order-6 point stabilizer here.
    assert!(text.contains("\"max_intersecting\": 12"));
    assert!(text.contains("\"ekr\": \"fails\""));
}
