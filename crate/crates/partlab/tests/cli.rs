//! End-to-end checks of the `partlab` binary: worked examples on stdout,
//! exit-code contract (0 success, 1 mismatch/violation, 2 usage), and the
//! b-file round trip through a real file.

use std::io::Write;
use std::process::{Command, Output};

fn partlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partlab"))
        .args(args)
        .env_remove("PARTLAB_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn glaisher_worked_example() {
    let out = partlab(&["glaisher", "--m", "2", "--partition", "(4,2,1)"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).trim(), "(1,1,1,1,1,1,1)");

    let back = partlab(&["glaisher", "--m", "7", "--partition", "(1,1,1,1,1,1,1)"]);
    assert_eq!(stdout(&back).trim(), "(7)");
}

#[test]
fn glaisher_usage_errors() {
    let out = partlab(&["glaisher", "--m", "1", "--partition", "(2,1)"]);
    assert_eq!(exit_code(&out), 2);
    let out = partlab(&["glaisher", "--m", "2", "--partition", "(1,2)"]);
    assert_eq!(exit_code(&out), 2);
    // clap-level usage error
    let out = partlab(&["glaisher", "--m", "2"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn series_bfile_output_round_trips() {
    let out = partlab(&["series", "--regular", "2", "--distinct", "2", "--order", "10"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let file = partlab::io::BFile::parse(&text).expect("emitted b-file parses");
    let series = partlab::genfun::regular_distinct(
        partlab::Modulus::new(2).unwrap(),
        partlab::Modulus::new(2).unwrap(),
        10,
    );
    assert!(partlab::io::compare(&series, &file, 1, 0).full_agreement());
}

#[test]
fn series_both_mode_confirms_formula_against_oracle() {
    for class in [
        &["--regular", "3", "--distinct", "3"][..],
        &["--regular", "2", "--flat", "3"][..],
        &["--distinct", "3", "--flat", "3"][..],
        &["--regular", "2", "--distinct", "2", "--flat", "3"][..],
    ] {
        let mut args = vec!["series"];
        args.extend_from_slice(class);
        args.extend_from_slice(&["--order", "25", "--both"]);
        let out = partlab(&args);
        assert_eq!(exit_code(&out), 0, "class {:?}: {:?}", class, out);
    }
}

#[test]
fn series_json_format() {
    let out = partlab(&[
        "series", "--flat", "2", "--order", "8", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["coefficients"][0], "1");
}

#[test]
fn series_env_variable_sets_order_flag_wins() {
    let out = Command::new(env!("CARGO_BIN_EXE_partlab"))
        .args(["series", "--regular", "2", "--format", "json"])
        .env("PARTLAB_ORDER", "7")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["order"], 7);

    let out = Command::new(env!("CARGO_BIN_EXE_partlab"))
        .args(["series", "--regular", "2", "--order", "5", "--format", "json"])
        .env("PARTLAB_ORDER", "7")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["order"], 5);
}

#[test]
fn orbit_flagship_and_exhaustion() {
    let out = partlab(&[
        "orbit", "--s", "6", "--t", "10", "--partition", "(50,50,50,50,50,50)",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["ell"], 65);
    assert_eq!(v["revisits"][0]["after_steps"], 63);
    assert_eq!(v["revisits"][0]["phase"], "half");

    let out = partlab(&[
        "orbit", "--s", "6", "--t", "10", "--partition", "(50,50,50,50,50,50)",
        "--max-steps", "5",
    ]);
    assert_eq!(exit_code(&out), 1, "exhaustion is a reported failure");
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["outcome"], "exhausted");
}

#[test]
fn orbit_rejects_start_outside_the_class() {
    let out = partlab(&["orbit", "--s", "2", "--t", "3", "--partition", "(4)"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn orbit_scan_emits_one_line_per_start() {
    let out = partlab(&["orbit-scan", "--s", "2", "--t", "3", "--n-max", "8"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    let mut starts = 0u64;
    for n in 0..=8u64 {
        starts += partlab::oracle::count(
            n,
            &partlab::ClassSpec::regular_distinct(
                partlab::Modulus::new(2).unwrap(),
                partlab::Modulus::new(3).unwrap(),
            ),
        );
    }
    assert_eq!(lines.len() as u64, starts);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["ell"], 1);
        assert_eq!(v["violation"], serde_json::Value::Null);
    }
}

#[test]
fn congruence_verify_exit_codes() {
    let out = partlab(&[
        "congruence", "verify", "--regular", "3", "--distinct", "3",
        "--step", "4", "--offset", "2", "--modulus", "2", "--order", "400",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["holds"], true);

    // coefficient(0) = 1 is not divisible by 2
    let out = partlab(&[
        "congruence", "verify", "--regular", "3", "--distinct", "3",
        "--step", "1", "--offset", "0", "--modulus", "2", "--order", "50",
    ]);
    assert_eq!(exit_code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(v["counterexample_n"], 0);

    let out = partlab(&[
        "congruence", "verify", "--regular", "3", "--step", "2", "--offset", "5",
        "--modulus", "2",
    ]);
    assert_eq!(exit_code(&out), 2, "offset must stay below step");
}

#[test]
fn congruence_scan_labels_proven_patterns() {
    let out = partlab(&[
        "congruence", "scan", "--regular", "5", "--distinct", "5",
        "--max-step", "5", "--modulus", "5", "--order", "300",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let patterns = v["patterns"].as_array().unwrap();
    assert!(patterns.iter().any(|p| {
        p["A"] == 5 && p["B"] == 4 && p["C"] == 5 && p["status"] == "proven"
    }));
}

#[test]
fn identity_commands() {
    for name in ["eq5", "eq6", "f5f1"] {
        let out = partlab(&["identity", "--name", name, "--order", "150"]);
        assert_eq!(exit_code(&out), 0, "{}", name);
        let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        assert_eq!(v["holds"], true, "{}", name);
    }
    let out = partlab(&[
        "identity", "--name", "frobenius", "--k", "2", "--p", "3", "--order", "200",
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn compare_against_files() {
    let dir = tempfile::tempdir().unwrap();

    // agreement: dump the series the command itself will build
    let series = partlab::genfun::class_series(
        &partlab::ClassSpec::regular_distinct(
            partlab::Modulus::new(3).unwrap(),
            partlab::Modulus::new(3).unwrap(),
        ),
        40,
    )
    .series;
    let good = dir.path().join("good.txt");
    std::fs::write(&good, partlab::io::BFile::from_series(&series).to_text()).unwrap();
    let out = partlab(&[
        "compare", "--regular", "3", "--distinct", "3", "--order", "40",
        "--bfile", good.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["match"], true);
    assert_eq!(v["compared"], 40);

    // dilated fixture: file index 6n - 1 holds coefficient n
    let dilated = dir.path().join("dilated.txt");
    let mut text = String::new();
    for (n, c) in series.coeffs().iter().enumerate().skip(1) {
        text.push_str(&format!("{} {}\n", 6 * n - 1, c));
    }
    std::fs::write(&dilated, text).unwrap();
    let out = partlab(&[
        "compare", "--regular", "3", "--distinct", "3", "--order", "40",
        "--bfile", dilated.to_str().unwrap(), "--dilate", "6", "--offset", "-1",
    ]);
    assert_eq!(exit_code(&out), 0, "{:?}", out);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["compared"], 39);

    // mismatch fixture
    let bad = dir.path().join("bad.txt");
    let mut file = std::fs::File::create(&bad).unwrap();
    writeln!(file, "0 1").unwrap();
    writeln!(file, "1 999").unwrap();
    drop(file);
    let out = partlab(&[
        "compare", "--regular", "3", "--distinct", "3", "--order", "40",
        "--bfile", bad.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["match"], false);
    assert_eq!(v["series_index"], 1);

    // malformed file is a usage error
    let ugly = dir.path().join("ugly.txt");
    std::fs::write(&ugly, "3 x\n").unwrap();
    let out = partlab(&[
        "compare", "--regular", "3", "--bfile", ugly.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
}
