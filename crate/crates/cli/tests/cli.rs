use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn rmi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rmi"))
        .args(args)
        .output()
        .expect("rmi runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn weighted_sum_solve_on_k22() {
    let k22 = fixture("k22.json");
    let out = rmi(&[
        "solve",
        "--oracle",
        "sum",
        "--weighted",
        "--in",
        k22.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["best"]["weight"], 9);
    assert_eq!(report["best"]["set"], serde_json::json!([0, 3]));
    assert_eq!(report["stats"]["oracle_kind"], "sum");
    assert_eq!(report["stats"]["queries"]["min"], 0);
    assert_eq!(report["stats"]["queries"]["ci"], 0);
}

#[test]
fn every_oracle_agrees_on_k22() {
    let k22 = fixture("k22.json");
    let mut best = Vec::new();
    for oracle in ["sum", "ci-max", "ci-split", "full", "ci-partition"] {
        let mut args = vec!["solve", "--oracle", oracle, "--in", k22.to_str().unwrap()];
        if oracle != "ci-partition" {
            args.push("--weighted");
        }
        let out = rmi(&args);
        if oracle == "ci-split" {
            assert_eq!(out.status.code(), Some(2), "m1 is not a split record");
            continue;
        }
        assert_eq!(out.status.code(), Some(0), "{oracle}");
        let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(report["max_cardinality"], 2);
        best.push(report["best"]["weight"].clone());
    }
    assert_eq!(best[..3], [9, 9, 9]);
}

#[test]
fn ci_partition_on_graphic_m1_is_a_usage_error() {
    let path = fixture("graphic-m1.json");
    let out = rmi(&[
        "solve",
        "--oracle",
        "ci-partition",
        "--in",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("all-one partition"));
}

#[test]
fn schema_errors_exit_2() {
    let path = fixture("bad-split.json");
    let out = rmi(&["solve", "--oracle", "sum", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(H2)"));

    let missing = fixture("does-not-exist.json");
    let out = rmi(&[
        "solve",
        "--oracle",
        "sum",
        "--in",
        missing.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = rmi(&["solve", "--oracle", "rank", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let a = rmi(&["gen", "--seed", "17", "--n", "8", "--mix", "split-m1"]);
    let b = rmi(&["gen", "--seed", "17", "--n", "8", "--mix", "split-m1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = rmi(&["gen", "--seed", "18", "--n", "8", "--mix", "split-m1"]);
    assert_ne!(a.stdout, c.stdout);

    let text = stdout(&a);
    let parsed = rmi_core::instance::parse_instance(&text).unwrap();
    assert_eq!(rmi_core::instance::emit_instance(&parsed), text);
    assert_eq!(parsed.n(), 8);
    assert!(parsed.m1.is_elementary_split());
}

#[test]
fn verify_file_and_batch() {
    let k22 = fixture("k22.json");
    let out = rmi(&["verify", "--weighted", "--in", k22.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("ok: sum, ci-max, full"));

    let out = rmi(&[
        "verify",
        "--seeds",
        "60",
        "--max-n",
        "8",
        "--mix",
        "partition-m1",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("60 of 60 instances agree"));

    let out = rmi(&[
        "verify",
        "--seeds",
        "5",
        "--oracle",
        "ci-partition",
        "--weighted",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stats_table_lists_compatible_solvers() {
    let k22 = fixture("k22.json");
    let out = rmi(&["stats", "--in", k22.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert!(rows[0].starts_with("solver"));
    let names: Vec<&str> = rows[1..]
        .iter()
        .map(|r| r.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(names, ["sum", "ci-partition", "ci-max", "full"]);
}

#[test]
fn witness_preset_writes_a_reverifiable_file() {
    let dir = std::env::temp_dir().join(format!("rmi-witness-{}", std::process::id()));
    let out = rmi(&[
        "witness",
        "--preset",
        "max-vs-sum",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("max = 4 vs 3"));
    let text = std::fs::read_to_string(dir.join("witness-max-vs-sum.json")).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    let w = rmi_core::verify::witness::SeparationWitness::from_json(&value).unwrap();
    assert_eq!(w.verify(), Ok(()));
    std::fs::remove_dir_all(&dir).unwrap();

    let out = rmi(&["witness", "--preset", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}
