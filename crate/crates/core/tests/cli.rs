use std::path::Path;
use std::process::{Command, Output};

use fairkc::generators::{adversarial, erdos_renyi, AdversarialKind};
use fairkc::oracle::brute_force_fair;
use fairkc::{fair_m_groups, FairSolveConfig};
use serde_json::Value;

fn fairkc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fairkc"))
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

fn write(dir: &Path, name: &str, instance: &fairkc::Instance) -> String {
    let path = dir.join(name);
    instance.write_json(&path).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn solve_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let inst = erdos_renyi(14, &[2, 1, 1], 2, 9).unwrap();
    let path = write(dir.path(), "er.json", &inst);

    let v = json(&fairkc(&[
        "solve",
        "--instance",
        &path,
        "--algorithm",
        "oracle_fair",
    ]));
    let opt = brute_force_fair(&inst).unwrap();
    assert_eq!(v["opt_value"].as_f64().unwrap(), opt.opt_value);
    assert_eq!(v["group_counts"], serde_json::json!([2, 1, 1]));

    let v = json(&fairkc(&[
        "solve",
        "--instance",
        &path,
        "--algorithm",
        "fairm",
        "--seed",
        "4",
    ]));
    let lib = fair_m_groups(&inst, &FairSolveConfig::seeded(4)).unwrap();
    assert_eq!(v["cost"].as_f64().unwrap(), lib.cost);
    assert_eq!(v["centers"], serde_json::to_value(&lib.centers).unwrap());
}

#[test]
fn quota_override_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "er.json",
        &erdos_renyi(30, &[2, 2], 0, 1).unwrap(),
    );
    let v = json(&fairkc(&[
        "solve",
        "--instance",
        &path,
        "--algorithm",
        "fair2",
        "--quotas",
        "3,1",
        "--trace",
        "--deterministic",
    ]));
    assert_eq!(v["group_counts"], serde_json::json!([3, 1]));
    assert!(!v["trace"].as_array().unwrap().is_empty());
}

#[test]
fn gen_then_solve_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("adv.json");
    let path = path.to_str().unwrap();
    let out = fairkc(&[
        "gen",
        "adversarial",
        "--groups",
        "2",
        "--delta",
        "0.01",
        "--out",
        path,
    ]);
    assert!(out.status.success());
    let v = json(&fairkc(&[
        "solve",
        "--instance",
        path,
        "--algorithm",
        "fair2",
        "--deterministic",
    ]));
    let f = adversarial(AdversarialKind::TwoGroups, 0.01).unwrap();
    assert_eq!(v["cost"].as_f64().unwrap(), f.expected.cost);

    let grid = dir.path().join("grid.json");
    let grid = grid.to_str().unwrap();
    let args = [
        "gen",
        "grid",
        "--grid-side",
        "2",
        "--points-total",
        "40",
        "--groups",
        "2",
        "--out",
        grid,
    ];
    assert!(fairkc(&args).status.success());
    let v = json(&fairkc(&[
        "solve",
        "--instance",
        grid,
        "--algorithm",
        "oracle_fair",
    ]));
    assert_eq!(v["opt_value"].as_f64().unwrap(), 0.5);
}

#[test]
fn domain_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "three.json",
        &erdos_renyi(12, &[1, 1, 1], 0, 2).unwrap(),
    );
    let out = fairkc(&["solve", "--instance", &path, "--algorithm", "fair2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("group"));

    let out = fairkc(&[
        "solve",
        "--instance",
        &path,
        "--algorithm",
        "fairm",
        "--quotas",
        "20,1,1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        fairkc(&["gen", "adversarial", "--groups", "2", "--delta", "0.5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(fairkc(&["solve", "--bogus"]).status.code(), Some(1));
}

#[test]
fn io_errors_exit_2() {
    let out = fairkc(&[
        "solve",
        "--instance",
        "/nonexistent/x.json",
        "--algorithm",
        "greedy",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let out = fairkc(&[
        "solve",
        "--instance",
        bad.to_str().unwrap(),
        "--algorithm",
        "greedy",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = fairkc(&[
        "exp-heuristics",
        "--dataset",
        "adult_race",
        "--adult-path",
        "/nonexistent.data",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn experiment_csv_has_the_documented_columns() {
    let out = fairkc(&["exp-approx", "--trials", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let header = text.lines().next().unwrap();
    assert_eq!(
        header,
        "row_kind,experiment,setting,trial,seed,algorithm,cost,opt_value,approx_factor,wall_time_seconds,\
         group_center_counts,max_group_deviation,statistic,min,q1,median,q3,max"
    );
    assert!(text.lines().any(|l| l.starts_with("summary,")));
}
