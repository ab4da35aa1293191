use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TOY: &str = "X1,X2,X3,Y\n1,1,1,1\n0,1,0,0\n1,0,1,0\n0,0,1,1\n";

fn data_dir() -> PathBuf {
    std::env::var_os("QFDT_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data")))
}

fn qfdt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfdt"))
        .args(args)
        .env("QFDT_DATA_DIR", data_dir())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "failed: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn toy_file(dir: &TempDir) -> String {
    let p = dir.path().join("toy.csv");
    fs::write(&p, TOY).unwrap();
    p.to_str().unwrap().to_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn train_fidelity_on_toy_picks_x1() {
    let dir = TempDir::new().unwrap();
    let toy = toy_file(&dir);
    let out = stdout(&qfdt(&["train", "--data", &toy, "--full"]));
    assert!(out.contains("  X1 1.000000\n  X2 1.000000\n  X3 0.971825\n"), "{out}");
    assert!(out.contains("root X1\n"));
    assert!(out.contains("depth 2, leaves 4, leaf depths [2, 2, 2, 2], balanced true"));
}

#[test]
fn train_cig_on_toy_picks_x3() {
    let dir = TempDir::new().unwrap();
    let toy = toy_file(&dir);
    let out = stdout(&qfdt(&["train", "--data", &toy, "--full", "--criterion", "cig"]));
    assert!(out.contains("root X3\n"), "{out}");
    assert!(out.contains("balanced false"));
}

#[test]
fn inspect_renders_both_toy_trees() {
    let dir = TempDir::new().unwrap();
    let toy = toy_file(&dir);
    let fid = dir.path().join("fid.json");
    let cig = dir.path().join("cig.json");
    stdout(&qfdt(&["train", "--data", &toy, "--full", "--out", path_str(&fid)]));
    stdout(&qfdt(&[
        "train",
        "--data",
        &toy,
        "--full",
        "--criterion",
        "cig",
        "--out",
        path_str(&cig),
    ]));

    let f = stdout(&qfdt(&["inspect", "--model", path_str(&fid)]));
    assert_eq!(f.lines().count(), 7);
    assert_eq!(f.matches("-> leaf").count(), 4);
    assert!(f
        .lines()
        .filter(|l| l.contains("-> leaf"))
        .all(|l| l.starts_with("    X2 = ")));

    let c = stdout(&qfdt(&["inspect", "--model", path_str(&cig)]));
    assert!(c.starts_with("split on X3"));
    assert!(c.contains("\n  X3 = 0 -> leaf 0 {0: 1}\n"), "{c}");
}

#[test]
fn inspect_single_leaf_is_one_line() {
    let dir = TempDir::new().unwrap();
    let data = dir.path().join("same.csv");
    fs::write(&data, "A,Y\n1,1\n0,1\n1,1\n").unwrap();
    let model = dir.path().join("m.json");
    stdout(&qfdt(&[
        "train",
        "--data",
        path_str(&data),
        "--full",
        "--out",
        path_str(&model),
    ]));
    let out = stdout(&qfdt(&["inspect", "--model", path_str(&model)]));
    assert_eq!(out, "leaf 1 {1: 3}\n");
}

#[test]
fn predict_uses_saved_model() {
    let dir = TempDir::new().unwrap();
    let toy = toy_file(&dir);
    let model = dir.path().join("m.json");
    stdout(&qfdt(&["train", "--data", &toy, "--full", "--out", path_str(&model)]));
    let out = stdout(&qfdt(&[
        "predict",
        "--model",
        path_str(&model),
        "--row",
        "1,1,1",
        "--row",
        "0,1,0",
    ]));
    assert_eq!(out, "1\n0\n");
}

#[test]
fn exit_codes_follow_error_class() {
    let dir = TempDir::new().unwrap();
    let toy = toy_file(&dir);
    let missing = dir.path().join("missing.csv");
    assert_eq!(qfdt(&["train", "--data", path_str(&missing)]).status.code(), Some(3));
    assert_eq!(
        qfdt(&["train", "--data", &toy, "--train-fraction", "1.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qfdt(&["train", "--data", &toy, "--criterion", "entropy"]).status.code(),
        Some(2)
    );
    assert_eq!(qfdt(&["train", "--data", &toy, "--bins", "1"]).status.code(), Some(2));
    assert_eq!(qfdt(&["bench", "--dataset", "iris"]).status.code(), Some(2));

    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"version\":1}").unwrap();
    let o = qfdt(&["inspect", "--model", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());
}

#[test]
fn bench_csv_is_deterministic() {
    let args = [
        "bench",
        "--dataset",
        "haberman,wisconsin",
        "--criteria",
        "all",
        "--seed",
        "42",
        "--format",
        "csv",
    ];
    let a = stdout(&qfdt(&args));
    let b = stdout(&qfdt(&args));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 1 + 8);
    assert!(a.starts_with("dataset,criterion,seed,bins,tp,fp,tn,fn,"));
}

#[test]
fn train_then_eval_matches_bench_row() {
    let dir = TempDir::new().unwrap();
    let model = dir.path().join("h.json");
    for criterion in ["fidelity", "gini"] {
        stdout(&qfdt(&[
            "train",
            "--builtin",
            "haberman",
            "--criterion",
            criterion,
            "--out",
            path_str(&model),
        ]));
        let eval = stdout(&qfdt(&[
            "eval",
            "--model",
            path_str(&model),
            "--builtin",
            "haberman",
            "--format",
            "csv",
        ]));
        let bench = stdout(&qfdt(&[
            "bench",
            "--dataset",
            "haberman",
            "--criteria",
            criterion,
            "--format",
            "csv",
        ]));
        assert_eq!(eval, bench);
    }
}

#[test]
fn bench_full_matrix_has_twelve_rows() {
    let out = stdout(&qfdt(&[
        "bench",
        "--dataset",
        "all",
        "--criteria",
        "all",
        "--seed",
        "42",
        "--format",
        "csv",
    ]));
    assert_eq!(out.lines().count(), 1 + 12);
}

#[test]
fn bench_seeds_two_criteria() {
    let out = stdout(&qfdt(&[
        "bench",
        "--dataset",
        "seeds",
        "--criteria",
        "fidelity,qig",
        "--format",
        "csv",
    ]));
    assert_eq!(out.lines().count(), 1 + 2);
}
