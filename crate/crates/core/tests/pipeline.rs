use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use qfdt::data::{read_prepared, split_indices, write_prepared, DATA_DIR_ENV};
use qfdt::{
    discretize, fit_model, load_csv_inferred, prepare_builtin, train_test_split, BinStrategy, Builtin, Discretizer,
    Error, Experiment, MissingPolicy,
};

fn data_dir() -> PathBuf {
    std::env::var_os(DATA_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data")))
}

#[test]
fn wisconsin_has_sixteen_incomplete_rows() {
    let keep = Builtin::Wisconsin.load_raw(&data_dir(), MissingPolicy::Keep).unwrap();
    let drop = Builtin::Wisconsin.load_raw(&data_dir(), MissingPolicy::Drop).unwrap();
    assert_eq!(keep.len() - drop.len(), 16);
    let prepared = prepare_builtin(Builtin::Wisconsin, &data_dir()).unwrap();
    assert!(!prepared
        .schema
        .feature_names
        .iter()
        .any(|n| n.eq_ignore_ascii_case("id")));
    assert_eq!(prepared.class_counts().len(), 2);
}

#[test]
fn haberman_age_median_split() {
    let h = prepare_builtin(Builtin::Haberman, &data_dir()).unwrap();
    let (binned, disc) = discretize(&h, 2, BinStrategy::EqualFrequency).unwrap();
    // numpy: 142 ages below the median 52, 14 equal, 150 above.
    assert_eq!(disc.edges[0].as_deref(), Some(&[52.5][..]));
    let low = binned.rows.iter().filter(|r| r.values[0] == "0").count();
    assert_eq!((low, binned.len() - low), (156, 150));
}

#[test]
fn haberman_split_sizes() {
    let h = prepare_builtin(Builtin::Haberman, &data_dir()).unwrap();
    let (train, test) = train_test_split(&h, 0.9, 42).unwrap();
    assert_eq!((train.len(), test.len()), (275, 31));

    let (a, b) = split_indices(306, 0.9, 42).unwrap();
    let all: BTreeSet<usize> = a.iter().chain(&b).copied().collect();
    assert_eq!(all.len(), 306);
    assert_eq!(split_indices(306, 0.9, 42).unwrap(), (a, b));
    assert_ne!(
        split_indices(306, 0.9, 43).unwrap().1,
        split_indices(306, 0.9, 42).unwrap().1
    );
}

#[test]
fn bin_edges_come_from_training_rows_only() {
    let w = prepare_builtin(Builtin::Wisconsin, &data_dir()).unwrap();
    let exp = Experiment::default();
    let (train, _) = train_test_split(&w, exp.train_fraction, exp.seed).unwrap();
    let model = fit_model(&train, &exp).unwrap();
    let expected = Discretizer::fit(&train, exp.bins, exp.strategy).unwrap();
    assert_eq!(model.discretizer, Some(expected));
}

#[test]
fn prepared_cache_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let h = prepare_builtin(Builtin::Haberman, &data_dir()).unwrap();
    let mut outputs = Vec::new();
    for run in 0..2 {
        let (train, _) = train_test_split(&h, 0.9, 7).unwrap();
        let (binned, disc) = discretize(&train, 3, BinStrategy::EqualFrequency).unwrap();
        let path = dir.path().join(format!("run{run}.csv"));
        write_prepared(&binned, &disc, &path).unwrap();
        let (back, back_disc) = read_prepared(&path).unwrap();
        assert_eq!(back.rows, binned.rows);
        assert_eq!(back_disc, disc);
        let sidecar = dir.path().join(format!("run{run}.csv.bins.json"));
        outputs.push((fs::read(&path).unwrap(), fs::read(sidecar).unwrap()));
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn malformed_row_reports_its_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    fs::write(&path, "a,b,y\n1,2,0\n3,4,1\n5,1\n").unwrap();
    match load_csv_inferred(&path) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected a parse error, got {other:?}"),
    }
}
