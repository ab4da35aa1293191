//! Deterministic inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qfdt::{ContingencyTable, Dataset, DatasetSchema, DensityOperator, FeatureKind, Row, SymMatrix};

/// Full-rank density operator `A Aᵀ / tr` from a seeded Gaussian-ish factor.
pub fn random_density(dim: usize, seed: u64) -> DensityOperator {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a: Vec<f64> = (0..dim * dim).map(|_| rng.random_range(-1.0..1.0)).collect();
    let m = SymMatrix::from_upper(dim, |i, j| (0..dim).map(|k| a[i * dim + k] * a[j * dim + k]).sum());
    let t = m.trace();
    DensityOperator::new(SymMatrix::from_upper(dim, |i, j| m.get(i, j) / t)).expect("valid density")
}

/// `values x labels` table of small random counts.
pub fn random_table(values: usize, labels: usize, seed: u64) -> ContingencyTable {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let counts = (0..values)
        .map(|_| (0..labels).map(|_| rng.random_range(1..20)).collect())
        .collect();
    let names = |n: usize| (0..n).map(|i| i.to_string()).collect();
    ContingencyTable::from_counts(names(values), names(labels), counts).expect("non-empty table")
}

/// Continuous features where the label depends on the first two columns.
pub fn synthetic_dataset(rows: usize, features: usize, seed: u64) -> Dataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let schema = DatasetSchema::new(
        (0..features).map(|i| format!("f{i}")).collect(),
        vec![FeatureKind::Continuous; features],
        "class",
    )
    .expect("valid schema");
    let rows = (0..rows)
        .map(|_| {
            let v: Vec<f64> = (0..features).map(|_| rng.random_range(0.0..10.0)).collect();
            let noisy = rng.random_bool(0.1);
            let label = if (v[0] + v.get(1).copied().unwrap_or(0.0) > 10.0) != noisy {
                "1"
            } else {
                "0"
            };
            Row {
                values: v.iter().map(|x| format!("{x:.3}")).collect(),
                label: label.into(),
            }
        })
        .collect();
    Dataset::new("synthetic", schema, rows).expect("valid dataset")
}
