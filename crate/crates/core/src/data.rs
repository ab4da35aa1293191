//! Dataset ingestion, discretization and seeded train/test splitting.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::natural_cmp;

/// Marker for a missing cell in the raw files.
pub const MISSING: &str = "?";

/// Environment variable that overrides the dataset directory.
pub const DATA_DIR_ENV: &str = "QFDT_DATA_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FeatureKind {
    Categorical,
    Continuous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetSchema {
    pub feature_names: Vec<String>,
    pub feature_kinds: Vec<FeatureKind>,
    pub label_name: String,
}

impl DatasetSchema {
    pub fn new(
        feature_names: Vec<String>,
        feature_kinds: Vec<FeatureKind>,
        label_name: impl Into<String>,
    ) -> Result<Self> {
        if feature_names.len() != feature_kinds.len() {
            return Err(Error::InvalidConfig(format!(
                "{} feature names but {} kinds",
                feature_names.len(),
                feature_kinds.len()
            )));
        }
        let label_name = label_name.into();
        let mut seen = std::collections::HashSet::new();
        for name in feature_names.iter().chain(std::iter::once(&label_name)) {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidConfig(format!("duplicate column name {name:?}")));
            }
        }
        Ok(DatasetSchema {
            feature_names,
            feature_kinds,
            label_name,
        })
    }

    /// All features categorical, named `X1..Xn`.
    pub fn categorical(num_features: usize, label_name: &str) -> Self {
        DatasetSchema {
            feature_names: (1..=num_features).map(|i| format!("X{i}")).collect(),
            feature_kinds: vec![FeatureKind::Categorical; num_features],
            label_name: label_name.to_owned(),
        }
    }

    pub fn num_features(&self) -> usize {
        self.feature_names.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub values: Vec<String>,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    pub name: String,
    pub schema: DatasetSchema,
    pub rows: Vec<Row>,
    pub provenance: String,
}

impl Dataset {
    pub fn new(name: impl Into<String>, schema: DatasetSchema, rows: Vec<Row>) -> Result<Self> {
        let name = name.into();
        if let Some(bad) = rows.iter().position(|r| r.values.len() != schema.num_features()) {
            return Err(Error::InvalidConfig(format!(
                "{name}: row {bad} has {} values, schema has {}",
                rows[bad].values.len(),
                schema.num_features()
            )));
        }
        Ok(Dataset {
            name,
            schema,
            rows,
            provenance: String::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn num_features(&self) -> usize {
        self.schema.num_features()
    }

    pub fn features(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.values.clone()).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.label.clone()).collect()
    }

    /// Row counts per label.
    pub fn class_counts(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for r in &self.rows {
            *out.entry(r.label.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Share of each label in percent.
    pub fn class_percentages(&self) -> BTreeMap<String, f64> {
        let n = self.len() as f64;
        self.class_counts()
            .into_iter()
            .map(|(k, c)| (k, 100.0 * c as f64 / n))
            .collect()
    }

    fn with_rows(&self, rows: Vec<Row>) -> Dataset {
        Dataset {
            name: self.name.clone(),
            schema: self.schema.clone(),
            rows,
            provenance: self.provenance.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Delimiter {
    Comma,
    Whitespace,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum MissingPolicy {
    /// Rows containing the missing marker are skipped.
    #[default]
    Drop,
    /// Rows are kept with the marker as a literal value.
    Keep,
}

#[derive(Debug, Clone)]
pub struct CsvOptions {
    pub delimiter: Delimiter,
    pub has_header: bool,
    /// Column holding the class label.
    pub label_column: usize,
    /// Columns that are neither features nor the label (record IDs).
    pub ignore_columns: Vec<usize>,
    pub missing: MissingPolicy,
    /// When set, any other label is an error.
    pub allowed_labels: Option<Vec<String>>,
}

impl CsvOptions {
    /// Comma-separated, no header, label in the last of `num_columns` columns.
    pub fn comma(num_columns: usize) -> Self {
        CsvOptions {
            delimiter: Delimiter::Comma,
            has_header: false,
            label_column: num_columns.saturating_sub(1),
            ignore_columns: Vec::new(),
            missing: MissingPolicy::Drop,
            allowed_labels: None,
        }
    }
}

fn io_err(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.to_owned(),
        source,
    }
}

fn parse_err(path: &Path, line: u64, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_owned(),
        line,
        message: message.into(),
    }
}

/// Reads raw records as `(line number, cells)`.
fn read_records(path: &Path, delimiter: Delimiter, has_header: bool) -> Result<Vec<(u64, Vec<String>)>> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    match delimiter {
        Delimiter::Whitespace => Ok(text
            .lines()
            .enumerate()
            .skip(usize::from(has_header))
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| (i as u64 + 1, l.split_whitespace().map(str::to_owned).collect()))
            .collect()),
        Delimiter::Comma => {
            let mut reader = csv::ReaderBuilder::new()
                .has_headers(has_header)
                .flexible(true)
                .trim(csv::Trim::All)
                .from_reader(text.as_bytes());
            let mut out = Vec::new();
            for record in reader.records() {
                let record = record.map_err(|e| {
                    let line = e.position().map_or(0, |p| p.line());
                    parse_err(path, line, e.to_string())
                })?;
                let line = record.position().map_or(0, |p| p.line());
                if record.iter().all(str::is_empty) {
                    continue;
                }
                out.push((line, record.iter().map(str::to_owned).collect()));
            }
            Ok(out)
        }
    }
}

/// Header names of a delimited file, if it has a header row.
pub fn read_header(path: &Path, delimiter: Delimiter) -> Result<Vec<String>> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let first = text.lines().next().unwrap_or_default();
    Ok(match delimiter {
        Delimiter::Comma => first.split(',').map(|s| s.trim().to_owned()).collect(),
        Delimiter::Whitespace => first.split_whitespace().map(str::to_owned).collect(),
    })
}

/// Loads a delimited file into typed rows.
pub fn load_csv(path: &Path, schema: &DatasetSchema, options: &CsvOptions) -> Result<Dataset> {
    let records = read_records(path, options.delimiter, options.has_header)?;
    let num_columns = schema.num_features() + 1 + options.ignore_columns.len();
    let mut rows = Vec::with_capacity(records.len());
    'records: for (line, cells) in records {
        if cells.len() != num_columns {
            return Err(parse_err(
                path,
                line,
                format!("expected {num_columns} columns, found {}", cells.len()),
            ));
        }
        let mut values = Vec::with_capacity(schema.num_features());
        let mut label = None;
        for (c, cell) in cells.into_iter().enumerate() {
            if options.ignore_columns.contains(&c) {
                continue;
            }
            if cell == MISSING && options.missing == MissingPolicy::Drop {
                continue 'records;
            }
            if c == options.label_column {
                label = Some(cell);
                continue;
            }
            let kind = schema.feature_kinds[values.len()];
            if kind == FeatureKind::Continuous
                && cell != MISSING
                && cell.parse::<f64>().map_or(true, |v| !v.is_finite())
            {
                return Err(parse_err(
                    path,
                    line,
                    format!(
                        "column {} ({}): {cell:?} is not a number",
                        c + 1,
                        schema.feature_names[values.len()]
                    ),
                ));
            }
            values.push(cell);
        }
        let label = label.ok_or_else(|| parse_err(path, line, "missing label column"))?;
        if let Some(allowed) = &options.allowed_labels {
            if !allowed.contains(&label) {
                return Err(Error::UnknownLabel {
                    path: path.to_owned(),
                    line,
                    label,
                });
            }
        }
        rows.push(Row { values, label });
    }
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    if rows.is_empty() {
        return Err(Error::EmptyDataset(name));
    }
    let mut d = Dataset::new(name, schema.clone(), rows)?;
    d.provenance = format!("loaded from {}", path.display());
    Ok(d)
}

/// Loads a comma-separated file whose header names the columns and whose
/// last column is the label. Columns whose cells all parse as numbers are
/// continuous.
pub fn load_csv_inferred(path: &Path) -> Result<Dataset> {
    let header = read_header(path, Delimiter::Comma)?;
    if header.len() < 2 {
        return Err(parse_err(
            path,
            1,
            "need a header with at least one feature and a label",
        ));
    }
    let records = read_records(path, Delimiter::Comma, true)?;
    let num_features = header.len() - 1;
    let kinds = (0..num_features)
        .map(|c| {
            let numeric = records.iter().all(|(_, cells)| {
                cells
                    .get(c)
                    .is_some_and(|v| v == MISSING || v.parse::<f64>().is_ok_and(f64::is_finite))
            });
            if numeric {
                FeatureKind::Continuous
            } else {
                FeatureKind::Categorical
            }
        })
        .collect();
    let schema = DatasetSchema::new(header[..num_features].to_vec(), kinds, header[num_features].clone())?;
    let mut options = CsvOptions::comma(header.len());
    options.has_header = true;
    load_csv(path, &schema, &options)
}

/// The benchmark datasets shipped as canonical UCI files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Builtin {
    Haberman,
    Wisconsin,
    Seeds,
}

impl Builtin {
    pub const ALL: [Builtin; 3] = [Builtin::Haberman, Builtin::Wisconsin, Builtin::Seeds];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Haberman => "haberman",
            Builtin::Wisconsin => "wisconsin",
            Builtin::Seeds => "seeds",
        }
    }

    pub fn file_name(self) -> &'static str {
        match self {
            Builtin::Haberman => "haberman.data",
            Builtin::Wisconsin => "breast-cancer-wisconsin.data",
            Builtin::Seeds => "seeds_dataset.txt",
        }
    }

    /// Label treated as the positive class when scoring: died within five
    /// years, malignant, and Canadian respectively.
    pub fn positive_class(self) -> &'static str {
        match self {
            Builtin::Haberman => "2",
            Builtin::Wisconsin => "4",
            Builtin::Seeds => "3",
        }
    }

    pub fn schema(self) -> DatasetSchema {
        let (names, label): (&[&str], &str) = match self {
            Builtin::Haberman => (&["age", "year", "nodes"], "survival"),
            Builtin::Wisconsin => (
                &[
                    "clump_thickness",
                    "cell_size_uniformity",
                    "cell_shape_uniformity",
                    "marginal_adhesion",
                    "single_epithelial_cell_size",
                    "bare_nuclei",
                    "bland_chromatin",
                    "normal_nucleoli",
                    "mitoses",
                ],
                "class",
            ),
            Builtin::Seeds => (
                &[
                    "area",
                    "perimeter",
                    "compactness",
                    "kernel_length",
                    "kernel_width",
                    "asymmetry",
                    "groove_length",
                ],
                "variety",
            ),
        };
        DatasetSchema {
            feature_names: names.iter().map(|s| s.to_string()).collect(),
            feature_kinds: vec![FeatureKind::Continuous; names.len()],
            label_name: label.to_owned(),
        }
    }

    fn csv_options(self, missing: MissingPolicy) -> CsvOptions {
        let labels = |ls: &[&str]| Some(ls.iter().map(|s| s.to_string()).collect());
        match self {
            Builtin::Haberman => CsvOptions {
                missing,
                allowed_labels: labels(&["1", "2"]),
                ..CsvOptions::comma(4)
            },
            Builtin::Wisconsin => CsvOptions {
                ignore_columns: vec![0],
                missing,
                allowed_labels: labels(&["2", "4"]),
                ..CsvOptions::comma(11)
            },
            Builtin::Seeds => CsvOptions {
                delimiter: Delimiter::Whitespace,
                missing,
                allowed_labels: labels(&["1", "2", "3"]),
                ..CsvOptions::comma(8)
            },
        }
    }

    /// Reads the raw file without any filtering beyond the missing policy.
    pub fn load_raw(self, data_dir: &Path, missing: MissingPolicy) -> Result<Dataset> {
        let path = data_dir.join(self.file_name());
        let mut d = load_csv(&path, &self.schema(), &self.csv_options(missing))?;
        d.name = self.name().to_owned();
        Ok(d)
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "haberman" => Ok(Builtin::Haberman),
            "wisconsin" => Ok(Builtin::Wisconsin),
            "seeds" => Ok(Builtin::Seeds),
            other => Err(Error::UnknownDataset(other.to_owned())),
        }
    }
}

/// `$QFDT_DATA_DIR` if set, else `./data`.
pub fn default_data_dir() -> PathBuf {
    std::env::var_os(DATA_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("data"))
}

/// Loads and cleans a benchmark dataset: incomplete Wisconsin rows are
/// dropped (along with the ID column) and seeds is restricted to the Kama
/// and Canadian varieties.
pub fn prepare_builtin(builtin: Builtin, data_dir: &Path) -> Result<Dataset> {
    let mut d = builtin.load_raw(data_dir, MissingPolicy::Drop)?;
    match builtin {
        Builtin::Haberman => {
            d.provenance = "UCI Haberman's survival; label 1 = survived 5+ years, 2 = died within 5 years".into();
        }
        Builtin::Wisconsin => {
            d.provenance = "UCI Breast Cancer Wisconsin (original); rows with missing bare_nuclei dropped; label 2 = benign, 4 = malignant".into();
        }
        Builtin::Seeds => {
            d.rows.retain(|r| r.label == "1" || r.label == "3");
            d.provenance = "UCI seeds; Rosa (2) removed; label 1 = Kama, 3 = Canadian".into();
        }
    }
    if d.is_empty() {
        return Err(Error::EmptyDataset(d.name));
    }
    Ok(d)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BinStrategy {
    #[default]
    EqualFrequency,
    EqualWidth,
}

impl FromStr for BinStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "equal_frequency" => Ok(BinStrategy::EqualFrequency),
            "equal_width" => Ok(BinStrategy::EqualWidth),
            other => Err(Error::InvalidConfig(format!("unknown binning strategy {other:?}"))),
        }
    }
}

/// Bin edges fitted on one dataset, reusable on others with the same schema.
///
/// A value `v` falls into bin `#{edges e : v > e}`, so each column maps onto
/// `0..=edges.len()`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Discretizer {
    pub bins: usize,
    pub strategy: BinStrategy,
    /// `None` for categorical columns, which pass through unchanged.
    pub edges: Vec<Option<Vec<f64>>>,
}

impl Discretizer {
    pub fn fit(d: &Dataset, bins: usize, strategy: BinStrategy) -> Result<Self> {
        if bins < 2 {
            return Err(Error::InvalidConfig(format!("bins must be at least 2, got {bins}")));
        }
        let mut edges = Vec::with_capacity(d.num_features());
        for (c, kind) in d.schema.feature_kinds.iter().enumerate() {
            if *kind == FeatureKind::Categorical {
                edges.push(None);
                continue;
            }
            let mut column = Vec::with_capacity(d.len());
            for r in &d.rows {
                column.push(parse_number(&r.values[c], &d.schema.feature_names[c])?);
            }
            column.sort_by(f64::total_cmp);
            edges.push(Some(match strategy {
                BinStrategy::EqualFrequency => quantile_edges(&column, bins),
                BinStrategy::EqualWidth => width_edges(&column, bins),
            }));
        }
        Ok(Discretizer { bins, strategy, edges })
    }

    /// Continuous columns that collapsed to a single bin.
    pub fn constant_features(&self) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.as_ref().is_some_and(Vec::is_empty))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn transform_values(&self, values: &[String]) -> Result<Vec<String>> {
        if values.len() != self.edges.len() {
            return Err(Error::DimensionMismatch {
                expected: self.edges.len(),
                actual: values.len(),
            });
        }
        values
            .iter()
            .zip(&self.edges)
            .enumerate()
            .map(|(c, (v, edges))| match edges {
                None => Ok(v.clone()),
                Some(edges) => {
                    let x = parse_number(v, &format!("column {}", c + 1))?;
                    Ok(edges.iter().filter(|&&e| x > e).count().to_string())
                }
            })
            .collect()
    }

    /// Applies the fitted edges; the result's schema is all categorical.
    pub fn transform(&self, d: &Dataset) -> Result<Dataset> {
        let rows = d
            .rows
            .iter()
            .map(|r| {
                Ok(Row {
                    values: self.transform_values(&r.values)?,
                    label: r.label.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut out = d.with_rows(rows);
        out.schema.feature_kinds = vec![FeatureKind::Categorical; d.num_features()];
        Ok(out)
    }
}

fn parse_number(v: &str, column: &str) -> Result<f64> {
    v.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::InvalidConfig(format!("{column}: {v:?} is not a number")))
}

/// Equal-frequency cut points. Each target quantile position is moved to the
/// nearest boundary between distinct values (ties go to the lower position),
/// and cuts are placed midway between the neighbouring values.
fn quantile_edges(sorted: &[f64], bins: usize) -> Vec<f64> {
    let n = sorted.len();
    let boundaries: Vec<usize> = (1..n).filter(|&i| sorted[i - 1] < sorted[i]).collect();
    let mut edges = Vec::new();
    if boundaries.is_empty() {
        return edges;
    }
    for k in 1..bins {
        let target = (k * n) as f64 / bins as f64;
        let pos = *boundaries
            .iter()
            .min_by(|&&a, &&b| {
                (a as f64 - target)
                    .abs()
                    .total_cmp(&(b as f64 - target).abs())
                    .then(a.cmp(&b))
            })
            .expect("boundaries nonempty");
        let edge = 0.5 * (sorted[pos - 1] + sorted[pos]);
        if edges.last() != Some(&edge) {
            edges.push(edge);
        }
    }
    edges.sort_by(f64::total_cmp);
    edges.dedup();
    edges
}

fn width_edges(sorted: &[f64], bins: usize) -> Vec<f64> {
    let (lo, hi) = match (sorted.first(), sorted.last()) {
        (Some(&lo), Some(&hi)) if hi > lo => (lo, hi),
        _ => return Vec::new(),
    };
    let width = (hi - lo) / bins as f64;
    let mut edges: Vec<f64> = (1..bins).map(|k| lo + width * k as f64).collect();
    edges.dedup();
    edges
}

/// Fits edges on `d` and applies them to it.
pub fn discretize(d: &Dataset, bins: usize, strategy: BinStrategy) -> Result<(Dataset, Discretizer)> {
    let disc = Discretizer::fit(d, bins, strategy)?;
    let out = disc.transform(d)?;
    Ok((out, disc))
}

/// Shuffled `(train, test)` row indices.
///
/// The permutation is a Fisher–Yates shuffle driven by ChaCha8 seeded with
/// `seed` via `SeedableRng::seed_from_u64`; the first `floor(n · fraction)`
/// indices train.
pub fn split_indices(n: usize, train_fraction: f64, seed: u64) -> Result<(Vec<usize>, Vec<usize>)> {
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(Error::InvalidConfig(format!(
            "train fraction must lie in (0, 1), got {train_fraction}"
        )));
    }
    let cut = (n as f64 * train_fraction).floor() as usize;
    if cut == 0 || cut == n {
        return Err(Error::DegenerateSplit {
            train: cut,
            test: n - cut,
        });
    }
    let mut idx: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    idx.shuffle(&mut rng);
    let test = idx.split_off(cut);
    Ok((idx, test))
}

pub fn train_test_split(d: &Dataset, train_fraction: f64, seed: u64) -> Result<(Dataset, Dataset)> {
    let (train, test) = split_indices(d.len(), train_fraction, seed)?;
    let pick = |idx: &[usize]| d.with_rows(idx.iter().map(|&i| d.rows[i].clone()).collect());
    Ok((pick(&train), pick(&test)))
}

/// Writes a prepared dataset as a headed CSV plus `<file>.bins.json` with
/// the discretizer.
pub fn write_prepared(d: &Dataset, disc: &Discretizer, csv_path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_path(csv_path).map_err(|e| csv_to_io(csv_path, e))?;
    let header = d
        .schema
        .feature_names
        .iter()
        .chain(std::iter::once(&d.schema.label_name));
    w.write_record(header).map_err(|e| csv_to_io(csv_path, e))?;
    for r in &d.rows {
        w.write_record(r.values.iter().chain(std::iter::once(&r.label)))
            .map_err(|e| csv_to_io(csv_path, e))?;
    }
    w.flush().map_err(|e| io_err(csv_path, e))?;
    let sidecar = sidecar_path(csv_path);
    let json = serde_json::to_string_pretty(disc)?;
    fs::write(&sidecar, json + "\n").map_err(|e| io_err(&sidecar, e))?;
    Ok(())
}

/// Reads back what [`write_prepared`] wrote.
pub fn read_prepared(csv_path: &Path) -> Result<(Dataset, Discretizer)> {
    let header = read_header(csv_path, Delimiter::Comma)?;
    if header.len() < 2 {
        return Err(parse_err(csv_path, 1, "prepared file needs a header"));
    }
    let k = header.len() - 1;
    let schema = DatasetSchema::new(
        header[..k].to_vec(),
        vec![FeatureKind::Categorical; k],
        header[k].clone(),
    )?;
    let options = CsvOptions {
        has_header: true,
        missing: MissingPolicy::Keep,
        ..CsvOptions::comma(header.len())
    };
    let d = load_csv(csv_path, &schema, &options)?;
    let sidecar = sidecar_path(csv_path);
    let text = fs::read_to_string(&sidecar).map_err(|e| io_err(&sidecar, e))?;
    Ok((d, serde_json::from_str(&text)?))
}

fn sidecar_path(csv_path: &Path) -> PathBuf {
    let mut s = csv_path.as_os_str().to_owned();
    s.push(".bins.json");
    PathBuf::from(s)
}

fn csv_to_io(path: &Path, e: csv::Error) -> Error {
    io_err(path, std::io::Error::other(e.to_string()))
}

/// Distinct label values of a dataset in natural order.
pub fn label_set(d: &Dataset) -> Vec<String> {
    let mut ls: Vec<String> = d.class_counts().into_keys().collect();
    ls.sort_by(|a, b| natural_cmp(a, b));
    ls
}
