//! Confusion-matrix metrics, the train/evaluate pipeline and report output.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::criteria::CriterionKind;
use crate::data::{label_set, train_test_split, BinStrategy, Dataset, Discretizer};
use crate::embedding::AmplitudeMode;
use crate::error::{Error, Result};
use crate::order::sorted_distinct;
use crate::tree::{build_tree, Model, TreeConfig, TreeStats};

/// Binary counts with respect to one positive class, plus the full grid
/// (`grid[truth][predicted]` over `labels`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionMatrix {
    pub positive: String,
    pub tp: u64,
    pub fp: u64,
    pub tn: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
    pub labels: Vec<String>,
    pub grid: Vec<Vec<u64>>,
}

pub fn confusion<T: AsRef<str>, P: AsRef<str>>(
    truth: &[T],
    predicted: &[P],
    positive: &str,
) -> Result<ConfusionMatrix> {
    if truth.len() != predicted.len() {
        return Err(Error::LengthMismatch {
            features: predicted.len(),
            labels: truth.len(),
        });
    }
    if truth.is_empty() {
        return Err(Error::EmptyDataset("confusion input".into()));
    }
    let labels = sorted_distinct(
        truth
            .iter()
            .map(AsRef::as_ref)
            .chain(predicted.iter().map(AsRef::as_ref))
            .chain(std::iter::once(positive)),
    );
    let index = |l: &str| labels.iter().position(|x| x == l).expect("label collected");
    let mut grid = vec![vec![0u64; labels.len()]; labels.len()];
    let (mut tp, mut fp, mut tn, mut fn_) = (0, 0, 0, 0);
    for (t, p) in truth.iter().zip(predicted) {
        let (t, p) = (t.as_ref(), p.as_ref());
        grid[index(t)][index(p)] += 1;
        match (t == positive, p == positive) {
            (true, true) => tp += 1,
            (false, true) => fp += 1,
            (true, false) => fn_ += 1,
            (false, false) => tn += 1,
        }
    }
    Ok(ConfusionMatrix {
        positive: positive.to_owned(),
        tp,
        fp,
        tn,
        fn_,
        labels,
        grid,
    })
}

fn ratio(name: &'static str, num: u64, den: u64) -> Result<f64> {
    if den == 0 {
        Err(Error::UndefinedMetric(name))
    } else {
        Ok(num as f64 / den as f64)
    }
}

impl ConfusionMatrix {
    /// Binary counts only, for callers that already hold them.
    pub fn from_counts(tp: u64, fp: u64, tn: u64, fn_: u64) -> Self {
        ConfusionMatrix {
            positive: "1".into(),
            tp,
            fp,
            tn,
            fn_,
            labels: vec!["0".into(), "1".into()],
            grid: vec![vec![tn, fp], vec![fn_, tp]],
        }
    }

    pub fn total(&self) -> u64 {
        self.tp + self.fp + self.tn + self.fn_
    }

    /// `(TP + TN) / (TP + FP + FN + TN)`.
    pub fn accuracy(&self) -> Result<f64> {
        ratio("accuracy", self.tp + self.tn, self.total())
    }

    /// Pooled precision over both classes, `Σ TP_c / Σ (TP_c + FP_c)`, where
    /// the negative class has `TP = tn` and `FP = fn`.
    pub fn precision_pooled(&self) -> Result<f64> {
        let (tp1, fp1, tp0, fp0) = (self.tp, self.fp, self.tn, self.fn_);
        ratio("precision", tp0 + tp1, tp0 + tp1 + fp0 + fp1)
    }

    /// Pooled recall over both classes, `Σ TP_c / Σ (TP_c + FN_c)`.
    pub fn recall_pooled(&self) -> Result<f64> {
        let (tp1, fn1, tp0, fn0) = (self.tp, self.fn_, self.tn, self.fp);
        ratio("recall", tp0 + tp1, tp0 + tp1 + fn0 + fn1)
    }

    /// Harmonic mean of the pooled precision and recall.
    pub fn f1(&self) -> Result<f64> {
        let p = self.precision_pooled()?;
        let r = self.recall_pooled()?;
        if p + r == 0.0 {
            return Err(Error::UndefinedMetric("f1"));
        }
        Ok(2.0 * (p * r) / (p + r))
    }

    /// Unweighted mean of the per-class precisions.
    pub fn precision_macro(&self) -> Result<f64> {
        let pos = ratio("precision_macro", self.tp, self.tp + self.fp)?;
        let neg = ratio("precision_macro", self.tn, self.tn + self.fn_)?;
        Ok(0.5 * (pos + neg))
    }

    /// Unweighted mean of the per-class recalls.
    pub fn recall_macro(&self) -> Result<f64> {
        let pos = ratio("recall_macro", self.tp, self.tp + self.fn_)?;
        let neg = ratio("recall_macro", self.tn, self.tn + self.fp)?;
        Ok(0.5 * (pos + neg))
    }

    /// `TN / (TN + FP)`.
    pub fn specificity(&self) -> Result<f64> {
        ratio("specificity", self.tn, self.tn + self.fp)
    }

    /// `TP / (TP + FP)`.
    pub fn ppv(&self) -> Result<f64> {
        ratio("ppv", self.tp, self.tp + self.fp)
    }

    /// `TN / (TN + FN)`.
    pub fn npv(&self) -> Result<f64> {
        ratio("npv", self.tn, self.tn + self.fn_)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasicMetrics {
    pub accuracy: Option<f64>,
    pub precision_pooled: Option<f64>,
    pub recall_pooled: Option<f64>,
    pub f1: Option<f64>,
    pub precision_macro: Option<f64>,
    pub recall_macro: Option<f64>,
}

pub fn basic_metrics(c: &ConfusionMatrix) -> BasicMetrics {
    BasicMetrics {
        accuracy: c.accuracy().ok(),
        precision_pooled: c.precision_pooled().ok(),
        recall_pooled: c.recall_pooled().ok(),
        f1: c.f1().ok(),
        precision_macro: c.precision_macro().ok(),
        recall_macro: c.recall_macro().ok(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClinicalMetrics {
    pub specificity: Option<f64>,
    pub ppv: Option<f64>,
    pub npv: Option<f64>,
}

pub fn clinical_metrics(c: &ConfusionMatrix) -> ClinicalMetrics {
    ClinicalMetrics {
        specificity: c.specificity().ok(),
        ppv: c.ppv().ok(),
        npv: c.npv().ok(),
    }
}

/// One (dataset, criterion, seed) run. Metrics that are undefined for the
/// observed confusion are `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub dataset: String,
    pub criterion: CriterionKind,
    pub seed: u64,
    pub bins: usize,
    #[serde(flatten)]
    pub confusion: ConfusionMatrix,
    pub accuracy: Option<f64>,
    #[serde(rename = "precision_paper")]
    pub precision_pooled: Option<f64>,
    #[serde(rename = "recall_paper")]
    pub recall_pooled: Option<f64>,
    pub f1: Option<f64>,
    pub precision_macro: Option<f64>,
    pub recall_macro: Option<f64>,
    pub specificity: Option<f64>,
    pub ppv: Option<f64>,
    pub npv: Option<f64>,
    pub tree_depth: usize,
    pub leaf_count: usize,
    pub balanced: bool,
    pub leaf_depths: Vec<usize>,
}

impl EvaluationReport {
    pub fn new(
        dataset: &str,
        criterion: CriterionKind,
        seed: u64,
        bins: usize,
        confusion: ConfusionMatrix,
        stats: &TreeStats,
    ) -> Self {
        let b = basic_metrics(&confusion);
        let c = clinical_metrics(&confusion);
        EvaluationReport {
            dataset: dataset.to_owned(),
            criterion,
            seed,
            bins,
            confusion,
            accuracy: b.accuracy,
            precision_pooled: b.precision_pooled,
            recall_pooled: b.recall_pooled,
            f1: b.f1,
            precision_macro: b.precision_macro,
            recall_macro: b.recall_macro,
            specificity: c.specificity,
            ppv: c.ppv,
            npv: c.npv,
            tree_depth: stats.depth,
            leaf_count: stats.leaf_count,
            balanced: stats.balanced,
            leaf_depths: stats.leaf_depths.clone(),
        }
    }
}

/// Everything that parameterizes one train/evaluate run apart from the data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Experiment {
    pub train_fraction: f64,
    pub seed: u64,
    pub bins: usize,
    pub strategy: BinStrategy,
    pub tree: TreeConfig,
}

impl Default for Experiment {
    fn default() -> Self {
        Experiment {
            train_fraction: 0.9,
            seed: 42,
            bins: 2,
            strategy: BinStrategy::EqualFrequency,
            tree: TreeConfig::default(),
        }
    }
}

impl Experiment {
    pub fn with_criterion(mut self, criterion: CriterionKind) -> Self {
        self.tree.criterion = criterion;
        self
    }

    pub fn with_mode(mut self, mode: AmplitudeMode) -> Self {
        self.tree.mode = mode;
        self
    }
}

/// Fits bin edges on `train`, grows a tree on the binned rows and bundles both.
pub fn fit_model(train: &Dataset, exp: &Experiment) -> Result<Model> {
    let disc = Discretizer::fit(train, exp.bins, exp.strategy)?;
    let binned = disc.transform(train)?;
    let x = binned.features();
    let y = binned.labels();
    let rows: Vec<usize> = (0..binned.len()).collect();
    let features: Vec<usize> = (0..binned.num_features()).collect();
    let root = build_tree(&x, &y, &rows, &features, &exp.tree)?;
    Ok(Model {
        criterion: exp.tree.criterion,
        feature_names: train.schema.feature_names.clone(),
        root,
        discretizer: Some(disc),
    })
}

/// Predicts every row of `test` with `model` and tallies the result.
pub fn evaluate_model(model: &Model, test: &Dataset, positive: &str) -> Result<ConfusionMatrix> {
    let predicted = test
        .rows
        .iter()
        .map(|r| model.predict_raw(&r.values))
        .collect::<Result<Vec<_>>>()?;
    confusion(&test.labels(), &predicted, positive)
}

/// Split, fit, predict and score one dataset under one configuration.
pub fn run_experiment(dataset: &Dataset, positive: &str, exp: &Experiment) -> Result<(Model, EvaluationReport)> {
    let (train, test) = train_test_split(dataset, exp.train_fraction, exp.seed)?;
    let model = fit_model(&train, exp)?;
    let c = evaluate_model(&model, &test, positive)?;
    let report = EvaluationReport::new(
        &dataset.name,
        exp.tree.criterion,
        exp.seed,
        exp.bins,
        c,
        &model.root.stats(),
    );
    Ok((model, report))
}

/// A prepared dataset and the label scored as positive.
#[derive(Debug, Clone)]
pub struct BenchmarkInput {
    pub dataset: Dataset,
    pub positive: String,
}

impl BenchmarkInput {
    /// Uses the larger label in natural order as positive when none is given.
    pub fn new(dataset: Dataset, positive: Option<&str>) -> Self {
        let positive = positive
            .map(str::to_owned)
            .or_else(|| label_set(&dataset).pop())
            .unwrap_or_default();
        BenchmarkInput { dataset, positive }
    }
}

/// Every dataset under every criterion, in input order (datasets outer).
pub fn run_benchmark(
    inputs: &[BenchmarkInput],
    criteria: &[CriterionKind],
    exp: &Experiment,
) -> Result<Vec<EvaluationReport>> {
    let mut reports = Vec::with_capacity(inputs.len() * criteria.len());
    for input in inputs {
        for &criterion in criteria {
            let (_, report) = run_experiment(&input.dataset, &input.positive, &exp.with_criterion(criterion))?;
            reports.push(report);
        }
    }
    Ok(reports)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(Error::InvalidConfig(format!("unknown report format {other:?}"))),
        }
    }
}

pub const CSV_COLUMNS: [&str; 20] = [
    "dataset",
    "criterion",
    "seed",
    "bins",
    "tp",
    "fp",
    "tn",
    "fn",
    "accuracy",
    "precision_paper",
    "recall_paper",
    "f1",
    "precision_macro",
    "recall_macro",
    "specificity",
    "ppv",
    "npv",
    "tree_depth",
    "leaf_count",
    "balanced",
];

/// Metric as a percentage with two decimals; empty when undefined.
fn pct(v: Option<f64>) -> String {
    v.map(|x| format!("{:.2}", 100.0 * x)).unwrap_or_default()
}

fn metric_cells(r: &EvaluationReport) -> [String; 9] {
    [
        pct(r.accuracy),
        pct(r.precision_pooled),
        pct(r.recall_pooled),
        pct(r.f1),
        pct(r.precision_macro),
        pct(r.recall_macro),
        pct(r.specificity),
        pct(r.ppv),
        pct(r.npv),
    ]
}

/// Renders reports. JSON carries full-precision fractions; CSV and
/// Markdown show metrics as percentages with two decimals.
pub fn emit_report(reports: &[EvaluationReport], format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => Ok(serde_json::to_string_pretty(reports)? + "\n"),
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::InvalidConfig(e.to_string());
            w.write_record(CSV_COLUMNS).map_err(io)?;
            for r in reports {
                let c = &r.confusion;
                let mut row = vec![
                    r.dataset.clone(),
                    r.criterion.to_string(),
                    r.seed.to_string(),
                    r.bins.to_string(),
                    c.tp.to_string(),
                    c.fp.to_string(),
                    c.tn.to_string(),
                    c.fn_.to_string(),
                ];
                row.extend(metric_cells(r));
                row.extend([
                    r.tree_depth.to_string(),
                    r.leaf_count.to_string(),
                    r.balanced.to_string(),
                ]);
                w.write_record(&row).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::InvalidConfig(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        ReportFormat::Markdown => {
            let mut out = String::new();
            out.push_str("| dataset | criterion | tp | fp | tn | fn | accuracy | precision | recall | f1 | specificity | ppv | npv | depth | leaves | balanced |\n");
            out.push_str("|---|---|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---|\n");
            for r in reports {
                let c = &r.confusion;
                let m = metric_cells(r).map(|s| if s.is_empty() { "n/a".to_owned() } else { s });
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    r.dataset,
                    r.criterion,
                    c.tp,
                    c.fp,
                    c.tn,
                    c.fn_,
                    m[0],
                    m[1],
                    m[2],
                    m[3],
                    m[6],
                    m[7],
                    m[8],
                    r.tree_depth,
                    r.leaf_count,
                    r.balanced
                )
                .expect("writing to a String");
            }
            Ok(out)
        }
    }
}

/// Parses the JSON written by [`emit_report`].
pub fn parse_json_reports(text: &str) -> Result<Vec<EvaluationReport>> {
    Ok(serde_json::from_str(text)?)
}
