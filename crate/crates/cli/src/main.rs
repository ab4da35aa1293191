use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qfdt::data::{label_set, DatasetSchema, FeatureKind};
use qfdt::evaluation::evaluate_model;
use qfdt::tree::score_features;
use qfdt::{
    default_data_dir, emit_report, fit_model, load_csv_inferred, prepare_builtin, render, run_benchmark,
    train_test_split, AmplitudeMode, BenchmarkInput, BinStrategy, Builtin, CriterionKind, Dataset, Error, ErrorClass,
    EvaluationReport, Experiment, Model, ReportFormat, Result, TreeConfig,
};

#[derive(Parser)]
#[command(name = "qfdt", version, about = "Fidelity-criterion decision trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a tree on the training split and write the model.
    Train(TrainArgs),
    /// Score a saved model on the test split of a dataset.
    Eval(EvalArgs),
    /// Predict the label of one or more raw rows.
    Predict(PredictArgs),
    /// Run every dataset under every requested criterion.
    Bench(BenchArgs),
    /// Render a saved model as an indented tree.
    Inspect(InspectArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// CSV file with a header row; the last column is the label.
    #[arg(long)]
    data: Option<PathBuf>,
    /// Built-in dataset: haberman, wisconsin or seeds.
    #[arg(long, alias = "dataset")]
    builtin: Option<Builtin>,
}

#[derive(Args)]
struct DataOpts {
    #[command(flatten)]
    source: Source,
    /// Treat every feature column of a --data file as categorical.
    #[arg(long)]
    categorical: bool,
    /// Label scored as positive; defaults to the dataset's clinical class.
    #[arg(long)]
    positive: Option<String>,
}

#[derive(Args)]
struct SplitOpts {
    #[arg(long, default_value_t = 0.9)]
    train_fraction: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct FitOpts {
    #[arg(long, default_value = "fidelity")]
    criterion: CriterionKind,
    /// Amplitude embedding: joint or conditional.
    #[arg(long, default_value = "joint")]
    mode: AmplitudeMode,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..))]
    bins: u64,
    /// equal-frequency or equal-width.
    #[arg(long, default_value = "equal-frequency")]
    binning: BinStrategy,
    #[arg(long)]
    max_depth: Option<usize>,
}

impl FitOpts {
    fn experiment(&self, split: &SplitOpts) -> Experiment {
        Experiment {
            train_fraction: split.train_fraction,
            seed: split.seed,
            bins: self.bins as usize,
            strategy: self.binning,
            tree: TreeConfig {
                criterion: self.criterion,
                mode: self.mode,
                max_depth: self.max_depth,
            },
        }
    }
}

#[derive(Args)]
struct TrainArgs {
    #[command(flatten)]
    data: DataOpts,
    #[command(flatten)]
    split: SplitOpts,
    #[command(flatten)]
    fit: FitOpts,
    /// Fit on every row instead of the training split.
    #[arg(long)]
    full: bool,
    /// Where to write the model JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    model: PathBuf,
    #[command(flatten)]
    data: DataOpts,
    #[command(flatten)]
    split: SplitOpts,
    /// Evaluate on every row instead of the test split.
    #[arg(long)]
    full: bool,
    #[arg(long, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PredictArgs {
    #[arg(long)]
    model: PathBuf,
    /// Comma-separated raw feature values, in model column order.
    #[arg(long, required = true)]
    row: Vec<String>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated built-in datasets, or "all".
    #[arg(long, alias = "builtin", default_value = "all")]
    dataset: String,
    /// Comma-separated criteria, or "all".
    #[arg(long, default_value = "all")]
    criteria: String,
    #[command(flatten)]
    split: SplitOpts,
    #[command(flatten)]
    fit: FitOpts,
    #[arg(long, default_value = "markdown")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InspectArgs {
    #[arg(long)]
    model: PathBuf,
}

fn exit_code(e: &Error) -> u8 {
    match e.class() {
        ErrorClass::Config => 2,
        ErrorClass::Data => 3,
        ErrorClass::Numerical => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Train(a) => train(a),
        Command::Eval(a) => eval(a),
        Command::Predict(a) => predict(a),
        Command::Bench(a) => bench(a),
        Command::Inspect(a) => inspect(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn load(opts: &DataOpts) -> Result<(Dataset, String)> {
    let (mut dataset, default_positive) = match (&opts.source.data, opts.source.builtin) {
        (Some(path), _) => {
            let d = load_csv_inferred(path)?;
            let positive = label_set(&d).pop().unwrap_or_default();
            (d, positive)
        }
        (None, Some(b)) => (prepare_builtin(b, &default_data_dir())?, b.positive_class().to_owned()),
        (None, None) => return Err(Error::InvalidConfig("one of --data or --builtin is required".into())),
    };
    if opts.categorical {
        let n = dataset.num_features();
        dataset.schema = DatasetSchema::new(
            dataset.schema.feature_names.clone(),
            vec![FeatureKind::Categorical; n],
            dataset.schema.label_name.clone(),
        )?;
    }
    let positive = opts.positive.clone().unwrap_or(default_positive);
    Ok((dataset, positive))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|source| Error::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn read_model(path: &Path) -> Result<Model> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    Model::from_json(&text)
}

fn train(a: TrainArgs) -> Result<()> {
    let (dataset, _) = load(&a.data)?;
    let exp = a.fit.experiment(&a.split);
    let (train, test_rows) = if a.full {
        (dataset.clone(), 0)
    } else {
        let (train, test) = train_test_split(&dataset, exp.train_fraction, exp.seed)?;
        let n = test.len();
        (train, n)
    };
    let model = fit_model(&train, &exp)?;

    // Root scores are recomputed on the binned training rows so they match
    // what the tree builder saw.
    let binned = model
        .discretizer
        .as_ref()
        .map(|d| d.transform(&train))
        .transpose()?
        .unwrap_or(train);
    let x = binned.features();
    let y = binned.labels();
    let rows: Vec<usize> = (0..binned.len()).collect();
    let all: Vec<usize> = (0..binned.num_features()).collect();
    let scores = score_features(&x, &y, &rows, &all, &exp.tree)?;

    let mut out = String::new();
    out.push_str(&format!(
        "dataset {} ({} train rows, {} test rows)\n",
        dataset.name,
        binned.len(),
        test_rows
    ));
    out.push_str(&format!(
        "criterion {} ({} mode)\n",
        exp.tree.criterion,
        exp.tree.mode.as_str()
    ));
    out.push_str("root scores:\n");
    for s in &scores {
        out.push_str(&format!("  {} {:.6}\n", model.feature_names[s.feature_index], s.score));
    }
    match &model.root {
        qfdt::TreeNode::Internal { rule, .. } => {
            out.push_str(&format!("root {}\n", model.feature_names[rule.feature]));
        }
        qfdt::TreeNode::Leaf { label, .. } => out.push_str(&format!("root leaf {label}\n")),
    }
    let stats = model.root.stats();
    out.push_str(&format!(
        "depth {}, leaves {}, leaf depths {:?}, balanced {}\n",
        stats.depth, stats.leaf_count, stats.leaf_depths, stats.balanced
    ));
    if let Some(path) = &a.out {
        write_output(Some(path), &model.to_json()?)?;
        out.push_str(&format!("model written to {}\n", path.display()));
    }
    write_output(None, &out)
}

fn eval(a: EvalArgs) -> Result<()> {
    let model = read_model(&a.model)?;
    let (dataset, positive) = load(&a.data)?;
    let test = if a.full {
        dataset.clone()
    } else {
        train_test_split(&dataset, a.split.train_fraction, a.split.seed)?.1
    };
    let confusion = evaluate_model(&model, &test, &positive)?;
    let bins = model.discretizer.as_ref().map_or(0, |d| d.bins);
    let report = EvaluationReport::new(
        &dataset.name,
        model.criterion,
        a.split.seed,
        bins,
        confusion,
        &model.root.stats(),
    );
    write_output(a.out.as_deref(), &emit_report(&[report], a.format)?)
}

fn predict(a: PredictArgs) -> Result<()> {
    let model = read_model(&a.model)?;
    let mut out = String::new();
    for row in &a.row {
        let values: Vec<&str> = row.split(',').map(str::trim).collect();
        if values.len() != model.feature_names.len() {
            return Err(Error::InvalidConfig(format!(
                "row {row:?} has {} values, model expects {}",
                values.len(),
                model.feature_names.len()
            )));
        }
        out.push_str(&model.predict_raw(&values)?);
        out.push('\n');
    }
    write_output(None, &out)
}

fn parse_list<T: std::str::FromStr<Err = Error> + Copy>(spec: &str, all: &[T]) -> Result<Vec<T>> {
    if spec.trim().eq_ignore_ascii_case("all") {
        return Ok(all.to_vec());
    }
    spec.split(',').map(|s| s.trim().parse()).collect()
}

fn bench(a: BenchArgs) -> Result<()> {
    let builtins = parse_list(&a.dataset, &Builtin::ALL)?;
    let criteria = parse_list(&a.criteria, &CriterionKind::ALL)?;
    let dir = default_data_dir();
    let inputs = builtins
        .iter()
        .map(|&b| Ok(BenchmarkInput::new(prepare_builtin(b, &dir)?, Some(b.positive_class()))))
        .collect::<Result<Vec<_>>>()?;
    let exp = a.fit.experiment(&a.split);
    let reports = run_benchmark(&inputs, &criteria, &exp)?;
    write_output(a.out.as_deref(), &emit_report(&reports, a.format)?)
}

fn inspect(a: InspectArgs) -> Result<()> {
    let model = read_model(&a.model)?;
    write_output(None, &render(&model))
}
