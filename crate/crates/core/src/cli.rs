//! Command-line front end.
//!
//! Exit codes: 0 success, 1 regression failure, 2 input error, 3 I/O error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::ahp::{
    ahp_decide, ahp_weights, consistency_with, ConsistencyReport, LambdaEstimator, RiTable,
    DEFAULT_CR_THRESHOLD,
};
use crate::chart::{render_chart, ChartSpec};
use crate::corpus::{self, load_corpus, published_decisions, ToleranceConfig};
use crate::error::Error;
use crate::fuzzy::{fuzzy_decide, fuzzy_normalize, fuzzy_scores};
use crate::numeric::round_to;
use crate::pcm::{parse_matrix, MatrixFormat, PairwiseMatrix};
use crate::trend::{decision_series, summarize, ComparisonSeries, TrendSummary, DEFAULT_EPSILON};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REGRESSION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mcdm",
    version,
    about = "AHP and fuzzy max-min decision analysis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weights, fuzzy scores and decisions for one matrix.
    Evaluate(EvaluateArgs),
    /// Principal value, CI, RI and CR for one matrix.
    Consistency(ConsistencyArgs),
    /// Transition analysis across one or more matrices.
    Compare(CompareArgs),
    /// The embedded published datasets.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
    /// SVG line chart of AHP weights against fuzzy scores.
    Chart(ChartArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Method {
    Ahp,
    Fuzzy,
    #[default]
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Estimator {
    #[default]
    WeightedColumnSum,
    MeanRatio,
    PowerIteration,
}

impl From<Estimator> for LambdaEstimator {
    fn from(e: Estimator) -> Self {
        match e {
            Estimator::WeightedColumnSum => LambdaEstimator::WeightedColumnSum,
            Estimator::MeanRatio => LambdaEstimator::MeanRatio,
            Estimator::PowerIteration => LambdaEstimator::PowerIteration,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ConsistencyOptions {
    /// Acceptability threshold for the consistency ratio.
    #[arg(long, default_value_t = DEFAULT_CR_THRESHOLD)]
    pub cr_threshold: f64,
    /// Random index for an order, as `n=value`. Repeatable.
    #[arg(long = "ri", value_parser = parse_ri)]
    pub ri: Vec<(usize, f64)>,
    /// Principal value estimator.
    #[arg(long, value_enum, default_value_t)]
    pub lambda: Estimator,
}

impl ConsistencyOptions {
    fn ri_table(&self) -> Result<RiTable, Error> {
        let mut table = RiTable::published();
        for &(n, v) in &self.ri {
            table.set(n, v)?;
        }
        Ok(table)
    }
}

fn parse_ri(s: &str) -> Result<(usize, f64), String> {
    let (n, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected n=value, got {s:?}"))?;
    let n = n
        .trim()
        .parse()
        .map_err(|_| format!("bad order in {s:?}"))?;
    let v = v
        .trim()
        .parse()
        .map_err(|_| format!("bad value in {s:?}"))?;
    Ok((n, v))
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Matrix file (CSV, or JSON by extension).
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    #[command(flatten)]
    pub consistency: ConsistencyOptions,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConsistencyArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    #[command(flatten)]
    pub consistency: ConsistencyOptions,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Matrix files, one series each.
    pub inputs: Vec<PathBuf>,
    /// JSON file with precomputed series: `[{"name", "labels", "ahp", "fuzzy"}]`.
    #[arg(long)]
    pub series: Option<PathBuf>,
    /// Use the printed comparison values of the embedded datasets plus the
    /// series of their decision values.
    #[arg(long)]
    pub corpus: bool,
    /// Changes up to this magnitude count as unchanged.
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,
    /// Round values to this many decimals before comparing steps.
    #[arg(long)]
    pub round: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CorpusCommand {
    /// Recompute every dataset and compare against the printed values.
    Run(RunArgs),
    /// Write each dataset as `<name>.csv` plus `<name>.expected.json`.
    Export { dir: PathBuf },
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 0.005)]
    pub tol_weights: f64,
    #[arg(long, default_value_t = 0.005)]
    pub tol_scores: f64,
    #[arg(long, default_value_t = 0.10)]
    pub tol_lambda: f64,
    #[arg(long, default_value_t = 0.02)]
    pub tol_ci: f64,
    #[arg(long, default_value_t = 0.02)]
    pub tol_cr: f64,
    #[arg(long, default_value_t = 0.02)]
    pub tol_percent: f64,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,
    /// Count documented errata as failures.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ChartArgs {
    /// Matrix file to evaluate and plot.
    #[arg(required_unless_present = "corpus")]
    pub input: Option<PathBuf>,
    /// Plot the printed values of an embedded dataset, or `decisions`.
    #[arg(long, conflicts_with = "input")]
    pub corpus: Option<String>,
    #[arg(long, default_value_t = 800)]
    pub width: u32,
    #[arg(long, default_value_t = 480)]
    pub height: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::input(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Evaluate(args) => cmd_evaluate(&args, stdout, stderr),
        Command::Consistency(args) => cmd_consistency(&args, stdout),
        Command::Compare(args) => cmd_compare(&args, stdout),
        Command::Corpus { command } => cmd_corpus(command, stdout),
        Command::Chart(args) => cmd_chart(&args, stdout),
    }
}

fn read_matrix(path: &Path) -> Result<PairwiseMatrix, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_matrix(&text, MatrixFormat::from_path(path))
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
        }
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::io(format!("stdout: {e}"))),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Both methods on one matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evaluation {
    pub labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ahp: Option<AhpOutput>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fuzzy: Option<FuzzyOutput>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AhpOutput {
    pub weights: Vec<f64>,
    pub display: Vec<f64>,
    pub decision: DecisionOutput,
    /// Absent when no random index is known for the matrix order.
    pub consistency: Option<ConsistencyReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzyOutput {
    pub scores: Vec<f64>,
    pub display: Vec<f64>,
    pub decision: DecisionOutput,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionOutput {
    pub label: String,
    pub value: f64,
    pub display: f64,
}

pub fn evaluate(
    matrix: &PairwiseMatrix,
    method: Method,
    options: &ConsistencyOptions,
) -> Result<Evaluation, Error> {
    let ahp = if method != Method::Fuzzy {
        let weights = ahp_weights(matrix);
        let d = ahp_decide(&weights);
        let consistency = match consistency_with(
            matrix,
            &options.ri_table()?,
            options.cr_threshold,
            options.lambda.into(),
        ) {
            Ok(r) => Some(r),
            Err(Error::RiUnavailable(_)) => None,
            Err(e) => return Err(e),
        };
        Some(AhpOutput {
            display: weights.values().iter().map(|&w| round_to(w, 3)).collect(),
            weights: weights.values().to_vec(),
            decision: DecisionOutput {
                label: d.label.to_string(),
                value: d.value,
                display: round_to(d.value, 3),
            },
            consistency,
        })
    } else {
        None
    };
    let fuzzy = if method != Method::Ahp {
        let scores = fuzzy_scores(&fuzzy_normalize(matrix));
        let d = fuzzy_decide(&scores);
        Some(FuzzyOutput {
            display: scores.display_values(),
            scores: scores.values().to_vec(),
            decision: DecisionOutput {
                label: d.label.to_string(),
                value: d.value,
                display: round_to(d.value, 3),
            },
        })
    } else {
        None
    };
    Ok(Evaluation {
        labels: matrix.label_strings(),
        ahp,
        fuzzy,
    })
}

fn evaluation_text(e: &Evaluation) -> String {
    let mut out = String::new();
    let mut header = format!("{:<10}", "criterion");
    if e.ahp.is_some() {
        header.push_str(&format!(" {:>8}", "AHP"));
    }
    if e.fuzzy.is_some() {
        header.push_str(&format!(" {:>8}", "fuzzy"));
    }
    out.push_str(header.trim_end());
    out.push('\n');
    for (i, label) in e.labels.iter().enumerate() {
        let mut line = format!("{label:<10}");
        if let Some(a) = &e.ahp {
            line.push_str(&format!(" {:>8.3}", a.weights[i]));
        }
        if let Some(f) = &e.fuzzy {
            line.push_str(&format!(" {:>8.3}", f.scores[i]));
        }
        out.push_str(&line);
        out.push('\n');
    }
    if let Some(a) = &e.ahp {
        out.push_str(&format!(
            "AHP decision: {} ({:.3})\n",
            a.decision.label, a.decision.value
        ));
        match &a.consistency {
            Some(c) => out.push_str(&consistency_text(c)),
            None => {
                out.push_str("consistency: no random index for this order (use --ri n=value)\n")
            }
        }
    }
    if let Some(f) = &e.fuzzy {
        out.push_str(&format!(
            "fuzzy decision: {} ({:.3})\n",
            f.decision.label, f.decision.value
        ));
    }
    out
}

fn evaluation_csv(e: &Evaluation) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let mut header = vec!["label"];
    if e.ahp.is_some() {
        header.push("ahp_weight");
    }
    if e.fuzzy.is_some() {
        header.push("fuzzy_score");
    }
    w.write_record(&header).expect("write to memory");
    for (i, label) in e.labels.iter().enumerate() {
        let mut rec = vec![label.clone()];
        if let Some(a) = &e.ahp {
            rec.push(a.weights[i].to_string());
        }
        if let Some(f) = &e.fuzzy {
            rec.push(f.scores[i].to_string());
        }
        w.write_record(&rec).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn consistency_text(c: &ConsistencyReport) -> String {
    format!(
        "lambda_max={:.2} CI={:.2} RI={:.2} CR={:.2} ({} at threshold {})\n",
        c.lambda_max,
        c.ci,
        c.ri,
        c.cr,
        if c.acceptable {
            "acceptable"
        } else {
            "not acceptable"
        },
        c.threshold
    )
}

pub fn cmd_evaluate(
    args: &EvaluateArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let matrix = read_matrix(&args.input)?;
    let evaluation = evaluate(&matrix, args.method, &args.consistency)?;
    if evaluation
        .ahp
        .as_ref()
        .is_some_and(|a| a.consistency.is_none())
    {
        let _ = writeln!(
            stderr,
            "note: no random index for order {}; consistency skipped",
            matrix.order()
        );
    }
    let text = match args.format {
        OutputFormat::Json => to_json(&evaluation),
        OutputFormat::Csv => evaluation_csv(&evaluation),
        OutputFormat::Text => evaluation_text(&evaluation),
    };
    emit(&args.out, &text, stdout)?;
    Ok(EXIT_OK)
}

pub fn cmd_consistency(args: &ConsistencyArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let matrix = read_matrix(&args.input)?;
    let o = &args.consistency;
    let report = consistency_with(&matrix, &o.ri_table()?, o.cr_threshold, o.lambda.into())?;
    let text = match args.format {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Csv => format!(
            "n,lambda_max,ci,ri,cr,acceptable\n{},{},{},{},{},{}\n",
            report.n, report.lambda_max, report.ci, report.ri, report.cr, report.acceptable
        ),
        OutputFormat::Text => consistency_text(&report),
    };
    emit(&args.out, &text, stdout)?;
    Ok(EXIT_OK)
}

#[derive(Debug, Deserialize)]
struct SeriesFileEntry {
    name: String,
    labels: Vec<String>,
    ahp: Vec<f64>,
    fuzzy: Vec<f64>,
}

fn corpus_series() -> Vec<ComparisonSeries> {
    let corpus = load_corpus();
    let mut all: Vec<ComparisonSeries> = corpus.iter().map(|d| d.printed_series()).collect();
    all.push(decision_series(&published_decisions(&corpus)).expect("seven published decisions"));
    all
}

pub fn comparison_series(args: &CompareArgs) -> Result<Vec<ComparisonSeries>, Failure> {
    let mut all = Vec::new();
    for path in &args.inputs {
        let m = read_matrix(path)?;
        let weights = ahp_weights(&m);
        let scores = fuzzy_scores(&fuzzy_normalize(&m));
        all.push(ComparisonSeries::from_results(
            stem(path),
            &weights,
            &scores,
        )?);
    }
    if let Some(path) = &args.series {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        let entries: Vec<SeriesFileEntry> = serde_json::from_str(&text)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        for e in entries {
            all.push(ComparisonSeries::new(e.name, e.labels, e.ahp, e.fuzzy)?);
        }
    }
    if args.corpus {
        all.extend(corpus_series());
    }
    if let Some(dp) = args.round {
        all = all.iter().map(|s| s.rounded(dp)).collect();
    }
    if all.is_empty() {
        return Err(Failure::input(
            "nothing to compare: give matrix files, --series or --corpus",
        ));
    }
    Ok(all)
}

fn summary_text(s: &TrendSummary) -> String {
    let mut out = format!(
        "{:<24} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5} {:>6}\n",
        "series", "++", "+-", "-+", "--", "A~", "F~", "==", "total"
    );
    for row in &s.series {
        let c = row.counts.as_array();
        out.push_str(&format!(
            "{:<24} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5} {:>6}\n",
            row.name, c[0], c[1], c[2], c[3], c[4], c[5], c[6], row.total
        ));
    }
    out.push_str(&format!("\ntotal transitions: {}\n", s.total));
    for p in &s.percentages {
        out.push_str(&format!("{:<40} {:>6.2}%\n", p.description, p.percent));
    }
    let a = &s.aggregate;
    out.push_str(&format!(
        "\nsame direction {:.2}%  reverse swing {:.2}%  one unchanged {:.2}%  both unchanged {:.2}%\n",
        a.same_direction, a.reverse_swing, a.one_unchanged, a.both_unchanged
    ));
    out
}

pub fn cmd_compare(args: &CompareArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let all = comparison_series(args)?;
    let summary = summarize(&all, args.epsilon)?;
    let text = match args.format {
        OutputFormat::Json => to_json(&summary),
        OutputFormat::Csv => summary.to_csv(),
        OutputFormat::Text => summary_text(&summary),
    };
    emit(&args.out, &text, stdout)?;
    Ok(EXIT_OK)
}

pub fn cmd_corpus(command: CorpusCommand, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        CorpusCommand::Run(args) => {
            let tolerances = ToleranceConfig {
                weights: args.tol_weights,
                scores: args.tol_scores,
                lambda_max: args.tol_lambda,
                ci: args.tol_ci,
                cr: args.tol_cr,
                percent: args.tol_percent,
                epsilon: args.epsilon,
                strict: args.strict,
                ..ToleranceConfig::default()
            };
            if !(tolerances.epsilon.is_finite() && tolerances.epsilon >= 0.0) {
                return Err(Error::InvalidEpsilon(tolerances.epsilon).into());
            }
            let report = corpus::run_regression(&tolerances);
            let text = match args.format {
                OutputFormat::Json => to_json(&report),
                OutputFormat::Csv => {
                    let mut s =
                        String::from("scope,kind,item,observed,expected,delta,tolerance,status\n");
                    for (scope, c) in report.all_checks() {
                        s.push_str(&format!(
                            "{scope},{},{},{},{},{},{},{}\n",
                            c.kind.key(),
                            c.item,
                            c.observed,
                            c.expected,
                            c.delta,
                            c.tolerance,
                            serde_json::to_value(c.status)
                                .expect("status")
                                .as_str()
                                .unwrap_or_default()
                        ));
                    }
                    s
                }
                OutputFormat::Text => report.to_text(),
            };
            emit(&args.out, &text, stdout)?;
            Ok(if report.passed {
                EXIT_OK
            } else {
                EXIT_REGRESSION
            })
        }
        CorpusCommand::Export { dir } => {
            let written = corpus::export_corpus(&dir)
                .map_err(|e| Failure::io(format!("{}: {e}", dir.display())))?;
            let listing: String = written
                .iter()
                .map(|p| format!("{}\n", p.display()))
                .collect();
            emit(&None, &listing, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

pub fn cmd_chart(args: &ChartArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let series = match (&args.input, &args.corpus) {
        (Some(path), _) => {
            let m = read_matrix(path)?;
            ComparisonSeries::from_results(
                stem(path),
                &ahp_weights(&m),
                &fuzzy_scores(&fuzzy_normalize(&m)),
            )?
        }
        (None, Some(name)) => corpus_series()
            .into_iter()
            .find(|s| {
                s.name.eq_ignore_ascii_case(name)
                    || (name == "decisions" && s.name == crate::trend::DECISION_SERIES_NAME)
            })
            .ok_or_else(|| Failure::input(format!("no embedded series named {name:?}")))?,
        (None, None) => return Err(Failure::input("give a matrix file or --corpus NAME")),
    };
    let mut spec = ChartSpec::from_series(&series);
    spec.width = args.width;
    spec.height = args.height;
    let svg = render_chart(&spec)?;
    emit(&args.out, &svg, stdout)?;
    Ok(EXIT_OK)
}
