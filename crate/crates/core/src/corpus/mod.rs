//! The eight published rating matrices with their printed results, and a
//! regression that recomputes everything and compares.
//!
//! Expected vectors come from the printed comparison tables, rounded to three
//! decimals (AHP) or two to three decimals (fuzzy). Transition counts are
//! recounted from those printed comparison values, since that is the data the
//! published counts were read from.
//!
//! A few printed values cannot be reproduced from the printed matrices by any
//! reading of the method; each is listed in [`errata`] with the value the
//! method actually yields. A deviation that matches its erratum is reported as
//! [`CheckStatus::Erratum`] instead of a failure unless the run is strict.

mod data;

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::ahp::{ahp_decide, ahp_weights, consistency, RiTable, DEFAULT_CR_THRESHOLD};
use crate::fuzzy::{fuzzy_decide, fuzzy_normalize, fuzzy_scores};
use crate::numeric::round_to;
use crate::pcm::{serialize_matrix, MatrixFormat, PairwiseMatrix};
use crate::trend::{
    classify_series, decision_series, CategoryCounts, ComparisonSeries, DatasetDecision, SeriesRow,
    TransitionCategory, TrendSummary, DEFAULT_EPSILON,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PublishedConsistency {
    pub lambda_max: f64,
    pub ci: f64,
    pub ri: f64,
    pub cr: f64,
}

pub(crate) struct DatasetSource {
    name: &'static str,
    labels: &'static [&'static str],
    ratings: &'static [&'static [u8]],
    printed_ahp: &'static [f64],
    printed_fuzzy: &'static [f64],
    consistency: PublishedConsistency,
    /// Six published categories, without both-unchanged.
    trend_row: [usize; 6],
    /// Published (AHP, fuzzy) decision values.
    decision: Option<(f64, f64)>,
    /// (printed alias, canonical label).
    aliases: &'static [(&'static str, &'static str)],
}

/// Transition counts published for the series of per-dataset decisions.
pub const DECISION_TREND_ROW: [usize; 6] = [1, 0, 2, 3, 0, 0];

/// Published pooled percentages, in [`TransitionCategory::ALL`] order
/// (both-unchanged omitted).
pub const PUBLISHED_PERCENTAGES: [f64; 6] = [20.59, 13.24, 19.12, 29.41, 14.71, 2.94];

/// Published same-direction, reverse-swing and one-unchanged rates.
/// The last prints as 17.64 although 12/68 rounds to 17.65.
pub const PUBLISHED_AGREEMENT: [f64; 3] = [50.0, 32.36, 17.64];

pub const PUBLISHED_TOTAL_OBSERVATIONS: usize = 68;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectedValues {
    pub ahp: Vec<f64>,
    pub fuzzy: Vec<f64>,
    pub consistency: PublishedConsistency,
    pub trend_row: CategoryCounts,
    pub decision: Option<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusDataset {
    pub name: String,
    pub matrix: PairwiseMatrix,
    pub expected: ExpectedValues,
    pub aliases: Vec<(String, String)>,
}

impl CorpusDataset {
    /// The printed comparison values as a series.
    pub fn printed_series(&self) -> ComparisonSeries {
        ComparisonSeries::new(
            self.name.clone(),
            self.matrix.label_strings(),
            self.expected.ahp.clone(),
            self.expected.fuzzy.clone(),
        )
        .expect("embedded series are well formed")
    }

    /// Resolves a printed alias such as `SRF` to its canonical label.
    pub fn canonical_label<'a>(&'a self, label: &'a str) -> &'a str {
        self.aliases
            .iter()
            .find(|(alias, _)| alias == label)
            .map_or(label, |(_, canonical)| canonical.as_str())
    }
}

fn six_to_seven(row: [usize; 6]) -> CategoryCounts {
    let mut all = [0; 7];
    all[..6].copy_from_slice(&row);
    CategoryCounts::from_array(all)
}

pub fn load_corpus() -> Vec<CorpusDataset> {
    data::ALL
        .iter()
        .map(|src| {
            let rows = src
                .ratings
                .iter()
                .map(|r| r.iter().map(|&v| f64::from(v)).collect())
                .collect();
            let matrix = PairwiseMatrix::new(src.labels.to_vec(), rows)
                .unwrap_or_else(|e| panic!("embedded dataset {} is invalid: {e}", src.name));
            CorpusDataset {
                name: src.name.to_string(),
                matrix,
                expected: ExpectedValues {
                    ahp: src.printed_ahp.to_vec(),
                    fuzzy: src.printed_fuzzy.to_vec(),
                    consistency: src.consistency,
                    trend_row: six_to_seven(src.trend_row),
                    decision: src.decision,
                },
                aliases: src
                    .aliases
                    .iter()
                    .map(|(a, c)| (a.to_string(), c.to_string()))
                    .collect(),
            }
        })
        .collect()
}

/// Published per-dataset decision values in publication order.
pub fn published_decisions(corpus: &[CorpusDataset]) -> Vec<DatasetDecision> {
    corpus
        .iter()
        .filter_map(|d| {
            d.expected
                .decision
                .map(|(a, f)| DatasetDecision::new(d.name.clone(), a, f))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ToleranceConfig {
    pub weights: f64,
    pub scores: f64,
    pub lambda_max: f64,
    pub ci: f64,
    pub cr: f64,
    /// Percentage points.
    pub percent: f64,
    pub epsilon: f64,
    pub cr_threshold: f64,
    /// Treat documented errata as failures.
    pub strict: bool,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            weights: 0.005,
            scores: 0.005,
            lambda_max: 0.10,
            ci: 0.02,
            cr: 0.02,
            percent: 0.02,
            epsilon: DEFAULT_EPSILON,
            cr_threshold: DEFAULT_CR_THRESHOLD,
            strict: false,
        }
    }
}

/// Slack for comparing a delta against a tolerance, so that a value exactly
/// on the boundary (|0.125 - 0.12| = 0.005) is within it.
const BOUNDARY_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Weight,
    Score,
    AhpDecision,
    FuzzyDecision,
    LambdaMax,
    ConsistencyIndex,
    ConsistencyRatio,
    Acceptability,
    TrendCount,
    TotalObservations,
    Percentage,
    Agreement,
}

impl CheckKind {
    pub fn key(self) -> &'static str {
        match self {
            CheckKind::Weight => "weight",
            CheckKind::Score => "score",
            CheckKind::AhpDecision => "ahp-decision",
            CheckKind::FuzzyDecision => "fuzzy-decision",
            CheckKind::LambdaMax => "lambda-max",
            CheckKind::ConsistencyIndex => "ci",
            CheckKind::ConsistencyRatio => "cr",
            CheckKind::Acceptability => "acceptable",
            CheckKind::TrendCount => "trend-count",
            CheckKind::TotalObservations => "total",
            CheckKind::Percentage => "percent",
            CheckKind::Agreement => "agreement",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    /// Deviates exactly as documented in [`errata`].
    Erratum,
    Fail,
}

/// A printed value that the printed inputs do not reproduce.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Erratum {
    pub scope: &'static str,
    pub kind: CheckKind,
    pub item: &'static str,
    pub printed: f64,
    /// What the method gives on the printed inputs.
    pub recomputed: f64,
    pub note: &'static str,
}

/// Known irreproducible printed values.
pub fn errata() -> &'static [Erratum] {
    const RISK_ROW: &str = "the printed Risk comparison values contain one AHP-up/fuzzy-down step and four both-decrease steps; the published row has two and three";
    &[
        Erratum {
            scope: "Risk",
            kind: CheckKind::Score,
            item: "CPLX",
            printed: 0.33,
            recomputed: 3.0 / 7.0,
            note: "printed normalized CPLX/RELY is 0.3, but a(CPLX,RELY)=9 exceeds a(RELY,CPLX)=7, so the ratio is 1; the row minimum is 3/7 (CPLX/PDTH)",
        },
        Erratum {
            scope: "Risk",
            kind: CheckKind::Score,
            item: "WSZE",
            printed: 0.11,
            recomputed: 1.0 / 3.0,
            note: "printed normalized WSZE/SCED is 0.1, but a(WSZE,SCED)=5 and a(SCED,WSZE)=9 give 5/9; the row minimum is 1/3",
        },
        Erratum {
            scope: "Risk",
            kind: CheckKind::Score,
            item: "WSKL",
            printed: 0.11,
            recomputed: 0.2,
            note: "printed normalized WSKL/SCED is 0.1, but a(WSKL,SCED)=7 and a(SCED,WSKL)=9 give 7/9; the row minimum is 1/5 (WSKL/PMEX)",
        },
        Erratum {
            scope: "Customer",
            kind: CheckKind::Score,
            item: "STF",
            printed: 0.12,
            recomputed: 1.0,
            note: "printed normalized STF/SRT is 0.12, but a(STF,SRT)=a(SRT,STF)=8, so every STF ratio is 1",
        },
        Erratum {
            scope: "Customer",
            kind: CheckKind::FuzzyDecision,
            item: "max",
            printed: 0.5,
            recomputed: 1.0,
            note: "follows from the STF score erratum: STF scores 1",
        },
        Erratum {
            scope: "Tools",
            kind: CheckKind::Score,
            item: "VPS",
            printed: 0.2,
            recomputed: 2.0 / 7.0,
            note: "printed normalized VPS/VRM is 0.2, but a(VPS,VRM)=9 exceeds a(VRM,VPS)=5, so the ratio is 1; the row minimum is 2/7 (VPS/CWA)",
        },
        Erratum {
            scope: "Risk",
            kind: CheckKind::TrendCount,
            item: "ahp_up_fuzzy_down",
            printed: 2.0,
            recomputed: 1.0,
            note: RISK_ROW,
        },
        Erratum {
            scope: "Risk",
            kind: CheckKind::TrendCount,
            item: "both_decrease",
            printed: 3.0,
            recomputed: 4.0,
            note: RISK_ROW,
        },
        Erratum {
            scope: "pooled",
            kind: CheckKind::Percentage,
            item: "ahp_up_fuzzy_down",
            printed: 13.24,
            recomputed: 800.0 / 68.0,
            note: "follows from the Risk row erratum (8 of 68 instead of 9)",
        },
        Erratum {
            scope: "pooled",
            kind: CheckKind::Percentage,
            item: "both_decrease",
            printed: 29.41,
            recomputed: 2100.0 / 68.0,
            note: "follows from the Risk row erratum (21 of 68 instead of 20)",
        },
        Erratum {
            scope: "pooled",
            kind: CheckKind::Agreement,
            item: "same_direction",
            printed: 50.0,
            recomputed: 3500.0 / 68.0,
            note: "follows from the Risk row erratum (35 of 68 instead of 34)",
        },
        Erratum {
            scope: "pooled",
            kind: CheckKind::Agreement,
            item: "reverse_swing",
            printed: 32.36,
            recomputed: 2100.0 / 68.0,
            note: "follows from the Risk row erratum (21 of 68 instead of 22)",
        },
    ]
}

fn find_erratum(scope: &str, kind: CheckKind, item: &str) -> Option<&'static Erratum> {
    errata()
        .iter()
        .find(|e| e.scope == scope && e.kind == kind && e.item == item)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub kind: CheckKind,
    pub item: String,
    pub observed: f64,
    pub expected: f64,
    pub delta: f64,
    pub tolerance: f64,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

struct Checker<'a> {
    scope: &'a str,
    strict: bool,
    checks: Vec<Check>,
}

impl<'a> Checker<'a> {
    fn new(scope: &'a str, strict: bool) -> Self {
        Self {
            scope,
            strict,
            checks: Vec::new(),
        }
    }

    fn push(
        &mut self,
        kind: CheckKind,
        item: impl Into<String>,
        observed: f64,
        expected: f64,
        tolerance: f64,
    ) {
        let item = item.into();
        let delta = (observed - expected).abs();
        let mut note = None;
        let status = if delta <= tolerance + BOUNDARY_SLACK {
            CheckStatus::Pass
        } else {
            match find_erratum(self.scope, kind, &item) {
                Some(e) if (observed - e.recomputed).abs() <= 1e-9 && expected == e.printed => {
                    note = Some(e.note.to_string());
                    if self.strict {
                        CheckStatus::Fail
                    } else {
                        CheckStatus::Erratum
                    }
                }
                _ => CheckStatus::Fail,
            }
        };
        self.checks.push(Check {
            kind,
            item,
            observed,
            expected,
            delta,
            tolerance,
            status,
            note,
        });
    }

    fn counts(&mut self, observed: &CategoryCounts, expected: &CategoryCounts) {
        for ((cat, o), (_, e)) in observed.iter().zip(expected.iter()) {
            self.push(CheckKind::TrendCount, cat.key(), o as f64, e as f64, 0.0);
        }
        self.push(
            CheckKind::TotalObservations,
            "total",
            observed.total() as f64,
            expected.total() as f64,
            0.0,
        );
    }
}

/// Recomputed outputs for one dataset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DatasetOutcome {
    pub weights: Vec<f64>,
    pub scores: Vec<f64>,
    pub ahp_decision: (String, f64),
    pub fuzzy_decision: (String, f64),
    pub lambda_max: f64,
    pub ci: f64,
    pub cr: f64,
    pub trend_row: CategoryCounts,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DatasetReport {
    pub name: String,
    pub outcome: DatasetOutcome,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegressionReport {
    pub tolerances: ToleranceConfig,
    pub datasets: Vec<DatasetReport>,
    /// Transition counts for the series of per-dataset decisions.
    pub decision_checks: Vec<Check>,
    /// Pooled totals, per-category percentages and agreement rates.
    pub pooled_checks: Vec<Check>,
    pub summary: TrendSummary,
    pub passed: bool,
}

impl RegressionReport {
    pub fn all_checks(&self) -> impl Iterator<Item = (&str, &Check)> {
        self.datasets
            .iter()
            .flat_map(|d| d.checks.iter().map(move |c| (d.name.as_str(), c)))
            .chain(self.decision_checks.iter().map(|c| ("decisions", c)))
            .chain(self.pooled_checks.iter().map(|c| ("pooled", c)))
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.all_checks()
            .filter(|(_, c)| c.status == status)
            .count()
    }

    pub fn dataset(&self, name: &str) -> Option<&DatasetReport> {
        self.datasets.iter().find(|d| d.name == name)
    }

    /// Human-readable table: one line per non-passing check and a summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("scope         check           item                observed     expected     delta        tol       status\n");
        for (scope, c) in self.all_checks() {
            if c.status == CheckStatus::Pass {
                continue;
            }
            out.push_str(&format!(
                "{:<13} {:<15} {:<19} {:<12.6} {:<12.6} {:<12.6} {:<9} {}\n",
                scope,
                c.kind.key(),
                c.item,
                c.observed,
                c.expected,
                c.delta,
                c.tolerance,
                match c.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Erratum => "erratum",
                    CheckStatus::Fail => "FAIL",
                }
            ));
        }
        out.push('\n');
        for d in &self.datasets {
            let fails = d
                .checks
                .iter()
                .filter(|c| c.status == CheckStatus::Fail)
                .count();
            out.push_str(&format!(
                "{:<13} AHP {} {:.3}  fuzzy {} {:.3}  lambda {:.2} CI {:.2} CR {:.2}  transitions {}  {}\n",
                d.name,
                d.outcome.ahp_decision.0,
                d.outcome.ahp_decision.1,
                d.outcome.fuzzy_decision.0,
                d.outcome.fuzzy_decision.1,
                d.outcome.lambda_max,
                d.outcome.ci,
                d.outcome.cr,
                d.outcome.trend_row.total(),
                if fails == 0 { "ok" } else { "FAIL" }
            ));
        }
        let a = &self.summary.aggregate_display;
        out.push_str(&format!(
            "\ntotal transitions {}  same direction {:.2}%  reverse swing {:.2}%  one unchanged {:.2}%\n",
            self.summary.total, a.same_direction, a.reverse_swing, a.one_unchanged
        ));
        out.push_str(&format!(
            "checks: {} pass, {} erratum, {} fail\nverdict: {}\n",
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Erratum),
            self.count(CheckStatus::Fail),
            if self.passed { "PASS" } else { "FAIL" }
        ));
        out
    }
}

fn run_dataset(dataset: &CorpusDataset, tol: &ToleranceConfig, ri: &RiTable) -> DatasetReport {
    let m = &dataset.matrix;
    let labels = m.label_strings();
    let weights = ahp_weights(m);
    let scores = fuzzy_scores(&fuzzy_normalize(m));
    let ahp_decision = ahp_decide(&weights);
    let fuzzy_decision = fuzzy_decide(&scores);
    let report =
        consistency(m, ri, tol.cr_threshold).expect("published orders have a random index");
    let trend_row = CategoryCounts::from_categories(
        classify_series(&dataset.printed_series(), tol.epsilon).expect("valid epsilon"),
    );

    let mut checker = Checker::new(&dataset.name, tol.strict);
    for ((label, &w), &e) in labels
        .iter()
        .zip(weights.values())
        .zip(&dataset.expected.ahp)
    {
        checker.push(CheckKind::Weight, label, w, e, tol.weights);
    }
    for ((label, &s), &e) in labels
        .iter()
        .zip(scores.values())
        .zip(&dataset.expected.fuzzy)
    {
        checker.push(CheckKind::Score, label, s, e, tol.scores);
    }
    let (printed_ahp_max, printed_fuzzy_max) = dataset.expected.decision.unwrap_or_else(|| {
        let max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (max(&dataset.expected.ahp), max(&dataset.expected.fuzzy))
    });
    checker.push(
        CheckKind::AhpDecision,
        "max",
        round_to(ahp_decision.value, 3),
        printed_ahp_max,
        0.0,
    );
    checker.push(
        CheckKind::FuzzyDecision,
        "max",
        round_to(fuzzy_decision.value, 2),
        round_to(printed_fuzzy_max, 2),
        0.0,
    );

    let published = &dataset.expected.consistency;
    checker.push(
        CheckKind::LambdaMax,
        "lambda_max",
        report.lambda_max,
        published.lambda_max,
        tol.lambda_max,
    );
    checker.push(
        CheckKind::ConsistencyIndex,
        "ci",
        report.ci,
        published.ci,
        tol.ci,
    );
    checker.push(
        CheckKind::ConsistencyRatio,
        "cr",
        report.cr,
        published.cr,
        tol.cr,
    );
    // Every published dataset is inconsistent.
    checker.push(
        CheckKind::Acceptability,
        "acceptable",
        f64::from(u8::from(report.acceptable)),
        0.0,
        0.0,
    );
    checker.counts(&trend_row, &dataset.expected.trend_row);

    DatasetReport {
        name: dataset.name.clone(),
        outcome: DatasetOutcome {
            weights: weights.values().to_vec(),
            scores: scores.values().to_vec(),
            ahp_decision: (ahp_decision.label.to_string(), ahp_decision.value),
            fuzzy_decision: (fuzzy_decision.label.to_string(), fuzzy_decision.value),
            lambda_max: report.lambda_max,
            ci: report.ci,
            cr: report.cr,
            trend_row,
        },
        checks: checker.checks,
    }
}

pub fn run_regression(tolerances: &ToleranceConfig) -> RegressionReport {
    let corpus = load_corpus();
    let ri = RiTable::published();
    let datasets: Vec<DatasetReport> = corpus
        .iter()
        .map(|d| run_dataset(d, tolerances, &ri))
        .collect();

    let decisions =
        decision_series(&published_decisions(&corpus)).expect("seven published decisions");
    let decision_row = CategoryCounts::from_categories(
        classify_series(&decisions, tolerances.epsilon).expect("valid epsilon"),
    );
    let mut decision_checker = Checker::new("decisions", tolerances.strict);
    decision_checker.counts(&decision_row, &six_to_seven(DECISION_TREND_ROW));

    let mut rows: Vec<SeriesRow> = datasets
        .iter()
        .map(|d| SeriesRow::new(d.name.clone(), d.outcome.trend_row))
        .collect();
    rows.push(SeriesRow::new(decisions.name.clone(), decision_row));
    let summary = TrendSummary::from_rows(rows).expect("corpus has transitions");

    let mut pooled = Checker::new("pooled", tolerances.strict);
    pooled.push(
        CheckKind::TotalObservations,
        "total",
        summary.total as f64,
        PUBLISHED_TOTAL_OBSERVATIONS as f64,
        0.0,
    );
    for (category, &printed) in TransitionCategory::ALL.iter().zip(&PUBLISHED_PERCENTAGES) {
        pooled.push(
            CheckKind::Percentage,
            category.key(),
            summary.percent(*category),
            printed,
            tolerances.percent,
        );
    }
    let agg = &summary.aggregate;
    for (item, observed, printed) in [
        ("same_direction", agg.same_direction, PUBLISHED_AGREEMENT[0]),
        ("reverse_swing", agg.reverse_swing, PUBLISHED_AGREEMENT[1]),
        ("one_unchanged", agg.one_unchanged, PUBLISHED_AGREEMENT[2]),
    ] {
        pooled.push(
            CheckKind::Agreement,
            item,
            observed,
            printed,
            tolerances.percent,
        );
    }

    let passed = datasets
        .iter()
        .flat_map(|d| &d.checks)
        .chain(&decision_checker.checks)
        .chain(&pooled.checks)
        .all(|c| c.status != CheckStatus::Fail);

    RegressionReport {
        tolerances: *tolerances,
        datasets,
        decision_checks: decision_checker.checks,
        pooled_checks: pooled.checks,
        summary,
        passed,
    }
}

#[derive(Serialize)]
struct ExpectedFile<'a> {
    name: &'a str,
    labels: Vec<String>,
    aliases: &'a [(String, String)],
    #[serde(flatten)]
    expected: &'a ExpectedValues,
}

/// Writes `<name>.csv` and `<name>.expected.json` per dataset into `dir`,
/// creating it if needed. Returns the written paths.
pub fn export_corpus(dir: &Path) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for d in load_corpus() {
        let stem = d.name.to_lowercase();
        let csv_path = dir.join(format!("{stem}.csv"));
        fs::write(&csv_path, serialize_matrix(&d.matrix, MatrixFormat::Csv))?;
        written.push(csv_path);

        let expected = ExpectedFile {
            name: &d.name,
            labels: d.matrix.label_strings(),
            aliases: &d.aliases,
            expected: &d.expected,
        };
        let json_path = dir.join(format!("{stem}.expected.json"));
        let mut text = serde_json::to_string_pretty(&expected).map_err(io::Error::other)?;
        text.push('\n');
        fs::write(&json_path, text)?;
        written.push(json_path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcm::{validate, RatingScale};

    #[test]
    fn dimensions_and_labels() {
        let corpus = load_corpus();
        let dims: Vec<(&str, usize)> = corpus
            .iter()
            .map(|d| (d.name.as_str(), d.matrix.order()))
            .collect();
        assert_eq!(
            dims,
            vec![
                ("Risk", 15),
                ("Customer", 5),
                ("Organization", 7),
                ("Policy", 7),
                ("Process", 7),
                ("Staff", 9),
                ("Tools", 14),
                ("Vendors", 6),
            ]
        );
        let risk = &corpus[0];
        let first: Vec<&str> = risk.matrix.labels()[..3]
            .iter()
            .map(|l| l.as_str())
            .collect();
        assert_eq!(first, ["RELY", "DURN", "CPLX"]);
        let vendors = corpus.iter().find(|d| d.name == "Vendors").unwrap();
        assert_eq!(vendors.matrix.rating("VQN", "MMS"), Some(7.0));
    }

    #[test]
    fn every_dataset_validates_cleanly() {
        for d in load_corpus() {
            let report = validate(&d.matrix, &RatingScale::warn());
            assert!(report.is_valid(), "{}", d.name);
            assert_eq!(report.issues.len(), 0, "{}", d.name);
            assert_eq!(d.expected.ahp.len(), d.matrix.order());
            assert_eq!(d.expected.fuzzy.len(), d.matrix.order());
        }
    }

    #[test]
    fn aliases_resolve() {
        let corpus = load_corpus();
        let customer = corpus.iter().find(|d| d.name == "Customer").unwrap();
        assert_eq!(customer.canonical_label("SRF"), "SRT");
        assert_eq!(customer.canonical_label("ENG"), "ENG");
        let staff = corpus.iter().find(|d| d.name == "Staff").unwrap();
        assert_eq!(staff.canonical_label("MPG"), "MGP");
        assert!(staff.matrix.index_of("MGP").is_some());
    }

    #[test]
    fn errata_values_are_what_the_method_gives() {
        let corpus = load_corpus();
        for e in errata().iter().filter(|e| e.kind == CheckKind::Score) {
            let d = corpus.iter().find(|d| d.name == e.scope).unwrap();
            let scores = fuzzy_scores(&fuzzy_normalize(&d.matrix));
            assert!(
                (scores.get(e.item).unwrap() - e.recomputed).abs() < 1e-15,
                "{e:?}"
            );
        }
    }
}
