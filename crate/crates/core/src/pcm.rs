//! Pairwise comparison matrices, the 1-9 rating scale, and the CSV/JSON
//! matrix formats.
//!
//! A [`PairwiseMatrix`] holds ratings `a_ij` of criterion `i` against
//! criterion `j`. The diagonal is 1 and every entry is positive, but the
//! matrix does not have to be reciprocal: `a_ji` is an independent judgment,
//! not `1 / a_ij`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Name of one criterion, e.g. `RELY` or `ENG`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CriterionLabel(String);

impl CriterionLabel {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.trim().is_empty() {
            return Err(Error::EmptyLabel(0));
        }
        Ok(Self(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for CriterionLabel {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        Self::new(value)
    }
}

impl From<CriterionLabel> for String {
    fn from(label: CriterionLabel) -> Self {
        label.0
    }
}

impl fmt::Display for CriterionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for CriterionLabel {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl PartialEq<&str> for CriterionLabel {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

/// How off-scale ratings are treated by [`validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strictness {
    Enforce,
    #[default]
    Warn,
}

/// Named points of the 1-9 maturity grading scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MaturityLevel {
    Low,
    Moderate,
    High,
    VeryHigh,
    ExtraHigh,
    /// 2, 4, 6 and 8 sit between two named levels.
    Intermediate,
}

impl MaturityLevel {
    pub fn description(self) -> &'static str {
        match self {
            MaturityLevel::Low => "Low maturity",
            MaturityLevel::Moderate => "Moderate maturity",
            MaturityLevel::High => "High maturity",
            MaturityLevel::VeryHigh => "Very high maturity",
            MaturityLevel::ExtraHigh => "Extra high maturity",
            MaturityLevel::Intermediate => "Intermediate values between levels",
        }
    }
}

/// The integer 1-9 rating scale shared by both methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RatingScale {
    pub strictness: Strictness,
}

impl RatingScale {
    pub const MIN: f64 = 1.0;
    pub const MAX: f64 = 9.0;

    pub fn enforce() -> Self {
        Self {
            strictness: Strictness::Enforce,
        }
    }

    pub fn warn() -> Self {
        Self {
            strictness: Strictness::Warn,
        }
    }

    pub fn contains(&self, value: f64) -> bool {
        value.fract() == 0.0 && (Self::MIN..=Self::MAX).contains(&value)
    }

    /// Maps an on-scale rating to its maturity level.
    pub fn level(&self, value: f64) -> Option<MaturityLevel> {
        if !self.contains(value) {
            return None;
        }
        Some(match value as u8 {
            1 => MaturityLevel::Low,
            3 => MaturityLevel::Moderate,
            5 => MaturityLevel::High,
            7 => MaturityLevel::VeryHigh,
            9 => MaturityLevel::ExtraHigh,
            _ => MaturityLevel::Intermediate,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

/// One invariant violation. Coordinates are 1-based.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Issue {
    pub severity: Severity,
    #[serde(skip)]
    pub error: Error,
    pub message: String,
    pub row: Option<usize>,
    pub col: Option<usize>,
}

impl Issue {
    fn new(severity: Severity, error: Error, row: Option<usize>, col: Option<usize>) -> Self {
        Self {
            severity,
            message: error.to_string(),
            error,
            row,
            col,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.errors().next().is_none()
    }

    pub fn errors(&self) -> impl Iterator<Item = &Issue> {
        self.issues.iter().filter(|i| i.severity == Severity::Error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Issue> {
        self.issues
            .iter()
            .filter(|i| i.severity == Severity::Warning)
    }

    pub fn first_error(&self) -> Option<&Error> {
        self.errors().next().map(|i| &i.error)
    }
}

/// Checks raw labels and rows against every matrix invariant.
///
/// Structural problems (shape, positivity, diagonal, labels) are always
/// errors. Off-scale ratings are errors under [`Strictness::Enforce`] and
/// warnings under [`Strictness::Warn`].
pub fn validate_parts(
    labels: &[String],
    rows: &[Vec<f64>],
    scale: &RatingScale,
) -> ValidationReport {
    let mut issues = Vec::new();
    let n = rows.len();

    if n < 2 {
        issues.push(Issue::new(Severity::Error, Error::TooSmall(n), None, None));
    }
    if labels.len() != n {
        issues.push(Issue::new(
            Severity::Error,
            Error::NonSquare {
                rows: n,
                row: 0,
                cols: labels.len(),
            },
            None,
            None,
        ));
    }

    let mut seen = HashSet::new();
    for (i, label) in labels.iter().enumerate() {
        if label.trim().is_empty() {
            issues.push(Issue::new(
                Severity::Error,
                Error::EmptyLabel(i + 1),
                Some(i + 1),
                None,
            ));
        } else if !seen.insert(label.as_str()) {
            issues.push(Issue::new(
                Severity::Error,
                Error::DuplicateLabel {
                    label: label.clone(),
                },
                Some(i + 1),
                None,
            ));
        }
    }

    for (i, row) in rows.iter().enumerate() {
        let r = i + 1;
        if row.len() != n {
            issues.push(Issue::new(
                Severity::Error,
                Error::NonSquare {
                    rows: n,
                    row: r,
                    cols: row.len(),
                },
                Some(r),
                None,
            ));
        }
        for (j, &value) in row.iter().enumerate() {
            let c = j + 1;
            if !(value.is_finite() && value > 0.0) {
                issues.push(Issue::new(
                    Severity::Error,
                    Error::NonPositiveEntry {
                        row: r,
                        col: c,
                        value,
                    },
                    Some(r),
                    Some(c),
                ));
                continue;
            }
            if i == j && value != 1.0 {
                issues.push(Issue::new(
                    Severity::Error,
                    Error::DiagonalNotOne { index: r, value },
                    Some(r),
                    Some(c),
                ));
            }
            if !scale.contains(value) {
                let severity = match scale.strictness {
                    Strictness::Enforce => Severity::Error,
                    Strictness::Warn => Severity::Warning,
                };
                issues.push(Issue::new(
                    severity,
                    Error::OffScaleEntry {
                        row: r,
                        col: c,
                        value,
                    },
                    Some(r),
                    Some(c),
                ));
            }
        }
    }

    ValidationReport { issues }
}

/// Validates a constructed matrix against a rating scale.
pub fn validate(matrix: &PairwiseMatrix, scale: &RatingScale) -> ValidationReport {
    let labels: Vec<String> = matrix.labels.iter().map(|l| l.0.clone()).collect();
    let rows: Vec<Vec<f64>> = matrix.rows().map(<[f64]>::to_vec).collect();
    validate_parts(&labels, &rows, scale)
}

/// Square, positive, unit-diagonal comparison matrix with labelled criteria.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseMatrix {
    labels: Vec<CriterionLabel>,
    n: usize,
    entries: Vec<f64>,
}

impl PairwiseMatrix {
    /// Builds a matrix, rejecting any structural invariant violation.
    /// Off-scale ratings are accepted.
    pub fn new<S: Into<String>>(labels: Vec<S>, rows: Vec<Vec<f64>>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let report = validate_parts(&labels, &rows, &RatingScale::warn());
        if let Some(err) = report.first_error() {
            return Err(err.clone());
        }
        let n = rows.len();
        Ok(Self {
            labels: labels.into_iter().map(CriterionLabel).collect(),
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// All-ones matrix, the perfectly consistent uniform case.
    pub fn uniform<S: Into<String>>(labels: Vec<S>) -> Result<Self> {
        let n = labels.len();
        Self::new(labels, vec![vec![1.0; n]; n])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[CriterionLabel] {
        &self.labels
    }

    pub fn label_strings(&self) -> Vec<String> {
        self.labels.iter().map(|l| l.0.clone()).collect()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks_exact(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(<[f64]>::to_vec).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.0 == label)
    }

    /// Looks up `a(row, col)` by label.
    pub fn rating(&self, row: &str, col: &str) -> Option<f64> {
        Some(self.get(self.index_of(row)?, self.index_of(col)?))
    }

    pub fn column_sums(&self) -> Vec<f64> {
        (0..self.n)
            .map(|j| crate::numeric::sum((0..self.n).map(|i| self.get(i, j))))
            .collect()
    }

    /// Reorders criteria so that new position `k` holds old criterion `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let n = self.n;
        let mut check = order.to_vec();
        check.sort_unstable();
        if check != (0..n).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument(format!(
                "{order:?} is not a permutation of 0..{n}"
            )));
        }
        let labels = order.iter().map(|&k| self.labels[k].0.clone()).collect();
        let rows = order
            .iter()
            .map(|&i| order.iter().map(|&j| self.get(i, j)).collect())
            .collect();
        Self::new(labels, rows)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MatrixFormat {
    #[default]
    Csv,
    Json,
}

impl MatrixFormat {
    /// Guesses the format from a file extension, defaulting to CSV.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => MatrixFormat::Json,
            _ => MatrixFormat::Csv,
        }
    }
}

impl FromStr for MatrixFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(MatrixFormat::Csv),
            "json" => Ok(MatrixFormat::Json),
            other => Err(Error::InvalidArgument(format!(
                "unknown matrix format {other:?}"
            ))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonMatrix {
    labels: Vec<String>,
    rows: Vec<Vec<f64>>,
}

pub fn parse_matrix(text: &str, format: MatrixFormat) -> Result<PairwiseMatrix> {
    match format {
        MatrixFormat::Csv => parse_csv(text),
        MatrixFormat::Json => parse_json(text),
    }
}

fn parse_json(text: &str) -> Result<PairwiseMatrix> {
    let raw: JsonMatrix = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let n = raw.labels.len();
    for (i, row) in raw.rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::RaggedRow {
                line: i + 1,
                expected: n,
                found: row.len(),
            });
        }
    }
    PairwiseMatrix::new(raw.labels, raw.rows)
}

fn parse_csv(text: &str) -> Result<PairwiseMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut header: Option<Vec<String>> = None;
    let mut row_labels = Vec::new();
    let mut rows = Vec::new();

    for record in reader.records() {
        let record = record.map_err(|e| {
            let (line, column) = e
                .position()
                .map(|p| (p.line() as usize, 1))
                .unwrap_or((0, 0));
            Error::Syntax {
                line,
                column,
                message: e.to_string(),
            }
        })?;
        let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
        if record.iter().all(str::is_empty) {
            continue;
        }

        let Some(columns) = &header else {
            // The corner cell is ignored; the rest are column labels.
            header = Some(record.iter().skip(1).map(str::to_owned).collect());
            continue;
        };

        let found = record.len().saturating_sub(1);
        if found != columns.len() {
            return Err(Error::RaggedRow {
                line,
                expected: columns.len(),
                found,
            });
        }
        row_labels.push(record[0].to_owned());
        let values = record
            .iter()
            .enumerate()
            .skip(1)
            .map(|(col, field)| {
                f64::from_str(field).map_err(|_| Error::Syntax {
                    line,
                    column: col + 1,
                    message: format!("{field:?} is not a number"),
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(values);
    }

    let columns = header.ok_or_else(|| Error::Syntax {
        line: 1,
        column: 1,
        message: "empty input".into(),
    })?;
    if row_labels != columns {
        return Err(Error::HeaderMismatch {
            rows: row_labels,
            columns,
        });
    }
    PairwiseMatrix::new(columns, rows)
}

pub fn serialize_matrix(matrix: &PairwiseMatrix, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Csv => to_csv(matrix),
        MatrixFormat::Json => {
            let raw = JsonMatrix {
                labels: matrix.label_strings(),
                rows: matrix.to_rows(),
            };
            let mut out = serde_json::to_string_pretty(&raw).expect("matrix serializes");
            out.push('\n');
            out
        }
    }
}

fn to_csv(matrix: &PairwiseMatrix) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let mut header = vec![String::new()];
    header.extend(matrix.label_strings());
    writer.write_record(&header).expect("write to memory");
    for (label, row) in matrix.labels().iter().zip(matrix.rows()) {
        let mut record = vec![label.to_string()];
        // `Display` for f64 is the shortest string that parses back to the same value.
        record.extend(row.iter().map(|v| v.to_string()));
        writer.write_record(&record).expect("write to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8 labels")
}
