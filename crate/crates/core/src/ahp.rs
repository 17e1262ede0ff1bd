//! Classical AHP with the approximate (row-average) weight method and the
//! consistency pipeline.
//!
//! Weights come from column-normalizing the rating matrix and averaging each
//! row. The principal value used for consistency defaults to
//! `sum_i (A w)_i`, which equals `sum_j colsum_j * w_j`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::decision::{argmax, Decision};
use crate::error::{Error, Result};
use crate::numeric::{round_to, sum};
use crate::pcm::{CriterionLabel, PairwiseMatrix};

/// Default acceptability threshold for the consistency ratio.
pub const DEFAULT_CR_THRESHOLD: f64 = 0.1;

/// Column-normalized matrix `N_ij = a_ij / sum_k a_kj`.
#[derive(Debug, Clone, PartialEq)]
pub struct AhpNormalizedMatrix {
    labels: Vec<CriterionLabel>,
    n: usize,
    entries: Vec<f64>,
}

impl AhpNormalizedMatrix {
    pub fn labels(&self) -> &[CriterionLabel] {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn column_sums(&self) -> Vec<f64> {
        (0..self.n)
            .map(|j| sum((0..self.n).map(|i| self.get(i, j))))
            .collect()
    }
}

/// Per-criterion AHP priorities, in matrix label order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightVector {
    labels: Vec<CriterionLabel>,
    weights: Vec<f64>,
}

impl WeightVector {
    /// Wraps precomputed weights. Lengths must agree and be non-empty.
    pub fn new(labels: Vec<CriterionLabel>, weights: Vec<f64>) -> Result<Self> {
        if labels.is_empty() || labels.len() != weights.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} weights",
                labels.len(),
                weights.len()
            )));
        }
        Ok(Self { labels, weights })
    }

    pub fn labels(&self) -> &[CriterionLabel] {
        &self.labels
    }

    pub fn values(&self) -> &[f64] {
        &self.weights
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        let i = self.labels.iter().position(|l| l.as_str() == label)?;
        Some(self.weights[i])
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CriterionLabel, f64)> {
        self.labels.iter().zip(self.weights.iter().copied())
    }
}

pub fn ahp_normalize(matrix: &PairwiseMatrix) -> AhpNormalizedMatrix {
    let n = matrix.order();
    let col_sums = matrix.column_sums();
    let entries = matrix
        .rows()
        .flat_map(|row| row.iter().zip(&col_sums).map(|(a, s)| a / s))
        .collect();
    AhpNormalizedMatrix {
        labels: matrix.labels().to_vec(),
        n,
        entries,
    }
}

/// Row averages of the column-normalized matrix.
pub fn ahp_weights(matrix: &PairwiseMatrix) -> WeightVector {
    let normalized = ahp_normalize(matrix);
    let n = normalized.order() as f64;
    let weights = (0..normalized.order())
        .map(|i| sum(normalized.row(i).iter().copied()) / n)
        .collect();
    WeightVector {
        labels: normalized.labels,
        weights,
    }
}

/// Highest weight; the earliest label wins ties.
pub fn ahp_decide(weights: &WeightVector) -> Decision {
    argmax(&weights.labels, &weights.weights).expect("weight vectors are never empty")
}

/// How the principal value is estimated from a matrix and its weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LambdaEstimator {
    /// `sum_i (A w)_i`. Reproduces every published consistency caption.
    #[default]
    WeightedColumnSum,
    /// `mean_i (A w)_i / w_i`.
    MeanRatio,
    /// Perron root of `A` by power iteration; ignores the weights.
    /// Intended for reciprocal matrices.
    PowerIteration,
}

pub fn lambda_max(matrix: &PairwiseMatrix, weights: &WeightVector) -> Result<f64> {
    lambda_max_with(matrix, weights, LambdaEstimator::default())
}

pub fn lambda_max_with(
    matrix: &PairwiseMatrix,
    weights: &WeightVector,
    estimator: LambdaEstimator,
) -> Result<f64> {
    let n = matrix.order();
    if weights.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{} weights for a matrix of order {n}",
            weights.len()
        )));
    }
    if let Some(index) = weights.weights.iter().position(|&w| w == 0.0) {
        return Err(Error::DegenerateWeight { index });
    }
    let w = &weights.weights;
    Ok(match estimator {
        LambdaEstimator::WeightedColumnSum => {
            let col_sums = matrix.column_sums();
            sum(col_sums.iter().zip(w).map(|(c, w)| c * w))
        }
        LambdaEstimator::MeanRatio => {
            let ratios = matrix
                .rows()
                .zip(w)
                .map(|(row, wi)| sum(row.iter().zip(w).map(|(a, wj)| a * wj)) / wi);
            sum(ratios) / n as f64
        }
        LambdaEstimator::PowerIteration => perron_root(matrix),
    })
}

fn perron_root(matrix: &PairwiseMatrix) -> f64 {
    let n = matrix.order();
    let mut v = vec![1.0 / n as f64; n];
    let mut lambda = 0.0;
    for _ in 0..10_000 {
        let next: Vec<f64> = matrix
            .rows()
            .map(|row| sum(row.iter().zip(&v).map(|(a, x)| a * x)))
            .collect();
        // `v` sums to one, so the total of `A v` is the Rayleigh-style estimate.
        let total = sum(next.iter().copied());
        let converged = (total - lambda).abs() <= 1e-15 * total.abs();
        lambda = total;
        v = next.into_iter().map(|x| x / total).collect();
        if converged {
            break;
        }
    }
    lambda
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RiSource {
    /// Values printed alongside the published datasets.
    Published,
    UserSupplied,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RiEntry {
    pub value: f64,
    pub source: RiSource,
}

/// Random index by matrix order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RiTable {
    entries: BTreeMap<usize, RiEntry>,
}

impl Default for RiTable {
    fn default() -> Self {
        Self::published()
    }
}

impl RiTable {
    /// The random indices attached to the eight published datasets. These
    /// differ from Saaty's table (1.19 rather than 1.12 at n = 5) and are
    /// kept as printed.
    pub fn published() -> Self {
        let entries = [
            (5, 1.19),
            (6, 1.32),
            (7, 1.41),
            (9, 1.54),
            (14, 1.70),
            (15, 1.72),
        ]
        .into_iter()
        .map(|(n, value)| {
            (
                n,
                RiEntry {
                    value,
                    source: RiSource::Published,
                },
            )
        })
        .collect();
        Self { entries }
    }

    pub fn empty() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    /// Adds or replaces the entry for order `n`.
    pub fn set(&mut self, n: usize, value: f64) -> Result<()> {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::InvalidRandomIndex { n, value });
        }
        self.entries.insert(
            n,
            RiEntry {
                value,
                source: RiSource::UserSupplied,
            },
        );
        Ok(())
    }

    pub fn with(mut self, n: usize, value: f64) -> Result<Self> {
        self.set(n, value)?;
        Ok(self)
    }

    pub fn get(&self, n: usize) -> Option<RiEntry> {
        self.entries.get(&n).copied()
    }

    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }
}

/// Rounded copy of a report for display: two decimals throughout.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConsistencyDisplay {
    pub lambda_max: f64,
    pub ci: f64,
    pub ri: f64,
    pub cr: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyReport {
    pub n: usize,
    pub lambda_max: f64,
    pub ci: f64,
    pub ri: f64,
    pub cr: f64,
    pub threshold: f64,
    pub acceptable: bool,
    pub display: ConsistencyDisplay,
}

impl ConsistencyReport {
    fn new(n: usize, lambda_max: f64, ri: f64, threshold: f64) -> Self {
        let ci = (lambda_max - n as f64) / (n as f64 - 1.0);
        let cr = ci / ri;
        Self {
            n,
            lambda_max,
            ci,
            ri,
            cr,
            threshold,
            acceptable: cr <= threshold,
            display: ConsistencyDisplay {
                lambda_max: round_to(lambda_max, 2),
                ci: round_to(ci, 2),
                ri: round_to(ri, 2),
                cr: round_to(cr, 2),
            },
        }
    }
}

pub fn consistency(
    matrix: &PairwiseMatrix,
    ri_table: &RiTable,
    threshold: f64,
) -> Result<ConsistencyReport> {
    consistency_with(matrix, ri_table, threshold, LambdaEstimator::default())
}

pub fn consistency_with(
    matrix: &PairwiseMatrix,
    ri_table: &RiTable,
    threshold: f64,
    estimator: LambdaEstimator,
) -> Result<ConsistencyReport> {
    let n = matrix.order();
    let ri = ri_table.get(n).ok_or(Error::RiUnavailable(n))?.value;
    let weights = ahp_weights(matrix);
    let lambda = lambda_max_with(matrix, &weights, estimator)?;
    Ok(ConsistencyReport::new(n, lambda, ri, threshold))
}
