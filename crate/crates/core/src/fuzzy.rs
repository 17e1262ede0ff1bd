//! Fuzzy max-min decision making over a pairwise rating matrix.
//!
//! Each rating is divided by the larger rating of its pair,
//! `a_ij / max(a_ij, a_ji)`, the row minimum becomes that criterion's
//! score, and the criterion with the largest minimum wins. Ratings are crisp
//! numbers; there is no triangular-number arithmetic here.

use serde::Serialize;

use crate::decision::{argmax, Decision};
use crate::error::{Error, Result};
use crate::numeric::round_to;
use crate::pcm::{CriterionLabel, PairwiseMatrix};

/// Pairwise relative matrix, entries in (0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyNormalizedMatrix {
    labels: Vec<CriterionLabel>,
    n: usize,
    entries: Vec<f64>,
}

impl FuzzyNormalizedMatrix {
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

    /// Returns a copy with entry `(row, col)` replaced. Used to probe
    /// monotonicity; the result need not satisfy the pair invariant.
    pub fn with_entry(&self, row: usize, col: usize, value: f64) -> Result<Self> {
        if !(value.is_finite() && value > 0.0 && value <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "normalized entry must be in (0, 1], got {value}"
            )));
        }
        let mut out = self.clone();
        out.entries[row * self.n + col] = value;
        Ok(out)
    }
}

/// Row-minimum scores, one per criterion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzyScoreVector {
    labels: Vec<CriterionLabel>,
    scores: Vec<f64>,
}

impl FuzzyScoreVector {
    pub fn new(labels: Vec<CriterionLabel>, scores: Vec<f64>) -> Result<Self> {
        if labels.is_empty() || labels.len() != scores.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} scores",
                labels.len(),
                scores.len()
            )));
        }
        Ok(Self { labels, scores })
    }

    pub fn labels(&self) -> &[CriterionLabel] {
        &self.labels
    }

    pub fn values(&self) -> &[f64] {
        &self.scores
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        let i = self.labels.iter().position(|l| l.as_str() == label)?;
        Some(self.scores[i])
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CriterionLabel, f64)> {
        self.labels.iter().zip(self.scores.iter().copied())
    }

    /// Scores rounded to three decimals.
    pub fn display_values(&self) -> Vec<f64> {
        self.scores.iter().map(|&s| round_to(s, 3)).collect()
    }
}

pub fn fuzzy_normalize(matrix: &PairwiseMatrix) -> FuzzyNormalizedMatrix {
    let n = matrix.order();
    let entries = (0..n)
        .flat_map(|i| {
            (0..n).map(move |j| {
                let a = matrix.get(i, j);
                a / a.max(matrix.get(j, i))
            })
        })
        .collect();
    FuzzyNormalizedMatrix {
        labels: matrix.labels().to_vec(),
        n,
        entries,
    }
}

pub fn fuzzy_scores(normalized: &FuzzyNormalizedMatrix) -> FuzzyScoreVector {
    let scores = (0..normalized.order())
        .map(|i| {
            normalized
                .row(i)
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    FuzzyScoreVector {
        labels: normalized.labels.clone(),
        scores,
    }
}

/// Largest row minimum; the earliest label wins ties.
pub fn fuzzy_decide(scores: &FuzzyScoreVector) -> Decision {
    argmax(&scores.labels, &scores.scores).expect("score vectors are never empty")
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;

    use super::*;

    fn customer() -> PairwiseMatrix {
        PairwiseMatrix::new(
            vec!["ENG", "PIS", "RMG", "STF", "SRT"],
            vec![
                vec![1.0, 5.0, 2.0, 5.0, 7.0],
                vec![5.0, 1.0, 6.0, 3.0, 3.0],
                vec![4.0, 4.0, 1.0, 1.0, 1.0],
                vec![6.0, 8.0, 1.0, 1.0, 8.0],
                vec![3.0, 1.0, 8.0, 8.0, 1.0],
            ],
        )
        .unwrap()
    }

    #[test]
    fn pair_ratio() {
        let m = PairwiseMatrix::new(vec!["RELY", "DURN"], vec![vec![1.0, 3.0], vec![5.0, 1.0]])
            .unwrap();
        let f = fuzzy_normalize(&m);
        assert_eq!(f.get(0, 1), 0.6);
        assert_eq!(f.get(1, 0), 1.0);
        assert_eq!(f.get(0, 0), 1.0);
        assert_eq!(f.get(1, 1), 1.0);
    }

    #[test]
    fn symmetric_pair_gives_ones() {
        let m = PairwiseMatrix::new(vec!["A", "B"], vec![vec![1.0, 4.0], vec![4.0, 1.0]]).unwrap();
        let f = fuzzy_normalize(&m);
        assert_eq!((f.get(0, 1), f.get(1, 0)), (1.0, 1.0));
    }

    #[test]
    fn uniform_scores_are_one_and_first_label_wins() {
        let m = PairwiseMatrix::uniform(vec!["A", "B", "C"]).unwrap();
        let s = fuzzy_scores(&fuzzy_normalize(&m));
        assert_eq!(s.values(), &[1.0, 1.0, 1.0]);
        let d = fuzzy_decide(&s);
        assert_eq!((d.label.as_str(), d.value), ("A", 1.0));
    }

    #[test]
    fn customer_scores() {
        let s = fuzzy_scores(&fuzzy_normalize(&customer()));
        let expected = [0.5, 3.0 / 8.0, 1.0 / 8.0, 1.0, 1.0 / 3.0];
        for (got, want) in s.values().iter().zip(expected) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-15);
        }
        // STF and SRT rate each other 8, so STF dominates every pair.
        assert_eq!(fuzzy_decide(&s).label, "STF");
    }

    #[test]
    fn display_rounding() {
        let s = FuzzyScoreVector::new(vec![CriterionLabel::new("A").unwrap()], vec![3.0 / 7.0])
            .unwrap();
        assert_eq!(s.display_values(), vec![0.429]);
    }

    #[test]
    fn with_entry_rejects_out_of_range() {
        let f = fuzzy_normalize(&customer());
        assert!(f.with_entry(0, 1, 1.5).is_err());
        assert!(f.with_entry(0, 1, 0.0).is_err());
        assert_eq!(f.with_entry(0, 1, 0.25).unwrap().get(0, 1), 0.25);
    }
}
