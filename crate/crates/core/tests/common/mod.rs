#![allow(dead_code)]

use mcdm_core::PairwiseMatrix;
use proptest::prelude::*;

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("C{i}")).collect()
}

fn with_unit_diagonal(mut rows: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    rows
}

/// Square matrices of order `min..=max` with ratings on the 1-9 scale.
pub fn scale_matrix(min: usize, max: usize) -> impl Strategy<Value = PairwiseMatrix> {
    (min..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(1u8..=9, n), n).prop_map(move |rows| {
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(f64::from).collect())
                .collect();
            PairwiseMatrix::new(labels(n), with_unit_diagonal(rows)).unwrap()
        })
    })
}

/// Square matrices with arbitrary positive off-diagonal entries.
pub fn positive_matrix(min: usize, max: usize) -> impl Strategy<Value = PairwiseMatrix> {
    (min..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0.01f64..100.0, n), n)
            .prop_map(move |rows| PairwiseMatrix::new(labels(n), with_unit_diagonal(rows)).unwrap())
    })
}

/// A positive weight vector summing to one, and the reciprocal matrix
/// `a_ij = w_i / w_j` built from it.
pub fn consistent_matrix(
    min: usize,
    max: usize,
) -> impl Strategy<Value = (Vec<f64>, PairwiseMatrix)> {
    (min..=max).prop_flat_map(|n| {
        prop::collection::vec(0.05f64..10.0, n).prop_map(move |raw| {
            let total: f64 = raw.iter().sum();
            let w: Vec<f64> = raw.iter().map(|x| x / total).collect();
            let rows = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { 1.0 } else { w[i] / w[j] })
                        .collect()
                })
                .collect();
            (w, PairwiseMatrix::new(labels(n), rows).unwrap())
        })
    })
}
