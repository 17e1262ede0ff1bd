mod common;

use common::{consistent_matrix, labels, positive_matrix, scale_matrix};
use mcdm_core::corpus::load_corpus;
use mcdm_core::trend::DEFAULT_EPSILON;
use mcdm_core::{
    ahp_normalize, ahp_weights, classify_series, fuzzy_normalize, fuzzy_scores, lambda_max,
    parse_matrix, serialize_matrix, summarize, ComparisonSeries, MatrixFormat, PairwiseMatrix,
};
use proptest::prelude::*;

fn series_strategy() -> impl Strategy<Value = ComparisonSeries> {
    (2usize..12).prop_flat_map(|n| {
        // Values on a coarse grid so that ties and flat steps occur.
        let values = prop::collection::vec(0u8..6, n).prop_map(|v| {
            v.into_iter()
                .map(|x| f64::from(x) / 10.0)
                .collect::<Vec<_>>()
        });
        (values.clone(), values).prop_map(move |(ahp, fuzzy)| {
            ComparisonSeries::new("s", labels(n), ahp, fuzzy).unwrap()
        })
    })
}

fn scaled_off_diagonal(m: &PairwiseMatrix, c: f64) -> PairwiseMatrix {
    let rows = m
        .to_rows()
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            r.into_iter()
                .enumerate()
                .map(|(j, v)| if i == j { v } else { v * c })
                .collect()
        })
        .collect();
    PairwiseMatrix::new(m.label_strings(), rows).unwrap()
}

fn with_entry(m: &PairwiseMatrix, row: usize, col: usize, value: f64) -> PairwiseMatrix {
    let mut rows = m.to_rows();
    rows[row][col] = value;
    PairwiseMatrix::new(m.label_strings(), rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ahp_columns_sum_to_one(m in positive_matrix(2, 15)) {
        for s in ahp_normalize(&m).column_sums() {
            prop_assert!((s - 1.0).abs() <= 1e-12, "column sum {s}");
        }
    }

    #[test]
    fn ahp_weights_sum_to_one(m in scale_matrix(2, 15)) {
        let total: f64 = ahp_weights(&m).values().iter().sum();
        prop_assert!((total - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn fuzzy_pair_has_a_one(m in positive_matrix(2, 15)) {
        let f = fuzzy_normalize(&m);
        for i in 0..m.order() {
            for j in 0..m.order() {
                let (a, b) = (f.get(i, j), f.get(j, i));
                prop_assert!(a > 0.0 && a <= 1.0);
                prop_assert_eq!(a.max(b), 1.0);
            }
        }
    }

    #[test]
    fn fuzzy_ignores_common_scale(m in positive_matrix(2, 10), c in 0.1f64..10.0) {
        let a = fuzzy_scores(&fuzzy_normalize(&m));
        let b = fuzzy_scores(&fuzzy_normalize(&scaled_off_diagonal(&m, c)));
        for (x, y) in a.values().iter().zip(b.values()) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }

    #[test]
    fn raising_a_rating_never_hurts_its_row(
        m in scale_matrix(2, 10),
        pick in any::<(prop::sample::Index, prop::sample::Index)>(),
        bump in 1.0f64..5.0,
    ) {
        let n = m.order();
        let i = pick.0.index(n);
        let j = (i + 1 + pick.1.index(n - 1)) % n;
        let raised = with_entry(&m, i, j, m.get(i, j) + bump);
        prop_assert!(ahp_weights(&raised).values()[i] >= ahp_weights(&m).values()[i] - 1e-15);
        let before = fuzzy_scores(&fuzzy_normalize(&m)).values()[i];
        let after = fuzzy_scores(&fuzzy_normalize(&raised)).values()[i];
        prop_assert!(after >= before);
    }

    #[test]
    fn consistent_matrices_recover_their_weights((w, m) in consistent_matrix(2, 15)) {
        let got = ahp_weights(&m);
        for (x, y) in got.values().iter().zip(&w) {
            prop_assert!((x - y).abs() <= 1e-9, "{x} vs {y}");
        }
        let n = m.order() as f64;
        let ci = (lambda_max(&m, &got).unwrap() - n) / (n - 1.0);
        prop_assert!(ci.abs() <= 1e-9, "CI {ci}");
    }

    #[test]
    fn relabelling_permutes_results(m in scale_matrix(2, 12), seed in any::<u64>()) {
        let n = m.order();
        let mut order: Vec<usize> = (0..n).collect();
        // Deterministic shuffle driven by the seed.
        let mut s = seed;
        for k in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(k, (s >> 33) as usize % (k + 1));
        }
        let p = m.permuted(&order).unwrap();
        let (w, wp) = (ahp_weights(&m), ahp_weights(&p));
        let (f, fp) = (fuzzy_scores(&fuzzy_normalize(&m)), fuzzy_scores(&fuzzy_normalize(&p)));
        for (k, &src) in order.iter().enumerate() {
            prop_assert_eq!(&wp.labels()[k], &w.labels()[src]);
            prop_assert!((wp.values()[k] - w.values()[src]).abs() <= 1e-12);
            prop_assert_eq!(fp.values()[k], f.values()[src]);
        }
    }

    #[test]
    fn swapping_methods_swaps_categories(s in series_strategy()) {
        let a = classify_series(&s, DEFAULT_EPSILON).unwrap();
        let b = classify_series(&s.swapped(), DEFAULT_EPSILON).unwrap();
        prop_assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            prop_assert_eq!(x.swapped(), *y);
        }
    }

    #[test]
    fn wider_epsilon_never_loses_unchanged_steps(s in series_strategy(), e1 in 0.0f64..0.3, e2 in 0.0f64..0.3) {
        let (lo, hi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
        let count = |eps| classify_series(&s, eps).unwrap().into_iter().filter(|c| c.involves_unchanged()).count();
        prop_assert!(count(hi) >= count(lo));
    }

    #[test]
    fn pooling_ignores_series_order(all in prop::collection::vec(series_strategy(), 1..6)) {
        let forward = summarize(&all, DEFAULT_EPSILON).unwrap();
        let mut reversed = all.clone();
        reversed.reverse();
        let backward = summarize(&reversed, DEFAULT_EPSILON).unwrap();
        prop_assert_eq!(forward.pooled, backward.pooled);
        prop_assert_eq!(forward.aggregate, backward.aggregate);
    }

    #[test]
    fn csv_and_json_round_trip(m in positive_matrix(2, 15)) {
        for format in [MatrixFormat::Csv, MatrixFormat::Json] {
            let back = parse_matrix(&serialize_matrix(&m, format), format).unwrap();
            prop_assert_eq!(&back, &m);
        }
    }
}

#[test]
fn corpus_matrices_round_trip() {
    for d in load_corpus() {
        for format in [MatrixFormat::Csv, MatrixFormat::Json] {
            let text = serialize_matrix(&d.matrix, format);
            assert_eq!(parse_matrix(&text, format).unwrap(), d.matrix, "{}", d.name);
        }
    }
}

#[test]
fn all_ones_principal_value_is_exact() {
    for n in 2..=15 {
        let m = PairwiseMatrix::uniform(labels(n)).unwrap();
        assert_eq!(lambda_max(&m, &ahp_weights(&m)).unwrap(), n as f64);
    }
}
