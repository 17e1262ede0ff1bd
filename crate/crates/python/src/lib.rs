//! Python bindings: the `mcdm` extension module.

use std::collections::HashMap;

use mcdm_core::chart::{render_chart as render_svg, ChartSpec};
use mcdm_core::cli::{self, ConsistencyOptions, Estimator, Method};
use mcdm_core::corpus::{load_corpus, ToleranceConfig};
use mcdm_core::trend::{self, DatasetDecision, DEFAULT_EPSILON};
use mcdm_core::{ahp, fuzzy, pcm, ComparisonSeries, LambdaEstimator, MatrixFormat, RiTable};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pythonize::pythonize;

/// `(name, labels, ahp, fuzzy)`, the tuple form of a comparison series.
type SeriesTuple = (String, Vec<String>, Vec<f64>, Vec<f64>);

fn value_error(e: mcdm_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn estimator(name: &str) -> PyResult<Estimator> {
    match name {
        "weighted-column-sum" => Ok(Estimator::WeightedColumnSum),
        "mean-ratio" => Ok(Estimator::MeanRatio),
        "power-iteration" => Ok(Estimator::PowerIteration),
        other => Err(PyValueError::new_err(format!(
            "unknown estimator {other:?}; use weighted-column-sum, mean-ratio or power-iteration"
        ))),
    }
}

fn ri_table(ri: Option<HashMap<usize, f64>>) -> PyResult<RiTable> {
    let mut table = RiTable::published();
    let mut extra: Vec<_> = ri.unwrap_or_default().into_iter().collect();
    extra.sort_by_key(|&(n, _)| n);
    for (n, v) in extra {
        table.set(n, v).map_err(value_error)?;
    }
    Ok(table)
}

/// A square pairwise rating matrix with labelled criteria.
#[pyclass(name = "PairwiseMatrix", module = "mcdm", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyPairwiseMatrix {
    inner: pcm::PairwiseMatrix,
}

#[pymethods]
impl PyPairwiseMatrix {
    #[new]
    fn new(labels: Vec<String>, rows: Vec<Vec<f64>>) -> PyResult<Self> {
        let inner = pcm::PairwiseMatrix::new(labels, rows).map_err(value_error)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn uniform(labels: Vec<String>) -> PyResult<Self> {
        let inner = pcm::PairwiseMatrix::uniform(labels).map_err(value_error)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_csv(text: &str) -> PyResult<Self> {
        let inner = pcm::parse_matrix(text, MatrixFormat::Csv).map_err(value_error)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = pcm::parse_matrix(text, MatrixFormat::Json).map_err(value_error)?;
        Ok(Self { inner })
    }

    fn to_csv(&self) -> String {
        pcm::serialize_matrix(&self.inner, MatrixFormat::Csv)
    }

    fn to_json(&self) -> String {
        pcm::serialize_matrix(&self.inner, MatrixFormat::Json)
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.label_strings()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<f64>> {
        self.inner.to_rows()
    }

    /// Off-scale ratings and other warnings, as `(severity, message)` pairs.
    fn validate(&self, strict: bool) -> Vec<(String, String)> {
        let scale = if strict {
            pcm::RatingScale::enforce()
        } else {
            pcm::RatingScale::warn()
        };
        pcm::validate(&self.inner, &scale)
            .issues
            .iter()
            .map(|i| {
                (
                    format!("{:?}", i.severity).to_lowercase(),
                    i.message.clone(),
                )
            })
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "PairwiseMatrix(order={}, labels={:?})",
            self.inner.order(),
            self.inner.label_strings()
        )
    }
}

#[pyfunction]
fn ahp_weights(matrix: &PyPairwiseMatrix) -> Vec<f64> {
    ahp::ahp_weights(&matrix.inner).values().to_vec()
}

#[pyfunction]
fn fuzzy_scores(matrix: &PyPairwiseMatrix) -> Vec<f64> {
    fuzzy::fuzzy_scores(&fuzzy::fuzzy_normalize(&matrix.inner))
        .values()
        .to_vec()
}

/// `{"ahp": (label, weight), "fuzzy": (label, score)}`.
#[pyfunction]
fn decisions(matrix: &PyPairwiseMatrix) -> HashMap<&'static str, (String, f64)> {
    let a = ahp::ahp_decide(&ahp::ahp_weights(&matrix.inner));
    let f = fuzzy::fuzzy_decide(&fuzzy::fuzzy_scores(&fuzzy::fuzzy_normalize(&matrix.inner)));
    HashMap::from([
        ("ahp", (a.label.to_string(), a.value)),
        ("fuzzy", (f.label.to_string(), f.value)),
    ])
}

#[pyfunction]
#[pyo3(signature = (matrix, estimator="weighted-column-sum"))]
fn lambda_max(matrix: &PyPairwiseMatrix, estimator: &str) -> PyResult<f64> {
    let e: LambdaEstimator = self::estimator(estimator)?.into();
    ahp::lambda_max_with(&matrix.inner, &ahp::ahp_weights(&matrix.inner), e).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (matrix, threshold=0.1, ri=None, estimator="weighted-column-sum"))]
fn consistency<'py>(
    py: Python<'py>,
    matrix: &PyPairwiseMatrix,
    threshold: f64,
    ri: Option<HashMap<usize, f64>>,
    estimator: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let e: LambdaEstimator = self::estimator(estimator)?.into();
    let report =
        ahp::consistency_with(&matrix.inner, &ri_table(ri)?, threshold, e).map_err(value_error)?;
    Ok(pythonize(py, &report)?)
}

/// Both methods at once, as the `evaluate` command reports them.
#[pyfunction]
#[pyo3(signature = (matrix, method="both", threshold=0.1, ri=None, estimator="weighted-column-sum"))]
fn evaluate<'py>(
    py: Python<'py>,
    matrix: &PyPairwiseMatrix,
    method: &str,
    threshold: f64,
    ri: Option<HashMap<usize, f64>>,
    estimator: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let method = match method {
        "ahp" => Method::Ahp,
        "fuzzy" => Method::Fuzzy,
        "both" => Method::Both,
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    let options = ConsistencyOptions {
        cr_threshold: threshold,
        ri: ri.unwrap_or_default().into_iter().collect(),
        lambda: self::estimator(estimator)?,
    };
    let result = cli::evaluate(&matrix.inner, method, &options).map_err(value_error)?;
    Ok(pythonize(py, &result)?)
}

#[pyfunction]
#[pyo3(signature = (ahp_delta, fuzzy_delta, epsilon=DEFAULT_EPSILON))]
fn classify_transition(ahp_delta: f64, fuzzy_delta: f64, epsilon: f64) -> &'static str {
    trend::classify_transition(ahp_delta, fuzzy_delta, epsilon).key()
}

/// Pools transition counts over several series.
#[pyfunction]
#[pyo3(signature = (series, epsilon=DEFAULT_EPSILON))]
fn summarize<'py>(
    py: Python<'py>,
    series: Vec<SeriesTuple>,
    epsilon: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let all = series
        .into_iter()
        .map(|(name, labels, ahp, fuzzy)| ComparisonSeries::new(name, labels, ahp, fuzzy))
        .collect::<Result<Vec<_>, _>>()
        .map_err(value_error)?;
    let summary = trend::summarize(&all, epsilon).map_err(value_error)?;
    Ok(pythonize(py, &summary)?)
}

/// Series of per-dataset decision values.
#[pyfunction]
fn decision_series(decisions: Vec<(String, f64, f64)>) -> PyResult<SeriesTuple> {
    let d: Vec<_> = decisions
        .into_iter()
        .map(|(name, a, f)| DatasetDecision::new(name, a, f))
        .collect();
    let s = trend::decision_series(&d).map_err(value_error)?;
    Ok((
        s.name.clone(),
        s.labels().to_vec(),
        s.ahp().to_vec(),
        s.fuzzy().to_vec(),
    ))
}

/// The embedded datasets as `(name, matrix, expected)` tuples.
#[pyfunction]
fn corpus<'py>(py: Python<'py>) -> PyResult<Vec<(String, PyPairwiseMatrix, Bound<'py, PyAny>)>> {
    load_corpus()
        .into_iter()
        .map(|d| {
            let expected = pythonize(py, &d.expected)?;
            Ok((d.name, PyPairwiseMatrix { inner: d.matrix }, expected))
        })
        .collect()
}

#[pyfunction]
#[pyo3(signature = (strict=false, weights=0.005, scores=0.005, lambda_max=0.10, ci=0.02, cr=0.02, percent=0.02))]
#[allow(clippy::too_many_arguments)]
fn run_regression<'py>(
    py: Python<'py>,
    strict: bool,
    weights: f64,
    scores: f64,
    lambda_max: f64,
    ci: f64,
    cr: f64,
    percent: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let tolerances = ToleranceConfig {
        weights,
        scores,
        lambda_max,
        ci,
        cr,
        percent,
        strict,
        ..ToleranceConfig::default()
    };
    Ok(pythonize(
        py,
        &mcdm_core::corpus::run_regression(&tolerances),
    )?)
}

#[pyfunction]
#[pyo3(signature = (title, labels, ahp, fuzzy, width=800, height=480))]
fn render_chart(
    title: String,
    labels: Vec<String>,
    ahp: Vec<f64>,
    fuzzy: Vec<f64>,
    width: u32,
    height: u32,
) -> PyResult<String> {
    let series = ComparisonSeries::new(title.clone(), labels, ahp, fuzzy).map_err(value_error)?;
    let mut spec = ChartSpec::from_series(&series);
    spec.title = title;
    spec.width = width;
    spec.height = height;
    render_svg(&spec).map_err(value_error)
}

#[pymodule]
fn mcdm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPairwiseMatrix>()?;
    m.add_function(wrap_pyfunction!(ahp_weights, m)?)?;
    m.add_function(wrap_pyfunction!(fuzzy_scores, m)?)?;
    m.add_function(wrap_pyfunction!(decisions, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_max, m)?)?;
    m.add_function(wrap_pyfunction!(consistency, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(classify_transition, m)?)?;
    m.add_function(wrap_pyfunction!(summarize, m)?)?;
    m.add_function(wrap_pyfunction!(decision_series, m)?)?;
    m.add_function(wrap_pyfunction!(corpus, m)?)?;
    m.add_function(wrap_pyfunction!(run_regression, m)?)?;
    m.add_function(wrap_pyfunction!(render_chart, m)?)?;
    m.add("DEFAULT_EPSILON", DEFAULT_EPSILON)?;
    Ok(())
}
