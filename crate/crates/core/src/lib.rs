//! Multi-criteria decision analysis over pairwise comparison matrices.
//!
//! Two methods run on the same rating matrix:
//!
//! * [`ahp`]: column-normalize, average rows into weights, pick the largest,
//!   and check consistency (principal value, CI, RI, CR).
//! * [`fuzzy`]: divide each rating by the larger of its pair, take row
//!   minima, pick the largest minimum.
//!
//! [`trend`] compares how the two outputs move from criterion to criterion,
//! [`corpus`] embeds eight published datasets and checks the whole pipeline
//! against their printed results, and [`cli`] drives it all from the command
//! line, including SVG charts from [`chart`].

pub mod ahp;
pub mod chart;
pub mod cli;
pub mod corpus;
mod decision;
pub mod error;
pub mod fuzzy;
pub mod numeric;
pub mod pcm;
pub mod trend;

pub use ahp::{
    ahp_decide, ahp_normalize, ahp_weights, consistency, consistency_with, lambda_max,
    lambda_max_with, AhpNormalizedMatrix, ConsistencyReport, LambdaEstimator, RiTable,
    WeightVector,
};
pub use decision::Decision;
pub use error::{Error, Result};
pub use fuzzy::{
    fuzzy_decide, fuzzy_normalize, fuzzy_scores, FuzzyNormalizedMatrix, FuzzyScoreVector,
};
pub use pcm::{
    parse_matrix, serialize_matrix, validate, CriterionLabel, MatrixFormat, PairwiseMatrix,
    RatingScale, Strictness, ValidationReport,
};
pub use trend::{
    classify_series, classify_transition, decision_series, summarize, ComparisonSeries,
    TransitionCategory, TrendSummary,
};
