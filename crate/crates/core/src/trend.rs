//! Agreement analysis between the AHP and fuzzy outputs.
//!
//! Walking a series criterion by criterion, each step is classified by the
//! direction the AHP value and the fuzzy value move. Counts are pooled over
//! many series into per-category percentages and three aggregates:
//! same-direction, reverse swing, and one side unchanged.

use std::fmt;
use std::ops::{Add, AddAssign, Index};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::ahp::WeightVector;
use crate::error::{Error, Result};
use crate::fuzzy::FuzzyScoreVector;
use crate::numeric::round_to;

pub const DEFAULT_EPSILON: f64 = 1e-9;

/// Name given to the series built by [`decision_series`].
pub const DECISION_SERIES_NAME: &str = "Decision values";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransitionCategory {
    BothIncrease,
    AhpUpFuzzyDown,
    AhpDownFuzzyUp,
    BothDecrease,
    /// AHP moves, fuzzy stays.
    FuzzyUnchanged,
    /// Fuzzy moves, AHP stays.
    AhpUnchanged,
    BothUnchanged,
}

impl TransitionCategory {
    pub const ALL: [TransitionCategory; 7] = [
        TransitionCategory::BothIncrease,
        TransitionCategory::AhpUpFuzzyDown,
        TransitionCategory::AhpDownFuzzyUp,
        TransitionCategory::BothDecrease,
        TransitionCategory::FuzzyUnchanged,
        TransitionCategory::AhpUnchanged,
        TransitionCategory::BothUnchanged,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn key(self) -> &'static str {
        match self {
            TransitionCategory::BothIncrease => "both_increase",
            TransitionCategory::AhpUpFuzzyDown => "ahp_up_fuzzy_down",
            TransitionCategory::AhpDownFuzzyUp => "ahp_down_fuzzy_up",
            TransitionCategory::BothDecrease => "both_decrease",
            TransitionCategory::FuzzyUnchanged => "fuzzy_unchanged",
            TransitionCategory::AhpUnchanged => "ahp_unchanged",
            TransitionCategory::BothUnchanged => "both_unchanged",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            TransitionCategory::BothIncrease => "Increase in AHP, increase in fuzzy",
            TransitionCategory::AhpUpFuzzyDown => "Increase in AHP, decrease in fuzzy",
            TransitionCategory::AhpDownFuzzyUp => "Decrease in AHP, increase in fuzzy",
            TransitionCategory::BothDecrease => "Decrease in AHP, decrease in fuzzy",
            TransitionCategory::FuzzyUnchanged => "AHP changes, fuzzy unchanged",
            TransitionCategory::AhpUnchanged => "Fuzzy changes, AHP unchanged",
            TransitionCategory::BothUnchanged => "Both unchanged",
        }
    }

    /// The category seen when the AHP and fuzzy roles are exchanged.
    pub fn swapped(self) -> Self {
        match self {
            TransitionCategory::AhpUpFuzzyDown => TransitionCategory::AhpDownFuzzyUp,
            TransitionCategory::AhpDownFuzzyUp => TransitionCategory::AhpUpFuzzyDown,
            TransitionCategory::FuzzyUnchanged => TransitionCategory::AhpUnchanged,
            TransitionCategory::AhpUnchanged => TransitionCategory::FuzzyUnchanged,
            other => other,
        }
    }

    pub fn involves_unchanged(self) -> bool {
        matches!(
            self,
            TransitionCategory::FuzzyUnchanged
                | TransitionCategory::AhpUnchanged
                | TransitionCategory::BothUnchanged
        )
    }
}

impl fmt::Display for TransitionCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl Serialize for TransitionCategory {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.key())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    Up,
    Down,
    Flat,
}

fn direction(delta: f64, epsilon: f64) -> Direction {
    if delta.abs() <= epsilon {
        Direction::Flat
    } else if delta > 0.0 {
        Direction::Up
    } else {
        Direction::Down
    }
}

/// Classifies one step. Deltas with magnitude at most `epsilon` count as
/// unchanged.
pub fn classify_transition(ahp_delta: f64, fuzzy_delta: f64, epsilon: f64) -> TransitionCategory {
    use Direction::*;
    use TransitionCategory::*;
    match (
        direction(ahp_delta, epsilon),
        direction(fuzzy_delta, epsilon),
    ) {
        (Up, Up) => BothIncrease,
        (Up, Down) => AhpUpFuzzyDown,
        (Down, Up) => AhpDownFuzzyUp,
        (Down, Down) => BothDecrease,
        (Up | Down, Flat) => FuzzyUnchanged,
        (Flat, Up | Down) => AhpUnchanged,
        (Flat, Flat) => BothUnchanged,
    }
}

/// Tally of transitions per category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CategoryCounts([usize; 7]);

impl CategoryCounts {
    pub fn from_categories<I: IntoIterator<Item = TransitionCategory>>(categories: I) -> Self {
        let mut counts = Self::default();
        for c in categories {
            counts.0[c.index()] += 1;
        }
        counts
    }

    /// Counts in [`TransitionCategory::ALL`] order.
    pub fn from_array(counts: [usize; 7]) -> Self {
        Self(counts)
    }

    pub fn as_array(&self) -> [usize; 7] {
        self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (TransitionCategory, usize)> + '_ {
        TransitionCategory::ALL.into_iter().zip(self.0)
    }
}

impl Index<TransitionCategory> for CategoryCounts {
    type Output = usize;

    fn index(&self, category: TransitionCategory) -> &usize {
        &self.0[category.index()]
    }
}

impl Add for CategoryCounts {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for CategoryCounts {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl std::iter::Sum for CategoryCounts {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::default(), Add::add)
    }
}

impl Serialize for CategoryCounts {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(7))?;
        for (c, n) in self.iter() {
            map.serialize_entry(c.key(), &n)?;
        }
        map.end()
    }
}

/// Paired AHP and fuzzy values over the same ordered criteria.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonSeries {
    pub name: String,
    labels: Vec<String>,
    ahp: Vec<f64>,
    fuzzy: Vec<f64>,
}

impl ComparisonSeries {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        ahp: Vec<f64>,
        fuzzy: Vec<f64>,
    ) -> Result<Self> {
        let name = name.into();
        if labels.len() < 2 {
            return Err(Error::SeriesTooShort(labels.len()));
        }
        for (what, len) in [("AHP values", ahp.len()), ("fuzzy values", fuzzy.len())] {
            if len != labels.len() {
                return Err(Error::LengthMismatch {
                    name,
                    what,
                    expected: labels.len(),
                    found: len,
                });
            }
        }
        Ok(Self {
            name,
            labels,
            ahp,
            fuzzy,
        })
    }

    /// Pairs the outputs of both methods on one matrix.
    pub fn from_results(
        name: impl Into<String>,
        weights: &WeightVector,
        scores: &FuzzyScoreVector,
    ) -> Result<Self> {
        if weights.labels() != scores.labels() {
            return Err(Error::InvalidArgument(
                "weight and score vectors list different criteria".into(),
            ));
        }
        Self::new(
            name,
            weights.labels().iter().map(|l| l.to_string()).collect(),
            weights.values().to_vec(),
            scores.values().to_vec(),
        )
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ahp(&self) -> &[f64] {
        &self.ahp
    }

    pub fn fuzzy(&self) -> &[f64] {
        &self.fuzzy
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Copy with both value sequences rounded to `decimals` places, so that
    /// steps are judged on displayed values.
    pub fn rounded(&self, decimals: u32) -> Self {
        let round = |v: &[f64]| v.iter().map(|&x| round_to(x, decimals)).collect();
        Self {
            name: self.name.clone(),
            labels: self.labels.clone(),
            ahp: round(&self.ahp),
            fuzzy: round(&self.fuzzy),
        }
    }

    /// Copy with the AHP and fuzzy roles exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            name: self.name.clone(),
            labels: self.labels.clone(),
            ahp: self.fuzzy.clone(),
            fuzzy: self.ahp.clone(),
        }
    }
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon.is_finite() && epsilon >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidEpsilon(epsilon))
    }
}

/// One category per adjacent pair of criteria, in label order.
pub fn classify_series(series: &ComparisonSeries, epsilon: f64) -> Result<Vec<TransitionCategory>> {
    check_epsilon(epsilon)?;
    if series.len() < 2 {
        return Err(Error::SeriesTooShort(series.len()));
    }
    Ok(series
        .ahp
        .windows(2)
        .zip(series.fuzzy.windows(2))
        .map(|(a, f)| classify_transition(a[1] - a[0], f[1] - f[0], epsilon))
        .collect())
}

/// Per-dataset outcome: the winning AHP weight and winning fuzzy score.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DatasetDecision {
    pub name: String,
    pub ahp: f64,
    pub fuzzy: f64,
}

impl DatasetDecision {
    pub fn new(name: impl Into<String>, ahp: f64, fuzzy: f64) -> Self {
        Self {
            name: name.into(),
            ahp,
            fuzzy,
        }
    }
}

/// Series across datasets of each dataset's two decision values, in the
/// order given.
pub fn decision_series(results: &[DatasetDecision]) -> Result<ComparisonSeries> {
    if results.len() < 2 {
        return Err(Error::SeriesTooShort(results.len()));
    }
    ComparisonSeries::new(
        DECISION_SERIES_NAME,
        results.iter().map(|r| r.name.clone()).collect(),
        results.iter().map(|r| r.ahp).collect(),
        results.iter().map(|r| r.fuzzy).collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesRow {
    pub name: String,
    pub counts: CategoryCounts,
    pub total: usize,
}

impl SeriesRow {
    pub fn new(name: impl Into<String>, counts: CategoryCounts) -> Self {
        Self {
            name: name.into(),
            total: counts.total(),
            counts,
        }
    }
}

/// The three pooled agreement rates, in percent. Transitions where neither
/// side moves are reported separately and left out of all three.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AgreementRates {
    pub same_direction: f64,
    pub reverse_swing: f64,
    pub one_unchanged: f64,
    pub both_unchanged: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CategoryPercent {
    pub category: TransitionCategory,
    pub description: &'static str,
    pub count: usize,
    pub percent: f64,
    pub display: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrendSummary {
    pub series: Vec<SeriesRow>,
    pub pooled: CategoryCounts,
    pub total: usize,
    pub percentages: Vec<CategoryPercent>,
    pub aggregate: AgreementRates,
    /// `aggregate` rounded to two decimals.
    pub aggregate_display: AgreementRates,
}

impl TrendSummary {
    /// Pools precounted rows.
    pub fn from_rows(series: Vec<SeriesRow>) -> Result<Self> {
        let pooled: CategoryCounts = series.iter().map(|r| r.counts).sum();
        let total = pooled.total();
        if total == 0 {
            return Err(Error::NoObservations);
        }
        let pct = |count: usize| count as f64 * 100.0 / total as f64;
        let percentages = pooled
            .iter()
            .map(|(category, count)| CategoryPercent {
                category,
                description: category.description(),
                count,
                percent: pct(count),
                display: round_to(pct(count), 2),
            })
            .collect();
        use TransitionCategory::*;
        let aggregate = AgreementRates {
            same_direction: pct(pooled[BothIncrease] + pooled[BothDecrease]),
            reverse_swing: pct(pooled[AhpUpFuzzyDown] + pooled[AhpDownFuzzyUp]),
            one_unchanged: pct(pooled[FuzzyUnchanged] + pooled[AhpUnchanged]),
            both_unchanged: pct(pooled[BothUnchanged]),
        };
        let aggregate_display = AgreementRates {
            same_direction: round_to(aggregate.same_direction, 2),
            reverse_swing: round_to(aggregate.reverse_swing, 2),
            one_unchanged: round_to(aggregate.one_unchanged, 2),
            both_unchanged: round_to(aggregate.both_unchanged, 2),
        };
        Ok(Self {
            series,
            pooled,
            total,
            percentages,
            aggregate,
            aggregate_display,
        })
    }

    pub fn percent(&self, category: TransitionCategory) -> f64 {
        self.percentages[category.index()].percent
    }

    pub fn row(&self, name: &str) -> Option<&SeriesRow> {
        self.series.iter().find(|r| r.name == name)
    }

    /// One line per series, one column per category, then the total.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let mut header = vec!["series".to_string()];
        header.extend(TransitionCategory::ALL.iter().map(|c| c.key().to_string()));
        header.push("total".into());
        writer.write_record(&header).expect("write to memory");
        for row in &self.series {
            let mut record = vec![row.name.clone()];
            record.extend(row.counts.as_array().iter().map(usize::to_string));
            record.push(row.total.to_string());
            writer.write_record(&record).expect("write to memory");
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
    }
}

/// Classifies every series and pools the transitions.
pub fn summarize(all_series: &[ComparisonSeries], epsilon: f64) -> Result<TrendSummary> {
    check_epsilon(epsilon)?;
    let rows = all_series
        .iter()
        .map(|s| {
            Ok(SeriesRow::new(
                s.name.clone(),
                CategoryCounts::from_categories(classify_series(s, epsilon)?),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    TrendSummary::from_rows(rows)
}
