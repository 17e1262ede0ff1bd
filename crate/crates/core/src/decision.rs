use serde::Serialize;

use crate::pcm::CriterionLabel;

/// The winning criterion of either method and its value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decision {
    pub label: CriterionLabel,
    pub value: f64,
}

/// Maximum value and its label. Ties go to the earliest label.
pub(crate) fn argmax(labels: &[CriterionLabel], values: &[f64]) -> Option<Decision> {
    let mut best: Option<(usize, f64)> = None;
    for (i, &v) in values.iter().enumerate() {
        match best {
            Some((_, b)) if v <= b => {}
            _ => best = Some((i, v)),
        }
    }
    best.map(|(i, value)| Decision {
        label: labels[i].clone(),
        value,
    })
}
