//! Pieces shared by the JSON reports: tolerance checks, matrices, invariants.

use serde::Serialize;

use schmidt_gates::{EntanglerClass, LocalInvariants, Matrix4c};

use crate::numfmt::Num;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    /// Passes when `value ≤ threshold`; NaN fails.
    pub fn at_most(name: &str, value: f64, threshold: f64) -> Self {
        let status = if value <= threshold { CheckStatus::Pass } else { CheckStatus::Fail };
        Self { name: name.into(), status, value: Some(Num(value)), threshold: Some(Num(threshold)), detail: None }
    }

    pub fn condition(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        Self { name: name.into(), status, value: None, threshold: None, detail: Some(detail.into()) }
    }

    pub fn not_applicable(name: &str, reason: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: CheckStatus::NotApplicable,
            value: None,
            threshold: None,
            detail: Some(reason.into()),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    !checks.iter().any(Check::failed)
}

/// Row-major `[re, im]` pairs.
pub fn matrix_json(u: &Matrix4c) -> Vec<Vec<[Num; 2]>> {
    (0..4).map(|r| (0..4).map(|k| [Num(u[(r, k)].re), Num(u[(r, k)].im)]).collect()).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsJson {
    pub g1_re: Num,
    pub g1_im: Num,
    pub g2: Num,
    pub class: &'static str,
}

impl InvariantsJson {
    pub fn new(inv: &LocalInvariants, class: EntanglerClass) -> Self {
        Self { g1_re: Num(inv.g1.re), g1_im: Num(inv.g1.im), g2: Num(inv.g2), class: class.as_str() }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct PointJson {
    pub alpha: Num,
    pub beta: Num,
}

impl From<schmidt_gates::SchmidtCoordinates> for PointJson {
    fn from(p: schmidt_gates::SchmidtCoordinates) -> Self {
        Self { alpha: Num(p.alpha), beta: Num(p.beta) }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}
