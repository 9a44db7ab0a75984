//! Outcome records for verification checks.

use serde::Serialize;

use crate::algebra::TermRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

/// Evidence attached to a failing check.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Element(Vec<TermRecord>),
    Values(Vec<(String, String)>),
    Text(String),
}

/// `{check, lambda, status, witness}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub lambda: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckRecord {
    pub fn pass(check: impl Into<String>, lambda: Option<String>) -> Self {
        CheckRecord { check: check.into(), lambda, status: Status::Pass, witness: None }
    }

    pub fn fail(check: impl Into<String>, lambda: Option<String>, witness: Witness) -> Self {
        CheckRecord { check: check.into(), lambda, status: Status::Fail, witness: Some(witness) }
    }

    /// Pass when `failure` is `None`.
    pub fn from_failure(check: impl Into<String>, lambda: Option<String>, failure: Option<Witness>) -> Self {
        match failure {
            None => Self::pass(check, lambda),
            Some(w) => Self::fail(check, lambda, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn all_pass(records: &[CheckRecord]) -> bool {
    records.iter().all(CheckRecord::passed)
}

/// `Values` witness from `(label, value)` pairs.
pub fn values<I, A, B>(items: I) -> Witness
where
    I: IntoIterator<Item = (A, B)>,
    A: ToString,
    B: ToString,
{
    Witness::Values(items.into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect())
}
