use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of a verification: `{"claim", "range", "status", "counterexample"}`,
/// plus optional supporting data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub range: Value,
    pub status: Status,
    pub counterexample: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl Report {
    pub fn pass(claim: impl Into<String>, range: Value) -> Self {
        Report {
            claim: claim.into(),
            range,
            status: Status::Pass,
            counterexample: None,
            details: None,
        }
    }

    pub fn fail(claim: impl Into<String>, range: Value, counterexample: Value) -> Self {
        Report {
            claim: claim.into(),
            range,
            status: Status::Fail,
            counterexample: Some(counterexample),
            details: None,
        }
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Combines sub-reports: passes iff all pass, reporting the first failure.
    pub fn all(claim: impl Into<String>, range: Value, parts: Vec<Report>) -> Self {
        let claim = claim.into();
        match parts.iter().find(|r| !r.passed()) {
            Some(bad) => Report::fail(
                claim,
                range,
                serde_json::json!({ "claim": bad.claim, "counterexample": bad.counterexample }),
            ),
            None => Report::pass(claim, range),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "[{tag}] {} {}", self.claim, self.range)?;
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample={c}")?;
        }
        Ok(())
    }
}
