//! Verification reports: one JSON object per checked case.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Pole,
    ReportOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Pole => "pole",
            Status::ReportOnly => "report-only",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: String,
    pub case: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

impl Check {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Whether the check counts against the run. Report-only rows never do.
    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail | Status::Pole)
    }
}

/// Result of a single check body.
pub struct Outcome {
    pub status: Status,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Outcome {
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn report(witness: impl Into<String>) -> Self {
        Outcome {
            status: Status::ReportOnly,
            witness: Some(witness.into()),
        }
    }

    /// Pass iff `ok`, with `witness` attached on failure.
    pub fn check(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass()
        } else {
            Self::fail(witness())
        }
    }
}

impl From<AlgebraError> for Outcome {
    fn from(e: AlgebraError) -> Self {
        let status = match e {
            AlgebraError::PoleAtSpecialization { .. } | AlgebraError::PoleInGramSchmidt(_) => {
                Status::Pole
            }
            _ => Status::Fail,
        };
        Outcome {
            status,
            witness: Some(e.to_string()),
        }
    }
}

/// Runs `body`, timing it and converting errors into pole/fail rows.
pub fn run(
    suite: &str,
    case: Value,
    body: impl FnOnce() -> Result<Outcome, AlgebraError>,
) -> Check {
    let start = Instant::now();
    let out = body().unwrap_or_else(Outcome::from);
    Check {
        suite: suite.to_string(),
        case,
        status: out.status,
        witness: out.witness,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// True when no row failed.
pub fn all_passed(checks: &[Check]) -> bool {
    !checks.iter().any(Check::failed)
}
