//! Result records shared by the verification suites and the CLI.

use serde::Serialize;
use serde_json::Value;

use crate::algebra::Scalar;

/// One failed comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub site: Value,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

/// Outcome of checking an identity at many sites. Empty means verified.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records one comparison.
    pub fn compare(&mut self, site: Value, lhs: &Scalar, rhs: &Scalar) {
        self.checked += 1;
        if lhs != rhs {
            self.violations.push(Violation {
                site,
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            });
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }
}

/// A single identity instance as emitted by the CLI.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub identity: String,
    pub instance: Value,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

impl CheckRecord {
    pub fn new(identity: &str, instance: Value, lhs: &Scalar, rhs: &Scalar) -> Self {
        CheckRecord {
            identity: identity.to_string(),
            instance,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            equal: lhs == rhs,
        }
    }

    /// A comparison of values already rendered as text, such as truncated
    /// series.
    pub fn from_text(identity: &str, instance: Value, lhs: String, rhs: String) -> Self {
        let equal = lhs == rhs;
        CheckRecord {
            identity: identity.to_string(),
            instance,
            lhs,
            rhs,
            equal,
        }
    }

    /// Wraps a multi-site report: sides are the counts of checked and failed
    /// sites.
    pub fn from_report(identity: &str, instance: Value, report: &Report) -> Self {
        CheckRecord {
            identity: identity.to_string(),
            instance,
            lhs: format!("{} sites", report.checked),
            rhs: format!("{} violations", report.violations.len()),
            equal: report.is_empty(),
        }
    }
}
