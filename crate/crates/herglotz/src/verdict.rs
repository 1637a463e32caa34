//! Decision outcomes with machine-checkable certificates.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Accept,
    Reject,
    Undecided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckResult {
    Pass,
    Fail,
    Undecided,
    /// Recorded for context (e.g. conditions that are vacuous for rational
    /// input); does not influence the outcome.
    Info,
}

/// One entry of a certificate: which condition was checked, on which index
/// set, with what result, and an exact witness when the check failed.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub condition: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index_set: Option<Vec<usize>>,
    pub result: CheckResult,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub witness: BTreeMap<String, String>,
}

impl Check {
    pub fn new(condition: impl Into<String>, result: CheckResult) -> Self {
        Check { condition: condition.into(), index_set: None, result, witness: BTreeMap::new() }
    }

    pub fn with_index_set(mut self, ix: Vec<usize>) -> Self {
        self.index_set = Some(ix);
        self
    }

    pub fn with_witness(mut self, key: &str, value: impl ToString) -> Self {
        self.witness.insert(key.to_string(), value.to_string());
        self
    }
}

/// A verdict: rejects always carry a finite, independently checkable
/// witness among the checks.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub checks: Vec<Check>,
}

impl Verdict {
    pub fn new(outcome: Outcome) -> Self {
        Verdict { outcome, checks: vec![] }
    }

    pub fn accept() -> Self {
        Self::new(Outcome::Accept)
    }

    pub fn is_accept(&self) -> bool {
        self.outcome == Outcome::Accept
    }

    pub fn is_reject(&self) -> bool {
        self.outcome == Outcome::Reject
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Combines check results: any Fail makes the verdict Reject, otherwise
    /// any Undecided makes it Undecided, otherwise Accept.
    pub fn from_checks(checks: Vec<Check>) -> Self {
        let mut outcome = Outcome::Accept;
        for c in &checks {
            match c.result {
                CheckResult::Fail => {
                    outcome = Outcome::Reject;
                    break;
                }
                CheckResult::Undecided => outcome = Outcome::Undecided,
                _ => {}
            }
        }
        Verdict { outcome, checks }
    }

    pub fn failed_conditions(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.result == CheckResult::Fail)
            .map(|c| c.condition.as_str())
            .collect()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.outcome {
            Outcome::Accept => write!(f, "accept")?,
            Outcome::Reject => write!(f, "reject")?,
            Outcome::Undecided => write!(f, "undecided")?,
        }
        for c in &self.checks {
            write!(f, "\n  [{:?}] {}", c.result, c.condition)?;
            if let Some(ix) = &c.index_set {
                write!(f, " at index set {ix:?}")?;
            }
            for (k, v) in &c.witness {
                write!(f, " {k}={v}")?;
            }
        }
        Ok(())
    }
}
