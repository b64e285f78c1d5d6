//! Check records shared by every verifier in the crate.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// Not evaluated; the entry's note says why.
    Skip,
}

/// One inequality `lhs >= rhs` (or structural condition) with its slack.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckEntry {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub outcome: Outcome,
    pub note: Option<String>,
}

impl CheckEntry {
    /// Records `lhs >= rhs - tol`. An infinite `lhs` passes with infinite slack.
    pub fn at_least(label: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let slack = if lhs == f64::INFINITY {
            f64::INFINITY
        } else {
            lhs - rhs
        };
        let outcome = if slack >= -tol {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        CheckEntry {
            label: label.into(),
            lhs,
            rhs,
            slack,
            outcome,
            note: None,
        }
    }

    pub fn skipped(label: impl Into<String>, note: impl Into<String>) -> Self {
        CheckEntry {
            label: label.into(),
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: f64::NAN,
            outcome: Outcome::Skip,
            note: Some(note.into()),
        }
    }

    /// A structural pass/fail with no numeric content.
    pub fn structural(label: impl Into<String>, ok: bool, note: Option<String>) -> Self {
        CheckEntry {
            label: label.into(),
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: f64::NAN,
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
            note,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Outcome of a single verifier call.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerificationReport {
    pub name: String,
    pub entries: Vec<CheckEntry>,
    /// Secondary observations that do not affect pass/fail.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            entries: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.outcome != Outcome::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.outcome == Outcome::Fail)
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.entries.iter().filter(|e| e.outcome == outcome).count()
    }

    /// Smallest finite slack over evaluated entries.
    pub fn min_slack(&self) -> Option<f64> {
        self.entries
            .iter()
            .filter(|e| e.outcome != Outcome::Skip && e.slack.is_finite())
            .map(|e| e.slack)
            .reduce(f64::min)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.name)?;
        for e in &self.entries {
            let tag = match e.outcome {
                Outcome::Pass => "pass",
                Outcome::Fail => "FAIL",
                Outcome::Skip => "skip",
            };
            write!(f, "  [{tag}] {}", e.label)?;
            if e.outcome != Outcome::Skip && e.lhs.is_finite() {
                write!(f, "  lhs={:e} rhs={:e} slack={:e}", e.lhs, e.rhs, e.slack)?;
            }
            if let Some(note) = &e.note {
                write!(f, "  ({note})")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
