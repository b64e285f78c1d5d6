//! Grid verification suites. Each suite evaluates a family of inequalities
//! over a grid (or a seeded random sample) and collects every violation.

mod grid;
mod run;

pub use grid::GridAxis;

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::report::{CheckEntry, Outcome};

/// Seed of the sampled suites.
pub const SAMPLE_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Collar,
    Hexagon,
    Mu,
    TwistLower,
    Delta,
    Angle,
    Sandwich,
    Example81,
    MetricAxioms,
    DistanceOracle,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Collar,
        Suite::Hexagon,
        Suite::Mu,
        Suite::TwistLower,
        Suite::Delta,
        Suite::Angle,
        Suite::Sandwich,
        Suite::Example81,
        Suite::MetricAxioms,
        Suite::DistanceOracle,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Collar => "collar",
            Suite::Hexagon => "hexagon",
            Suite::Mu => "mu",
            Suite::TwistLower => "twist-lower",
            Suite::Delta => "delta",
            Suite::Angle => "angle",
            Suite::Sandwich => "sandwich",
            Suite::Example81 => "example81",
            Suite::MetricAxioms => "metric-axioms",
            Suite::DistanceOracle => "distance-oracle",
        }
    }

    pub fn statement(&self) -> &'static str {
        match self {
            Suite::Collar => "half-seams and altitudes of every pants exceed the collar margin B(l)",
            Suite::Hexagon => "the hexagon side formula is an involution a -> b -> a",
            Suite::Mu => "Grotzsch modulus lower bound, derivative and symmetry point; h(0) = 1 and h increasing",
            Suite::TwistLower => "twist map dilatation K(q) >= h(t)",
            Suite::Delta => "t <= delta log h(t) on (0, T] where h(T) = L",
            Suite::Angle => "seam angle lower bound and the exit point of the twisted seam",
            Suite::Sandwich => "d <= (2 + 3C) times the combined log K bound at d",
            Suite::Example81 => "cusped pants arc: cosh^2 l(n) bounded with supremum at n = 1",
            Suite::MetricAxioms => "Fenchel-Nielsen distance: pseudometric axioms, l-infinity isometry, length comparison",
            Suite::DistanceOracle => "hyperbolic distance: cross-ratio formula agrees with the cosh formula",
        }
    }

    /// Named axes with their default ranges. Axes named `samples` only use
    /// `steps`, as a sample count.
    pub fn default_axes(&self) -> Vec<(&'static str, GridAxis)> {
        let ax = GridAxis::new_unchecked;
        match self {
            Suite::Collar => vec![
                ("l1", ax(0.05, 10.0, 20)),
                ("l2", ax(0.05, 10.0, 20)),
                ("l3", ax(0.05, 10.0, 20)),
            ],
            Suite::Hexagon => vec![
                ("a1", ax(0.05, 10.0, 15)),
                ("a2", ax(0.05, 10.0, 15)),
                ("a3", ax(0.05, 10.0, 15)),
            ],
            Suite::Mu => vec![
                ("r", ax(0.0, 0.99, 99)),
                ("r_fd", ax(0.05, 0.95, 91)),
                ("t", ax(0.0, 20.0, 2000)),
            ],
            Suite::TwistLower => vec![("l", ax(0.1, 5.0, 50)), ("t", ax(0.0, 10.0, 50))],
            Suite::Delta => vec![("t_over_T", ax(0.0, 1.0, 100))],
            Suite::Angle => vec![
                ("M", ax(0.01, 20.0, 200)),
                ("c", ax(0.01, 10.0, 20)),
                ("theta", ax(0.05, 1.5, 20)),
            ],
            Suite::Sandwich => vec![
                ("d", ax(0.0, 5.0, 10)),
                ("N", ax(0.5, 5.0, 10)),
                ("C", ax(0.5, 5.0, 10)),
            ],
            Suite::Example81 => vec![("n", ax(1.0, 1e6, 1_000_000))],
            Suite::MetricAxioms => vec![("samples", ax(1.0, 1000.0, 1000))],
            Suite::DistanceOracle => vec![("samples", ax(1.0, 10000.0, 10000))],
        }
    }

    /// Runs the suite with the leading axes replaced by `overrides`.
    pub fn run(&self, overrides: &[GridAxis]) -> Result<SuiteResult> {
        let mut axes = self.default_axes();
        if overrides.len() > axes.len() {
            return Err(Error::Usage(format!(
                "suite {} has {} grid axes, {} given",
                self.name(),
                axes.len(),
                overrides.len()
            )));
        }
        for (slot, o) in axes.iter_mut().zip(overrides) {
            slot.1 = *o;
        }
        let start = Instant::now();
        let outcome = run::run(*self, &axes)?;
        Ok(SuiteResult::assemble(*self, axes, outcome, start.elapsed()))
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Usage(format!(
                    "unknown suite {s:?}; expected one of {} or all",
                    names.join(", ")
                ))
            })
    }
}

/// One evaluated check at one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteCheck {
    pub inputs: Vec<f64>,
    pub entry: CheckEntry,
}

impl SuiteCheck {
    pub(crate) fn new(inputs: Vec<f64>, entry: CheckEntry) -> Self {
        SuiteCheck { inputs, entry }
    }
}

#[derive(Debug, Default)]
pub(crate) struct SuiteOutcome {
    pub input_names: Vec<&'static str>,
    pub checks: Vec<SuiteCheck>,
    pub findings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub suite: Suite,
    pub axes: Vec<(&'static str, GridAxis)>,
    pub input_names: Vec<&'static str>,
    pub total: usize,
    /// Failed checks sorted by input tuple.
    pub failures: Vec<SuiteCheck>,
    pub min_slack: Option<f64>,
    /// Observations that do not affect pass/fail.
    pub findings: Vec<String>,
    pub checks: Vec<SuiteCheck>,
    pub elapsed: Duration,
}

fn cmp_inputs(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or_else(|| a.len().cmp(&b.len()))
}

impl SuiteResult {
    fn assemble(
        suite: Suite,
        axes: Vec<(&'static str, GridAxis)>,
        outcome: SuiteOutcome,
        elapsed: Duration,
    ) -> Self {
        let mut failures: Vec<SuiteCheck> = outcome
            .checks
            .iter()
            .filter(|c| c.entry.outcome == Outcome::Fail)
            .cloned()
            .collect();
        failures.sort_by(|a, b| {
            cmp_inputs(&a.inputs, &b.inputs).then_with(|| a.entry.label.cmp(&b.entry.label))
        });
        let min_slack = outcome
            .checks
            .iter()
            .filter(|c| c.entry.outcome != Outcome::Skip && c.entry.slack.is_finite())
            .map(|c| c.entry.slack)
            .reduce(f64::min);
        SuiteResult {
            suite,
            axes,
            input_names: outcome.input_names,
            total: outcome.checks.len(),
            failures,
            min_slack,
            findings: outcome.findings,
            checks: outcome.checks,
            elapsed,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Text report without timing, so it is reproducible.
    pub fn render(&self, max_failures: usize) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite {}: {}", self.suite.name(), self.suite.statement());
        let grid: Vec<String> = self.axes.iter().map(|(n, a)| format!("{n}={a}")).collect();
        let _ = writeln!(s, "grid {}", grid.join(" "));
        let _ = writeln!(s, "checks {}", self.total);
        let _ = writeln!(s, "failures {}", self.failures.len());
        match self.min_slack {
            Some(v) => {
                let _ = writeln!(s, "min_slack {v:.14e}");
            }
            None => s.push_str("min_slack none\n"),
        }
        for f in self.failures.iter().take(max_failures) {
            let inputs: Vec<String> = self
                .input_names
                .iter()
                .zip(&f.inputs)
                .map(|(n, v)| format!("{n}={v:.14e}"))
                .collect();
            let _ = writeln!(
                s,
                "FAIL {} [{}] lhs={:.14e} rhs={:.14e} slack={:.14e}",
                f.entry.label,
                inputs.join(" "),
                f.entry.lhs,
                f.entry.rhs,
                f.entry.slack
            );
        }
        if self.failures.len() > max_failures {
            let _ = writeln!(
                s,
                "... {} more failures",
                self.failures.len() - max_failures
            );
        }
        for f in &self.findings {
            let _ = writeln!(s, "finding: {f}");
        }
        let _ = writeln!(s, "result {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }

    /// One row per check, floats in shortest round-trip form.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("suite,");
        for n in &self.input_names {
            s.push_str(n);
            s.push(',');
        }
        s.push_str("check,lhs,rhs,slack,outcome\n");
        for c in &self.checks {
            let _ = write!(s, "{},", self.suite.name());
            for v in &c.inputs {
                let _ = write!(s, "{v},");
            }
            let outcome = match c.entry.outcome {
                Outcome::Pass => "pass",
                Outcome::Fail => "fail",
                Outcome::Skip => "skip",
            };
            let _ = writeln!(
                s,
                "\"{}\",{},{},{},{}",
                c.entry.label.replace('"', "\"\""),
                c.entry.lhs,
                c.entry.rhs,
                c.entry.slack,
                outcome
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn too_many_overrides() {
        let g = GridAxis::new(1.0, 2.0, 2).unwrap();
        assert!(Suite::TwistLower.run(&[g, g, g]).is_err());
    }

    #[test]
    fn failures_sorted_and_csv_rows() {
        let mk = |x: f64| SuiteCheck::new(vec![x], CheckEntry::at_least("c", 0.0, 1.0, 0.0));
        let outcome = SuiteOutcome {
            input_names: vec!["x"],
            checks: vec![mk(3.0), mk(1.0), mk(2.0)],
            findings: vec![],
        };
        let r = SuiteResult::assemble(Suite::Collar, vec![], outcome, Duration::ZERO);
        let xs: Vec<f64> = r.failures.iter().map(|f| f.inputs[0]).collect();
        assert_eq!(xs, vec![1.0, 2.0, 3.0]);
        assert!(!r.passed());
        assert_eq!(r.min_slack, Some(-1.0));
        assert_eq!(r.to_csv().lines().count(), 4);
        assert!(r.render(1).contains("... 2 more failures"));
    }
}
