use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `steps` points from `lo` to `hi`: log-spaced when `lo > 0`, and
/// `hi * k / steps` for `k = 1..=steps` when `lo == 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl GridAxis {
    pub fn new(lo: f64, hi: f64, steps: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo >= 0.0 && hi > lo && steps >= 1) {
            return Err(Error::Usage(format!(
                "grid axis needs 0 <= lo < hi and steps >= 1, got {lo}:{hi}:{steps}"
            )));
        }
        Ok(GridAxis { lo, hi, steps })
    }

    pub(crate) const fn new_unchecked(lo: f64, hi: f64, steps: usize) -> Self {
        GridAxis { lo, hi, steps }
    }

    pub fn points(&self) -> Vec<f64> {
        if self.lo == 0.0 {
            return (1..=self.steps)
                .map(|k| self.hi * k as f64 / self.steps as f64)
                .collect();
        }
        if self.steps == 1 {
            return vec![self.lo];
        }
        let (a, b) = (self.lo.ln(), self.hi.ln());
        (0..self.steps)
            .map(|k| match k {
                0 => self.lo,
                k if k == self.steps - 1 => self.hi,
                k => (a + (b - a) * k as f64 / (self.steps - 1) as f64).exp(),
            })
            .collect()
    }

    /// Distinct integers in `[lo, hi]`: every one when `steps` covers the
    /// range, otherwise the rounded log-spaced points.
    pub fn integer_points(&self) -> Vec<u64> {
        let lo = self.lo.max(1.0).ceil() as u64;
        let hi = self.hi.floor() as u64;
        if hi < lo {
            return Vec::new();
        }
        if (self.steps as u64) > hi - lo {
            return (lo..=hi).collect();
        }
        let axis = GridAxis::new_unchecked(lo as f64, hi as f64, self.steps);
        let mut pts: Vec<u64> = axis.points().iter().map(|x| x.round() as u64).collect();
        pts.dedup();
        pts
    }
}

impl FromStr for GridAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Usage(format!("grid must be lo:hi:steps, got {s:?}"));
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, steps] = parts.as_slice() else {
            return Err(bad());
        };
        GridAxis::new(
            lo.trim().parse().map_err(|_| bad())?,
            hi.trim().parse().map_err(|_| bad())?,
            steps.trim().parse().map_err(|_| bad())?,
        )
    }
}

impl fmt::Display for GridAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.steps)
    }
}
