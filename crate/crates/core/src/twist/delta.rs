//! Inverting the twist modulus: `t <= δ log h(t)` on a bounded range.

use crate::conformal::{h_derivative, h_of_t};
use crate::error::{Error, Result};
use crate::report::{CheckEntry, VerificationReport};

const BISECTION_TOL: f64 = 1e-12;
const DERIVATIVE_GRID: usize = 2001;

/// Constants for `t <= δ log h(t)` on `(0, T]` where `h(T) = L`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistDelta {
    /// Dilatation cap `L`.
    pub cap: f64,
    /// `T` with `h(T) = L`.
    pub t_max: f64,
    /// Minimum of `h'` over `[0, T]`.
    pub slope: f64,
    /// `M = log(1 + D T)/T`, so that `e^{Mt} <= 1 + D t <= h(t)` on `[0, T]`.
    pub rate: f64,
    pub delta: f64,
}

impl TwistDelta {
    /// Evaluates `δ log h(t) - t` at `points` equally spaced points of `(0, T]`.
    pub fn contract_report(&self, points: usize) -> Result<VerificationReport> {
        let mut report = VerificationReport::new(format!("twist delta L={}", self.cap));
        for k in 1..=points {
            let t = self.t_max * k as f64 / points as f64;
            report.push(CheckEntry::at_least(
                format!("t={t:e}: delta log h(t) >= t"),
                self.delta * h_of_t(t)?.ln(),
                t,
                0.0,
            ));
        }
        Ok(report)
    }
}

/// Solves `h(T) = L` by bisection, then derives `δ = 1/M`.
pub fn twist_delta(cap: f64) -> Result<TwistDelta> {
    if !(cap.is_finite() && cap > 1.0) {
        return Err(Error::domain(
            "twist_delta",
            format!("dilatation cap must be finite and > 1, got {cap}"),
        ));
    }
    let mut hi = 1.0;
    while h_of_t(hi)? < cap {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    while hi - lo > BISECTION_TOL * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if h_of_t(mid)? < cap {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t_max = 0.5 * (lo + hi);

    let mut slope = f64::INFINITY;
    for k in 0..DERIVATIVE_GRID {
        let t = t_max * k as f64 / (DERIVATIVE_GRID - 1) as f64;
        slope = slope.min(h_derivative(t)?);
    }
    let rate = (slope * t_max).ln_1p() / t_max;
    Ok(TwistDelta {
        cap,
        t_max,
        slope,
        rate,
        delta: 1.0 / rate,
    })
}
