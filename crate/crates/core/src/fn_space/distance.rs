//! The Fenchel-Nielsen distance, its naive variants and the `ℓ∞` embedding.

use std::str::FromStr;

use crate::error::{require_positive, Error, Result};
use crate::examples::pants1_arc_length;

use super::coords::{FNCoordinate, StructureGenerator, StructureSource, StructureWindow};

/// Per-curve discrepancy used inside the supremum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    /// `max(|log l_x - log l_y|, |l_x θ_x - l_y θ_y|)`.
    FenchelNielsen,
    /// `max(|log l_x - log l_y|, |θ_x - θ_y|)`.
    RawTwist,
    /// `max(|l_x - l_y|, |l_x θ_x - l_y θ_y|)`.
    RawLength,
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fn" => Ok(Metric::FenchelNielsen),
            "raw-twist" | "raw_twist" => Ok(Metric::RawTwist),
            "raw-length" | "raw_length" => Ok(Metric::RawLength),
            _ => Err(Error::Usage(format!(
                "unknown metric {s:?}; expected fn, raw-twist or raw-length"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    /// The value is the supremum over every curve.
    Exact,
    /// Only the curves in the window were compared.
    WindowTruncated,
}

impl Exactness {
    pub fn as_str(&self) -> &'static str {
        match self {
            Exactness::Exact => "exact",
            Exactness::WindowTruncated => "window-truncated",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FnDistance {
    pub value: f64,
    pub exactness: Exactness,
    /// First 1-based index attaining the supremum.
    pub argmax: usize,
}

/// One curve's image under the `ℓ∞` embedding. Boundary curves have no
/// twist component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinfPoint {
    pub log_length: f64,
    pub twist_term: Option<f64>,
}

/// `(log l, l θ)` for every curve of the window.
pub fn to_linf(x: &StructureWindow) -> Vec<LinfPoint> {
    x.entries()
        .iter()
        .map(|c| LinfPoint {
            log_length: c.length().ln(),
            twist_term: c.twist().map(|t| c.length() * t),
        })
        .collect()
}

/// `sup_i max(|a_i - b_i|)` over both components, and its first argmax.
pub fn linf_distance(a: &[LinfPoint], b: &[LinfPoint]) -> Result<(f64, usize)> {
    if a.len() != b.len() {
        return Err(Error::Usage(format!(
            "embedded sequences have lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let mut best = (0.0, 1);
    for (i, (p, q)) in a.iter().zip(b).enumerate() {
        let mut d = (p.log_length - q.log_length).abs();
        match (p.twist_term, q.twist_term) {
            (Some(s), Some(t)) => d = d.max((s - t).abs()),
            (None, None) => {}
            _ => {
                return Err(Error::Usage(format!(
                    "curve {} is a boundary curve in only one sequence",
                    i + 1
                )))
            }
        }
        if d > best.0 {
            best = (d, i + 1);
        }
    }
    Ok(best)
}

fn curve_discrepancy(a: &FNCoordinate, b: &FNCoordinate, metric: Metric) -> f64 {
    let length_term = match metric {
        Metric::RawLength => (a.length() - b.length()).abs(),
        _ => (a.length().ln() - b.length().ln()).abs(),
    };
    match (a.twist(), b.twist()) {
        (Some(s), Some(t)) => length_term.max(match metric {
            Metric::RawTwist => (s - t).abs(),
            _ => (a.length() * s - b.length() * t).abs(),
        }),
        _ => length_term,
    }
}

/// Exact when the window is the whole structure, or when both sequences
/// are constant past the window and the constant tail does not exceed the
/// window supremum.
fn exactness(x: &StructureWindow, y: &StructureWindow, metric: Metric, value: f64) -> Exactness {
    match (x.source(), y.source()) {
        (StructureSource::Literal, StructureSource::Literal) => Exactness::Exact,
        (StructureSource::Generator(g), StructureSource::Generator(h)) => {
            if g == h {
                return Exactness::Exact;
            }
            let Some(s) = g.stable_from().zip(h.stable_from()).map(|(a, b)| a.max(b)) else {
                return Exactness::WindowTruncated;
            };
            if s > x.len() + 1 {
                return Exactness::WindowTruncated;
            }
            match (g.coordinate(s), h.coordinate(s)) {
                (Some(a), Some(b)) if curve_discrepancy(&a, &b, metric) <= value => {
                    Exactness::Exact
                }
                _ => Exactness::WindowTruncated,
            }
        }
        _ => Exactness::WindowTruncated,
    }
}

fn check_compatible(x: &StructureWindow, y: &StructureWindow) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::Usage(format!(
            "windows cover {} and {} curves",
            x.len(),
            y.len()
        )));
    }
    for (i, (a, b)) in x.entries().iter().zip(y.entries()).enumerate() {
        if a.is_boundary() != b.is_boundary() {
            return Err(Error::Usage(format!(
                "curve {} is a boundary curve in only one structure",
                i + 1
            )));
        }
    }
    Ok(())
}

/// The Fenchel-Nielsen distance over the common window.
pub fn fn_distance(x: &StructureWindow, y: &StructureWindow) -> Result<FnDistance> {
    fn_distance_variant(x, y, Metric::FenchelNielsen)
}

pub fn fn_distance_variant(
    x: &StructureWindow,
    y: &StructureWindow,
    metric: Metric,
) -> Result<FnDistance> {
    check_compatible(x, y)?;
    let (value, argmax) = match metric {
        // Shares its arithmetic with the embedding so the two agree exactly.
        Metric::FenchelNielsen => linf_distance(&to_linf(x), &to_linf(y))?,
        Metric::RawTwist | Metric::RawLength => {
            let mut best = (0.0, 1);
            for (i, (a, b)) in x.entries().iter().zip(y.entries()).enumerate() {
                let d = curve_discrepancy(a, b, metric);
                if d > best.0 {
                    best = (d, i + 1);
                }
            }
            best
        }
    };
    Ok(FnDistance {
        value,
        exactness: exactness(x, y, metric, value),
        argmax,
    })
}

/// Outcome of testing `l_i <= M` for every curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperBoundCheck {
    pub bounded: bool,
    /// First curve with length above `M`.
    pub witness: Option<usize>,
    /// Supremum of the lengths when known.
    pub sup: Option<f64>,
    /// Upper-bounded structures are complete.
    pub complete: bool,
    /// Whether the answer covers every curve, not just a window.
    pub exactness: Exactness,
}

impl UpperBoundCheck {
    fn from_sup(sup: f64, m: f64, witness: Option<usize>, exactness: Exactness) -> Self {
        let bounded = sup <= m;
        UpperBoundCheck {
            bounded,
            witness: if bounded { None } else { witness },
            sup: Some(sup),
            complete: bounded,
            exactness,
        }
    }
}

/// Exhaustive check over a window.
pub fn window_upper_bounded(x: &StructureWindow, m: f64) -> Result<UpperBoundCheck> {
    require_positive("is_upper_bounded", "M", m)?;
    let sup = x.entries().iter().map(|c| c.length()).fold(0.0, f64::max);
    let witness = x
        .entries()
        .iter()
        .position(|c| c.length() > m)
        .map(|i| i + 1);
    let exactness = match x.source() {
        StructureSource::Literal => Exactness::Exact,
        StructureSource::Generator(g) => match g.stable_from() {
            Some(s) if s <= x.len() => Exactness::Exact,
            _ => Exactness::WindowTruncated,
        },
    };
    Ok(UpperBoundCheck::from_sup(sup, m, witness, exactness))
}

/// Closed-form answer for a whole generated sequence.
pub fn is_upper_bounded(g: &StructureGenerator, m: f64) -> Result<UpperBoundCheck> {
    require_positive("is_upper_bounded", "M", m)?;
    // Only searched when some curve is known to exceed M.
    let first_over = |sup: f64| {
        if sup <= m {
            return None;
        }
        (1..).find(|&i| g.coordinate(i).is_some_and(|c| c.length() > m))
    };
    let check = match g {
        StructureGenerator::Constant { length, .. } => {
            UpperBoundCheck::from_sup(*length, m, Some(1), Exactness::Exact)
        }
        StructureGenerator::ExFn1X { .. }
        | StructureGenerator::ExFn1Y { .. }
        | StructureGenerator::ExFn2X { .. }
        | StructureGenerator::ExFn2Y { .. } => {
            UpperBoundCheck::from_sup(1.0, m, first_over(1.0), Exactness::Exact)
        }
        StructureGenerator::Pants1 => {
            // W_k has length k, so W_{floor(M)+1} is the first curve above M.
            let k = (m.floor() as usize).saturating_add(1);
            UpperBoundCheck {
                bounded: false,
                witness: Some(k.saturating_mul(2)),
                sup: None,
                complete: false,
                exactness: Exactness::Exact,
            }
        }
        StructureGenerator::Pants1Recut => {
            // The recut curve is longest for n = 1.
            let sup = (2.0 * pants1_arc_length(1)?.l).max(1.0);
            UpperBoundCheck::from_sup(sup, m, Some(2), Exactness::Exact)
        }
        StructureGenerator::Table(t) => {
            let sup = t.iter().map(|c| c.length()).fold(0.0, f64::max);
            UpperBoundCheck::from_sup(sup, m, first_over(sup), Exactness::Exact)
        }
    };
    Ok(check)
}

/// Two-sided length comparison under a `K`-quasiconformal map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WolpertCheck {
    pub pass: bool,
    /// `min(K l_x - l_y, K l_y - l_x)`.
    pub slack: f64,
}

/// Checks `l_y <= K l_x` and `l_x <= K l_y`.
pub fn wolpert_check(lx: f64, ly: f64, k: f64) -> Result<WolpertCheck> {
    require_positive("wolpert_check", "l_x", lx)?;
    require_positive("wolpert_check", "l_y", ly)?;
    if !(k.is_finite() && k >= 1.0) {
        return Err(Error::domain(
            "wolpert_check",
            format!("dilatation must be >= 1, got {k}"),
        ));
    }
    let slack = (k * lx - ly).min(k * ly - lx);
    Ok(WolpertCheck {
        pass: slack >= 0.0,
        slack,
    })
}
