//! Twists along a family of disjoint curves at once.
//!
//! For each curve the lower estimate compares the modulus of the
//! quadrilateral spanned by the seam lift `β_i` before and after the
//! twist:
//!
//! ```text
//! g(t) = mod H(∞, -1, 0, D |x1/x2| e^t) / mod H(∞, -1, 0, |x1|/x2)
//! ```
//!
//! where `x1 < 0 < x2` are the endpoints of `β_i` on the real line. The
//! seam through `i` at angle `φ` with the axis has `x1,2 = c ∓ sqrt(1 + c^2)`,
//! `c = cot φ`.

use crate::bounds::BoundReport;
use crate::conformal::normalized_modulus;
use crate::error::{require_positive, Error, Result};

use super::{seam_angle_bound, twist_dilatation, TwistScenario};

#[derive(Debug, Clone, PartialEq)]
pub struct MultiTwistFamily {
    lengths: Vec<f64>,
    times: Vec<f64>,
    length_cap: f64,
    qc_cap: f64,
}

impl MultiTwistFamily {
    /// `lengths[i]` and `times[i]` belong to curve `i + 1`; `length_cap` is
    /// `L0` and `qc_cap` is `T0`.
    pub fn new(lengths: Vec<f64>, times: Vec<f64>, length_cap: f64, qc_cap: f64) -> Result<Self> {
        if lengths.len() != times.len() {
            return Err(Error::Usage(format!(
                "{} lengths but {} twist times",
                lengths.len(),
                times.len()
            )));
        }
        for &l in &lengths {
            require_positive("multitwist", "length", l)?;
        }
        for &t in &times {
            if !t.is_finite() {
                return Err(Error::domain(
                    "multitwist",
                    format!("twist time must be finite, got {t}"),
                ));
            }
        }
        require_positive("multitwist", "L0", length_cap)?;
        require_positive("multitwist", "T0", qc_cap)?;
        Ok(MultiTwistFamily {
            lengths,
            times,
            length_cap,
            qc_cap,
        })
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }
}

/// Geometry of the seam lifts used for the lower estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiTwistGeometry {
    /// `cot φ` of the seam lift through `i`.
    pub seam_cot: f64,
    /// The constant `D` in `f(x1) < D e^t x1`.
    pub endpoint_constant: f64,
}

impl MultiTwistGeometry {
    /// Seams at the smallest angle allowed by the length cap, and `D = 1`.
    pub fn for_length_cap(length_cap: f64) -> Result<Self> {
        let phi = seam_angle_bound(length_cap)?;
        Ok(MultiTwistGeometry {
            seam_cot: 1.0 / phi.tan(),
            endpoint_constant: 1.0,
        })
    }

    /// `|x1| / x2 = 1 / (c + sqrt(1 + c^2))^2`.
    pub fn endpoint_ratio(&self) -> f64 {
        let c = self.seam_cot;
        (c + (1.0 + c * c).sqrt()).powi(-2)
    }

    /// `g(t)`.
    pub fn modulus_ratio(&self, t: f64) -> f64 {
        let rho = self.endpoint_ratio();
        normalized_modulus(self.endpoint_constant * rho * t.exp()) / normalized_modulus(rho)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveTwistEstimate {
    /// 1-based curve index.
    pub index: usize,
    pub length: f64,
    pub time: f64,
    /// `g(|t|)`; any map in the homotopy class has at least this dilatation.
    pub lower_k: f64,
    /// Dilatation of the explicit twist map along this curve.
    pub upper_k: f64,
}

/// Whether `d_qc(S, S_t) < T0` given `½ log max g <= d_qc <= ½ log max K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapStatus {
    Within,
    Exceeded,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiTwistReport {
    pub curves: Vec<CurveTwistEstimate>,
    /// `max |t_i| / log g(|t_i|)` over curves with `t_i != 0`.
    pub c_empirical: Option<f64>,
    pub cap_status: CapStatus,
    pub geometry: MultiTwistGeometry,
    /// Interval for `d_FN(S, S_t) = sup |t_i|` in units of `d_qc`.
    pub bound: BoundReport,
}

/// Evaluates the per-curve estimates over curves `1..=window` using the
/// default geometry from the length cap.
pub fn multitwist_fn_bound(f: &MultiTwistFamily, window: usize) -> Result<MultiTwistReport> {
    let geometry = MultiTwistGeometry::for_length_cap(f.length_cap)?;
    multitwist_fn_bound_with(f, window, geometry)
}

pub fn multitwist_fn_bound_with(
    f: &MultiTwistFamily,
    window: usize,
    geometry: MultiTwistGeometry,
) -> Result<MultiTwistReport> {
    if window == 0 || window > f.len() {
        return Err(Error::Usage(format!(
            "window {window} outside the {} available curves",
            f.len()
        )));
    }
    let mut curves = Vec::with_capacity(window);
    for i in 0..window {
        let (l, t) = (f.lengths[i], f.times[i]);
        if l > f.length_cap {
            return Err(Error::assumption(
                "multitwist_fn_bound",
                format!("curve {} has length {l} > L0 = {}", i + 1, f.length_cap),
            ));
        }
        let upper_k = twist_dilatation(&TwistScenario::new(l, t)?).k;
        curves.push(CurveTwistEstimate {
            index: i + 1,
            length: l,
            time: t,
            lower_k: geometry.modulus_ratio(t.abs()),
            upper_k,
        });
    }

    let c_empirical = curves
        .iter()
        .filter(|c| c.time != 0.0)
        .map(|c| c.time.abs() / c.lower_k.ln())
        .reduce(f64::max);
    let max_lower = curves.iter().map(|c| c.lower_k).fold(1.0, f64::max);
    let max_upper = curves.iter().map(|c| c.upper_k).fold(1.0, f64::max);
    let (qc_lo, qc_hi) = (0.5 * max_lower.ln(), 0.5 * max_upper.ln());
    let cap_status = if qc_hi < f.qc_cap {
        CapStatus::Within
    } else if qc_lo >= f.qc_cap {
        CapStatus::Exceeded
    } else {
        CapStatus::Undetermined
    };

    let sup_t = curves.iter().map(|c| c.time.abs()).fold(0.0, f64::max);
    let mut bound = BoundReport::new(
        "d_FN(S, S_t)",
        "multi-twist along disjoint curves of length <= L0 with d_qc < T0",
    );
    bound.lower = Some(sup_t);
    bound.upper = c_empirical.map(|c| 2.0 * c * qc_hi).or(Some(0.0));
    bound.assumptions = vec![
        ("L0".into(), f.length_cap),
        ("T0".into(), f.qc_cap),
        ("cot phi".into(), geometry.seam_cot),
        ("D".into(), geometry.endpoint_constant),
    ];
    bound.notes.push(format!(
        "d_qc lies in [{qc_lo:.14e}, {qc_hi:.14e}] (modulus estimate, explicit twist map)"
    ));
    if let Some(c) = c_empirical {
        bound.notes.push(format!(
            "C_empirical = max |t_i| / log g(t_i) = {c:.14e}; empirical ratio, not a proven constant"
        ));
    }
    bound.notes.push(format!(
        "D = {} is assumed; the estimate f(x1) < D e^t x1 leaves D unspecified",
        geometry.endpoint_constant
    ));
    Ok(MultiTwistReport {
        curves,
        c_empirical,
        cap_status,
        geometry,
        bound,
    })
}
