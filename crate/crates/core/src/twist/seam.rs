//! Geometry of a seam crossing a collar, and the lower bound on the angle
//! between a seam and the core geodesic.
//!
//! The seam lift through `i` is the circle `x^2 + y^2 - 2cx - 1 = 0` with
//! `c = cot φ`; it leaves the collar sector `|arg z - π/2| <= θ` at the
//! point `A = λ (sin θ, cos θ)`.

use std::f64::consts::FRAC_PI_2;

use crate::error::{require_positive, Error, Result};
use crate::hyperbolic::{collar_margin, hyp_distance, UpperHalfPlanePoint};

/// Relative tolerance used to decide which reading of the distance
/// quantity matches the direct distance.
const MEANING_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeamAngleInstance {
    c: f64,
    theta: f64,
    lambda: f64,
    point_a: UpperHalfPlanePoint,
}

impl SeamAngleInstance {
    pub fn new(c: f64, theta: f64) -> Result<Self> {
        if !(c.is_finite() && c >= 0.0) {
            return Err(Error::domain(
                "seam_angle",
                format!("c must be finite and >= 0, got {c}"),
            ));
        }
        if !(theta > 0.0 && theta < FRAC_PI_2) {
            return Err(Error::domain(
                "seam_angle",
                format!("theta must lie in (0, pi/2), got {theta}"),
            ));
        }
        let s = theta.sin();
        let lambda = c * s + (c * c * s * s + 1.0).sqrt();
        let point_a = UpperHalfPlanePoint::new(lambda * s, lambda * theta.cos())?;
        Ok(SeamAngleInstance {
            c,
            theta,
            lambda,
            point_a,
        })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn point_a(&self) -> UpperHalfPlanePoint {
        self.point_a
    }

    /// `x^2 + y^2 - 2cx - 1` at `A`.
    pub fn circle_residual(&self) -> f64 {
        let (x, y) = (self.point_a.x(), self.point_a.y());
        x * x + y * y - 2.0 * self.c * x - 1.0
    }

    /// The product of squared moduli
    ///
    /// ```text
    /// ((c + r)^2 + 1) / ((r - c)^2 + 1)
    ///   * ((λ sin θ - c + r)^2 + λ^2 cos^2 θ) / ((c + r - λ sin θ)^2 + λ^2 cos^2 θ)
    /// ```
    ///
    /// with `r = sqrt(1 + c^2)`, i.e. `|(i - A*)(A - i*) / ((A - A*)(i - i*))|^2`
    /// for the endpoints `i* = c - r`, `A* = c + r` of the circle.
    pub fn dist_quantity(&self) -> f64 {
        let c = self.c;
        let r = (1.0 + c * c).sqrt();
        let (ax, ay) = (self.point_a.x(), self.point_a.y());
        let first = ((c + r).powi(2) + 1.0) / ((r - c).powi(2) + 1.0);
        let second = ((ax - c + r).powi(2) + ay * ay) / ((c + r - ax).powi(2) + ay * ay);
        first * second
    }

    /// `(2/3) c^2 sin^6 θ / (1 - sin^2 θ)`.
    pub fn rhs_bound(&self) -> f64 {
        let s2 = self.theta.sin().powi(2);
        2.0 / 3.0 * self.c * self.c * s2 * s2 * s2 / self.theta.cos().powi(2)
    }
}

/// Which function of `d(i, A)` the distance quantity equals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistQuantityMeaning {
    /// `d(i, A)^2`.
    DistanceSquared,
    /// `e^{2 d(i, A)}`, the squared modulus of the cross-ratio.
    ExpTwiceDistance,
    Neither,
}

/// Everything computed for one seam instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeamAngleKit {
    pub instance: SeamAngleInstance,
    pub dist_quantity: f64,
    pub rhs_bound: f64,
    pub direct_distance: f64,
    pub circle_residual: f64,
    pub meaning: DistQuantityMeaning,
    /// `dist_quantity >= rhs_bound`.
    pub quantity_exceeds_rhs: bool,
    /// `d(i, A)^2 >= rhs_bound`.
    pub distance_squared_exceeds_rhs: bool,
}

pub fn seam_angle_kit(inst: &SeamAngleInstance) -> SeamAngleKit {
    let i = UpperHalfPlanePoint::new(0.0, 1.0).expect("i is in the upper half-plane");
    let direct_distance = hyp_distance(i, inst.point_a);
    let q = inst.dist_quantity();
    let close = |a: f64, b: f64| (a - b).abs() <= MEANING_TOL * a.abs().max(b.abs()).max(1e-300);
    let meaning = if close(q, (2.0 * direct_distance).exp()) {
        DistQuantityMeaning::ExpTwiceDistance
    } else if close(q, direct_distance * direct_distance) {
        DistQuantityMeaning::DistanceSquared
    } else {
        DistQuantityMeaning::Neither
    };
    let rhs = inst.rhs_bound();
    SeamAngleKit {
        instance: *inst,
        dist_quantity: q,
        rhs_bound: rhs,
        direct_distance,
        circle_residual: inst.circle_residual(),
        meaning,
        quantity_exceeds_rhs: q >= rhs,
        distance_squared_exceeds_rhs: direct_distance * direct_distance >= rhs,
    }
}

/// `cot φ <= (M + 4d) e^{-d} (e^{2d} - 1)/(e^{2d} + 1)` with `d = B(M)`.
pub fn seam_cot_bound(m: f64) -> Result<f64> {
    require_positive("seam_angle_bound", "M", m)?;
    let d = collar_margin(m)?;
    Ok((m + 4.0 * d) * (-d).exp() * d.tanh())
}

/// Lower bound `arccot(seam_cot_bound(M))` for the seam angle `φ`.
pub fn seam_angle_bound(m: f64) -> Result<f64> {
    Ok(1f64.atan2(seam_cot_bound(m)?))
}
