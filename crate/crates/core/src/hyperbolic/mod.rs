//! Upper half-plane geometry, right-angled hexagons and collars.

mod collar;
mod hexagon;

pub use collar::{
    collar_halfwidth, collar_margin, verify_pants_collar, CollarData, PantsBoundaryLengths,
};
pub use hexagon::{hexagon_altitude, hexagon_sides, HexagonAlternatingSides};
pub(crate) use hexagon::{pants_altitude_cosh, pants_seam_lengths};

use crate::error::{require_positive, Error, Result};

/// A point `x + iy` of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPlanePoint {
    x: f64,
    y: f64,
}

impl UpperHalfPlanePoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::domain("point", format!("x must be finite, got {x}")));
        }
        require_positive("point", "y", y)?;
        Ok(UpperHalfPlanePoint { x, y })
    }

    /// `r e^{i arg}` with `0 < arg < π`.
    pub fn from_polar(r: f64, arg: f64) -> Result<Self> {
        require_positive("point", "modulus", r)?;
        if !(arg > 0.0 && arg < std::f64::consts::PI) {
            return Err(Error::domain(
                "point",
                format!("argument must lie in (0, pi), got {arg}"),
            ));
        }
        Self::new(r * arg.cos(), r * arg.sin())
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn modulus(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Argument in `(0, π)`.
    pub fn arg(&self) -> f64 {
        self.y.atan2(self.x)
    }
}

/// `arcosh(x) = log(x + sqrt((x-1)(x+1)))` for `x >= 1`.
pub fn arcosh(x: f64) -> f64 {
    (x + ((x - 1.0) * (x + 1.0)).sqrt()).ln()
}

/// `arcosh(1 + u)` without forming `1 + u`.
pub(crate) fn arcosh_1p(u: f64) -> f64 {
    if u == f64::INFINITY {
        return f64::INFINITY;
    }
    (u + (u * (u + 2.0)).sqrt()).ln_1p()
}

/// Hyperbolic distance from `cosh d = 1 + |z - w|^2 / (2 Im z Im w)`.
pub fn hyp_distance(z: UpperHalfPlanePoint, w: UpperHalfPlanePoint) -> f64 {
    let dx = z.x - w.x;
    let dy = z.y - w.y;
    let u = (dx * dx + dy * dy) / (2.0 * z.y * w.y);
    arcosh_1p(u)
}

/// Hyperbolic distance from the cross-ratio with the endpoints of the
/// geodesic through `z` and `w`:
///
/// ```text
/// d(z, w) = log ((z - w*)(w - z*)) / ((w - w*)(z - z*))
/// ```
///
/// where `z*, z, w, w*` are in that order along the geodesic.
pub fn hyp_distance_cross_ratio(z: UpperHalfPlanePoint, w: UpperHalfPlanePoint) -> f64 {
    if z == w {
        return 0.0;
    }
    if z.x == w.x {
        // Vertical geodesic: the endpoint at infinity cancels.
        return (w.y / z.y).ln().abs();
    }
    // Work in coordinates centred at Re z. The geodesic is the half-circle
    // with centre `x_z + u` and radius `sqrt(u^2 + y_z^2)`.
    let dx = w.x - z.x;
    let u = 0.5 * dx + (w.y - z.y) * (w.y + z.y) / (2.0 * dx);
    let radius = u.hypot(z.y);
    // Offsets of the two endpoints from Re z, the small one via the product
    // of roots (-y_z^2) to avoid cancellation.
    let (right, left) = if u >= 0.0 {
        let r = u + radius;
        (r, -z.y * z.y / r)
    } else {
        let l = u - radius;
        (-z.y * z.y / l, l)
    };
    let (z_end, w_end) = if dx > 0.0 {
        (left, right)
    } else {
        (right, left)
    };
    let dist_to = |px: f64, py: f64, e: f64| (px - e).hypot(py);
    let num = dist_to(0.0, z.y, w_end) * dist_to(dx, w.y, z_end);
    let den = dist_to(dx, w.y, w_end) * dist_to(0.0, z.y, z_end);
    (num / den).ln()
}

/// Half-angle of the sector `{ |arg z - π/2| <= θ }` whose points lie within
/// distance `d` of the imaginary axis: `θ(d) = 2 arctan((e^d - 1)/(e^d + 1))`.
pub fn theta_of_d(d: f64) -> Result<f64> {
    require_positive("theta_of_d", "d", d)?;
    // (e^d - 1)/(e^d + 1) = tanh(d/2)
    Ok(2.0 * (0.5 * d).tanh().atan())
}
