//! Fenchel-Nielsen twist deformations along a single geodesic and along a
//! family of disjoint geodesics.

mod delta;
mod multi;
mod seam;

pub use delta::{twist_delta, TwistDelta};
pub use multi::{
    multitwist_fn_bound, CapStatus, CurveTwistEstimate, MultiTwistFamily, MultiTwistGeometry,
    MultiTwistReport,
};
pub use seam::{
    seam_angle_bound, seam_angle_kit, seam_cot_bound, DistQuantityMeaning, SeamAngleInstance,
    SeamAngleKit,
};

use std::f64::consts::FRAC_PI_2;

use crate::conformal::{affine_dilatation, h_of_t};
use crate::error::{require_positive, Error, Result};
use crate::hyperbolic::{CollarData, UpperHalfPlanePoint};
use crate::report::{CheckEntry, VerificationReport};

/// Tolerance for `K(q) >= h(t)`.
pub const TWIST_LOWER_TOLERANCE: f64 = 1e-10;

/// A twist of signed length `t` along a closed geodesic of length `l`,
/// lifted so that the geodesic is the imaginary axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistScenario {
    curve_length: f64,
    twist_time: f64,
    collar: CollarData,
}

impl TwistScenario {
    pub fn new(curve_length: f64, twist_time: f64) -> Result<Self> {
        require_positive("twist", "curve length", curve_length)?;
        if !twist_time.is_finite() {
            return Err(Error::domain(
                "twist",
                format!("twist time must be finite, got {twist_time}"),
            ));
        }
        Ok(TwistScenario {
            curve_length,
            twist_time,
            collar: CollarData::for_length(curve_length)?,
        })
    }

    pub fn curve_length(&self) -> f64 {
        self.curve_length
    }

    pub fn twist_time(&self) -> f64 {
        self.twist_time
    }

    pub fn collar(&self) -> CollarData {
        self.collar
    }

    /// Translation length `e^l` of the deck transformation `z -> e^l z`.
    pub fn deck_factor(&self) -> f64 {
        self.curve_length.exp()
    }
}

/// The twist map: identity left of the collar sector, `z e^t` right of it,
/// and an angular interpolation `z exp(t (arg z - π/2 + θ)/(2θ))` on the
/// closed sector `|arg z - π/2| <= θ`.
pub fn twist_map_eval(s: &TwistScenario, z: UpperHalfPlanePoint) -> UpperHalfPlanePoint {
    let theta = s.collar.angle;
    let arg = z.arg();
    let factor = if arg < FRAC_PI_2 - theta {
        return z;
    } else if arg <= FRAC_PI_2 + theta {
        (s.twist_time * (arg - FRAC_PI_2 + theta) / (2.0 * theta)).exp()
    } else {
        s.twist_time.exp()
    };
    UpperHalfPlanePoint::new(z.x() * factor, z.y() * factor)
        .expect("positive scaling preserves the upper half-plane")
}

/// Dilatation data of the twist map on its support.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistDilatation {
    /// Shear `c = |t| / (2θ)` in logarithmic coordinates.
    pub shear: f64,
    pub k: f64,
    pub beltrami_modulus: f64,
}

/// In `log z` coordinates the middle branch is the shear
/// `(u, v) -> (u + t v/(2θ), v)`, so `|μ| = c/sqrt(4 + c^2)` with
/// `c = |t|/(2θ)`.
pub fn twist_dilatation(s: &TwistScenario) -> TwistDilatation {
    let shear = s.twist_time.abs() / (2.0 * s.collar.angle);
    let d = affine_dilatation(shear).expect("shear is finite");
    TwistDilatation {
        shear,
        k: d.k,
        beltrami_modulus: d.beltrami_modulus,
    }
}

/// Compares the constructed map's dilatation with `h(t)`, which bounds the
/// dilatation of every map homotopic to it from below.
pub fn twist_lower_bound_check(s: &TwistScenario) -> Result<VerificationReport> {
    let t = s.twist_time;
    if t < 0.0 {
        return Err(Error::domain(
            "twist_lower_bound_check",
            format!("twist time must be >= 0, got {t}"),
        ));
    }
    let mut report =
        VerificationReport::new(format!("twist lower bound l={} t={}", s.curve_length, t));
    report.push(CheckEntry::at_least(
        "K(q) >= h(t)",
        twist_dilatation(s).k,
        h_of_t(t)?,
        TWIST_LOWER_TOLERANCE,
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn scenario(l: f64, t: f64) -> TwistScenario {
        TwistScenario::new(l, t).unwrap()
    }

    #[test]
    fn identity_sector_is_fixed() {
        let s = scenario(2.0, 3.7);
        assert!(s.collar().angle < PI / 4.0);
        let z = UpperHalfPlanePoint::from_polar(2.0, PI / 4.0).unwrap();
        assert_eq!(twist_map_eval(&s, z), z);
    }

    #[test]
    fn outer_sector_boundary_scales_by_e_t() {
        let s = scenario(2.0, 0.8);
        let z = UpperHalfPlanePoint::from_polar(1.5, FRAC_PI_2 + s.collar().angle).unwrap();
        let w = twist_map_eval(&s, z);
        assert_relative_eq!(w.modulus(), 1.5 * 0.8f64.exp(), max_relative = 1e-13);
        assert_relative_eq!(w.arg(), z.arg(), max_relative = 1e-14);
    }

    #[test]
    fn continuous_across_both_boundaries() {
        let s = scenario(1.3, -2.2);
        let theta = s.collar().angle;
        for edge in [FRAC_PI_2 - theta, FRAC_PI_2 + theta] {
            let inside = UpperHalfPlanePoint::from_polar(3.0, edge).unwrap();
            let below = UpperHalfPlanePoint::from_polar(3.0, edge - 1e-13).unwrap();
            let above = UpperHalfPlanePoint::from_polar(3.0, edge + 1e-13).unwrap();
            let a = twist_map_eval(&s, below);
            let b = twist_map_eval(&s, inside);
            let c = twist_map_eval(&s, above);
            assert!((a.x() - b.x()).abs() < 1e-12 && (a.y() - b.y()).abs() < 1e-12);
            assert!((c.x() - b.x()).abs() < 1e-12 && (c.y() - b.y()).abs() < 1e-12);
        }
    }

    #[test]
    fn commutes_with_deck_transformation() {
        let s = scenario(0.9, 1.4);
        let lam = s.deck_factor();
        for arg in [0.3, FRAC_PI_2 - 0.1, FRAC_PI_2, FRAC_PI_2 + 0.2, 2.9] {
            let z = UpperHalfPlanePoint::from_polar(0.7, arg).unwrap();
            let lz = UpperHalfPlanePoint::new(lam * z.x(), lam * z.y()).unwrap();
            let a = twist_map_eval(&s, lz);
            let b = twist_map_eval(&s, z);
            assert_relative_eq!(a.x(), lam * b.x(), max_relative = 1e-13, epsilon = 1e-15);
            assert_relative_eq!(a.y(), lam * b.y(), max_relative = 1e-13);
        }
    }

    #[test]
    fn zero_twist_is_conformal() {
        let d = twist_dilatation(&scenario(2.0, 0.0));
        assert_eq!(d.k, 1.0);
    }

    #[test]
    fn shear_three_halves_gives_four() {
        let angle = CollarData::for_length(2.0).unwrap().angle;
        let t = 2.0 * angle * 1.5;
        assert_relative_eq!(t, 2.115_080_530_665_714, max_relative = 1e-14);
        let d = twist_dilatation(&scenario(2.0, t));
        assert_relative_eq!(d.shear, 1.5, max_relative = 1e-15);
        assert_relative_eq!(d.k, 4.0, max_relative = 1e-14);
        assert_relative_eq!(d.beltrami_modulus, 0.6, max_relative = 1e-14);
    }

    #[test]
    fn dilatation_even_in_t() {
        assert_eq!(
            twist_dilatation(&scenario(0.4, 3.0)).k,
            twist_dilatation(&scenario(0.4, -3.0)).k
        );
    }

    #[test]
    fn dilatation_matches_affine_shear() {
        let s = scenario(3.3, 5.0);
        let c = 5.0 / (2.0 * s.collar().angle);
        assert_eq!(twist_dilatation(&s).k, affine_dilatation(c).unwrap().k);
    }

    #[test]
    fn lower_bound_spot_checks() {
        for (l, t) in [(1.0, 1.0), (5.0, 8.0)] {
            let r = twist_lower_bound_check(&scenario(l, t)).unwrap();
            assert!(r.passed(), "{r}");
        }
        let tiny = twist_lower_bound_check(&scenario(1.0, 1e-9)).unwrap();
        assert!(tiny.passed());
        assert!(tiny.min_slack().unwrap() < 1e-8);
        assert!(twist_lower_bound_check(&scenario(1.0, -1.0)).is_err());
    }

    #[test]
    fn rejects_bad_scenarios() {
        assert!(TwistScenario::new(0.0, 1.0).is_err());
        assert!(TwistScenario::new(1.0, f64::NAN).is_err());
    }
}
