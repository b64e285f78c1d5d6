//! Elliptic integrals, Grötzsch modulus, quadrilateral moduli and affine dilatation.

mod affine;
mod elliptic;
mod modulus;

pub use affine::{affine_dilatation, AffineDilatation};
pub use elliptic::{agm, elliptic_k};
pub(crate) use modulus::h_derivative_without_exp_factor;
pub use modulus::{
    extremal_length, grotzsch_mu, grotzsch_mu_derivative, grotzsch_mu_lower_bound, h_derivative,
    h_of_t, normalized_modulus, quad_modulus, BoundaryPoint, IdealQuadrilateral,
};

use crate::error::Result;
use crate::hyperbolic::theta_of_d;

/// `(r, μ(r))` for a ring `D \ [0, r]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrotzschModulusValue {
    pub r: f64,
    pub mu: f64,
}

impl GrotzschModulusValue {
    pub fn at(r: f64) -> Result<Self> {
        Ok(GrotzschModulusValue {
            r,
            mu: grotzsch_mu(r)?,
        })
    }
}

/// Angular width `s` of the sector covering the `b`-neighbourhood of the
/// imaginary axis: `s = 4 arctan((e^b - 1)/(e^b + 1)) = 2 θ(b)`.
pub fn cylinder_interval(b: f64) -> Result<f64> {
    theta_of_d(b).map(|t| 2.0 * t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn cylinder_values() {
        assert_relative_eq!(
            cylinder_interval(3f64.ln()).unwrap(),
            4.0 * 0.5f64.atan(),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            cylinder_interval(3f64.ln()).unwrap(),
            1.854_590_436_003_224_5,
            max_relative = 1e-14
        );
        assert!((cylinder_interval(60.0).unwrap() - std::f64::consts::PI).abs() < 1e-15);
        assert!(cylinder_interval(0.0).is_err());
        for k in 1..100 {
            let b = 0.1 * k as f64;
            assert_eq!(cylinder_interval(b).unwrap(), 2.0 * theta_of_d(b).unwrap());
        }
    }

    #[test]
    fn grotzsch_values_decrease() {
        let vals: Vec<_> = (1..100)
            .map(|i| GrotzschModulusValue::at(i as f64 / 100.0).unwrap())
            .collect();
        for w in vals.windows(2) {
            assert!(w[0].mu > w[1].mu);
        }
        assert!(GrotzschModulusValue::at(1.0).is_err());
    }
}
