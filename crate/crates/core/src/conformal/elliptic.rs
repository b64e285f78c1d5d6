//! Complete elliptic integral of the first kind via the arithmetic-geometric mean.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

const AGM_MAX_ITER: usize = 64;

/// Arithmetic-geometric mean of two non-negative numbers.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    0.5 * (a + b)
}

/// `sqrt(1 - r^2)` without cancellation near `r = 1`.
pub(crate) fn complementary(r: f64) -> f64 {
    ((1.0 - r) * (1.0 + r)).sqrt()
}

/// ```text
/// K(r) = ∫_0^1 dx / sqrt((1 - x^2)(1 - r^2 x^2)) = π / (2 AGM(1, sqrt(1 - r^2)))
/// ```
///
/// `r` is the modulus (not the parameter `m = r^2`).
pub fn elliptic_k(r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::domain(
            "elliptic_k",
            format!("modulus must satisfy 0 <= r < 1, got {r}"),
        ));
    }
    if r == 0.0 {
        return Ok(FRAC_PI_2);
    }
    Ok(FRAC_PI_2 / agm(1.0, complementary(r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_1_SQRT_2;

    /// Gauss-Legendre on `∫_0^{π/2} dφ / sqrt(1 - r² sin² φ)`, split into panels.
    fn k_by_quadrature(r: f64) -> f64 {
        // 8-point nodes and weights on [-1, 1].
        const X: [f64; 4] = [
            0.183_434_642_495_649_8,
            0.525_532_409_916_329,
            0.796_666_477_413_626_7,
            0.960_289_856_497_536_3,
        ];
        const W: [f64; 4] = [
            0.362_683_783_378_362,
            0.313_706_645_877_887_3,
            0.222_381_034_453_374_5,
            0.101_228_536_290_376_3,
        ];
        let f = |phi: f64| 1.0 / (1.0 - r * r * phi.sin().powi(2)).sqrt();
        let panels = 64;
        let h = FRAC_PI_2 / panels as f64;
        let mut sum = 0.0;
        for p in 0..panels {
            let mid = (p as f64 + 0.5) * h;
            for (x, w) in X.iter().zip(W) {
                sum += w * (f(mid + 0.5 * h * x) + f(mid - 0.5 * h * x));
            }
        }
        0.5 * h * sum
    }

    #[test]
    fn k_at_zero() {
        assert_eq!(elliptic_k(0.0).unwrap(), FRAC_PI_2);
    }

    #[test]
    fn k_at_lemniscatic_modulus() {
        let k = elliptic_k(FRAC_1_SQRT_2).unwrap();
        assert_relative_eq!(k, 1.854_074_677_301_371_9, max_relative = 1e-15);
        assert_relative_eq!(k, k_by_quadrature(FRAC_1_SQRT_2), max_relative = 1e-10);
    }

    #[test]
    fn agm_matches_quadrature() {
        for r in [0.05, 0.2, 0.3, 0.5, 0.7, 0.85, 0.9] {
            assert_relative_eq!(
                elliptic_k(r).unwrap(),
                k_by_quadrature(r),
                max_relative = 1e-10
            );
        }
    }

    #[test]
    fn k_increasing() {
        assert!(elliptic_k(0.3).unwrap() < elliptic_k(0.7).unwrap());
        let mut prev = 0.0;
        for i in 0..1000 {
            let k = elliptic_k(i as f64 / 1000.0).unwrap();
            assert!(k > prev);
            prev = k;
        }
    }

    #[test]
    fn k_domain() {
        assert!(elliptic_k(1.0).is_err());
        assert!(elliptic_k(-0.1).is_err());
        assert!(elliptic_k(f64::NAN).is_err());
    }
}
