//! Grötzsch ring modulus, the twist modulus function `h`, and moduli of
//! quadrilaterals with vertices on the boundary of the upper half-plane.

use std::f64::consts::{FRAC_PI_2, PI};

use super::elliptic::{agm, complementary, elliptic_k};
use crate::error::{require_non_negative, Error, Result};

fn require_unit_open(op: &'static str, r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(
            op,
            format!("r must satisfy 0 < r < 1, got {r}"),
        ))
    }
}

/// `μ(r) = (π/2) K(r')/K(r)` given both `r` and `r' = sqrt(1 - r^2)`.
fn mu_from_pair(r: f64, r_comp: f64) -> f64 {
    // K(r) = π / (2 AGM(1, r')), K(r') = π / (2 AGM(1, r)).
    FRAC_PI_2 * agm(1.0, r_comp) / agm(1.0, r)
}

/// Modulus of the Grötzsch ring `D \ [0, r]`.
pub fn grotzsch_mu(r: f64) -> Result<f64> {
    require_unit_open("grotzsch_mu", r)?;
    Ok(mu_from_pair(r, complementary(r)))
}

/// `μ'(r) = -π^2 / (4 r (1 - r^2) K(r)^2)`.
pub fn grotzsch_mu_derivative(r: f64) -> Result<f64> {
    require_unit_open("grotzsch_mu_derivative", r)?;
    let k = elliptic_k(r)?;
    Ok(-PI * PI / (4.0 * r * (1.0 - r) * (1.0 + r) * k * k))
}

/// Lower bound `(2/π) log((1 + sqrt(1 - r^2))^2 / r)` for `μ(r)`.
pub fn grotzsch_mu_lower_bound(r: f64) -> Result<f64> {
    require_unit_open("grotzsch_mu_lower_bound", r)?;
    let s = 1.0 + complementary(r);
    Ok(2.0 / PI * (s * s / r).ln())
}

/// The pair `(r, r')` with `r = sqrt(1/(1+e^t))`, `r' = sqrt(e^t/(1+e^t))`,
/// evaluated without overflow for large `t`.
fn twist_moduli(t: f64) -> (f64, f64) {
    let e = (-t).exp();
    let r_comp = 1.0 / (1.0 + e).sqrt();
    let r = (0.5 * -t).exp() * r_comp;
    (r, r_comp)
}

/// `h(t) = mod H(∞, -1, 0, e^t) = (2/π) μ(sqrt(1/(1 + e^t)))`.
pub fn h_of_t(t: f64) -> Result<f64> {
    require_non_negative("h_of_t", "t", t)?;
    Ok(normalized_modulus(t.exp()))
}

/// `h'(t) = -(1/π) μ'(r) e^t / (1 + e^t)^{3/2}` with `r = (1 + e^t)^{-1/2}`.
pub fn h_derivative(t: f64) -> Result<f64> {
    require_non_negative("h_derivative", "t", t)?;
    let (r, r_comp) = twist_moduli(t);
    // e^t / (1 + e^t)^{3/2} = r r'^2
    let chain = r * r_comp * r_comp;
    Ok(-grotzsch_mu_derivative(r)? * chain / PI)
}

/// The same expression without the `e^t` factor from `dr/dt`.
pub(crate) fn h_derivative_without_exp_factor(t: f64) -> Result<f64> {
    require_non_negative("h_derivative", "t", t)?;
    let (r, _) = twist_moduli(t);
    Ok(-grotzsch_mu_derivative(r)? * r * r * r / PI)
}

/// A boundary point of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPoint {
    Real(f64),
    Infinity,
}

impl BoundaryPoint {
    fn ordinal(self) -> f64 {
        match self {
            BoundaryPoint::Real(x) => x,
            BoundaryPoint::Infinity => f64::INFINITY,
        }
    }
}

impl std::str::FromStr for BoundaryPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinity" | "∞" => Ok(BoundaryPoint::Infinity),
            _ => s
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .map(BoundaryPoint::Real)
                .ok_or_else(|| Error::Usage(format!("not a boundary point: {s:?}"))),
        }
    }
}

/// Upper half-plane with four marked boundary points in positive cyclic
/// order. The a-sides are the arcs `p1 p2` and `p3 p4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdealQuadrilateral {
    p: [BoundaryPoint; 4],
}

impl IdealQuadrilateral {
    pub fn new(
        p1: BoundaryPoint,
        p2: BoundaryPoint,
        p3: BoundaryPoint,
        p4: BoundaryPoint,
    ) -> Result<Self> {
        let p = [p1, p2, p3, p4];
        for (i, a) in p.iter().enumerate() {
            if let BoundaryPoint::Real(x) = a {
                if !x.is_finite() {
                    return Err(Error::domain(
                        "quadrilateral",
                        "vertices must be finite or infinity",
                    ));
                }
            }
            for b in &p[i + 1..] {
                if a == b {
                    return Err(Error::domain("quadrilateral", "vertices must be distinct"));
                }
            }
        }
        // Positive cyclic order along R ∪ {∞} means exactly one descent.
        let v = p.map(BoundaryPoint::ordinal);
        let descents = (0..4).filter(|&i| v[i] > v[(i + 1) % 4]).count();
        if descents != 1 {
            return Err(Error::domain(
                "quadrilateral",
                "vertices are not in positive cyclic order",
            ));
        }
        Ok(IdealQuadrilateral { p })
    }

    /// Convenience constructor for four finite vertices.
    pub fn real(p1: f64, p2: f64, p3: f64, p4: f64) -> Result<Self> {
        use BoundaryPoint::Real;
        Self::new(Real(p1), Real(p2), Real(p3), Real(p4))
    }

    pub fn vertices(&self) -> [BoundaryPoint; 4] {
        self.p
    }

    /// The same quadrilateral with vertices relabelled `(p2, p3, p4, p1)`.
    pub fn rotated(&self) -> Self {
        IdealQuadrilateral {
            p: [self.p[1], self.p[2], self.p[3], self.p[0]],
        }
    }

    /// The value `x > 0` such that a real Möbius map sends the vertices to
    /// `(∞, -1, 0, x)`:
    ///
    /// ```text
    /// x = (p2 - p1)(p4 - p3) / ((p3 - p2)(p4 - p1))
    /// ```
    pub fn normalized_parameter(&self) -> f64 {
        use BoundaryPoint::{Infinity, Real};
        match self.p {
            [Infinity, Real(b), Real(c), Real(d)] => (d - c) / (c - b),
            [Real(a), Infinity, Real(c), Real(d)] => (d - c) / (d - a),
            [Real(a), Real(b), Infinity, Real(d)] => (b - a) / (d - a),
            [Real(a), Real(b), Real(c), Infinity] => (b - a) / (c - b),
            [Real(a), Real(b), Real(c), Real(d)] => (b - a) * (d - c) / ((c - b) * (d - a)),
            _ => unreachable!("vertices are distinct, so at most one is infinite"),
        }
    }
}

/// `mod H(∞, -1, 0, x) = (2/π) μ(sqrt(1/(1+x)))` for `x > 0`.
pub fn normalized_modulus(x: f64) -> f64 {
    // r = sqrt(1/(1+x)), r' = sqrt(x/(1+x)); (2/π) μ = AGM(1, r')/AGM(1, r).
    let (r, r_comp) = if x >= 1.0 {
        let inv = 1.0 / x;
        ((inv / (1.0 + inv)).sqrt(), (1.0 / (1.0 + inv)).sqrt())
    } else {
        ((1.0 / (1.0 + x)).sqrt(), (x / (1.0 + x)).sqrt())
    };
    agm(1.0, r_comp) / agm(1.0, r)
}

/// Conformal modulus `a/b` of the rectangle the quadrilateral maps onto,
/// with the a-sides of length `a`.
pub fn quad_modulus(q: &IdealQuadrilateral) -> f64 {
    normalized_modulus(q.normalized_parameter())
}

/// Extremal length of the curve family joining the a-sides: `1 / mod`.
pub fn extremal_length(q: &IdealQuadrilateral) -> f64 {
    1.0 / quad_modulus(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_1_SQRT_2;
    use BoundaryPoint::{Infinity, Real};

    #[test]
    fn mu_at_self_complementary_modulus() {
        assert_relative_eq!(
            grotzsch_mu(FRAC_1_SQRT_2).unwrap(),
            FRAC_PI_2,
            max_relative = 1e-15
        );
    }

    #[test]
    fn mu_exceeds_lower_bound_at_half() {
        let lb = grotzsch_mu_lower_bound(0.5).unwrap();
        assert_relative_eq!(lb, 1.235_531_672_810_627_7, max_relative = 1e-14);
        assert_relative_eq!(
            grotzsch_mu(0.5).unwrap(),
            2.009_459_377_005_285,
            max_relative = 1e-14
        );
        assert!(grotzsch_mu(0.5).unwrap() > lb);
    }

    #[test]
    fn mu_decreasing() {
        assert!(grotzsch_mu(0.3).unwrap() > grotzsch_mu(0.7).unwrap());
        for r in [0.0, 1.0, -0.5, 1.5, f64::NAN] {
            assert!(grotzsch_mu(r).is_err());
        }
    }

    #[test]
    fn mu_complementary_product() {
        for i in 1..100 {
            let r = i as f64 / 100.0;
            let prod = grotzsch_mu(r).unwrap() * grotzsch_mu(complementary(r)).unwrap();
            assert_relative_eq!(prod, PI * PI / 4.0, max_relative = 1e-9);
        }
    }

    #[test]
    fn mu_derivative_matches_central_differences() {
        for i in 5..=95 {
            let r = i as f64 / 100.0;
            let step = 1e-5 * r.min(1.0 - r);
            let fd =
                (grotzsch_mu(r + step).unwrap() - grotzsch_mu(r - step).unwrap()) / (2.0 * step);
            assert_relative_eq!(grotzsch_mu_derivative(r).unwrap(), fd, max_relative = 1e-6);
        }
    }

    #[test]
    fn h_at_zero_is_one() {
        assert!((h_of_t(0.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(h_of_t(1.0).unwrap() > 1.0);
        assert!(h_of_t(-1.0).is_err());
        assert_relative_eq!(
            h_of_t(1.0).unwrap(),
            1.252_172_437_390_564_7,
            max_relative = 1e-14
        );
    }

    #[test]
    fn h_finite_for_huge_t() {
        let big = h_of_t(2000.0).unwrap();
        assert!(big.is_finite() && big > 600.0);
    }

    #[test]
    fn h_derivative_values() {
        assert!(h_derivative(0.0).unwrap() > 0.0);
        // 40-digit numerical derivatives of h.
        assert_relative_eq!(
            h_derivative(0.0).unwrap(),
            0.228_473_290_522_231_8,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            h_derivative(1.0).unwrap(),
            0.272_996_573_958_449_1,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            h_derivative(3.0).unwrap(),
            0.310_693_062_969_321_7,
            max_relative = 1e-12
        );
        for t in [1.0, 3.0] {
            let s = 1e-5;
            let fd = (h_of_t(t + s).unwrap() - h_of_t(t - s).unwrap()) / (2.0 * s);
            assert_relative_eq!(h_derivative(t).unwrap(), fd, max_relative = 1e-6);
        }
    }

    #[test]
    fn missing_exp_factor_differs_away_from_zero() {
        assert_relative_eq!(
            h_derivative_without_exp_factor(0.0).unwrap(),
            h_derivative(0.0).unwrap(),
            max_relative = 1e-14
        );
        let ratio = h_derivative(1.0).unwrap() / h_derivative_without_exp_factor(1.0).unwrap();
        assert_relative_eq!(ratio, std::f64::consts::E, max_relative = 1e-12);
    }

    #[test]
    fn symmetric_quadrilateral_has_unit_modulus() {
        let q = IdealQuadrilateral::new(Real(-1.0), Real(0.0), Real(1.0), Infinity).unwrap();
        assert_relative_eq!(quad_modulus(&q), 1.0, max_relative = 1e-15);
        assert_relative_eq!(extremal_length(&q), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn h_equals_quadrilateral_modulus() {
        for t in [0.5f64, 1.0, 2.0] {
            let q =
                IdealQuadrilateral::new(Infinity, Real(-1.0), Real(0.0), Real(t.exp())).unwrap();
            assert_relative_eq!(quad_modulus(&q), h_of_t(t).unwrap(), max_relative = 1e-8);
            let shifted =
                IdealQuadrilateral::new(Real(-t.exp()), Real(0.0), Real(1.0), Infinity).unwrap();
            assert_relative_eq!(
                quad_modulus(&shifted),
                quad_modulus(&q),
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn reciprocity_under_rotation() {
        let q = IdealQuadrilateral::real(-3.0, -0.5, 0.25, 7.0).unwrap();
        let prod = quad_modulus(&q) * quad_modulus(&q.rotated());
        assert_relative_eq!(prod, 1.0, max_relative = 1e-12);
        let back = q.rotated().rotated().rotated();
        assert_relative_eq!(
            quad_modulus(&q) * quad_modulus(&back),
            1.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            quad_modulus(&q.rotated().rotated()),
            quad_modulus(&q),
            max_relative = 1e-12
        );
    }

    #[test]
    fn order_and_distinctness_enforced() {
        assert!(IdealQuadrilateral::real(0.0, 0.0, 1.0, 2.0).is_err());
        assert!(IdealQuadrilateral::real(0.0, 2.0, 1.0, 3.0).is_err());
        assert!(IdealQuadrilateral::new(Infinity, Real(1.0), Real(0.0), Real(2.0)).is_err());
        // Cyclic rotations of an ordered list are fine.
        assert!(IdealQuadrilateral::real(2.0, 3.0, -1.0, 0.0).is_ok());
        assert!(IdealQuadrilateral::new(Real(1.0), Infinity, Real(-2.0), Real(0.0)).is_ok());
    }

    #[test]
    fn parses_boundary_points() {
        assert_eq!("inf".parse::<BoundaryPoint>().unwrap(), Infinity);
        assert_eq!("-1.5".parse::<BoundaryPoint>().unwrap(), Real(-1.5));
        assert!("x".parse::<BoundaryPoint>().is_err());
    }
}
