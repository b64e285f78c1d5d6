//! Comparison bounds between the Fenchel-Nielsen distance and the
//! logarithm of quasiconformal dilatation, under an upper bound `N` on the
//! lengths of the decomposition curves.

use std::fmt;

use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::hyperbolic::{collar_margin, theta_of_d};

/// A certified interval for one quantity together with the hypotheses it
/// depends on.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub quantity: String,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    /// Named hypothesis values (`N`, `C(N)`, ...).
    pub assumptions: Vec<(String, f64)>,
    /// The statement the bound instantiates.
    pub provenance: String,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn new(quantity: impl Into<String>, provenance: impl Into<String>) -> Self {
        BoundReport {
            quantity: quantity.into(),
            lower: None,
            upper: None,
            assumptions: Vec::new(),
            provenance: provenance.into(),
            notes: Vec::new(),
        }
    }

    fn with_assumptions(mut self, a: &BoundAssumptions) -> Self {
        self.assumptions = vec![
            ("N".into(), a.cap),
            ("C(N)".into(), a.bishop_c),
            ("L(N)".into(), a.l_of_n),
        ];
        self.notes.push(a.discrepancy_note());
        self
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.quantity)?;
        if let Some(lo) = self.lower {
            write!(f, " lower={lo:.14e}")?;
        }
        if let Some(hi) = self.upper {
            write!(f, " upper={hi:.14e}")?;
        }
        writeln!(f)?;
        writeln!(f, "  from: {}", self.provenance)?;
        for (name, v) in &self.assumptions {
            writeln!(f, "  assume {name} = {v:.14e}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Hypotheses shared by the comparison bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundAssumptions {
    /// Upper bound `N` on every decomposition curve length.
    pub cap: f64,
    /// The constant `C(N)` of the Bishop length-change bound; supplied by
    /// the caller since it is not known in closed form.
    pub bishop_c: f64,
    pub l_of_n: f64,
    /// `2 arctan(2 e^N)`, kept only for the discrepancy note.
    pub l_closed_form: f64,
}

impl BoundAssumptions {
    pub fn new(cap: f64, bishop_c: f64) -> Result<Self> {
        require_non_negative("bounds", "C(N)", bishop_c)?;
        Ok(BoundAssumptions {
            cap,
            bishop_c,
            l_of_n: l_of_n(cap)?,
            l_closed_form: l_of_n_closed_form(cap)?,
        })
    }

    fn discrepancy_note(&self) -> String {
        format!(
            "L(N) = 2 arctan((e^B(N) - 1)/(e^B(N) + 1)) = {:.14e}; the closed form \
             2 arctan(2 e^N) = {:.14e} does not agree with it and is not used",
            self.l_of_n, self.l_closed_form
        )
    }

    /// `sqrt(1 + d^2/(16 L^2)) / L`.
    fn twist_factor(&self, d: f64) -> f64 {
        let l = self.l_of_n;
        (1.0 + d * d / (16.0 * l * l)).sqrt() / l
    }
}

/// `L(N) = 2 arctan((e^{B(N)} - 1)/(e^{B(N)} + 1)) = θ(B(N))`.
pub fn l_of_n(cap: f64) -> Result<f64> {
    require_positive("l_of_n", "N", cap)?;
    theta_of_d(collar_margin(cap)?)
}

/// `2 arctan(2 e^N)`.
pub fn l_of_n_closed_form(cap: f64) -> Result<f64> {
    require_positive("l_of_n", "N", cap)?;
    Ok(2.0 * (2.0 * cap.exp()).atan())
}

fn require_distance(op: &'static str, d: f64) -> Result<f64> {
    require_non_negative(op, "d", d)
}

/// `log K <= 3 C(N) max_i |log(l_i/m_i)|` for a map between pants with
/// boundary lengths `l` and `m`, all at most `N`.
pub fn bishop_length_bound(l: [f64; 3], m: [f64; 3], a: &BoundAssumptions) -> Result<BoundReport> {
    for x in l.iter().chain(&m) {
        require_positive("bishop_length_bound", "boundary length", *x)?;
        if *x > a.cap {
            return Err(Error::assumption(
                "bishop_length_bound",
                format!("boundary length {x} exceeds the cap N = {}", a.cap),
            ));
        }
    }
    let worst = l
        .iter()
        .zip(&m)
        .map(|(x, y)| (x / y).ln().abs())
        .fold(0.0, f64::max);
    let mut r = BoundReport::new(
        "log K(pants map)",
        "Bishop: quasiconformal map between pants with boundary lengths <= N",
    )
    .with_assumptions(a);
    r.lower = Some(0.0);
    r.upper = Some(3.0 * a.bishop_c * worst);
    Ok(r)
}

/// `log K <= (d/L(N)) sqrt(1 + d^2/(16 L(N)^2))` when lengths agree and
/// only twists differ.
pub fn twist_change_bound(d: f64, a: &BoundAssumptions) -> Result<BoundReport> {
    require_distance("twist_change_bound", d)?;
    let mut r = BoundReport::new(
        "log K(q), equal lengths",
        "twist-only change of Fenchel-Nielsen coordinates with lengths <= N",
    )
    .with_assumptions(a);
    r.lower = Some(0.0);
    r.upper = Some(d * a.twist_factor(d));
    Ok(r)
}

/// `log K <= d [3 C(N) + (1/L(N)) sqrt(1 + d^2/(16 L(N)^2))]`.
pub fn combined_qc_upper(d: f64, a: &BoundAssumptions) -> Result<BoundReport> {
    require_distance("combined_qc_upper", d)?;
    let mut r = BoundReport::new(
        "log K(q)",
        "length change (Bishop) followed by twist change, lengths <= N",
    )
    .with_assumptions(a);
    r.lower = Some(0.0);
    r.upper = Some(d * (3.0 * a.bishop_c + a.twist_factor(d)));
    Ok(r)
}

/// `d_FN <= (2 + 3 C(N)) log K`.
pub fn fn_from_qc_upper(log_k: f64, a: &BoundAssumptions) -> Result<BoundReport> {
    require_non_negative("fn_from_qc_upper", "log K", log_k)?;
    let mut r = BoundReport::new(
        "d_FN",
        "Wolpert length bound and Bishop twist comparison, lengths <= N",
    )
    .with_assumptions(a);
    r.lower = Some(0.0);
    r.upper = Some((2.0 + 3.0 * a.bishop_c) * log_k);
    Ok(r)
}

/// Both directions of the comparison at Fenchel-Nielsen distance `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sandwich {
    /// Upper bound on `log K` at distance `d`.
    pub forward: BoundReport,
    /// `d_FN <= inverse_constant * log K`.
    pub inverse_constant: f64,
    /// `log K / d_FN` ratio of the forward bound (its limit as `d -> 0`
    /// when `d = 0`).
    pub forward_lipschitz: f64,
    /// `(2 + 3C) * forward.upper`; never below `d`.
    pub round_trip: f64,
    pub consistent: bool,
}

pub fn bilipschitz_sandwich(d: f64, a: &BoundAssumptions) -> Result<Sandwich> {
    let forward = combined_qc_upper(d, a)?;
    let upper = forward.upper.expect("combined bound has an upper value");
    let round_trip = fn_from_qc_upper(upper, a)?
        .upper
        .expect("inverse bound has an upper value");
    Ok(Sandwich {
        forward,
        inverse_constant: 2.0 + 3.0 * a.bishop_c,
        forward_lipschitz: 3.0 * a.bishop_c + a.twist_factor(d),
        round_trip,
        consistent: d <= round_trip,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{E, FRAC_PI_2, LN_2, SQRT_2};

    fn assume(n: f64, c: f64) -> BoundAssumptions {
        BoundAssumptions::new(n, c).unwrap()
    }

    #[test]
    fn l_at_log_three() {
        let b = 0.5 * LN_2;
        let expected = 2.0 * ((SQRT_2 - 1.0) / (SQRT_2 + 1.0)).atan();
        assert_relative_eq!(b.exp(), SQRT_2, max_relative = 1e-15);
        assert_relative_eq!(l_of_n(3f64.ln()).unwrap(), expected, max_relative = 1e-14);
        assert_relative_eq!(
            l_of_n(3f64.ln()).unwrap(),
            0.339_836_909_454_121_9,
            max_relative = 1e-14
        );
    }

    #[test]
    fn l_decreasing_and_below_right_angle() {
        let mut prev = f64::INFINITY;
        for k in 0..=200 {
            let n = 0.1 * 100f64.powf(k as f64 / 200.0);
            let l = l_of_n(n).unwrap();
            assert!(l < prev && l < FRAC_PI_2);
            prev = l;
        }
        assert!(l_of_n(0.0).is_err());
    }

    #[test]
    fn closed_form_disagrees() {
        let a = assume(3f64.ln(), 1.0);
        assert_relative_eq!(
            a.l_closed_form,
            2.811_295_298_760_539_6,
            max_relative = 1e-14
        );
        assert!((a.l_closed_form - a.l_of_n).abs() > 1.0);
    }

    #[test]
    fn bishop_values() {
        let a = assume(5.0, 1.0);
        let r = bishop_length_bound([1.0, 1.0, 1.0], [1.0, 1.0, 1.0], &a).unwrap();
        assert_eq!(r.upper, Some(0.0));
        let r = bishop_length_bound([1.0, 1.0, 1.0], [E, 1.0, 1.0], &a).unwrap();
        assert_relative_eq!(r.upper.unwrap(), 3.0, max_relative = 1e-15);
        let p = bishop_length_bound([1.0, 1.0, 1.0], [1.0, E, 1.0], &a).unwrap();
        assert_eq!(r.upper, p.upper);
        assert!(matches!(
            bishop_length_bound([6.0, 1.0, 1.0], [1.0, 1.0, 1.0], &a),
            Err(Error::Assumption { .. })
        ));
    }

    #[test]
    fn twist_bound_at_four_l() {
        let a = assume(1.0, 1.0);
        let r = twist_change_bound(4.0 * a.l_of_n, &a).unwrap();
        assert_relative_eq!(r.upper.unwrap(), 4.0 * SQRT_2, max_relative = 1e-14);
        assert_eq!(twist_change_bound(0.0, &a).unwrap().upper, Some(0.0));
    }

    #[test]
    fn combined_at_unit_parameters() {
        let a = assume(1.0, 1.0);
        assert_relative_eq!(a.l_of_n, 0.376_727_508_058_575, max_relative = 1e-14);
        let r = combined_qc_upper(1.0, &a).unwrap();
        assert_relative_eq!(
            r.upper.unwrap(),
            6.185_743_947_081_205,
            max_relative = 1e-14
        );
        let t = twist_change_bound(1.0, &a).unwrap();
        assert_relative_eq!(
            t.upper.unwrap(),
            3.185_743_947_081_205,
            max_relative = 1e-14
        );
    }

    #[test]
    fn zero_c_reduces_to_twist_bound() {
        let a = assume(2.0, 0.0);
        for d in [0.0, 0.3, 4.0] {
            assert_eq!(
                combined_qc_upper(d, &a).unwrap().upper,
                twist_change_bound(d, &a).unwrap().upper
            );
        }
    }

    #[test]
    fn inverse_direction() {
        let a = assume(1.0, 1.0);
        assert_eq!(fn_from_qc_upper(1.0, &a).unwrap().upper, Some(5.0));
        assert_eq!(fn_from_qc_upper(0.0, &a).unwrap().upper, Some(0.0));
        assert!(fn_from_qc_upper(-1.0, &a).is_err());
    }

    #[test]
    fn every_report_carries_the_l_note() {
        let a = assume(1.0, 1.0);
        for r in [
            combined_qc_upper(1.0, &a).unwrap(),
            twist_change_bound(1.0, &a).unwrap(),
            fn_from_qc_upper(1.0, &a).unwrap(),
            bishop_length_bound([1.0; 3], [0.5; 3], &a).unwrap(),
        ] {
            assert!(r.notes.iter().any(|n| n.contains("2 arctan(2 e^N)")));
        }
    }

    #[test]
    fn sandwich_at_zero_and_growth_in_n() {
        let s = bilipschitz_sandwich(0.0, &assume(1.0, 1.0)).unwrap();
        assert_eq!(s.forward.upper, Some(0.0));
        assert_eq!(s.round_trip, 0.0);
        assert!(s.consistent);
        let small = bilipschitz_sandwich(1.0, &assume(0.5, 1.0)).unwrap();
        let large = bilipschitz_sandwich(1.0, &assume(5.0, 1.0)).unwrap();
        assert!(large.forward_lipschitz > small.forward_lipschitz);
    }
}
