//! Collar widths around closed geodesics and their disjointness in a pair of pants.

use super::{arcosh, pants_altitude_cosh, pants_seam_lengths, theta_of_d};
use crate::error::{require_non_negative, require_positive, Result};
use crate::report::{CheckEntry, VerificationReport};

/// Absolute slack tolerance for the collar inequalities.
pub const COLLAR_TOLERANCE: f64 = 1e-12;

/// Boundary lengths of a pair of pants; `0` marks a cusp.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PantsBoundaryLengths {
    l: [f64; 3],
}

impl PantsBoundaryLengths {
    pub fn new(l1: f64, l2: f64, l3: f64) -> Result<Self> {
        for (name, v) in [("l1", l1), ("l2", l2), ("l3", l3)] {
            require_non_negative("pants", name, v)?;
        }
        Ok(PantsBoundaryLengths { l: [l1, l2, l3] })
    }

    pub fn as_array(&self) -> [f64; 3] {
        self.l
    }

    pub fn is_cusp(&self, i: usize) -> bool {
        self.l[i] == 0.0
    }
}

/// Collar quantities attached to a closed geodesic of a given length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollarData {
    /// Disjoint-collar width `B(l)` inside any pair of pants.
    pub margin: f64,
    /// Standard collar half-width `ω` with `sinh ω sinh(l/2) = 1`.
    pub halfwidth: f64,
    /// Half-angle `θ(ω)` of the lifted collar around the imaginary axis.
    pub angle: f64,
}

impl CollarData {
    pub fn for_length(l: f64) -> Result<Self> {
        let margin = collar_margin(l)?;
        let halfwidth = collar_halfwidth(l)?;
        let angle = theta_of_d(halfwidth)?;
        Ok(CollarData {
            margin,
            halfwidth,
            angle,
        })
    }
}

/// `B(l) = ½ log(1 + 2/(e^l - 1))`.
pub fn collar_margin(l: f64) -> Result<f64> {
    require_positive("collar_margin", "l", l)?;
    Ok(0.5 * (2.0 / l.exp_m1()).ln_1p())
}

/// `ω(l) = arsinh(1 / sinh(l/2))`.
pub fn collar_halfwidth(l: f64) -> Result<f64> {
    require_positive("collar_halfwidth", "l", l)?;
    Ok((1.0 / (0.5 * l).sinh()).asinh())
}

fn boundary_margin(l: f64) -> f64 {
    0.5 * (2.0 / l.exp_m1()).ln_1p()
}

/// Checks that the three collars `{d(x, ∂_i) <= B(l_i)}` fit inside the two
/// hexagons of the pants: for each non-cusp boundary `j`, the half-seams on
/// either side and the altitude `h_j` all exceed `B(l_j)`.
///
/// Cusp boundaries contribute three skipped entries. Failures of the
/// intermediate steps of the estimate are listed in `notes`.
pub fn verify_pants_collar(l: &PantsBoundaryLengths) -> VerificationReport {
    let mut report = VerificationReport::new(format!(
        "pants collar l=({}, {}, {})",
        l.l[0], l.l[1], l.l[2]
    ));
    let half = l.l.map(|x| 0.5 * x);
    let seams = pants_seam_lengths(half);
    for j in 0..3 {
        let others = [(j + 1) % 3, (j + 2) % 3];
        if l.is_cusp(j) {
            for k in others {
                report.push(CheckEntry::skipped(
                    format!("b{}/2 >= B(l{})", k + 1, j + 1),
                    "cusp: collar is unbounded",
                ));
            }
            report.push(CheckEntry::skipped(
                format!("h{} >= B(l{})", j + 1, j + 1),
                "cusp: collar is unbounded",
            ));
            continue;
        }
        let margin = boundary_margin(l.l[j]);
        for k in others {
            report.push(CheckEntry::at_least(
                format!("b{}/2 >= B(l{})", k + 1, j + 1),
                0.5 * seams[k],
                margin,
                COLLAR_TOLERANCE,
            ));
        }
        let altitude = arcosh(pants_altitude_cosh(half, j));
        report.push(CheckEntry::at_least(
            format!("h{} >= B(l{})", j + 1, j + 1),
            altitude,
            margin,
            COLLAR_TOLERANCE,
        ));

        for step in intermediate_steps(j, half, seams, altitude, margin) {
            if step.outcome == crate::report::Outcome::Fail {
                report.notes.push(format!(
                    "intermediate step failed: {} (slack {:e})",
                    step.label, step.slack
                ));
            }
        }
    }
    report
}

/// The chain of estimates leading to each end-to-end inequality.
fn intermediate_steps(
    j: usize,
    half: [f64; 3],
    seams: [f64; 3],
    altitude: f64,
    margin: f64,
) -> Vec<CheckEntry> {
    let a = half[j];
    let coth = 1.0 / a.tanh();
    let seam_floor = 0.5 * arcosh(coth);
    let mut steps = Vec::with_capacity(5);
    for k in [(j + 1) % 3, (j + 2) % 3] {
        steps.push(CheckEntry::at_least(
            format!("b{}/2 >= arcosh(coth(l{}/2))/2", k + 1, j + 1),
            0.5 * seams[k],
            seam_floor,
            COLLAR_TOLERANCE,
        ));
    }
    steps.push(CheckEntry::at_least(
        format!("arcosh(coth(l{0}/2))/2 >= B(l{0})", j + 1),
        seam_floor,
        margin,
        COLLAR_TOLERANCE,
    ));
    // 2 coth(a)/sinh(a) = 4 e^{l/2} (e^l + 1)/(e^l - 1)^2 with a = l/2.
    let x = 2.0 * coth / a.sinh();
    let altitude_floor = arcosh((1.0 + x).sqrt());
    steps.push(CheckEntry::at_least(
        format!(
            "h{0} >= arcosh(sqrt(1 + 2 coth(l{0}/2)/sinh(l{0}/2)))",
            j + 1
        ),
        altitude,
        altitude_floor,
        COLLAR_TOLERANCE,
    ));
    let log_floor = 0.5 * x.ln_1p();
    steps.push(CheckEntry::at_least(
        format!("arcosh(sqrt(1 + X{})) >= log(1 + X)/2", j + 1),
        altitude_floor,
        log_floor,
        COLLAR_TOLERANCE,
    ));
    steps.push(CheckEntry::at_least(
        format!("log(1 + X{0})/2 >= B(l{0})", j + 1),
        log_floor,
        margin,
        COLLAR_TOLERANCE,
    ));
    steps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Outcome;
    use approx::assert_relative_eq;

    // 40-digit evaluations.
    const B_AT_2: f64 = 0.136_170_734_455_915_8;
    const OMEGA_AT_2: f64 = 0.771_936_832_905_304_7;

    #[test]
    fn margin_values() {
        assert_relative_eq!(
            collar_margin(3f64.ln()).unwrap(),
            0.5 * std::f64::consts::LN_2,
            max_relative = 1e-15
        );
        assert_relative_eq!(collar_margin(2.0).unwrap(), B_AT_2, max_relative = 1e-14);
        assert!(collar_margin(1.0).unwrap() > collar_margin(2.0).unwrap());
        assert!(collar_margin(0.0).is_err());
        assert!(collar_margin(-1.0).is_err());
    }

    #[test]
    fn margin_limits() {
        assert!(collar_margin(1e-12).unwrap() > 13.0);
        assert!(collar_margin(60.0).unwrap() < 1e-25);
    }

    #[test]
    fn halfwidth_values() {
        assert_relative_eq!(
            collar_halfwidth(2.0).unwrap(),
            OMEGA_AT_2,
            max_relative = 1e-14
        );
        assert!(collar_halfwidth(80.0).unwrap() < 1e-16);
        assert!(collar_halfwidth(0.0).is_err());
    }

    #[test]
    fn halfwidth_defining_identity() {
        for k in 0..200 {
            let l = 0.01 * 1.05f64.powi(k);
            let w = collar_halfwidth(l).unwrap();
            assert_relative_eq!(w.sinh() * (0.5 * l).sinh(), 1.0, max_relative = 1e-13);
        }
    }

    #[test]
    fn both_widths_strictly_decreasing() {
        let grid: Vec<f64> = (0..=300)
            .map(|k| 10f64.powf(-2.0 + 3.0 * k as f64 / 300.0))
            .collect();
        for w in grid.windows(2) {
            assert!(collar_margin(w[0]).unwrap() > collar_margin(w[1]).unwrap());
            assert!(collar_halfwidth(w[0]).unwrap() > collar_halfwidth(w[1]).unwrap());
        }
    }

    #[test]
    fn collar_data_angle_in_range() {
        let c = CollarData::for_length(2.0).unwrap();
        assert!(c.angle > 0.0 && c.angle < std::f64::consts::FRAC_PI_2);
        assert_relative_eq!(c.angle, 0.705_026_843_555_238, max_relative = 1e-13);
    }

    #[test]
    fn unit_pants_all_pass() {
        let r = verify_pants_collar(&PantsBoundaryLengths::new(1.0, 1.0, 1.0).unwrap());
        assert_eq!(r.entries.len(), 9);
        assert_eq!(r.count(Outcome::Pass), 9);
        assert!(r.notes.is_empty());
    }

    #[test]
    fn lopsided_pants_all_pass() {
        let r = verify_pants_collar(&PantsBoundaryLengths::new(10.0, 0.05, 3.0).unwrap());
        assert_eq!(r.count(Outcome::Pass), 9, "{r}");
        assert!(r.notes.is_empty());
    }

    #[test]
    fn cusp_skips_three() {
        let r = verify_pants_collar(&PantsBoundaryLengths::new(0.0, 1.0, 1.0).unwrap());
        assert_eq!(r.count(Outcome::Pass), 6);
        assert_eq!(r.count(Outcome::Skip), 3);
        assert!(r.passed());
    }

    #[test]
    fn negative_length_rejected() {
        assert!(PantsBoundaryLengths::new(-1.0, 1.0, 1.0).is_err());
    }
}
