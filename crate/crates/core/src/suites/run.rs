use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{GridAxis, Suite, SuiteCheck, SuiteOutcome, SAMPLE_SEED};
use crate::bounds::{bilipschitz_sandwich, BoundAssumptions};
use crate::conformal::{
    grotzsch_mu, grotzsch_mu_derivative, grotzsch_mu_lower_bound, h_derivative,
    h_derivative_without_exp_factor, h_of_t,
};
use crate::error::{Error, Result};
use crate::examples::pants1_arc_length;
use crate::fn_space::{
    fn_distance, linf_distance, to_linf, wolpert_check, FNCoordinate, StructureWindow,
};
use crate::hyperbolic::{
    hexagon_sides, hyp_distance, hyp_distance_cross_ratio, verify_pants_collar,
    HexagonAlternatingSides, PantsBoundaryLengths, UpperHalfPlanePoint,
};
use crate::report::CheckEntry;
use crate::twist::{
    seam_angle_bound, seam_angle_kit, twist_delta, twist_lower_bound_check, DistQuantityMeaning,
    SeamAngleInstance, TwistScenario,
};

const HEXAGON_ROUND_TRIP_TOL: f64 = 1e-9;
const MU_FD_TOL: f64 = 1e-6;
const MU_SYMMETRY_TOL: f64 = 1e-10;
const H_ZERO_TOL: f64 = 1e-9;
const CIRCLE_TOL: f64 = 1e-12;
const EXAMPLE_SUP_TOL: f64 = 1e-9;
const TRIANGLE_TOL: f64 = 1e-12;
const DISTANCE_ORACLE_TOL: f64 = 1e-10;
const DELTA_CAPS: [f64; 4] = [1.5, 2.0, 5.0, 10.0];
const MAX_WINDOW: usize = 200;

pub(super) fn run(suite: Suite, axes: &[(&'static str, GridAxis)]) -> Result<SuiteOutcome> {
    let pts: Vec<Vec<f64>> = axes.iter().map(|(_, a)| a.points()).collect();
    let names: Vec<&'static str> = axes.iter().map(|(n, _)| *n).collect();
    match suite {
        Suite::Collar => collar(&pts),
        Suite::Hexagon => hexagon(&pts),
        Suite::Mu => mu(&pts),
        Suite::TwistLower => twist_lower(&pts),
        Suite::Delta => delta(&pts),
        Suite::Angle => angle(&pts),
        Suite::Sandwich => sandwich(&pts),
        Suite::Example81 => example81(&axes[0].1),
        Suite::MetricAxioms => metric_axioms(axes[0].1.steps),
        Suite::DistanceOracle => distance_oracle(axes[0].1.steps),
    }
    .map(|mut o| {
        if o.input_names.is_empty() {
            o.input_names = names;
        }
        o
    })
}

fn product3(p: &[Vec<f64>]) -> Vec<[f64; 3]> {
    let mut out = Vec::with_capacity(p[0].len() * p[1].len() * p[2].len());
    for &a in &p[0] {
        for &b in &p[1] {
            for &c in &p[2] {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// `|x - y| / max(|x|, |y|)`, zero when both vanish.
fn rel_diff(x: f64, y: f64) -> f64 {
    let scale = x.abs().max(y.abs());
    if scale == 0.0 {
        0.0
    } else {
        (x - y).abs() / scale
    }
}

/// `err <= tol` recorded as `tol >= err`.
fn within(label: impl Into<String>, err: f64, tol: f64) -> CheckEntry {
    CheckEntry::at_least(label, tol, err, 0.0)
}

fn collar(p: &[Vec<f64>]) -> Result<SuiteOutcome> {
    let per_point: Vec<(Vec<SuiteCheck>, usize)> = product3(p)
        .into_par_iter()
        .map(|[a, b, c]| {
            let lengths = PantsBoundaryLengths::new(a, b, c)?;
            let report = verify_pants_collar(&lengths);
            let notes = report.notes.len();
            let checks = report
                .entries
                .into_iter()
                .map(|e| SuiteCheck::new(vec![a, b, c], e))
                .collect();
            Ok((checks, notes))
        })
        .collect::<Result<_>>()?;
    let mut out = SuiteOutcome::default();
    let mut step_failures = 0;
    for (checks, notes) in per_point {
        out.checks.extend(checks);
        step_failures += notes;
    }
    out.findings.push(format!(
        "intermediate estimate steps failing on the grid: {step_failures}"
    ));
    Ok(out)
}

fn hexagon(p: &[Vec<f64>]) -> Result<SuiteOutcome> {
    let checks: Vec<Vec<SuiteCheck>> = product3(p)
        .into_par_iter()
        .map(|a| {
            let hex = HexagonAlternatingSides::from_array(a)?;
            let b = HexagonAlternatingSides::from_array(hexagon_sides(&hex))?;
            let back = hexagon_sides(&b);
            Ok((0..3)
                .map(|i| {
                    SuiteCheck::new(
                        a.to_vec(),
                        within(
                            format!("a{0} -> b{0} -> a{0} relative error <= 1e-9", i + 1),
                            rel_diff(a[i], back[i]),
                            HEXAGON_ROUND_TRIP_TOL,
                        ),
                    )
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(SuiteOutcome {
        checks: checks.into_iter().flatten().collect(),
        ..Default::default()
    })
}

/// Inputs are `(axis, value)` with axis 0 for `r`, 1 for `r_fd`, 2 for `t`.
fn mu(p: &[Vec<f64>]) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome {
        input_names: vec!["axis", "x"],
        ..Default::default()
    };
    for &r in &p[0] {
        if r >= 1.0 {
            continue;
        }
        out.checks.push(SuiteCheck::new(
            vec![0.0, r],
            CheckEntry::at_least(
                "mu(r) > lower bound",
                grotzsch_mu(r)?,
                grotzsch_mu_lower_bound(r)?,
                0.0,
            ),
        ));
    }
    if let Some(c) = out
        .checks
        .iter()
        .min_by(|a, b| a.entry.slack.total_cmp(&b.entry.slack))
    {
        out.findings.push(format!(
            "mu(r) lower bound: minimum slack {:.14e} at r = {}",
            c.entry.slack, c.inputs[1]
        ));
    }
    for &r in &p[1] {
        if r >= 1.0 {
            continue;
        }
        // Step chosen to balance truncation and rounding error.
        let step = 1e-5 * r.min(1.0 - r);
        let fd = (grotzsch_mu(r + step)? - grotzsch_mu(r - step)?) / (2.0 * step);
        out.checks.push(SuiteCheck::new(
            vec![1.0, r],
            within(
                "mu'(r) vs central difference, relative <= 1e-6",
                rel_diff(grotzsch_mu_derivative(r)?, fd),
                MU_FD_TOL,
            ),
        ));
    }
    out.checks.push(SuiteCheck::new(
        vec![1.0, FRAC_1_SQRT_2],
        within(
            "|mu(1/sqrt 2) - pi/2| <= 1e-10",
            (grotzsch_mu(FRAC_1_SQRT_2)? - FRAC_PI_2).abs(),
            MU_SYMMETRY_TOL,
        ),
    ));

    let h0 = h_of_t(0.0)?;
    out.checks.push(SuiteCheck::new(
        vec![2.0, 0.0],
        within("|h(0) - 1| <= 1e-9", (h0 - 1.0).abs(), H_ZERO_TOL),
    ));
    let mut prev = (0.0, h0);
    for &t in &p[2] {
        let h = h_of_t(t)?;
        out.checks.push(SuiteCheck::new(
            vec![2.0, t],
            CheckEntry::structural(format!("h({t:e}) > h({:e})", prev.0), h > prev.1, None),
        ));
        prev = (t, h);
    }

    // Derivative of h: the closed form against a central difference, and
    // the variant that drops the e^t factor of dr/dt.
    let fd_h = |t: f64| -> Result<f64> {
        let step = 1e-5;
        Ok((h_of_t(t + step)? - h_of_t((t - step).max(0.0))?) / (t + step - (t - step).max(0.0)))
    };
    let mut worst_with = 0.0f64;
    let mut worst_without = 0.0f64;
    for t in [0.5, 1.0, 2.0, 3.0, 5.0] {
        let fd = fd_h(t)?;
        worst_with = worst_with.max(rel_diff(h_derivative(t)?, fd));
        worst_without = worst_without.max(rel_diff(h_derivative_without_exp_factor(t)?, fd));
    }
    let ratio = h_derivative(1.0)? / h_derivative_without_exp_factor(1.0)?;
    out.findings.push(format!(
        "h'(t) = -(1/pi) mu'(r) e^t/(1+e^t)^(3/2) matches finite differences (worst relative error {worst_with:.3e} at t in {{0.5,1,2,3,5}}); \
         the form without the e^t factor from dr/dt is off by up to {worst_without:.3e} (ratio at t=1: {ratio:.14})"
    ));
    Ok(out)
}

fn twist_lower(p: &[Vec<f64>]) -> Result<SuiteOutcome> {
    let grid: Vec<(f64, f64)> = p[0]
        .iter()
        .flat_map(|&l| p[1].iter().map(move |&t| (l, t)))
        .collect();
    let checks: Vec<Vec<SuiteCheck>> = grid
        .into_par_iter()
        .map(|(l, t)| {
            let report = twist_lower_bound_check(&TwistScenario::new(l, t)?)?;
            Ok(report
                .entries
                .into_iter()
                .map(|e| SuiteCheck::new(vec![l, t], e))
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(SuiteOutcome {
        checks: checks.into_iter().flatten().collect(),
        ..Default::default()
    })
}

fn delta(p: &[Vec<f64>]) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome {
        input_names: vec!["L", "t"],
        ..Default::default()
    };
    for cap in DELTA_CAPS {
        let d = twist_delta(cap)?;
        out.checks.push(SuiteCheck::new(
            vec![cap, d.t_max],
            within("|h(T) - L| <= 1e-9", (h_of_t(d.t_max)? - cap).abs(), 1e-9),
        ));
        for &frac in &p[0] {
            if frac > 1.0 {
                continue;
            }
            let t = frac * d.t_max;
            out.checks.push(SuiteCheck::new(
                vec![cap, t],
                CheckEntry::at_least("delta log h(t) >= t", d.delta * h_of_t(t)?.ln(), t, 0.0),
            ));
        }
        out.findings.push(format!(
            "L={cap}: T={:.14e} min h'={:.14e} M={:.14e} delta={:.14e}",
            d.t_max, d.slope, d.rate, d.delta
        ));
    }
    Ok(out)
}

fn angle(p: &[Vec<f64>]) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome {
        input_names: vec!["M_or_c", "theta"],
        ..Default::default()
    };
    let mut bounds = Vec::with_capacity(p[0].len());
    for &m in &p[0] {
        let phi = seam_angle_bound(m)?;
        out.checks.push(SuiteCheck::new(
            vec![m, f64::NAN],
            CheckEntry::structural(
                "phi_min(M) in (0, pi/2]",
                phi > 0.0 && phi <= FRAC_PI_2,
                None,
            ),
        ));
        bounds.push((m, phi));
    }
    let increases = bounds.windows(2).filter(|w| w[1].1 > w[0].1).count();
    if let Some(&(m_min, phi_min)) = bounds.iter().min_by(|a, b| a.1.total_cmp(&b.1)) {
        if increases == 0 {
            out.findings
                .push("phi_min(M) is non-increasing on the grid".into());
        } else {
            out.findings.push(format!(
                "phi_min(M) is not monotone: it increases on {increases} of {} grid steps; \
                 grid minimum {phi_min:.14e} at M = {m_min:.14e}",
                bounds.len().saturating_sub(1)
            ));
        }
    }

    let pairs: Vec<(f64, f64)> = p[1]
        .iter()
        .flat_map(|&c| p[2].iter().map(move |&th| (c, th)))
        .filter(|&(_, th)| th < FRAC_PI_2)
        .collect();
    let (mut exp_reading, mut squared_reading, mut other) = (0usize, 0usize, 0usize);
    let (mut q_fails, mut sq_fails) = (0usize, 0usize);
    for (c, th) in pairs {
        let inst = SeamAngleInstance::new(c, th)?;
        let kit = seam_angle_kit(&inst);
        let lambda = inst.lambda();
        out.checks.push(SuiteCheck::new(
            vec![c, th],
            within(
                "exit point on the seam circle (residual <= 1e-12 (1 + lambda^2))",
                kit.circle_residual.abs(),
                CIRCLE_TOL * (1.0 + lambda * lambda),
            ),
        ));
        match kit.meaning {
            DistQuantityMeaning::ExpTwiceDistance => exp_reading += 1,
            DistQuantityMeaning::DistanceSquared => squared_reading += 1,
            DistQuantityMeaning::Neither => other += 1,
        }
        q_fails += usize::from(!kit.quantity_exceeds_rhs);
        sq_fails += usize::from(!kit.distance_squared_exceeds_rhs);
    }
    let total = exp_reading + squared_reading + other;
    out.findings.push(format!(
        "distance quantity equals exp(2 d(i, A)) at {exp_reading} of {total} points, d(i, A)^2 at {squared_reading}, neither at {other}"
    ));
    out.findings.push(format!(
        "quantity >= (2/3) c^2 sin^6(theta)/cos^2(theta) fails at {q_fails} of {total} points; \
         with d(i, A)^2 on the left it fails at {sq_fails}"
    ));
    Ok(out)
}

fn sandwich(p: &[Vec<f64>]) -> Result<SuiteOutcome> {
    let grid = product3(p);
    let checks: Vec<Vec<SuiteCheck>> = grid
        .into_par_iter()
        .map(|[d, n, c]| {
            let a = BoundAssumptions::new(n, c)?;
            let s = bilipschitz_sandwich(d, &a)?;
            let has_note = s
                .forward
                .notes
                .iter()
                .any(|n| n.contains("2 arctan(2 e^N)"));
            Ok(vec![
                SuiteCheck::new(
                    vec![d, n, c],
                    CheckEntry::at_least("(2 + 3C) combined(d) >= d", s.round_trip, d, 0.0),
                ),
                SuiteCheck::new(
                    vec![d, n, c],
                    CheckEntry::structural("L(N) discrepancy note present", has_note, None),
                ),
            ])
        })
        .collect::<Result<_>>()?;
    let mut out = SuiteOutcome {
        checks: checks.into_iter().flatten().collect(),
        ..Default::default()
    };
    let sample = BoundAssumptions::new(1.0, 1.0)?;
    out.findings.push(format!(
        "L(1) = {:.14e} from the collar margin; 2 arctan(2 e^1) = {:.14e}",
        sample.l_of_n, sample.l_closed_form
    ));
    Ok(out)
}

fn example81(axis: &GridAxis) -> Result<SuiteOutcome> {
    let ns = axis.integer_points();
    if ns.is_empty() {
        return Err(Error::Usage(format!(
            "example81 grid {axis} contains no integer n >= 1"
        )));
    }
    let arcs: Vec<(u64, f64)> = ns
        .par_iter()
        .map(|&n| Ok((n, pants1_arc_length(n)?.cosh_sq)))
        .collect::<Result<_>>()?;
    let first = pants1_arc_length(1)?;
    let (n_sup, sup) =
        arcs.iter().copied().fold(
            (0, f64::NEG_INFINITY),
            |acc, x| if x.1 > acc.1 { x } else { acc },
        );
    let mut out = SuiteOutcome {
        input_names: vec!["n"],
        ..Default::default()
    };
    out.checks.push(SuiteCheck::new(
        vec![n_sup as f64],
        CheckEntry::structural(
            "supremum of cosh^2 l(n) attained at n = 1",
            n_sup == 1,
            Some(format!("attained at n = {n_sup}")),
        ),
    ));
    out.checks.push(SuiteCheck::new(
        vec![n_sup as f64],
        within(
            "|sup cosh^2 l(n) - 4 coth^2 1| <= 1e-9",
            (sup - first.bound_4coth).abs(),
            EXAMPLE_SUP_TOL,
        ),
    ));
    out.checks.push(SuiteCheck::new(
        vec![n_sup as f64],
        CheckEntry::structural("cosh^2 l(n) finite on the grid", sup.is_finite(), None),
    ));
    let over_3: Vec<u64> = arcs
        .iter()
        .filter(|(_, v)| *v > first.bound_3coth)
        .map(|(n, _)| *n)
        .collect();
    out.findings.push(format!(
        "observed sup cosh^2 l(n) = {sup:.14e} at n = {n_sup} over {} values of n in [{}, {}]; 4 coth^2 1 = {:.14e}",
        arcs.len(),
        ns[0],
        ns[ns.len() - 1],
        first.bound_4coth
    ));
    if over_3.is_empty() {
        out.findings.push(format!(
            "3 coth^2 1 = {:.14e} holds on the grid",
            first.bound_3coth
        ));
    } else {
        out.findings.push(format!(
            "3 coth^2 1 = {:.14e} is violated on {} of the grid values (n = {}), largest excess {:.14e}",
            first.bound_3coth,
            over_3.len(),
            over_3.iter().take(5).map(u64::to_string).collect::<Vec<_>>().join(", "),
            sup - first.bound_3coth
        ));
    }
    Ok(out)
}

/// Three windows of a common size and common boundary pattern.
fn random_triple(rng: &mut ChaCha8Rng) -> Result<[StructureWindow; 3]> {
    let size = rng.gen_range(1..=MAX_WINDOW);
    let boundary: Vec<bool> = (0..size).map(|_| rng.gen_bool(0.1)).collect();
    let make = |rng: &mut ChaCha8Rng| -> Result<StructureWindow> {
        let entries = boundary
            .iter()
            .map(|&b| {
                let length = 10f64.powf(rng.gen_range(-2.0..2.0));
                if b {
                    FNCoordinate::boundary(length)
                } else {
                    FNCoordinate::interior(length, rng.gen_range(-10.0..10.0))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        StructureWindow::literal(entries)
    };
    Ok([make(rng)?, make(rng)?, make(rng)?])
}

fn metric_axioms(samples: usize) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let triples: Vec<[StructureWindow; 3]> = (0..samples)
        .map(|_| random_triple(&mut rng))
        .collect::<Result<_>>()?;
    let wolpert: Vec<(f64, f64, f64)> = (0..samples)
        .map(|_| {
            (
                10f64.powf(rng.gen_range(-2.0..2.0)),
                10f64.powf(rng.gen_range(-2.0..2.0)),
                10f64.powf(rng.gen_range(0.0..2.0)),
            )
        })
        .collect();

    let checks: Vec<Vec<SuiteCheck>> = triples
        .par_iter()
        .enumerate()
        .map(|(i, [x, y, z])| {
            let inputs = vec![i as f64, x.len() as f64];
            let dxy = fn_distance(x, y)?.value;
            let dyx = fn_distance(y, x)?.value;
            let dyz = fn_distance(y, z)?.value;
            let dxz = fn_distance(x, z)?.value;
            let dxx = fn_distance(x, x)?.value;
            let (linf, _) = linf_distance(&to_linf(x), &to_linf(y))?;
            let entry = |e: CheckEntry| SuiteCheck::new(inputs.clone(), e);
            Ok(vec![
                entry(CheckEntry::at_least(
                    "d(x,y) = d(y,x) exactly",
                    0.0,
                    (dxy - dyx).abs(),
                    0.0,
                )),
                entry(CheckEntry::at_least(
                    "d(x,z) <= d(x,y) + d(y,z) + 1e-12",
                    dxy + dyz,
                    dxz,
                    TRIANGLE_TOL,
                )),
                entry(CheckEntry::at_least("d(x,x) = 0", 0.0, dxx, 0.0)),
                entry(CheckEntry::at_least(
                    "d(x,y) = |to_linf(x) - to_linf(y)| exactly",
                    0.0,
                    (dxy - linf).abs(),
                    0.0,
                )),
            ])
        })
        .collect::<Result<_>>()?;
    let mut out = SuiteOutcome {
        input_names: vec!["sample", "window"],
        checks: checks.into_iter().flatten().collect(),
        ..Default::default()
    };
    for (i, (lx, ly, k)) in wolpert.into_iter().enumerate() {
        let gap = k.ln() - (lx.ln() - ly.ln()).abs();
        // Both sides agree except within rounding of the boundary.
        let entry = if gap.abs() <= 1e-12 {
            CheckEntry::skipped(
                "length comparison matches |log(lx/ly)| <= log K",
                "on the boundary",
            )
        } else {
            let pass = wolpert_check(lx, ly, k)?.pass;
            CheckEntry::structural(
                "length comparison matches |log(lx/ly)| <= log K",
                pass == (gap >= 0.0),
                None,
            )
        };
        out.checks.push(SuiteCheck::new(vec![i as f64, 0.0], entry));
    }
    Ok(out)
}

fn distance_oracle(samples: usize) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ 0x9E37_79B9);
    let point = |rng: &mut ChaCha8Rng| {
        UpperHalfPlanePoint::new(
            rng.gen_range(-10.0..=10.0),
            10f64.powf(rng.gen_range(-3.0..=3.0)),
        )
    };
    let pairs: Vec<(UpperHalfPlanePoint, UpperHalfPlanePoint)> = (0..samples)
        .map(|_| Ok((point(&mut rng)?, point(&mut rng)?)))
        .collect::<Result<_>>()?;
    let checks = pairs
        .par_iter()
        .map(|(z, w)| {
            SuiteCheck::new(
                vec![z.x(), z.y(), w.x(), w.y()],
                within(
                    "cross-ratio vs cosh distance, relative <= 1e-10",
                    rel_diff(hyp_distance(*z, *w), hyp_distance_cross_ratio(*z, *w)),
                    DISTANCE_ORACLE_TOL,
                ),
            )
        })
        .collect();
    Ok(SuiteOutcome {
        input_names: vec!["zx", "zy", "wx", "wy"],
        checks,
        ..Default::default()
    })
}
