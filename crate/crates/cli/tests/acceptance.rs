//! The twelve acceptance criteria, one printed line each.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, TAU};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use fnteich::conformal::{grotzsch_mu, grotzsch_mu_derivative, grotzsch_mu_lower_bound, h_of_t};
use fnteich::suites::{Suite, SuiteResult};

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fnteich"))
}

fn suite(s: Suite, expected_checks: usize) -> Verdict {
    let r: SuiteResult = s.run(&[]).expect("suite runs");
    let ok = r.passed() && r.total >= expected_checks;
    verdict(
        ok,
        format!(
            "{} checks (expected >= {expected_checks}), {} failures, min slack {:e}",
            r.total,
            r.failures.len(),
            r.min_slack.unwrap_or(f64::NAN)
        ),
    )
}

fn h_monotone() -> Verdict {
    let h0 = h_of_t(0.0).unwrap();
    let mut prev = h0;
    let mut increasing = true;
    for k in 1..=20_000 {
        let h = h_of_t(20.0 * k as f64 / 20_000.0).unwrap();
        increasing &= h > prev;
        prev = h;
    }
    verdict(
        (h0 - 1.0).abs() <= 1e-9 && increasing,
        format!(
            "|h(0) - 1| = {:e}, strictly increasing on 20001 points of [0, 20]: {increasing}",
            (h0 - 1.0).abs()
        ),
    )
}

fn grotzsch() -> Verdict {
    let mut lower_ok = true;
    for k in 1..=99 {
        let r = k as f64 / 100.0;
        lower_ok &= grotzsch_mu(r).unwrap() > grotzsch_mu_lower_bound(r).unwrap();
    }
    let mut worst_fd = 0.0f64;
    for k in 0..=90 {
        let r = 0.05 + 0.01 * k as f64;
        let s = 1e-5 * r.min(1.0 - r);
        let fd = (grotzsch_mu(r + s).unwrap() - grotzsch_mu(r - s).unwrap()) / (2.0 * s);
        let exact = grotzsch_mu_derivative(r).unwrap();
        worst_fd = worst_fd.max((exact - fd).abs() / exact.abs());
    }
    let sym = (grotzsch_mu(FRAC_1_SQRT_2).unwrap() - FRAC_PI_2).abs();
    verdict(
        lower_ok && worst_fd <= 1e-6 && sym <= 1e-10,
        format!("lower bound on 0.01..0.99: {lower_ok}; worst FD rel error {worst_fd:e}; |mu(1/sqrt2) - pi/2| = {sym:e}"),
    )
}

fn dist_value(dir: &Path, a: &str, b: &str, metric: &str) -> f64 {
    let out = bin()
        .args(["dist", a, b, "--metric", metric])
        .current_dir(dir)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    text.lines()
        .find_map(|l| l.strip_prefix("distance "))
        .and_then(|v| v.parse().ok())
        .expect("distance line")
}

fn embed_sup(dir: &Path, a: &str, b: &str) -> f64 {
    // Full-precision values from the embedding, so the comparison is not
    // limited by the 15-digit printout of `dist`.
    let read = |f: &str| -> Vec<(f64, f64)> {
        let out = bin().args(["embed", f]).current_dir(dir).output().unwrap();
        String::from_utf8(out.stdout)
            .unwrap()
            .lines()
            .skip(1)
            .map(|l| {
                let v: Vec<&str> = l.split(',').collect();
                (v[1].parse().unwrap(), v[2].parse().unwrap_or(0.0))
            })
            .collect()
    };
    read(a)
        .iter()
        .zip(read(b))
        .map(|(x, y)| (x.0 - y.0).abs().max((x.1 - y.1).abs()))
        .fold(0.0, f64::max)
}

fn section_values() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    for (kind, n) in [("fn1", "4"), ("fn2", "10")] {
        let st = bin()
            .args(["example", kind, "--n", n, "--out"])
            .arg(dir.path())
            .status()
            .unwrap();
        assert!(st.success());
    }
    let d1 = embed_sup(dir.path(), "fn1_x.fnstruct", "fn1_y.fnstruct");
    let t1 = dist_value(dir.path(), "fn1_x.fnstruct", "fn1_y.fnstruct", "raw-twist");
    let d2 = embed_sup(dir.path(), "fn2_x.fnstruct", "fn2_y.fnstruct");
    let l2 = dist_value(dir.path(), "fn2_x.fnstruct", "fn2_y.fnstruct", "raw-length");
    let p1 = dist_value(dir.path(), "fn1_x.fnstruct", "fn1_y.fnstruct", "fn");
    let errs = [
        (d1 - FRAC_PI_2).abs(),
        (t1 - TAU).abs(),
        (d2 - 10f64.ln()).abs(),
        (l2 - 0.09).abs(),
    ];
    verdict(
        errs.iter().all(|e| *e <= 1e-12) && (p1 - FRAC_PI_2).abs() <= 1e-14,
        format!(
            "fn1 n=4: d_FN err {:e}, raw-twist err {:e}; fn2 n=10: d_FN err {:e}, raw-length err {:e}",
            errs[0], errs[1], errs[2], errs[3]
        ),
    )
}

fn example_sup() -> Verdict {
    let r = Suite::Example81.run(&[]).unwrap();
    let reported = r
        .findings
        .iter()
        .any(|f| f.contains("3 coth^2 1") && f.contains("violated"));
    verdict(
        r.passed() && reported,
        format!(
            "{} failures over n in [1, 1e6]; 3 coth^2 1 violation reported: {reported}",
            r.failures.len()
        ),
    )
}

fn sandwich() -> Verdict {
    let r = Suite::Sandwich.run(&[]).unwrap();
    let notes = r
        .checks
        .iter()
        .filter(|c| c.entry.label.contains("discrepancy note"))
        .count();
    verdict(
        r.passed() && notes == 1000,
        format!(
            "{} checks, {} failures, note checked in {notes} reports",
            r.total,
            r.failures.len()
        ),
    )
}

fn isometry() -> Verdict {
    let r = Suite::MetricAxioms.run(&[]).unwrap();
    let iso: Vec<_> = r
        .checks
        .iter()
        .filter(|c| c.entry.label.contains("to_linf"))
        .collect();
    let exact = iso.iter().filter(|c| c.entry.rhs == 0.0).count();
    let max_window = r.checks.iter().map(|c| c.inputs[1]).fold(0.0, f64::max);
    verdict(
        r.passed() && iso.len() == 1000 && exact == 1000 && max_window <= 200.0,
        format!(
            "{exact} of {} windows (size <= {max_window}) embed isometrically with zero difference; {} suite failures",
            iso.len(),
            r.failures.len()
        ),
    )
}

fn full_verify() -> Verdict {
    let out = bin().args(["verify", "all"]).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    let code = out.status.code();
    verdict(
        code == Some(0) && text.contains("all suites PASS"),
        format!("exit code {code:?}"),
    )
}

#[test]
fn acceptance() {
    type Criterion = (u32, &'static str, Duration, fn() -> Verdict);
    let criteria: [Criterion; 12] = [
        (
            1,
            "h(0) = 1 and h strictly increasing",
            Duration::from_secs(1),
            h_monotone,
        ),
        (
            2,
            "Grotzsch modulus validation",
            Duration::from_secs(5),
            grotzsch,
        ),
        (3, "collar suite, 20^3 grid", Duration::from_secs(5), || {
            suite(Suite::Collar, 8000 * 9)
        }),
        (
            4,
            "hexagon round trip, 15^3 grid",
            Duration::from_secs(2),
            || suite(Suite::Hexagon, 15 * 15 * 15 * 3),
        ),
        (
            5,
            "twist map dilatation >= h(t), 50x50 grid",
            Duration::from_secs(10),
            || suite(Suite::TwistLower, 2500),
        ),
        (6, "twist_delta contract", Duration::from_secs(5), || {
            suite(Suite::Delta, 400)
        }),
        (
            7,
            "exact distances of the example pairs",
            Duration::from_secs(1),
            section_values,
        ),
        (
            8,
            "cusped pants arc supremum",
            Duration::from_secs(10),
            example_sup,
        ),
        (
            9,
            "l-infinity isometry on random windows",
            Duration::from_secs(5),
            isometry,
        ),
        (
            10,
            "sandwich consistency, 10^3 grid",
            Duration::from_secs(5),
            sandwich,
        ),
        (
            11,
            "cross-ratio distance oracle",
            Duration::from_secs(2),
            || suite(Suite::DistanceOracle, 10_000),
        ),
        (12, "verify all", Duration::from_secs(60), full_verify),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let v = run();
        let elapsed = start.elapsed();
        let ok = v.ok && elapsed < limit;
        println!(
            "criterion {id:>2} {}: {name}: {} [{:.3} s, limit {} s]",
            if ok { "PASS" } else { "FAIL" },
            v.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        if !ok {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
