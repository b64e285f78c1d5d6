//! Explicit families: pairs of structures separating the distance variants,
//! and a surface that is upper-bounded for one decomposition but not for
//! another.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fn_space::{FNCoordinate, PantsGraph, Slot, StructureGenerator, StructureWindow};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleKind {
    Pants1,
    Fn1,
    Fn2,
}

impl FromStr for ExampleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pants1" => Ok(ExampleKind::Pants1),
            "fn1" => Ok(ExampleKind::Fn1),
            "fn2" => Ok(ExampleKind::Fn2),
            _ => Err(Error::Usage(format!(
                "unknown example {s:?}; expected pants1, fn1 or fn2"
            ))),
        }
    }
}

/// The arc from the length-`n` boundary of a pants with one cusp and
/// boundary lengths `1, n` back to itself, separating the cusp from the
/// other boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pants1Arc {
    /// `coth^2 n + cosh^2 1/sinh^2 n + 2 coth n cosh 1/sinh n`.
    pub cosh_sq: f64,
    /// Arc length; underflows to 0 once `e^{-n/2}` does (`n` around 1490).
    pub l: f64,
    /// `3 coth^2 1`.
    pub bound_3coth: f64,
    /// `4 coth^2 1`, the value of `cosh_sq` at `n = 1`.
    pub bound_4coth: f64,
}

pub fn pants1_arc_length(n: u64) -> Result<Pants1Arc> {
    if n < 1 {
        return Err(Error::domain("pants1_arc_length", "n must be >= 1"));
    }
    let nf = n as f64;
    let coth_n = 1.0 / nf.tanh();
    let c1 = 1f64.cosh();
    // Past n = 710 sinh n overflows and the last two terms vanish, as they
    // should to double precision.
    let sinh_n = nf.sinh();
    let cosh_sq = coth_n * coth_n + c1 * c1 / (sinh_n * sinh_n) + 2.0 * coth_n * c1 / sinh_n;

    // sinh^2 l = (1 + cosh^2 1 + 2 cosh 1 cosh n) / sinh^2 n, in logs.
    let e = (-2.0 * nf).exp();
    let ln_cosh_n = nf - std::f64::consts::LN_2 + e.ln_1p();
    let ln_sinh_n = nf - std::f64::consts::LN_2 + (-e).ln_1p();
    let ln_num =
        (2.0 * c1).ln() + ln_cosh_n + ((1.0 + c1 * c1) / (2.0 * c1) * (-ln_cosh_n).exp()).ln_1p();
    let l = (0.5 * ln_num - ln_sinh_n).exp().asinh();

    let coth1_sq = 1.0 / 1f64.tanh().powi(2);
    Ok(Pants1Arc {
        cosh_sq,
        l,
        bound_3coth: 3.0 * coth1_sq,
        bound_4coth: 4.0 * coth1_sq,
    })
}

/// Windows of the two structures of an example pair.
pub fn make_fn_pair(
    kind: ExampleKind,
    n: u64,
    window: usize,
) -> Result<(StructureWindow, StructureWindow)> {
    if n < 1 {
        return Err(Error::domain("make_fn_pair", "n must be >= 1"));
    }
    if (window as u64) < n {
        return Err(Error::Usage(format!(
            "window {window} must be at least n = {n}"
        )));
    }
    let (x, y) = match kind {
        ExampleKind::Fn1 => (
            StructureGenerator::ExFn1X { n },
            StructureGenerator::ExFn1Y { n },
        ),
        ExampleKind::Fn2 => (
            StructureGenerator::ExFn2X { n },
            StructureGenerator::ExFn2Y { n },
        ),
        ExampleKind::Pants1 => {
            return Err(Error::Usage("pants1 is not a pair of structures".into()))
        }
    };
    Ok((x.window(window)?, y.window(window)?))
}

/// Two decompositions of the surface made of `X_1, ..., X_{n_max}`, with
/// zero twists.
#[derive(Debug, Clone, PartialEq)]
pub struct Pants1Decompositions {
    /// Pants `P_n` with curves `W_n` (id `2n`, length `n`).
    pub original: PantsGraph,
    pub original_lengths: StructureWindow,
    /// Each `X_n` re-cut along `R_n` (id `2n`, length `2 l(n)`).
    pub recut: PantsGraph,
    pub recut_lengths: StructureWindow,
}

/// Curve ids: `1` is `E_0`, `2n` is `W_n` or `R_n`, `2n + 1` is `E_n`.
/// `E_0` and `E_{n_max}` are boundary curves of the truncation.
pub fn pants1_graph(n_max: usize) -> Result<Pants1Decompositions> {
    if n_max < 1 {
        return Err(Error::domain("pants1_graph", "n_max must be >= 1"));
    }
    let mut original = PantsGraph::new();
    let mut recut = PantsGraph::new();
    let mut lengths = vec![FNCoordinate::boundary(1.0)?];
    let mut recut_lengths = lengths.clone();
    for g in [&mut original, &mut recut] {
        g.add_curve(1, true);
    }
    for n in 1..=n_max {
        let (prev, mid, next) = (2 * n - 1, 2 * n, 2 * n + 1);
        let last = n == n_max;
        for g in [&mut original, &mut recut] {
            g.add_curve(mid, false);
            g.add_curve(next, last);
        }
        original.add_pants([Slot::Cusp, Slot::Curve(prev), Slot::Curve(mid)]);
        original.add_pants([Slot::Cusp, Slot::Curve(next), Slot::Curve(mid)]);
        recut.add_pants([Slot::Cusp, Slot::Cusp, Slot::Curve(mid)]);
        recut.add_pants([Slot::Curve(prev), Slot::Curve(next), Slot::Curve(mid)]);

        let edge = if last {
            FNCoordinate::boundary(1.0)?
        } else {
            FNCoordinate::interior(1.0, 0.0)?
        };
        lengths.push(FNCoordinate::interior(n as f64, 0.0)?);
        lengths.push(edge);
        recut_lengths.push(FNCoordinate::interior(
            2.0 * pants1_arc_length(n as u64)?.l,
            0.0,
        )?);
        recut_lengths.push(edge);
    }
    Ok(Pants1Decompositions {
        original,
        original_lengths: StructureWindow::literal(lengths)?,
        recut,
        recut_lengths: StructureWindow::literal(recut_lengths)?,
    })
}
