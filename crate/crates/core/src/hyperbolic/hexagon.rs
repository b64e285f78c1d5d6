//! Right-angled hexagon trigonometry.
//!
//! Sides are listed cyclically as `a1, b3, a2, b1, a3, b2`, so `a_i` faces `b_i`.

use super::{arcosh, arcosh_1p};
use crate::error::{require_positive, Error, Result};

/// Three pairwise non-consecutive sides of a right-angled hexagon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HexagonAlternatingSides {
    a: [f64; 3],
}

impl HexagonAlternatingSides {
    pub fn new(a1: f64, a2: f64, a3: f64) -> Result<Self> {
        for (name, v) in [("a1", a1), ("a2", a2), ("a3", a3)] {
            require_positive("hexagon", name, v)?;
        }
        Ok(HexagonAlternatingSides { a: [a1, a2, a3] })
    }

    pub fn from_array(a: [f64; 3]) -> Result<Self> {
        Self::new(a[0], a[1], a[2])
    }

    pub fn as_array(&self) -> [f64; 3] {
        self.a
    }
}

/// The sides `b1, b2, b3` opposite `a1, a2, a3`, from
/// `cosh b1 = (cosh a1 + cosh a2 cosh a3) / (sinh a2 sinh a3)` and cyclic.
pub fn hexagon_sides(a: &HexagonAlternatingSides) -> [f64; 3] {
    pants_seam_lengths(a.a)
}

/// Same formula on half-lengths where a zero entry stands for a cusp.
/// Sides adjacent to a cusp come out as `+inf`.
pub(crate) fn pants_seam_lengths(a: [f64; 3]) -> [f64; 3] {
    let mut b = [0.0; 3];
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let den = a[j].sinh() * a[k].sinh();
        if den == 0.0 {
            b[i] = f64::INFINITY;
            continue;
        }
        // cosh a_j cosh a_k - sinh a_j sinh a_k = cosh(a_j - a_k), so
        // cosh b_i - 1 needs no subtraction.
        let excess = (a[i].cosh() + (a[j] - a[k]).cosh()) / den;
        b[i] = arcosh_1p(excess);
    }
    b
}

/// `cosh h_i` for the common perpendicular between `a_i` and `b_i`; zero
/// entries other than `a_i` are cusps (`cosh 0 = 1`).
pub(crate) fn pants_altitude_cosh(a: [f64; 3], i: usize) -> f64 {
    let c = a.map(f64::cosh);
    let num = -1.0 + c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + 2.0 * c[0] * c[1] * c[2];
    let s = a[i].sinh();
    if s == 0.0 {
        return f64::INFINITY;
    }
    num.sqrt() / s
}

/// Length of the shortest arc joining `a_i` to `b_i` (`i` in `1..=3`):
///
/// ```text
/// cosh^2 h_i = (-1 + cosh^2 a1 + cosh^2 a2 + cosh^2 a3 + 2 cosh a1 cosh a2 cosh a3) / sinh^2 a_i
/// ```
pub fn hexagon_altitude(a: &HexagonAlternatingSides, i: usize) -> Result<f64> {
    if !(1..=3).contains(&i) {
        return Err(Error::Usage(format!(
            "hexagon side index must be 1, 2 or 3, got {i}"
        )));
    }
    Ok(arcosh(pants_altitude_cosh(a.a, i - 1)))
}
