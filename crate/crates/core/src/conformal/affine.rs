//! Dilatation of the real shear `(x, y) -> (x + A y, y)`.

use crate::error::{Error, Result};

/// Maximal dilatation and `|μ|` of an affine shear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineDilatation {
    pub k: f64,
    pub beltrami_modulus: f64,
}

/// `K = 1 + A^2/2 + (|A|/2) sqrt(4 + A^2)`, `|μ| = |A| / sqrt(4 + A^2)`.
pub fn affine_dilatation(a: f64) -> Result<AffineDilatation> {
    if !a.is_finite() {
        return Err(Error::domain(
            "affine_dilatation",
            format!("shear must be finite, got {a}"),
        ));
    }
    let a = a.abs();
    let root = (4.0 + a * a).sqrt();
    Ok(AffineDilatation {
        k: 1.0 + 0.5 * a * a + 0.5 * a * root,
        beltrami_modulus: a / root,
    })
}
