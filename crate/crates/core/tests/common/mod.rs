//! Reference computations that share no code with the library.

#![allow(dead_code)]

use std::f64::consts::FRAC_PI_2;

const GL_X: [f64; 4] = [
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_3,
];
const GL_W: [f64; 4] = [
    0.362_683_783_378_362,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_5,
    0.101_228_536_290_376_3,
];

/// Composite 8-point Gauss-Legendre rule on `[a, b]`.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut sum = 0.0;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * h;
        for (x, w) in GL_X.iter().zip(GL_W) {
            sum += w * (f(mid + 0.5 * h * x) + f(mid - 0.5 * h * x));
        }
    }
    0.5 * h * sum
}

/// `K(r) = ∫_0^{π/2} dφ / sqrt(1 - r² sin² φ)`.
pub fn k_quad(r: f64) -> f64 {
    integrate(
        |phi| 1.0 / (1.0 - r * r * phi.sin().powi(2)).sqrt(),
        0.0,
        FRAC_PI_2,
        256,
    )
}

/// `μ(r) = (π/2) K(r') / K(r)`.
pub fn mu_quad(r: f64) -> f64 {
    let rc = (1.0 - r * r).sqrt();
    FRAC_PI_2 * k_quad(rc) / k_quad(r)
}

/// Distance through the Cayley map onto the disk:
/// `d = 2 artanh |(a - b)/(1 - conj(a) b)|`.
pub fn disk_distance(z: (f64, f64), w: (f64, f64)) -> f64 {
    let cayley = |(x, y): (f64, f64)| {
        // (z - i)/(z + i)
        let (nr, ni) = (x, y - 1.0);
        let (dr, di) = (x, y + 1.0);
        let den = dr * dr + di * di;
        ((nr * dr + ni * di) / den, (ni * dr - nr * di) / den)
    };
    let (a, b) = (cayley(z), cayley(w));
    let num = ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt();
    // 1 - conj(a) b
    let (cr, ci) = (1.0 - (a.0 * b.0 + a.1 * b.1), -(a.0 * b.1 - a.1 * b.0));
    2.0 * (num / cr.hypot(ci)).atanh()
}

/// Maximal dilatation of a planar map at `(x, y)` from a central-difference
/// Jacobian.
pub fn jacobian_dilatation(f: impl Fn(f64, f64) -> (f64, f64), x: f64, y: f64) -> f64 {
    let h = 1e-6 * x.hypot(y).max(1.0);
    let (fx1, fx0) = (f(x + h, y), f(x - h, y));
    let (fy1, fy0) = (f(x, y + h), f(x, y - h));
    let (ux, vx) = ((fx1.0 - fx0.0) / (2.0 * h), (fx1.1 - fx0.1) / (2.0 * h));
    let (uy, vy) = ((fy1.0 - fy0.0) / (2.0 * h), (fy1.1 - fy0.1) / (2.0 * h));
    // f_z = (f_x - i f_y)/2, f_zbar = (f_x + i f_y)/2
    let fz = (0.5 * (ux + vy), 0.5 * (vx - uy));
    let fzb = (0.5 * (ux - vy), 0.5 * (vx + uy));
    let (a, b) = (fz.0.hypot(fz.1), fzb.0.hypot(fzb.1));
    (a + b) / (a - b)
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}
