//! The `eval` function table.

use fnteich::bounds::{l_of_n, l_of_n_closed_form};
use fnteich::conformal::{
    affine_dilatation, cylinder_interval, elliptic_k, extremal_length, grotzsch_mu,
    grotzsch_mu_derivative, h_derivative, h_of_t, quad_modulus, BoundaryPoint, IdealQuadrilateral,
};
use fnteich::examples::pants1_arc_length;
use fnteich::hyperbolic::{
    collar_halfwidth, collar_margin, hexagon_altitude, hexagon_sides, hyp_distance, theta_of_d,
    HexagonAlternatingSides, UpperHalfPlanePoint,
};
use fnteich::twist::{
    seam_angle_bound, seam_angle_kit, seam_cot_bound, twist_delta, twist_dilatation,
    twist_map_eval, SeamAngleInstance, TwistScenario,
};
use fnteich::{Error, Result};

use crate::format::sig15;

struct Function {
    name: &'static str,
    args: &'static str,
    help: &'static str,
}

const FUNCTIONS: &[Function] = &[
    Function {
        name: "B",
        args: "l",
        help: "collar margin B(l)",
    },
    Function {
        name: "omega",
        args: "l",
        help: "standard collar half-width",
    },
    Function {
        name: "theta",
        args: "d",
        help: "sector half-angle of the d-neighbourhood of a geodesic",
    },
    Function {
        name: "dist",
        args: "x1 y1 x2 y2",
        help: "hyperbolic distance in the upper half-plane",
    },
    Function {
        name: "hex-sides",
        args: "a1 a2 a3",
        help: "opposite sides b1 b2 b3 of a right-angled hexagon",
    },
    Function {
        name: "hex-alt",
        args: "a1 a2 a3 [i]",
        help: "altitudes between a_i and b_i",
    },
    Function {
        name: "K",
        args: "r",
        help: "complete elliptic integral of the first kind, modulus r",
    },
    Function {
        name: "mu",
        args: "r",
        help: "Grotzsch ring modulus",
    },
    Function {
        name: "mu-prime",
        args: "r",
        help: "derivative of the Grotzsch ring modulus",
    },
    Function {
        name: "h",
        args: "t",
        help: "twist modulus function h(t)",
    },
    Function {
        name: "h-prime",
        args: "t",
        help: "derivative of h",
    },
    Function {
        name: "cyl",
        args: "b",
        help: "angular width of the sector covering a b-neighbourhood",
    },
    Function {
        name: "affine-k",
        args: "A",
        help: "dilatation of the shear (x, y) -> (x + A y, y)",
    },
    Function {
        name: "quad-mod",
        args: "p1 p2 p3 p4",
        help: "modulus of an ideal quadrilateral (vertices may be inf)",
    },
    Function {
        name: "twist-k",
        args: "l t",
        help: "dilatation of the explicit twist map",
    },
    Function {
        name: "twist-map",
        args: "l t x y",
        help: "image of x + iy under the twist map",
    },
    Function {
        name: "delta",
        args: "L",
        help: "constants of t <= delta log h(t) up to h(T) = L",
    },
    Function {
        name: "angle-bound",
        args: "M",
        help: "seam angle lower bound for length cap M",
    },
    Function {
        name: "seam-kit",
        args: "c theta",
        help: "exit point and distance quantity of a seam lift",
    },
    Function {
        name: "L",
        args: "N",
        help: "collar sector angle at the length cap N",
    },
    Function {
        name: "arc81",
        args: "n",
        help: "arc length in the cusped pants with boundaries 1 and n",
    },
];

pub fn listing() -> String {
    let mut s = String::from("functions:\n");
    for f in FUNCTIONS {
        s.push_str(&format!("  {:<12} {:<14} {}\n", f.name, f.args, f.help));
    }
    s
}

fn number(s: &str) -> Result<f64> {
    s.parse::<f64>()
        .map_err(|_| Error::Usage(format!("not a number: {s:?}")))
}

fn arity(name: &str, args: &[String], counts: &[usize]) -> Result<Vec<f64>> {
    if !counts.contains(&args.len()) {
        let expected = FUNCTIONS
            .iter()
            .find(|f| f.name == name)
            .map_or("", |f| f.args);
        return Err(Error::Usage(format!(
            "{name} takes arguments `{expected}`, got {}",
            args.len()
        )));
    }
    args.iter().map(|a| number(a)).collect()
}

fn point(x: f64, y: f64) -> Result<UpperHalfPlanePoint> {
    UpperHalfPlanePoint::new(x, y)
}

fn labelled(pairs: &[(&str, f64)]) -> Vec<String> {
    pairs
        .iter()
        .map(|(name, v)| format!("{name} {}", sig15(*v)))
        .collect()
}

/// Output lines of `eval name args...`.
pub fn eval(name: &str, args: &[String]) -> Result<Vec<String>> {
    let single = |v: f64| Ok(vec![sig15(v)]);
    match name {
        "B" => single(collar_margin(arity(name, args, &[1])?[0])?),
        "omega" => single(collar_halfwidth(arity(name, args, &[1])?[0])?),
        "theta" => single(theta_of_d(arity(name, args, &[1])?[0])?),
        "dist" => {
            let a = arity(name, args, &[4])?;
            single(hyp_distance(point(a[0], a[1])?, point(a[2], a[3])?))
        }
        "hex-sides" => {
            let a = arity(name, args, &[3])?;
            let b = hexagon_sides(&HexagonAlternatingSides::new(a[0], a[1], a[2])?);
            Ok(labelled(&[("b1", b[0]), ("b2", b[1]), ("b3", b[2])]))
        }
        "hex-alt" => {
            let a = arity(name, args, &[3, 4])?;
            let hex = HexagonAlternatingSides::new(a[0], a[1], a[2])?;
            if let Some(&i) = a.get(3) {
                if i.fract() != 0.0 || !(1.0..=3.0).contains(&i) {
                    return Err(Error::Usage(format!(
                        "hexagon side index must be 1, 2 or 3, got {i}"
                    )));
                }
                return single(hexagon_altitude(&hex, i as usize)?);
            }
            let h: Vec<f64> = (1..=3)
                .map(|i| hexagon_altitude(&hex, i))
                .collect::<Result<_>>()?;
            Ok(labelled(&[("h1", h[0]), ("h2", h[1]), ("h3", h[2])]))
        }
        "K" => single(elliptic_k(arity(name, args, &[1])?[0])?),
        "mu" => single(grotzsch_mu(arity(name, args, &[1])?[0])?),
        "mu-prime" => single(grotzsch_mu_derivative(arity(name, args, &[1])?[0])?),
        "h" => single(h_of_t(arity(name, args, &[1])?[0])?),
        "h-prime" => single(h_derivative(arity(name, args, &[1])?[0])?),
        "cyl" => single(cylinder_interval(arity(name, args, &[1])?[0])?),
        "affine-k" => {
            let d = affine_dilatation(arity(name, args, &[1])?[0])?;
            Ok(labelled(&[("K", d.k), ("mu", d.beltrami_modulus)]))
        }
        "quad-mod" => {
            if args.len() != 4 {
                return Err(Error::Usage(format!(
                    "quad-mod takes arguments `p1 p2 p3 p4`, got {}",
                    args.len()
                )));
            }
            let p: Vec<BoundaryPoint> = args.iter().map(|a| a.parse()).collect::<Result<_>>()?;
            let q = IdealQuadrilateral::new(p[0], p[1], p[2], p[3])?;
            Ok(labelled(&[
                ("mod", quad_modulus(&q)),
                ("extremal_length", extremal_length(&q)),
            ]))
        }
        "twist-k" => {
            let a = arity(name, args, &[2])?;
            let d = twist_dilatation(&TwistScenario::new(a[0], a[1])?);
            Ok(labelled(&[
                ("shear", d.shear),
                ("K", d.k),
                ("mu", d.beltrami_modulus),
            ]))
        }
        "twist-map" => {
            let a = arity(name, args, &[4])?;
            let w = twist_map_eval(&TwistScenario::new(a[0], a[1])?, point(a[2], a[3])?);
            Ok(labelled(&[("x", w.x()), ("y", w.y())]))
        }
        "delta" => {
            let d = twist_delta(arity(name, args, &[1])?[0])?;
            Ok(labelled(&[
                ("T", d.t_max),
                ("min_h_prime", d.slope),
                ("M", d.rate),
                ("delta", d.delta),
            ]))
        }
        "angle-bound" => {
            let m = arity(name, args, &[1])?[0];
            Ok(labelled(&[
                ("phi_min", seam_angle_bound(m)?),
                ("cot_bound", seam_cot_bound(m)?),
            ]))
        }
        "seam-kit" => {
            let a = arity(name, args, &[2])?;
            let kit = seam_angle_kit(&SeamAngleInstance::new(a[0], a[1])?);
            let inst = kit.instance;
            let mut lines = labelled(&[
                ("lambda", inst.lambda()),
                ("A_x", inst.point_a().x()),
                ("A_y", inst.point_a().y()),
                ("dist_quantity", kit.dist_quantity),
                ("rhs_bound", kit.rhs_bound),
                ("direct_distance", kit.direct_distance),
                ("exp_2d", (2.0 * kit.direct_distance).exp()),
                ("circle_residual", kit.circle_residual),
            ]);
            lines.push(format!("meaning {:?}", kit.meaning));
            lines.push(format!("quantity_exceeds_rhs {}", kit.quantity_exceeds_rhs));
            lines.push(format!(
                "distance_squared_exceeds_rhs {}",
                kit.distance_squared_exceeds_rhs
            ));
            Ok(lines)
        }
        "L" => {
            let n = arity(name, args, &[1])?[0];
            Ok(labelled(&[
                ("L", l_of_n(n)?),
                ("closed_form_2atan_2eN", l_of_n_closed_form(n)?),
            ]))
        }
        "arc81" => {
            let n = arity(name, args, &[1])?[0];
            if !(n >= 1.0 && n.fract() == 0.0 && n <= u64::MAX as f64) {
                return Err(Error::Domain {
                    op: "arc81",
                    reason: format!("n must be an integer >= 1, got {n}"),
                });
            }
            let a = pants1_arc_length(n as u64)?;
            Ok(labelled(&[
                ("cosh_sq", a.cosh_sq),
                ("l", a.l),
                ("3coth2_1", a.bound_3coth),
                ("4coth2_1", a.bound_4coth),
            ]))
        }
        other => Err(Error::Usage(format!(
            "unknown function {other:?}\n{}",
            listing()
        ))),
    }
}
