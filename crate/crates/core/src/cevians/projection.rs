use serde::Serialize;

use super::CevianFrame;
use crate::kernel::{radial_project, Hyperbolic, TangentPoint};

/// A hyperbolic cevian frame pushed onto the tangent plane at `O` by central
/// projection. Lines through `O` stay lines and distances from `O` become
/// `tanh` of the original distance, so the projected figure is a Euclidean
/// cevian configuration with the same ratios.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProjectionOracle {
    /// Images of `A, B, C, D, E, F`.
    pub images: [TangentPoint; 6],
    /// `|A'|/|D'|`, `|B'|/|E'|`, `|C'|/|F'|`.
    pub euclidean_ratios: [f64; 3],
    /// Largest relative difference from the frame's `alpha, beta, gamma`.
    pub max_ratio_deviation: f64,
    /// `abc - (a+b+c+2)` for the Euclidean ratios, relative to `1 + abc`.
    pub euclidean_relation_residual: f64,
    /// Largest sine of the angle between `X'` and `-Y'` for each cevian, and
    /// largest distance of a projected foot from its projected side.
    pub collinearity_residual: f64,
}

fn cross(u: &TangentPoint, v: &TangentPoint) -> f64 {
    u.s * v.t - u.t * v.s
}

fn dot(u: &TangentPoint, v: &TangentPoint) -> f64 {
    u.s * v.s + u.t * v.t
}

/// Distance of `x` from the line through `u` and `v`.
fn off_line(u: &TangentPoint, v: &TangentPoint, x: &TangentPoint) -> f64 {
    let d = TangentPoint {
        s: v.s - u.s,
        t: v.t - u.t,
    };
    let w = TangentPoint {
        s: x.s - u.s,
        t: x.t - u.t,
    };
    cross(&d, &w).abs() / d.norm()
}

pub fn projection_oracle(frame: &CevianFrame<Hyperbolic>) -> ProjectionOracle {
    let o = &frame.o;
    let t = &frame.tri;
    let images = [t.a, t.b, t.c, frame.d, frame.e, frame.f].map(|p| radial_project(o, &p));
    let [a, b, c, d, e, f] = images;

    let euclidean_ratios = [
        a.norm() / d.norm(),
        b.norm() / e.norm(),
        c.norm() / f.norm(),
    ];
    let measured = [frame.alpha, frame.beta, frame.gamma];
    let max_ratio_deviation = euclidean_ratios
        .iter()
        .zip(measured)
        .map(|(x, y)| (x - y).abs() / y)
        .fold(0.0, f64::max);

    let [ea, eb, ec] = euclidean_ratios;
    let abc = ea * eb * ec;
    let euclidean_relation_residual = (abc - (ea + eb + ec + 2.0)).abs() / (1.0 + abc);

    let opposite = |x: &TangentPoint, y: &TangentPoint| {
        let sine = cross(x, y).abs() / (x.norm() * y.norm());
        if dot(x, y) < 0.0 {
            sine
        } else {
            1.0
        }
    };
    let collinearity_residual = [
        opposite(&a, &d),
        opposite(&b, &e),
        opposite(&c, &f),
        off_line(&b, &c, &d),
        off_line(&c, &a, &e),
        off_line(&a, &b, &f),
    ]
    .into_iter()
    .fold(0.0, f64::max);

    ProjectionOracle {
        images,
        euclidean_ratios,
        max_ratio_deviation,
        euclidean_relation_residual,
        collinearity_residual,
    }
}
