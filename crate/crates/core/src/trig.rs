//! Right-triangle cathetus law, Menelaus' ratio, and the hyperbolic cosine and
//! sine laws.
//!
//! Every law comes in two flavours: a closed form taking lengths and angles,
//! and a synthetic route that builds the configuration with the kernel and
//! measures it. Tests compare the two.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{Geometry, GeometryKind};
use crate::tol::{clamp_within, TOL_ID};

fn check_acute(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < FRAC_PI_2) {
        return Err(Error::Domain(format!("angle {alpha} is not in (0, pi/2)")));
    }
    Ok(())
}

/// Cathetus `c` adjacent to the angle `alpha` of a right triangle with
/// hypotenuse `b`.
///
/// `tanh c = cos(alpha) tanh b`, `tan c = cos(alpha) tan b`, or `c = b cos(alpha)`.
pub fn cathetus_from_hypotenuse(b: f64, alpha: f64, kind: GeometryKind) -> Result<f64> {
    check_acute(alpha)?;
    if kind == GeometryKind::Spherical && b >= FRAC_PI_2 {
        return Err(Error::Range(format!("spherical hypotenuse {b} >= pi/2")));
    }
    kind.check_side(b)?;
    Ok(match kind {
        GeometryKind::Hyperbolic => (alpha.cos() * b.tanh()).atanh(),
        GeometryKind::Spherical => (alpha.cos() * b.tan()).atan(),
        GeometryKind::Euclidean => b * alpha.cos(),
    })
}

/// `sinh(sum)/sinh(diff)` (or `sin`, or the plain ratio), where the caller
/// passes `sum = AC + AB` and `diff = AC - AB`.
pub fn menelaus_ratio(sum: f64, diff: f64, kind: GeometryKind) -> Result<f64> {
    if !(diff > 0.0) || !(sum > diff) {
        return Err(Error::Degenerate("Menelaus ratio needs sum > diff > 0"));
    }
    if kind == GeometryKind::Spherical && sum >= std::f64::consts::PI {
        return Err(Error::Range(format!("spherical sum {sum} >= pi")));
    }
    Ok(kind.sine_len(sum) / kind.sine_len(diff))
}

/// `(1 + cos a) / (1 - cos a)`, the value every Menelaus ratio takes at angle `a`.
pub fn menelaus_rhs(alpha: f64) -> f64 {
    // 1 - cos a = 2 sin^2(a/2) avoids cancellation for small angles
    let half = 0.5 * alpha;
    (1.0 + alpha.cos()) / (2.0 * half.sin() * half.sin())
}

/// A right triangle `ABC` with the right angle at `B` and apex angle `alpha` at `A`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RightTriangleConfig {
    pub kind: GeometryKind,
    pub alpha: f64,
    /// Hypotenuse `AC`.
    pub b: f64,
    /// Cathetus `AB`, adjacent to `alpha`.
    pub c: f64,
    /// Cathetus `BC`, opposite `alpha`.
    pub a: f64,
}

impl RightTriangleConfig {
    /// Build the triangle with the kernel: `A` at the origin, `C` at distance
    /// `b` on the ray at angle `alpha`, and `B` the foot of the perpendicular
    /// from `C` onto the reference ray.
    pub fn synthetic<G: Geometry>(b: f64, alpha: f64) -> Result<Self> {
        check_acute(alpha)?;
        G::KIND.check_side(b)?;
        let a_pt = G::origin();
        let c_pt = G::polar(b, alpha);
        let axis = G::line_through(&a_pt, &G::polar(1.0, 0.0))?;
        let b_pt = G::foot(&c_pt, &axis)?;
        Ok(Self {
            kind: G::KIND,
            alpha,
            b,
            c: G::distance(&a_pt, &b_pt),
            a: G::distance(&b_pt, &c_pt),
        })
    }

    /// Pythagorean residual: `cosh b - cosh a cosh c`, `cos b - cos a cos c`
    /// or `b^2 - a^2 - c^2`.
    pub fn pythagoras_residual(&self) -> f64 {
        match self.kind {
            GeometryKind::Hyperbolic => self.b.cosh() - self.a.cosh() * self.c.cosh(),
            GeometryKind::Spherical => self.b.cos() - self.a.cos() * self.c.cos(),
            GeometryKind::Euclidean => self.b * self.b - self.a * self.a - self.c * self.c,
        }
    }

    /// `T(c) - cos(alpha) T(b)` with `T` the geometry's ratio transform.
    pub fn cathetus_residual(&self) -> f64 {
        self.kind.ratio_len(self.c) - self.alpha.cos() * self.kind.ratio_len(self.b)
    }

    /// Relative residual of Menelaus' ratio against `(1+cos a)/(1-cos a)`.
    pub fn menelaus_residual(&self) -> Result<f64> {
        let lhs = menelaus_ratio(self.b + self.c, self.b - self.c, self.kind)?;
        let rhs = menelaus_rhs(self.alpha);
        Ok((lhs - rhs).abs() / rhs)
    }
}

/// Angle opposite side `a` of a hyperbolic triangle with sides `a, b, c`.
pub fn hyp_angle_from_sides(a: f64, b: f64, c: f64) -> Result<f64> {
    for s in [a, b, c] {
        GeometryKind::Hyperbolic.check_side(s)?;
    }
    let slack = TOL_ID * (a + b + c);
    if a >= b + c + slack || b >= a + c + slack || c >= a + b + slack {
        return Err(Error::Degenerate("sides violate the triangle inequality"));
    }
    let cos = (b.cosh() * c.cosh() - a.cosh()) / (b.sinh() * c.sinh());
    let cos = clamp_within(cos, -1.0, 1.0)
        .ok_or(Error::Degenerate("sides violate the triangle inequality"))?;
    Ok(cos.acos())
}

/// Side opposite the angle `angle` enclosed by sides `b` and `c`.
pub fn hyp_side_from_sas(b: f64, c: f64, angle: f64) -> Result<f64> {
    GeometryKind::Hyperbolic.check_side(b)?;
    GeometryKind::Hyperbolic.check_side(c)?;
    if !(0.0..=std::f64::consts::PI).contains(&angle) {
        return Err(Error::Domain(format!("angle {angle} outside [0, pi]")));
    }
    let cosh_a = b.cosh() * c.cosh() - b.sinh() * c.sinh() * angle.cos();
    Ok(cosh_a.max(1.0).acosh())
}

/// Largest relative spread of `S(side) / sin(opposite angle)` over the three
/// vertices, with `S` the geometry's sine transform.
pub fn sine_law_residual<G: Geometry>(a: &G::Point, b: &G::Point, c: &G::Point) -> Result<f64> {
    let ratio = |v: &G::Point, p: &G::Point, q: &G::Point| -> Result<f64> {
        Ok(G::sine_len(G::distance(p, q)) / G::angle_at(v, p, q)?.sin())
    };
    let r = [ratio(a, b, c)?, ratio(b, c, a)?, ratio(c, a, b)?];
    let hi = r.iter().cloned().fold(f64::MIN, f64::max);
    let lo = r.iter().cloned().fold(f64::MAX, f64::min);
    Ok((hi - lo) / hi.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{Euclidean, Hyperbolic, Spherical};
    use std::f64::consts::PI;

    #[test]
    fn cathetus_examples() {
        let c = cathetus_from_hypotenuse(1.0, PI / 3.0, GeometryKind::Hyperbolic).unwrap();
        assert!((c - (0.5 * 1f64.tanh()).atanh()).abs() < 1e-15);
        let e = cathetus_from_hypotenuse(2.0, PI / 3.0, GeometryKind::Euclidean).unwrap();
        assert!((e - 1.0).abs() < 1e-15);
        let tiny =
            cathetus_from_hypotenuse(1.0, FRAC_PI_2 - 1e-9, GeometryKind::Hyperbolic).unwrap();
        assert!(tiny < 1e-8);
    }

    #[test]
    fn cathetus_errors() {
        assert!(matches!(
            cathetus_from_hypotenuse(1.0, 2.0, GeometryKind::Hyperbolic),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            cathetus_from_hypotenuse(1.0, 0.0, GeometryKind::Hyperbolic),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            cathetus_from_hypotenuse(1.6, 0.5, GeometryKind::Spherical),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn synthetic_matches_closed_form() {
        let t = RightTriangleConfig::synthetic::<Hyperbolic>(1.0, PI / 3.0).unwrap();
        let c = cathetus_from_hypotenuse(1.0, PI / 3.0, GeometryKind::Hyperbolic).unwrap();
        assert!((t.c - c).abs() < 1e-12);
        assert!(t.pythagoras_residual().abs() < 1e-12);
        let s = RightTriangleConfig::synthetic::<Spherical>(1.2, 0.7).unwrap();
        assert!(s.cathetus_residual().abs() < 1e-12);
        assert!(s.pythagoras_residual().abs() < 1e-12);
        let e = RightTriangleConfig::synthetic::<Euclidean>(2.0, PI / 3.0).unwrap();
        assert!((e.c - 1.0).abs() < 1e-12);
    }

    #[test]
    fn menelaus_examples() {
        assert!((menelaus_rhs(PI / 3.0) - 3.0).abs() < 1e-14);
        let t = RightTriangleConfig::synthetic::<Hyperbolic>(2.0, 0.8).unwrap();
        assert!(t.menelaus_residual().unwrap() < 1e-12);
        assert!(matches!(
            menelaus_ratio(1.0, 0.0, GeometryKind::Hyperbolic),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn nested_triangles_share_the_ratio() {
        let alpha = 0.9;
        let small = RightTriangleConfig::synthetic::<Hyperbolic>(0.7, alpha).unwrap();
        let large = RightTriangleConfig::synthetic::<Hyperbolic>(3.1, alpha).unwrap();
        let r1 = menelaus_ratio(
            small.b + small.c,
            small.b - small.c,
            GeometryKind::Hyperbolic,
        )
        .unwrap();
        let r2 = menelaus_ratio(
            large.b + large.c,
            large.b - large.c,
            GeometryKind::Hyperbolic,
        )
        .unwrap();
        assert!((r1 - r2).abs() / r1 < 1e-10);
    }

    #[test]
    fn cosine_law_round_trip() {
        let t = RightTriangleConfig::synthetic::<Hyperbolic>(1.5, 0.6).unwrap();
        let apex = hyp_angle_from_sides(t.a, t.b, t.c).unwrap();
        assert!((apex - 0.6).abs() < 1e-10);
        let right = hyp_angle_from_sides(t.b, t.a, t.c).unwrap();
        assert!((right - FRAC_PI_2).abs() < 1e-10);
        let b = hyp_side_from_sas(t.a, t.c, FRAC_PI_2).unwrap();
        assert!((b - t.b).abs() < 1e-12);
    }

    #[test]
    fn equilateral_angles_agree() {
        let s = 1.3;
        let x = hyp_angle_from_sides(s, s, s).unwrap();
        assert!(x < PI / 3.0);
        assert_eq!(x, hyp_angle_from_sides(s, s, s).unwrap());
    }

    #[test]
    fn triangle_inequality_violation() {
        assert!(matches!(
            hyp_angle_from_sides(3.0, 1.0, 1.0),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn sine_law_on_a_triangle() {
        let (a, b, c) = (
            Hyperbolic::polar(0.3, 0.1),
            Hyperbolic::polar(1.4, 2.1),
            Hyperbolic::polar(2.0, -1.7),
        );
        assert!(sine_law_residual::<Hyperbolic>(&a, &b, &c).unwrap() < 1e-12);
    }
}
