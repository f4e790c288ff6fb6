use std::f64::consts::PI;

use crate::cevians::Triangle;
use crate::error::{Error, Result};
use crate::kernel::{angle_at, HPoint, Hyperbolic, MinkowskiVec};

/// Area of a hyperbolic triangle: `pi` minus its angle sum.
pub fn triangle_area(tri: &Triangle<Hyperbolic>) -> f64 {
    triangle_area_of(&tri.a, &tri.b, &tri.c).expect("validated triangle")
}

/// As [`triangle_area`] for three raw points, without the side-length cap.
/// Fails only on coincident vertices.
pub fn triangle_area_of(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<f64> {
    let sum = angle_at(a, b, c)? + angle_at(b, c, a)? + angle_at(c, a, b)?;
    Ok((PI - sum).max(0.0))
}

/// `f(u) = (k + u) / (k u + 1)` with `k = cosh x`: the sine of the angle sum
/// of the non-right angles in a right triangle with legs `x` and `acosh u`.
pub fn area_function(x: f64, u: f64) -> f64 {
    let k = x.cosh();
    (k + u) / (k * u + 1.0)
}

/// `f(u)` written as `(k u - 1)(k + u) / ((k u)^2 - 1)`. Agrees with
/// [`area_function`] after cancelling `k u - 1`; undefined at `k u = 1`.
pub fn area_function_expanded(x: f64, u: f64) -> f64 {
    let k = x.cosh();
    (k * u - 1.0) * (k + u) / ((k * u).powi(2) - 1.0)
}

/// `f'(u) = -sinh^2 x / (k u + 1)^2`.
pub fn area_derivative(x: f64, u: f64) -> f64 {
    let s = x.sinh();
    -s * s / (x.cosh() * u + 1.0).powi(2)
}

/// Central difference of [`area_function_expanded`] with step `h`.
pub fn finite_difference_derivative(x: f64, u: f64, h: f64) -> f64 {
    (area_function_expanded(x, u + h) - area_function_expanded(x, u - h)) / (2.0 * h)
}

/// Area `arccos f(cosh l2)` of a right triangle with legs `l1`, `l2`.
///
/// Uses `1 - f = (k - 1)(u - 1)/(k u + 1)` and `arccos(1 - 2s^2) = 2 asin s`
/// so thin triangles keep full relative precision.
pub fn right_triangle_area(l1: f64, l2: f64) -> f64 {
    let (h1, h2) = ((0.5 * l1).sinh(), (0.5 * l2).sinh());
    let (km1, um1) = (2.0 * h1 * h1, 2.0 * h2 * h2);
    let denom = l1.cosh() * l2.cosh() + 1.0;
    let s = (km1 * um1 / (2.0 * denom)).sqrt();
    2.0 * s.min(1.0).asin()
}

/// Area of `APB` with `A`, `B` at distance `x` from the foot `O` of the
/// perpendicular from `P`, and `OP = y`: `2 arccos f(cosh y)`.
pub fn apex_area_formula(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0) || !(y > 0.0) {
        return Err(Error::Domain(format!(
            "apex area needs x > 0, y > 0 (got {x}, {y})"
        )));
    }
    Ok(2.0 * right_triangle_area(x, y))
}

/// The same area measured from coordinates.
pub fn apex_area_synthetic(x: f64, y: f64) -> Result<f64> {
    let a = HPoint::from_polar(x, 0.0);
    let b = HPoint::from_polar(x, PI);
    let p = HPoint::from_polar(y, 0.5 * PI);
    triangle_area_of(&a, &p, &b)
}

/// Areas `(D1, D2)` of the two right triangles cut from `AB G(t)` by the
/// perpendicular `F G(t)`, where `F` is at signed distance `a` from the
/// midpoint of `AB` toward `A` and `G(t)` is at distance `t` from `F`.
pub fn split_areas(x: f64, a: f64, t: f64) -> Result<(f64, f64)> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("half-base {x} is not positive")));
    }
    if !(a.abs() < x) {
        return Err(Error::Domain(format!("foot offset |{a}| is not below {x}")));
    }
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("height {t} is negative")));
    }
    Ok((right_triangle_area(x - a, t), right_triangle_area(x + a, t)))
}

/// Area of `AB G(t)` from coordinates, for the configuration of [`split_areas`].
pub fn split_area_synthetic(x: f64, a: f64, t: f64) -> Result<f64> {
    let pa = HPoint::from_polar(x, 0.0);
    let pb = HPoint::from_polar(x, PI);
    let f = HPoint::from_polar(a, 0.0);
    let up = MinkowskiVec::new(0.0, 0.0, 1.0);
    let g = HPoint::normalize(f.vec() * t.cosh() + up * t.sinh())?;
    triangle_area_of(&pa, &pb, &g)
}
