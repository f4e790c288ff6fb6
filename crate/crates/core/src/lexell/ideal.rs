use std::f64::consts::{FRAC_PI_2, PI};

use super::area::triangle_area_of;
use crate::error::{Error, Result};
use crate::kernel::{geodesic_through, HPoint, Isometry};

fn check_angles(alpha: f64, beta: f64) -> Result<()> {
    if !(alpha > 0.0 && beta > 0.0 && alpha + beta <= PI) {
        return Err(Error::Domain(format!(
            "angles ({alpha}, {beta}) need alpha, beta > 0 and alpha + beta <= pi"
        )));
    }
    Ok(())
}

/// Area `pi/2 - atan(1 / sinh c)` of either half of a triangle with two ideal
/// vertices and its third vertex at distance `c` from the opposite side.
pub fn ideal_half_area(c: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::Domain(format!("distance {c} is not positive")));
    }
    Ok(FRAC_PI_2 - (1.0 / c.sinh()).atan())
}

/// Both halves together.
pub fn ideal_limit_area(c: f64) -> Result<f64> {
    Ok(2.0 * ideal_half_area(c)?)
}

/// `sinh c = (cos a + cos b) / (sin a sin b)` for the finite side `c` of a
/// triangle with angles `a`, `b` and one ideal vertex.
pub fn sinh_c_from_angles(alpha: f64, beta: f64) -> Result<f64> {
    check_angles(alpha, beta)?;
    Ok((alpha.cos() + beta.cos()) / (alpha.sin() * beta.sin()))
}

/// `cosh c = (1 + cos a cos b) / (sin a sin b)`, the angle form of the
/// cosine law with the third angle zero.
pub fn cosh_c_from_angles(alpha: f64, beta: f64) -> Result<f64> {
    check_angles(alpha, beta)?;
    Ok((1.0 + alpha.cos() * beta.cos()) / (alpha.sin() * beta.sin()))
}

/// Area of the triangle with apex at distance `c` above the midpoint of a
/// segment of half-length `t`, approximating the ideal case as `t` grows.
pub fn truncated_ideal_area(c: f64, t: f64) -> Result<f64> {
    if !(c > 0.0) || !(t > 0.0) {
        return Err(Error::Domain(format!(
            "need c > 0 and t > 0 (got {c}, {t})"
        )));
    }
    let a = HPoint::from_polar(t, 0.0);
    let b = HPoint::from_polar(t, PI);
    let p = HPoint::from_polar(c, FRAC_PI_2);
    triangle_area_of(&a, &b, &p)
}

/// Coordinate check of the angle form: place `U` at the basepoint and `V` at
/// distance `acosh(cosh_c_from_angles)` along the `x1` axis, shoot rays making
/// angles `alpha` at `U` and `beta` at `V` into the upper half, and return the
/// chart distance between their ideal endpoints.
pub fn asymptotic_defect(alpha: f64, beta: f64) -> Result<f64> {
    let c = cosh_c_from_angles(alpha, beta)?.acosh();
    let u = HPoint::ORIGIN;
    let v = HPoint::from_polar(c, 0.0);
    let ray_u = geodesic_through(&u, &HPoint::from_polar(1.0, alpha))?;
    let frame = Isometry::from_frame(&v, &u)?;
    let ray_v = geodesic_through(&v, &frame.apply(&HPoint::from_polar(1.0, -beta)))?;
    let (_, eu) = ray_u.ideal_endpoints();
    let (_, ev) = ray_v.ideal_endpoints();
    Ok((eu[0] - ev[0]).hypot(eu[1] - ev[1]))
}
