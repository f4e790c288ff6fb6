//! Unit-sphere model of spherical geometry.
//!
//! The basepoint is `(1, 0, 0)` so that polar placement mirrors the hyperboloid
//! chart. Great circles are stored by their unit pole.

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tol::TOL_POINT;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(&self, o: &Self) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(&self, o: &Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    fn normalized(&self) -> Option<Self> {
        let n = self.norm();
        (n > TOL_POINT && n.is_finite()).then(|| *self * (1.0 / n))
    }
}

impl Add for Vec3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.x * k, self.y * k, self.z * k)
    }
}

impl Neg for Vec3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

/// A point of the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpherePoint(Vec3);

impl SpherePoint {
    pub const ORIGIN: SpherePoint = SpherePoint(Vec3::new(1.0, 0.0, 0.0));

    pub fn new(n: Vec3) -> Result<Self> {
        if (n.norm() - 1.0).abs() > TOL_POINT {
            return Err(Error::InvalidPoint(format!("{n:?} is not a unit vector")));
        }
        Ok(Self(n))
    }

    pub fn normalize(n: Vec3) -> Result<Self> {
        n.normalized()
            .map(Self)
            .ok_or_else(|| Error::InvalidPoint("zero vector".into()))
    }

    pub fn from_polar(r: f64, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self(Vec3::new(r.cos(), r.sin() * c, r.sin() * s))
    }

    pub fn vec(&self) -> Vec3 {
        self.0
    }

    pub fn dist(&self, other: &Self) -> f64 {
        self.0.cross(&other.0).norm().atan2(self.0.dot(&other.0))
    }

    fn direction_to(&self, toward: &Self) -> Result<Vec3> {
        (toward.0 - self.0 * toward.0.dot(&self.0))
            .normalized()
            .ok_or(Error::Degenerate(
                "no direction toward a coincident or antipodal point",
            ))
    }
}

/// Great-circle distance `arccos(p . q)`, evaluated through `atan2`.
pub fn sphere_dist(p: &SpherePoint, q: &SpherePoint) -> f64 {
    p.dist(q)
}

/// A great circle, oriented by its pole: points with `x . pole > 0` are on the left.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GreatCircle {
    pole: Vec3,
}

impl GreatCircle {
    pub fn pole(&self) -> Vec3 {
        self.pole
    }

    /// `x . pole`, the sine of the signed distance to the circle.
    pub fn side(&self, x: &SpherePoint) -> f64 {
        x.0.dot(&self.pole)
    }
}

/// Great circle through `p` and `q`, oriented from `p` to `q`.
pub fn sphere_geodesic(p: &SpherePoint, q: &SpherePoint) -> Result<GreatCircle> {
    p.0.cross(&q.0)
        .normalized()
        .map(|pole| GreatCircle { pole })
        .ok_or(Error::Degenerate(
            "great circle through coincident or antipodal points",
        ))
}

/// The intersection of two great circles closest to `near`.
pub fn sphere_meet(c1: &GreatCircle, c2: &GreatCircle, near: &SpherePoint) -> Result<SpherePoint> {
    let w = c1.pole.cross(&c2.pole);
    let w = w
        .normalized()
        .ok_or(Error::Degenerate("identical great circles"))?;
    Ok(SpherePoint(if w.dot(&near.0) >= 0.0 { w } else { -w }))
}

pub fn sphere_angle(v: &SpherePoint, p: &SpherePoint, q: &SpherePoint) -> Result<f64> {
    let u1 = v.direction_to(p)?;
    let u2 = v.direction_to(q)?;
    Ok(u1.cross(&u2).norm().atan2(u1.dot(&u2)))
}

pub fn sphere_foot(p: &SpherePoint, c: &GreatCircle) -> Result<SpherePoint> {
    (p.0 - c.pole * p.0.dot(&c.pole))
        .normalized()
        .map(SpherePoint)
        .ok_or(Error::Degenerate("the pole has no unique foot"))
}

pub fn sphere_midpoint(p: &SpherePoint, q: &SpherePoint) -> Result<SpherePoint> {
    if p.dist(q) <= TOL_POINT {
        return Err(Error::Degenerate("midpoint of coincident points"));
    }
    (p.0 + q.0)
        .normalized()
        .map(SpherePoint)
        .ok_or(Error::Degenerate("midpoint of antipodal points"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn distance_examples() {
        let a = SpherePoint::new(Vec3::new(1.0, 0.0, 0.0)).unwrap();
        let b = SpherePoint::new(Vec3::new(0.0, 1.0, 0.0)).unwrap();
        assert!((sphere_dist(&a, &b) - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(sphere_dist(&a, &a), 0.0);
    }

    #[test]
    fn antipodal_geodesic_rejected() {
        let a = SpherePoint::ORIGIN;
        let b = SpherePoint::new(Vec3::new(-1.0, 0.0, 0.0)).unwrap();
        assert!(matches!(sphere_geodesic(&a, &b), Err(Error::Degenerate(_))));
        assert!(matches!(sphere_midpoint(&a, &b), Err(Error::Degenerate(_))));
    }

    #[test]
    fn orientation_matches_hyperbolic_convention() {
        let c = sphere_geodesic(&SpherePoint::ORIGIN, &SpherePoint::from_polar(0.5, 0.0)).unwrap();
        assert!((c.pole().z - 1.0).abs() < 1e-15);
        assert!(c.side(&SpherePoint::from_polar(0.3, 1.0)) > 0.0);
    }

    #[test]
    fn cosine_law_consistency() {
        let a = SpherePoint::from_polar(0.2, 0.1);
        let b = SpherePoint::from_polar(0.6, 2.0);
        let c = SpherePoint::from_polar(0.5, -1.9);
        let (ab, ac, bc) = (a.dist(&b), a.dist(&c), b.dist(&c));
        let cos = (bc.cos() - ab.cos() * ac.cos()) / (ab.sin() * ac.sin());
        assert!((sphere_angle(&a, &b, &c).unwrap() - cos.acos()).abs() < 1e-12);
    }

    #[test]
    fn meet_and_foot() {
        let o = SpherePoint::ORIGIN;
        let c1 = sphere_geodesic(&o, &SpherePoint::from_polar(0.5, 0.0)).unwrap();
        let c2 = sphere_geodesic(&o, &SpherePoint::from_polar(0.5, 1.0)).unwrap();
        let x = sphere_meet(&c1, &c2, &SpherePoint::from_polar(0.1, 0.3)).unwrap();
        assert!(x.dist(&o) < 1e-14);
        let p = SpherePoint::from_polar(0.7, 0.6);
        let f = sphere_foot(&p, &c1).unwrap();
        assert!(c1.side(&f).abs() < 1e-15);
        let right = sphere_angle(&f, &p, &o).unwrap();
        assert!((right - FRAC_PI_2).abs() < 1e-12);
    }
}
