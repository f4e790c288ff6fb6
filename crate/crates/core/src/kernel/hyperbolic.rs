//! Hyperboloid (Minkowski) model of the hyperbolic plane.
//!
//! Points live on the upper sheet of `<x,x> = -1` in `R^{2,1}` with the form
//! `<x,y> = -x0*y0 + x1*y1 + x2*y2`. A geodesic is the intersection of the sheet
//! with a plane through the origin and is stored as the unit spacelike normal of
//! that plane. The Poincaré disk is only a chart for input and rendering.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tol::{TOL_CLAMP, TOL_ID, TOL_POINT};

/// A vector of Minkowski space `R^{2,1}`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct MinkowskiVec {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
}

impl MinkowskiVec {
    pub const fn new(x0: f64, x1: f64, x2: f64) -> Self {
        Self { x0, x1, x2 }
    }

    /// The Minkowski form `<self, other>`.
    #[inline]
    pub fn inner(&self, other: &Self) -> f64 {
        -self.x0 * other.x0 + self.x1 * other.x1 + self.x2 * other.x2
    }

    /// Minkowski cross product: the result is `<,>`-orthogonal to both inputs.
    ///
    /// This is the Euclidean cross product with its time component negated.
    /// For unit inputs `<a x b, a x b> = <a,b>^2 - <a,a><b,b>`.
    #[inline]
    pub fn cross(&self, other: &Self) -> Self {
        Self {
            x0: -(self.x1 * other.x2 - self.x2 * other.x1),
            x1: self.x2 * other.x0 - self.x0 * other.x2,
            x2: self.x0 * other.x1 - self.x1 * other.x0,
        }
    }

    /// Euclidean determinant of the rows `self, b, c` in ambient coordinates.
    pub fn det(&self, b: &Self, c: &Self) -> f64 {
        self.x0 * (b.x1 * c.x2 - b.x2 * c.x1) - self.x1 * (b.x0 * c.x2 - b.x2 * c.x0)
            + self.x2 * (b.x0 * c.x1 - b.x1 * c.x0)
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> f64 {
        self.x0.abs().max(self.x1.abs()).max(self.x2.abs())
    }

    /// Rescale a spacelike vector to `<v,v> = 1`.
    pub fn unit_spacelike(&self) -> Result<Self> {
        let q = self.inner(self);
        if !(q > 0.0) || !q.is_finite() {
            return Err(Error::Degenerate("vector is not spacelike"));
        }
        Ok(*self * (1.0 / q.sqrt()))
    }
}

impl Add for MinkowskiVec {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x0 + o.x0, self.x1 + o.x1, self.x2 + o.x2)
    }
}

impl Sub for MinkowskiVec {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x0 - o.x0, self.x1 - o.x1, self.x2 - o.x2)
    }
}

impl Mul<f64> for MinkowskiVec {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.x0 * k, self.x1 * k, self.x2 * k)
    }
}

impl Neg for MinkowskiVec {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x0, -self.x1, -self.x2)
    }
}

/// `<x, y>`.
#[inline]
pub fn mink_inner(x: &MinkowskiVec, y: &MinkowskiVec) -> f64 {
    x.inner(y)
}

/// A point of the hyperbolic plane on the upper sheet of the hyperboloid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HPoint(MinkowskiVec);

impl HPoint {
    /// The basepoint `(1, 0, 0)`.
    pub const ORIGIN: HPoint = HPoint(MinkowskiVec::new(1.0, 0.0, 0.0));

    /// Accept `v` as-is if it satisfies the hyperboloid invariant, with drift
    /// measured relative to `x0^2`.
    pub fn new(v: MinkowskiVec) -> Result<Self> {
        let drift = v.inner(&v) + 1.0;
        if !v.x0.is_finite() || !v.x1.is_finite() || !v.x2.is_finite() {
            return Err(Error::InvalidPoint(format!("non-finite coordinates {v:?}")));
        }
        // <v,v> carries rounding error near eps * x0^2, so far from the
        // basepoint the allowed drift grows with it
        if drift.abs() > TOL_POINT * v.x0.max(1.0).powi(2) || v.x0 <= 0.0 {
            return Err(Error::InvalidPoint(format!(
                "{v:?} is off the upper sheet (<v,v>+1 = {drift:e})"
            )));
        }
        Ok(Self(v))
    }

    /// Project a timelike vector onto the sheet by dividing by `sqrt(-<v,v>)`.
    /// Vectors on the lower cone are flipped.
    pub fn normalize(v: MinkowskiVec) -> Result<Self> {
        let q = -v.inner(&v);
        if !(q > 0.0) || !q.is_finite() {
            return Err(Error::InvalidPoint(format!("{v:?} is not timelike")));
        }
        let s = if v.x0 > 0.0 { 1.0 } else { -1.0 };
        // Far from the basepoint <v,v> is computed with absolute error near
        // eps * |v|^2; rescaling by such noise only adds error.
        let noise = 8.0 * f64::EPSILON * (v.x0 * v.x0 + v.x1 * v.x1 + v.x2 * v.x2);
        if (q - 1.0).abs() <= noise {
            return Ok(Self(v * s));
        }
        Ok(Self(v * (s / q.sqrt())))
    }

    /// Point at distance `r` from the basepoint in direction `theta`
    /// (measured counterclockwise from the `x1` axis).
    pub fn from_polar(r: f64, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self(MinkowskiVec::new(r.cosh(), r.sinh() * c, r.sinh() * s))
    }

    pub fn vec(&self) -> MinkowskiVec {
        self.0
    }

    /// Hyperbolic distance. Infallible because the sheet invariant holds.
    pub fn dist(&self, other: &HPoint) -> f64 {
        let c = -self.0.inner(&other.0);
        if c < 2.0 {
            // 4 sinh^2(d/2) = <p-q, p-q> keeps precision for nearby points.
            let w = self.0 - other.0;
            2.0 * (w.inner(&w).max(0.0).sqrt() / 2.0).asinh()
        } else {
            c.acosh()
        }
    }

    /// Unit tangent vector at `self` pointing along the geodesic toward `toward`.
    pub fn direction_to(&self, toward: &HPoint) -> Result<MinkowskiVec> {
        let v = toward.0 + self.0 * toward.0.inner(&self.0);
        let q = v.inner(&v);
        if q <= (TOL_POINT * TOL_POINT) {
            return Err(Error::Degenerate("coincident points have no direction"));
        }
        Ok(v * (1.0 / q.sqrt()))
    }
}

/// `acosh(-<p,q>)`, rejecting pairs whose product is below 1 beyond [`TOL_CLAMP`].
pub fn hdist(p: &HPoint, q: &HPoint) -> Result<f64> {
    let c = -p.0.inner(&q.0);
    if c < 1.0 - TOL_CLAMP || !c.is_finite() {
        return Err(Error::InvalidPoint(format!("-<p,q> = {c} is below 1")));
    }
    Ok(p.dist(q))
}

/// The point at distance `t >= 0` from `p` in the unit tangent direction `n`.
///
/// Equal to `cosh(t) p + sinh(t) n`, but evaluated from the point of the
/// geodesic nearest the basepoint: when `p` is far out and `n` points back
/// inward the direct sum cancels away most of its digits.
pub fn point_along(p: &HPoint, n: &MinkowskiVec, t: f64) -> Result<HPoint> {
    if (n.inner(n) - 1.0).abs() > TOL_ID {
        return Err(Error::Contract("direction is not a unit spacelike vector"));
    }
    if p.0.inner(n).abs() > TOL_ID {
        return Err(Error::Contract("direction is not tangent at the point"));
    }
    if !(t >= 0.0) {
        return Err(Error::Contract("displacement must be non-negative"));
    }
    let g = Geodesic::from_normal(p.0.cross(n))?;
    let g = if g.tangent_at(p).inner(n) < 0.0 {
        g.reversed()
    } else {
        g
    };
    let c = g.base_point();
    let s0 = p.0.inner(&g.tangent_at(&c)).asinh();
    Ok(g.point_at(s0 + t))
}

/// A complete geodesic, stored as the unit spacelike normal of its plane.
///
/// `normal` and `-normal` give the same point set with opposite orientation.
/// Points with `<x, normal> > 0` lie to the left of the direction of travel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Geodesic {
    normal: MinkowskiVec,
}

impl Geodesic {
    pub fn from_normal(normal: MinkowskiVec) -> Result<Self> {
        Ok(Self {
            normal: normal.unit_spacelike()?,
        })
    }

    pub fn normal(&self) -> MinkowskiVec {
        self.normal
    }

    pub fn reversed(&self) -> Self {
        Self {
            normal: -self.normal,
        }
    }

    /// `<x, normal>`, which equals `sinh` of the signed distance to the geodesic.
    pub fn side(&self, x: &HPoint) -> f64 {
        x.0.inner(&self.normal)
    }

    pub fn signed_distance(&self, x: &HPoint) -> f64 {
        self.side(x).asinh()
    }

    /// Point of the geodesic closest to the basepoint.
    pub fn base_point(&self) -> HPoint {
        foot_of_perpendicular(&HPoint::ORIGIN, self)
    }

    /// Unit tangent along the geodesic at `at`, agreeing with its orientation.
    pub fn tangent_at(&self, at: &HPoint) -> MinkowskiVec {
        self.normal.cross(&at.0)
    }

    /// Unit-speed parametrisation through [`Geodesic::base_point`].
    pub fn point_at(&self, s: f64) -> HPoint {
        let c = self.base_point();
        let tau = self.tangent_at(&c);
        // c and tau are orthonormal, so no renormalisation (which would lose
        // everything to cancellation at large s)
        HPoint(c.0 * s.cosh() + tau * s.sinh())
    }

    /// Ideal endpoints in the disk chart, backward end first.
    pub fn ideal_endpoints(&self) -> ([f64; 2], [f64; 2]) {
        let c = self.base_point().0;
        let tau = self.tangent_at(&self.base_point());
        let end = |l: MinkowskiVec| [l.x1 / l.x0, l.x2 / l.x0];
        (end(c - tau), end(c + tau))
    }
}

/// The geodesic through `p` and `q`, oriented from `p` to `q`.
///
/// The normal is `p x q` rescaled, so `det(p, dir(p->q), normal) > 0`.
pub fn geodesic_through(p: &HPoint, q: &HPoint) -> Result<Geodesic> {
    let w = p.0.cross(&q.0);
    // <w,w> = sinh^2 d(p,q)
    let q2 = w.inner(&w);
    if !(q2 > TOL_POINT * TOL_POINT) {
        return Err(Error::Degenerate("geodesic through coincident points"));
    }
    Ok(Geodesic {
        normal: w * (1.0 / q2.sqrt()),
    })
}

/// Common point of two geodesics, `None` when they are ultraparallel or
/// asymptotically parallel.
pub fn intersect_geodesics(g1: &Geodesic, g2: &Geodesic) -> Result<Option<HPoint>> {
    let w = g1.normal.cross(&g2.normal);
    if w.max_abs() <= TOL_POINT {
        return Err(Error::Degenerate("identical geodesics"));
    }
    let q = w.inner(&w);
    if q >= -TOL_CLAMP * w.max_abs() * w.max_abs() {
        return Ok(None);
    }
    Ok(Some(HPoint::normalize(w)?))
}

/// Spatial part of `p` after the boost taking `v` to the basepoint; there
/// geodesics from `v` are straight rays.
///
/// Measuring directions at `v` itself costs up to `cosh^3 |v|` in cancellation
/// once `v` is far out, which is where thin triangles put their apex.
fn seen_from(v: &HPoint, p: &HPoint) -> Result<(f64, f64)> {
    let (v, p) = (v.0, p.0);
    let k = (v.x1 * p.x1 + v.x2 * p.x2) / (1.0 + v.x0) - p.x0;
    let (s, t) = (p.x1 + v.x1 * k, p.x2 + v.x2 * k);
    if s.hypot(t) <= TOL_POINT {
        return Err(Error::Degenerate("coincident points have no direction"));
    }
    Ok((s, t))
}

/// Angle at `v` between the geodesics toward `p` and toward `q`, in `[0, pi]`.
pub fn angle_at(v: &HPoint, p: &HPoint, q: &HPoint) -> Result<f64> {
    Ok(signed_angle_at(v, p, q)?.abs())
}

/// Signed angle at `v` from the ray toward `p` to the ray toward `q`,
/// counterclockwise positive, in `(-pi, pi]`.
pub fn signed_angle_at(v: &HPoint, p: &HPoint, q: &HPoint) -> Result<f64> {
    let (a1, a2) = seen_from(v, p)?;
    let (b1, b2) = seen_from(v, q)?;
    Ok((a1 * b2 - a2 * b1).atan2(a1 * b1 + a2 * b2))
}

/// Closest point to `p` on `g`.
pub fn foot_of_perpendicular(p: &HPoint, g: &Geodesic) -> HPoint {
    let s = p.0.inner(&g.normal);
    HPoint::normalize(p.0 - g.normal * s).expect("timelike by construction")
}

pub fn midpoint(p: &HPoint, q: &HPoint) -> Result<HPoint> {
    if p.dist(q) <= TOL_POINT {
        return Err(Error::Degenerate("midpoint of coincident points"));
    }
    HPoint::normalize(p.0 + q.0)
}

/// Reflection in the geodesic `g`: an involutive isometry fixing `g` pointwise.
pub fn reflect_across(g: &Geodesic, p: &HPoint) -> HPoint {
    let s = p.0.inner(&g.normal);
    HPoint::normalize(p.0 - g.normal * (2.0 * s)).expect("reflection preserves the sheet")
}

/// A point of the open Poincaré disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskPoint {
    pub u: f64,
    pub w: f64,
}

impl DiskPoint {
    pub fn new(u: f64, w: f64) -> Result<Self> {
        let r2 = u * u + w * w;
        if !(r2 < 1.0) {
            return Err(Error::OutOfModel(format!("|({u}, {w})| >= 1")));
        }
        Ok(Self { u, w })
    }

    pub fn norm(&self) -> f64 {
        self.u.hypot(self.w)
    }
}

pub fn disk_to_hpoint(d: &DiskPoint) -> HPoint {
    let r2 = d.u * d.u + d.w * d.w;
    let k = 1.0 / (1.0 - r2);
    HPoint::normalize(MinkowskiVec::new(
        (1.0 + r2) * k,
        2.0 * d.u * k,
        2.0 * d.w * k,
    ))
    .expect("open disk maps onto the sheet")
}

pub fn hpoint_to_disk(p: &HPoint) -> DiskPoint {
    let k = 1.0 / (1.0 + p.0.x0);
    DiskPoint {
        u: p.0.x1 * k,
        w: p.0.x2 * k,
    }
}

/// Coordinates in the Euclidean tangent plane of the hyperboloid at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TangentPoint {
    pub s: f64,
    pub t: f64,
}

impl TangentPoint {
    pub fn norm(&self) -> f64 {
        self.s.hypot(self.t)
    }
}

/// Positively oriented orthonormal basis of the tangent space at `base`.
/// At the basepoint this is `(0,1,0), (0,0,1)`.
pub fn tangent_basis(base: &HPoint) -> (MinkowskiVec, MinkowskiVec) {
    let c = MinkowskiVec::new(0.0, 1.0, 0.0);
    let e1 = (c + base.0 * c.inner(&base.0))
        .unit_spacelike()
        .expect("1 + <c,b>^2 > 0");
    let e2 = base.0.cross(&e1);
    (e1, e2)
}

/// Central projection from the Minkowski origin onto the tangent plane at `base`.
///
/// The ray through `p` meets the plane `<y, base> = -1` at `y = p / cosh d`,
/// so the image lies at Euclidean distance `tanh d(base, p)` from `base`.
pub fn radial_project(base: &HPoint, p: &HPoint) -> TangentPoint {
    let (e1, e2) = tangent_basis(base);
    let y = p.0 * (-1.0 / p.0.inner(&base.0));
    let v = y - base.0;
    TangentPoint {
        s: v.inner(&e1),
        t: v.inner(&e2),
    }
}

/// An orientation-preserving isometry given by the images of the basepoint
/// and of the standard tangent frame there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    origin: MinkowskiVec,
    e1: MinkowskiVec,
    e2: MinkowskiVec,
}

impl Isometry {
    pub fn identity() -> Self {
        Self {
            origin: HPoint::ORIGIN.0,
            e1: MinkowskiVec::new(0.0, 1.0, 0.0),
            e2: MinkowskiVec::new(0.0, 0.0, 1.0),
        }
    }

    /// The isometry sending the basepoint to `origin` and the positive `x1`
    /// axis onto the ray from `origin` toward `toward`.
    pub fn from_frame(origin: &HPoint, toward: &HPoint) -> Result<Self> {
        let e1 = origin.direction_to(toward)?;
        let e2 = origin.0.cross(&e1);
        Ok(Self {
            origin: origin.0,
            e1,
            e2,
        })
    }

    pub fn apply(&self, p: &HPoint) -> HPoint {
        let v = p.0;
        HPoint::normalize(self.origin * v.x0 + self.e1 * v.x1 + self.e2 * v.x2)
            .expect("Lorentz map preserves the sheet")
    }

    pub fn apply_inverse(&self, p: &HPoint) -> HPoint {
        let v = p.0;
        HPoint::normalize(MinkowskiVec::new(
            -v.inner(&self.origin),
            v.inner(&self.e1),
            v.inner(&self.e2),
        ))
        .expect("Lorentz map preserves the sheet")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn inner_product_examples() {
        let e0 = MinkowskiVec::new(1.0, 0.0, 0.0);
        let e1 = MinkowskiVec::new(0.0, 1.0, 0.0);
        assert_eq!(mink_inner(&e0, &e0), -1.0);
        assert_eq!(mink_inner(&e1, &e1), 1.0);
        let p = MinkowskiVec::new(1f64.cosh(), 1f64.sinh(), 0.0);
        assert!(close(mink_inner(&p, &e0), -1.5430806348152437, 1e-15));
    }

    #[test]
    fn distance_examples() {
        let o = HPoint::ORIGIN;
        assert_eq!(hdist(&o, &o).unwrap(), 0.0);
        let q = HPoint::new(MinkowskiVec::new(1f64.cosh(), 1f64.sinh(), 0.0)).unwrap();
        assert!(close(hdist(&o, &q).unwrap(), 1.0, 1e-15));
    }

    #[test]
    fn hdist_rejects_off_sheet_products() {
        // Bypass the constructor to build a bogus pair.
        let p = HPoint(MinkowskiVec::new(0.5, 0.0, 0.0));
        assert!(matches!(
            hdist(&p, &HPoint::ORIGIN),
            Err(Error::InvalidPoint(_))
        ));
    }

    #[test]
    fn new_rejects_lower_sheet_and_drift() {
        assert!(HPoint::new(MinkowskiVec::new(-1.0, 0.0, 0.0)).is_err());
        assert!(HPoint::new(MinkowskiVec::new(1.0 + 1e-8, 0.0, 0.0)).is_err());
    }

    #[test]
    fn point_along_examples() {
        let o = HPoint::ORIGIN;
        let n = MinkowskiVec::new(0.0, 1.0, 0.0);
        assert_eq!(point_along(&o, &n, 0.0).unwrap(), o);
        let p = point_along(&o, &n, 2.0).unwrap();
        assert!(close(p.vec().x0, 2f64.cosh(), 1e-13));
        assert!(close(p.vec().x1, 2f64.sinh(), 1e-13));
        assert!(close(o.dist(&p), 2.0, 1e-14));
    }

    #[test]
    fn point_along_contract_violations() {
        let o = HPoint::ORIGIN;
        let not_unit = MinkowskiVec::new(0.0, 2.0, 0.0);
        let not_tangent = MinkowskiVec::new(1.0, 1.0, 1.0);
        assert!(matches!(
            point_along(&o, &not_unit, 1.0),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            point_along(&o, &not_tangent, 1.0),
            Err(Error::Contract(_))
        ));
        let n = MinkowskiVec::new(0.0, 1.0, 0.0);
        assert!(matches!(point_along(&o, &n, -1.0), Err(Error::Contract(_))));
    }

    #[test]
    fn geodesic_orientation_rule() {
        let p = HPoint::ORIGIN;
        let q = HPoint::from_polar(1.0, 0.0);
        let g = geodesic_through(&p, &q).unwrap();
        let n = g.normal();
        assert!(close(n.x0, 0.0, 1e-15) && close(n.x1, 0.0, 1e-15) && close(n.x2, 1.0, 1e-15));
        let d = p.direction_to(&q).unwrap();
        assert!(p.vec().det(&d, &n) > 0.0);
        let back = geodesic_through(&q, &p).unwrap();
        assert_eq!(back.normal(), -g.normal());
        // containment along the segment and beyond
        for s in [0.0, 0.3, 1.0, 4.0] {
            let x = point_along(&p, &d, s).unwrap();
            assert!(g.side(&x).abs() < 1e-12);
        }
        assert!(matches!(
            geodesic_through(&p, &p),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn left_side_is_positive() {
        let g = geodesic_through(&HPoint::ORIGIN, &HPoint::from_polar(1.0, 0.0)).unwrap();
        assert!(g.side(&HPoint::from_polar(1.0, FRAC_PI_2)) > 0.0);
        assert!(g.side(&HPoint::from_polar(1.0, -FRAC_PI_2)) < 0.0);
    }

    #[test]
    fn intersection_examples() {
        let o = HPoint::ORIGIN;
        let gx = geodesic_through(&o, &HPoint::from_polar(1.0, 0.0)).unwrap();
        let gy = geodesic_through(&o, &HPoint::from_polar(1.0, FRAC_PI_2)).unwrap();
        let x = intersect_geodesics(&gx, &gy).unwrap().unwrap();
        assert!(x.dist(&o) < 1e-14);

        // two perpendiculars to the x1-axis at distance 1 and 2 are ultraparallel
        let f1 = HPoint::from_polar(1.0, 0.0);
        let f2 = HPoint::from_polar(2.0, 0.0);
        let up = MinkowskiVec::new(0.0, 0.0, 1.0);
        let h1 = geodesic_through(&f1, &point_along(&f1, &up, 1.0).unwrap()).unwrap();
        let h2 = geodesic_through(&f2, &point_along(&f2, &up, 1.0).unwrap()).unwrap();
        assert_eq!(intersect_geodesics(&h1, &h2).unwrap(), None);

        assert!(matches!(
            intersect_geodesics(&gx, &gx.reversed()),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn angle_examples() {
        let o = HPoint::ORIGIN;
        let p = HPoint::from_polar(1.3, 0.0);
        let q = HPoint::from_polar(0.7, FRAC_PI_2);
        assert!(close(angle_at(&o, &p, &q).unwrap(), FRAC_PI_2, 1e-14));
        let r = HPoint::from_polar(0.9, PI);
        assert!(close(angle_at(&o, &p, &r).unwrap(), PI, 1e-14));
        assert!(close(
            signed_angle_at(&o, &p, &q).unwrap(),
            FRAC_PI_2,
            1e-14
        ));
        assert!(close(
            signed_angle_at(&o, &q, &p).unwrap(),
            -FRAC_PI_2,
            1e-14
        ));
        assert!(matches!(angle_at(&o, &o, &p), Err(Error::Degenerate(_))));
    }

    #[test]
    fn angle_matches_cosine_law() {
        let a = HPoint::from_polar(0.4, 0.2);
        let b = HPoint::from_polar(1.7, 2.0);
        let c = HPoint::from_polar(1.1, -2.1);
        let (ab, ac, bc) = (a.dist(&b), a.dist(&c), b.dist(&c));
        let cos = (ab.cosh() * ac.cosh() - bc.cosh()) / (ab.sinh() * ac.sinh());
        assert!(close(angle_at(&a, &b, &c).unwrap(), cos.acos(), 1e-12));
    }

    #[test]
    fn foot_examples() {
        let g = geodesic_through(&HPoint::ORIGIN, &HPoint::from_polar(1.0, 0.0)).unwrap();
        let on = HPoint::from_polar(0.8, 0.0);
        assert!(foot_of_perpendicular(&on, &g).dist(&on) < 1e-14);

        let f = HPoint::from_polar(0.6, 0.0);
        let n = g.normal();
        let p = point_along(&f, &n, 1.4).unwrap();
        let foot = foot_of_perpendicular(&p, &g);
        assert!(foot.dist(&f) < 1e-12);
        assert!(close(p.dist(&foot), 1.4, 1e-12));
        assert!(close(p.dist(&foot).sinh(), g.side(&p).abs(), 1e-12));
        let right = angle_at(&foot, &p, &HPoint::ORIGIN).unwrap();
        assert!(close(right, FRAC_PI_2, 1e-12));
    }

    #[test]
    fn midpoint_examples() {
        let p = HPoint::ORIGIN;
        let q = HPoint::from_polar(2.0, 0.0);
        let m = midpoint(&p, &q).unwrap();
        assert!(m.dist(&HPoint::from_polar(1.0, 0.0)) < 1e-14);
        assert_eq!(midpoint(&p, &q).unwrap(), midpoint(&q, &p).unwrap());
        assert!(matches!(midpoint(&p, &p), Err(Error::Degenerate(_))));
    }

    #[test]
    fn disk_conversion_examples() {
        let c = disk_to_hpoint(&DiskPoint::new(0.0, 0.0).unwrap());
        assert_eq!(c, HPoint::ORIGIN);
        let r = 0.6;
        let p = disk_to_hpoint(&DiskPoint::new(r, 0.0).unwrap());
        assert!(close(p.dist(&HPoint::ORIGIN), 2.0 * r.atanh(), 1e-14));
        assert!(matches!(
            DiskPoint::new(0.8, 0.6),
            Err(Error::OutOfModel(_))
        ));
    }

    #[test]
    fn radial_projection_examples() {
        let o = HPoint::ORIGIN;
        let t = radial_project(&o, &o);
        assert!(t.norm() < 1e-15);
        let p = HPoint::from_polar(1.0, 0.9);
        assert!(close(
            radial_project(&o, &p).norm(),
            0.7615941559557649,
            1e-15
        ));
        // off-origin base
        let base = HPoint::from_polar(1.2, 2.5);
        let q = HPoint::from_polar(0.3, -1.0);
        let d = base.dist(&q);
        assert!(close(radial_project(&base, &q).norm(), d.tanh(), 1e-12));
    }

    #[test]
    fn reflection_examples() {
        let g = geodesic_through(
            &HPoint::from_polar(0.5, 1.0),
            &HPoint::from_polar(1.5, -0.3),
        )
        .unwrap();
        let on = g.point_at(0.7);
        assert!(reflect_across(&g, &on).dist(&on) < 1e-12);
        let p = HPoint::from_polar(2.0, 2.0);
        let back = reflect_across(&g, &reflect_across(&g, &p));
        assert!(back.dist(&p) < 1e-12);
        assert!(close(g.side(&reflect_across(&g, &p)), -g.side(&p), 1e-12));
    }

    #[test]
    fn geodesic_parametrisation_is_unit_speed() {
        let g = geodesic_through(
            &HPoint::from_polar(0.5, 1.0),
            &HPoint::from_polar(1.5, -0.3),
        )
        .unwrap();
        let a = g.point_at(-1.0);
        let b = g.point_at(1.5);
        assert!(close(a.dist(&b), 2.5, 1e-12));
        assert!(g.side(&a).abs() < 1e-12 && g.side(&b).abs() < 1e-12);
        // parametrisation follows the orientation
        let g2 = geodesic_through(&a, &b).unwrap();
        assert!(close(g2.normal().x0, g.normal().x0, 1e-12));
    }

    #[test]
    fn ideal_endpoints_lie_on_unit_circle() {
        let g = geodesic_through(
            &HPoint::from_polar(0.5, 1.0),
            &HPoint::from_polar(1.5, -0.3),
        )
        .unwrap();
        let (a, b) = g.ideal_endpoints();
        assert!(close(a[0].hypot(a[1]), 1.0, 1e-12));
        assert!(close(b[0].hypot(b[1]), 1.0, 1e-12));
        // far points of the geodesic approach the endpoints in the chart
        let far = hpoint_to_disk(&g.point_at(30.0));
        assert!(close(far.u, b[0], 1e-9) && close(far.w, b[1], 1e-9));
    }

    #[test]
    fn isometry_round_trip() {
        let m = HPoint::from_polar(0.9, 0.4);
        let t = HPoint::from_polar(1.9, -2.0);
        let iso = Isometry::from_frame(&m, &t).unwrap();
        assert!(iso.apply(&HPoint::ORIGIN).dist(&m) < 1e-12);
        let p = HPoint::from_polar(1.3, 2.2);
        assert!(iso.apply_inverse(&iso.apply(&p)).dist(&p) < 1e-12);
        let q = HPoint::from_polar(0.2, -0.2);
        assert!(close(iso.apply(&p).dist(&iso.apply(&q)), p.dist(&q), 1e-12));
        let image_axis = iso.apply(&HPoint::from_polar(1.0, 0.0));
        assert!(close(angle_at(&m, &image_axis, &t).unwrap(), 0.0, 1e-7));
        assert_eq!(Isometry::identity().apply(&p), p);
    }
}
