//! Point, line and distance primitives for the three constant-curvature planes.
//!
//! Each plane is a zero-sized marker implementing [`Geometry`], so triangle-level
//! code is written once and instantiated for curvature -1, +1 and 0. The
//! concrete models live in [`hyperbolic`], [`spherical`] and [`euclidean`].

pub mod euclidean;
pub mod hyperbolic;
pub mod spherical;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tol::{MAX_HYPERBOLIC_SIDE, MAX_SPHERICAL_SIDE};

pub use euclidean::{Line2, Point2};
pub use hyperbolic::{
    angle_at, disk_to_hpoint, foot_of_perpendicular, geodesic_through, hdist, hpoint_to_disk,
    intersect_geodesics, midpoint, mink_inner, point_along, radial_project, reflect_across,
    DiskPoint, Geodesic, HPoint, Isometry, MinkowskiVec, TangentPoint,
};
pub use spherical::{sphere_angle, sphere_dist, sphere_geodesic, GreatCircle, SpherePoint, Vec3};

/// Runtime tag for the three planes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeometryKind {
    Hyperbolic,
    Spherical,
    Euclidean,
}

impl GeometryKind {
    pub const ALL: [GeometryKind; 3] = [Self::Hyperbolic, Self::Spherical, Self::Euclidean];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Hyperbolic => "hyperbolic",
            Self::Spherical => "spherical",
            Self::Euclidean => "euclidean",
        }
    }

    /// Longest side accepted by triangle-level operations.
    pub fn max_side(&self) -> f64 {
        match self {
            Self::Hyperbolic => MAX_HYPERBOLIC_SIDE,
            Self::Spherical => MAX_SPHERICAL_SIDE,
            Self::Euclidean => f64::INFINITY,
        }
    }

    /// `tanh`, `tan` or the identity: the length transform in the ratio-sum
    /// relation and in the right-triangle cathetus law.
    pub fn ratio_len(&self, d: f64) -> f64 {
        match self {
            Self::Hyperbolic => d.tanh(),
            Self::Spherical => d.tan(),
            Self::Euclidean => d,
        }
    }

    /// `sinh`, `sin` or the identity: the length transform in the sine law,
    /// Menelaus' ratio and Ceva's product.
    pub fn sine_len(&self, d: f64) -> f64 {
        match self {
            Self::Hyperbolic => d.sinh(),
            Self::Spherical => d.sin(),
            Self::Euclidean => d,
        }
    }

    pub(crate) fn check_side(&self, d: f64) -> Result<()> {
        if !(d > 0.0) || d > self.max_side() + crate::tol::TOL_ID {
            return Err(Error::Range(format!(
                "side {d} outside (0, {}] for {self}",
                self.max_side()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for GeometryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GeometryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hyperbolic" => Ok(Self::Hyperbolic),
            "spherical" => Ok(Self::Spherical),
            "euclidean" => Ok(Self::Euclidean),
            other => Err(Error::Domain(format!("unknown geometry '{other}'"))),
        }
    }
}

/// A constant-curvature plane.
///
/// Lines are oriented; `side` is positive on the left and equals the sine-like
/// transform ([`GeometryKind::sine_len`]) of the signed distance to the line.
pub trait Geometry: Copy + Default + Send + Sync + fmt::Debug + 'static {
    type Point: Copy + fmt::Debug + PartialEq + Send + Sync + Serialize;
    type Line: Copy + fmt::Debug + Send + Sync;

    const KIND: GeometryKind;

    fn origin() -> Self::Point;

    /// Point at distance `r` from the origin, in direction `theta`
    /// counterclockwise from the reference axis.
    fn polar(r: f64, theta: f64) -> Self::Point;

    fn distance(p: &Self::Point, q: &Self::Point) -> f64;

    fn line_through(p: &Self::Point, q: &Self::Point) -> Result<Self::Line>;

    /// Common point of two lines. On the sphere the candidate nearer `near`
    /// is returned.
    fn meet(l1: &Self::Line, l2: &Self::Line, near: &Self::Point) -> Result<Option<Self::Point>>;

    fn side(line: &Self::Line, p: &Self::Point) -> f64;

    fn foot(p: &Self::Point, line: &Self::Line) -> Result<Self::Point>;

    /// Unsigned angle at `v` in `[0, pi]`.
    fn angle_at(v: &Self::Point, p: &Self::Point, q: &Self::Point) -> Result<f64>;

    fn midpoint(p: &Self::Point, q: &Self::Point) -> Result<Self::Point>;

    /// Positive combination of three points, pushed back onto the model.
    /// Lands strictly inside the triangle when all weights are positive.
    fn combine(points: [&Self::Point; 3], weights: [f64; 3]) -> Result<Self::Point>;

    fn ratio_len(d: f64) -> f64 {
        Self::KIND.ratio_len(d)
    }

    fn sine_len(d: f64) -> f64 {
        Self::KIND.sine_len(d)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Hyperbolic;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Spherical;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Euclidean;

impl Geometry for Hyperbolic {
    type Point = HPoint;
    type Line = Geodesic;
    const KIND: GeometryKind = GeometryKind::Hyperbolic;

    fn origin() -> HPoint {
        HPoint::ORIGIN
    }

    fn polar(r: f64, theta: f64) -> HPoint {
        HPoint::from_polar(r, theta)
    }

    fn distance(p: &HPoint, q: &HPoint) -> f64 {
        p.dist(q)
    }

    fn line_through(p: &HPoint, q: &HPoint) -> Result<Geodesic> {
        geodesic_through(p, q)
    }

    fn meet(l1: &Geodesic, l2: &Geodesic, _near: &HPoint) -> Result<Option<HPoint>> {
        intersect_geodesics(l1, l2)
    }

    fn side(line: &Geodesic, p: &HPoint) -> f64 {
        line.side(p)
    }

    fn foot(p: &HPoint, line: &Geodesic) -> Result<HPoint> {
        Ok(foot_of_perpendicular(p, line))
    }

    fn angle_at(v: &HPoint, p: &HPoint, q: &HPoint) -> Result<f64> {
        angle_at(v, p, q)
    }

    fn midpoint(p: &HPoint, q: &HPoint) -> Result<HPoint> {
        midpoint(p, q)
    }

    fn combine(points: [&HPoint; 3], weights: [f64; 3]) -> Result<HPoint> {
        let v = points[0].vec() * weights[0]
            + points[1].vec() * weights[1]
            + points[2].vec() * weights[2];
        HPoint::normalize(v)
    }
}

impl Geometry for Spherical {
    type Point = SpherePoint;
    type Line = GreatCircle;
    const KIND: GeometryKind = GeometryKind::Spherical;

    fn origin() -> SpherePoint {
        SpherePoint::ORIGIN
    }

    fn polar(r: f64, theta: f64) -> SpherePoint {
        SpherePoint::from_polar(r, theta)
    }

    fn distance(p: &SpherePoint, q: &SpherePoint) -> f64 {
        p.dist(q)
    }

    fn line_through(p: &SpherePoint, q: &SpherePoint) -> Result<GreatCircle> {
        sphere_geodesic(p, q)
    }

    fn meet(l1: &GreatCircle, l2: &GreatCircle, near: &SpherePoint) -> Result<Option<SpherePoint>> {
        spherical::sphere_meet(l1, l2, near).map(Some)
    }

    fn side(line: &GreatCircle, p: &SpherePoint) -> f64 {
        line.side(p)
    }

    fn foot(p: &SpherePoint, line: &GreatCircle) -> Result<SpherePoint> {
        spherical::sphere_foot(p, line)
    }

    fn angle_at(v: &SpherePoint, p: &SpherePoint, q: &SpherePoint) -> Result<f64> {
        sphere_angle(v, p, q)
    }

    fn midpoint(p: &SpherePoint, q: &SpherePoint) -> Result<SpherePoint> {
        spherical::sphere_midpoint(p, q)
    }

    fn combine(points: [&SpherePoint; 3], weights: [f64; 3]) -> Result<SpherePoint> {
        let v = points[0].vec() * weights[0]
            + points[1].vec() * weights[1]
            + points[2].vec() * weights[2];
        SpherePoint::normalize(v)
    }
}

impl Geometry for Euclidean {
    type Point = Point2;
    type Line = Line2;
    const KIND: GeometryKind = GeometryKind::Euclidean;

    fn origin() -> Point2 {
        Point2::ORIGIN
    }

    fn polar(r: f64, theta: f64) -> Point2 {
        Point2::from_polar(r, theta)
    }

    fn distance(p: &Point2, q: &Point2) -> f64 {
        p.dist(q)
    }

    fn line_through(p: &Point2, q: &Point2) -> Result<Line2> {
        Line2::through(p, q)
    }

    fn meet(l1: &Line2, l2: &Line2, _near: &Point2) -> Result<Option<Point2>> {
        l1.meet(l2)
    }

    fn side(line: &Line2, p: &Point2) -> f64 {
        line.side(p)
    }

    fn foot(p: &Point2, line: &Line2) -> Result<Point2> {
        Ok(line.foot(p))
    }

    fn angle_at(v: &Point2, p: &Point2, q: &Point2) -> Result<f64> {
        euclidean::angle_at(v, p, q)
    }

    fn midpoint(p: &Point2, q: &Point2) -> Result<Point2> {
        if p.dist(q) <= crate::tol::TOL_POINT {
            return Err(Error::Degenerate("midpoint of coincident points"));
        }
        Ok(Point2::new(0.5 * (p.x + q.x), 0.5 * (p.y + q.y)))
    }

    fn combine(points: [&Point2; 3], weights: [f64; 3]) -> Result<Point2> {
        let total: f64 = weights.iter().sum();
        if !(total > 0.0) {
            return Err(Error::Domain("weights must have a positive sum".into()));
        }
        let x = points
            .iter()
            .zip(weights)
            .map(|(p, w)| p.x * w)
            .sum::<f64>()
            / total;
        let y = points
            .iter()
            .zip(weights)
            .map(|(p, w)| p.y * w)
            .sum::<f64>()
            / total;
        Ok(Point2::new(x, y))
    }
}
