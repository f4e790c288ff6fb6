//! The flat plane, used as the zero-curvature reference.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tol::TOL_POINT;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn from_polar(r: f64, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(r * c, r * s)
    }

    pub fn dist(&self, o: &Self) -> f64 {
        (self.x - o.x).hypot(self.y - o.y)
    }

    fn unit_toward(&self, o: &Self) -> Result<(f64, f64)> {
        let d = self.dist(o);
        if d <= TOL_POINT {
            return Err(Error::Degenerate("coincident points have no direction"));
        }
        Ok(((o.x - self.x) / d, (o.y - self.y) / d))
    }
}

/// An oriented line `{ p : n . p = c }` with unit normal `n` pointing left.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Line2 {
    pub nx: f64,
    pub ny: f64,
    pub c: f64,
}

impl Line2 {
    pub fn through(p: &Point2, q: &Point2) -> Result<Self> {
        let (dx, dy) = p.unit_toward(q)?;
        let (nx, ny) = (-dy, dx);
        Ok(Self {
            nx,
            ny,
            c: nx * p.x + ny * p.y,
        })
    }

    /// Signed distance, positive on the left.
    pub fn side(&self, p: &Point2) -> f64 {
        self.nx * p.x + self.ny * p.y - self.c
    }

    pub fn meet(&self, o: &Self) -> Result<Option<Point2>> {
        let det = self.nx * o.ny - self.ny * o.nx;
        if det.abs() <= TOL_POINT {
            if (self.c - o.c * (self.nx * o.nx + self.ny * o.ny)).abs() <= TOL_POINT {
                return Err(Error::Degenerate("identical lines"));
            }
            return Ok(None);
        }
        Ok(Some(Point2::new(
            (self.c * o.ny - self.ny * o.c) / det,
            (self.nx * o.c - self.c * o.nx) / det,
        )))
    }

    pub fn foot(&self, p: &Point2) -> Point2 {
        let s = self.side(p);
        Point2::new(p.x - s * self.nx, p.y - s * self.ny)
    }
}

pub fn angle_at(v: &Point2, p: &Point2, q: &Point2) -> Result<f64> {
    let (ax, ay) = v.unit_toward(p)?;
    let (bx, by) = v.unit_toward(q)?;
    Ok((ax * by - ay * bx).abs().atan2(ax * bx + ay * by))
}
