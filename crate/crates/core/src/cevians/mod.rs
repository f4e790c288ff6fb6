//! Concurrent cevians in the three constant-curvature planes.
//!
//! For a triangle `ABC` with cevians `AD`, `BE`, `CF` through an interior point
//! `O`, the ratios `alpha = T(AO)/T(OD)` (and cyclically), with `T` equal to
//! `tanh`, `tan` or the identity, satisfy `alpha*beta*gamma = alpha+beta+gamma+2`.
//! This module measures frames, checks the auxiliary sine system behind that
//! relation, builds a triangle back from six lengths, and covers Ceva's product
//! and the equilateral median case.

mod ceva;
mod construct;
mod frame;
mod lambert;
mod projection;

pub use ceva::{ceva_product, CevaReport};
pub use construct::{construct_from_ratios, Construction, RatioSumInput};
pub use frame::{
    cevian_frame, euler_relation_residual, pqr_system, CevianFrame, EulerResidual, PqrSystem,
};
pub use lambert::{lambert_margin, lambert_median_report, LambertReport};
pub use projection::{projection_oracle, ProjectionOracle};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::Geometry;
use crate::tol::TOL_ID;

/// A non-degenerate triangle with sides in the working range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(bound(serialize = "G::Point: Serialize"))]
pub struct Triangle<G: Geometry> {
    pub a: G::Point,
    pub b: G::Point,
    pub c: G::Point,
}

impl<G: Geometry> Triangle<G> {
    pub fn new(a: G::Point, b: G::Point, c: G::Point) -> Result<Self> {
        let tri = Self { a, b, c };
        for side in tri.sides() {
            if side <= crate::tol::TOL_POINT {
                return Err(Error::Degenerate("coincident vertices"));
            }
            G::KIND.check_side(side)?;
        }
        let ab = G::line_through(&a, &b)?;
        if G::side(&ab, &c).abs() <= TOL_ID {
            return Err(Error::Degenerate("collinear vertices"));
        }
        Ok(tri)
    }

    /// `[BC, CA, AB]`.
    pub fn sides(&self) -> [f64; 3] {
        [
            G::distance(&self.b, &self.c),
            G::distance(&self.c, &self.a),
            G::distance(&self.a, &self.b),
        ]
    }

    /// Interior angles at `[A, B, C]`.
    pub fn angles(&self) -> Result<[f64; 3]> {
        Ok([
            G::angle_at(&self.a, &self.b, &self.c)?,
            G::angle_at(&self.b, &self.c, &self.a)?,
            G::angle_at(&self.c, &self.a, &self.b)?,
        ])
    }

    /// `+1` when `A, B, C` run counterclockwise, `-1` otherwise.
    pub fn orientation(&self) -> f64 {
        let ab = G::line_through(&self.a, &self.b).expect("validated triangle");
        G::side(&ab, &self.c).signum()
    }

    /// Signed offsets of `p` from the lines `BC`, `CA`, `AB`, each positive on
    /// the side of the opposite vertex.
    pub fn barycentric_sides(&self, p: &G::Point) -> [f64; 3] {
        let s = self.orientation();
        let line = |u: &G::Point, v: &G::Point| G::line_through(u, v).expect("validated triangle");
        [
            s * G::side(&line(&self.b, &self.c), p),
            s * G::side(&line(&self.c, &self.a), p),
            s * G::side(&line(&self.a, &self.b), p),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{Hyperbolic, Spherical};

    #[test]
    fn rejects_degenerate_triangles() {
        let a = Hyperbolic::polar(1.0, 0.0);
        let b = Hyperbolic::polar(1.0, std::f64::consts::PI);
        let o = Hyperbolic::origin();
        assert!(matches!(
            Triangle::<Hyperbolic>::new(a, b, o),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            Triangle::<Hyperbolic>::new(a, a, o),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn rejects_out_of_range_sides() {
        let a = Hyperbolic::polar(6.0, 0.0);
        let b = Hyperbolic::polar(6.0, 2.0);
        let c = Hyperbolic::origin();
        assert!(matches!(
            Triangle::<Hyperbolic>::new(a, b, c),
            Err(Error::Range(_))
        ));
        let a = Spherical::polar(1.0, 0.0);
        let b = Spherical::polar(1.0, 2.5);
        assert!(matches!(
            Triangle::<Spherical>::new(a, b, Spherical::origin()),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn orientation_and_interior() {
        let t = Triangle::<Hyperbolic>::new(
            Hyperbolic::polar(1.0, 0.0),
            Hyperbolic::polar(1.0, 2.0),
            Hyperbolic::polar(1.0, 4.0),
        )
        .unwrap();
        assert_eq!(t.orientation(), 1.0);
        assert!(t
            .barycentric_sides(&Hyperbolic::origin())
            .iter()
            .all(|s| *s > 0.0));
        let r = Triangle::<Hyperbolic>::new(t.a, t.c, t.b).unwrap();
        assert_eq!(r.orientation(), -1.0);
        assert!(r
            .barycentric_sides(&Hyperbolic::origin())
            .iter()
            .all(|s| *s > 0.0));
    }
}
