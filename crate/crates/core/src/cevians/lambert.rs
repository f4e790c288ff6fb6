use std::cmp::Ordering;
use std::f64::consts::PI;

use serde::Serialize;

use super::{cevian_frame, Triangle};
use crate::error::{Error, Result};
use crate::kernel::{Euclidean, Geometry, GeometryKind, Hyperbolic, Spherical};

/// Medians of an equilateral triangle with side `side`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambertReport {
    pub geometry: GeometryKind,
    pub side: f64,
    /// `T(AO)/T(OD)` for the three medians through the centroid.
    pub ratios: [f64; 3],
    /// `AD / OD` measured along the first median.
    pub ad_over_od: f64,
    /// Largest distance of the centroid from the third median, after
    /// locating it on the first two.
    pub concurrency_residual: f64,
}

impl LambertReport {
    /// How `AD/OD` compares to 3: greater, equal, or less for curvature
    /// -1, 0, +1.
    pub fn expected_ordering(kind: GeometryKind) -> Ordering {
        match kind {
            GeometryKind::Hyperbolic => Ordering::Greater,
            GeometryKind::Euclidean => Ordering::Equal,
            GeometryKind::Spherical => Ordering::Less,
        }
    }

    /// Worst violation: `|ratio - 2|` for each median, plus the amount by
    /// which `AD/OD - 3` has the wrong sign (or, in the plane, its size).
    pub fn residual(&self) -> f64 {
        let ratio = self
            .ratios
            .iter()
            .map(|r| (r - 2.0).abs())
            .fold(0.0, f64::max);
        let excess = self.ad_over_od - 3.0;
        let order = match self.geometry {
            GeometryKind::Hyperbolic => (-excess).max(0.0),
            GeometryKind::Spherical => excess.max(0.0),
            GeometryKind::Euclidean => excess.abs(),
        };
        ratio.max(order).max(self.concurrency_residual)
    }
}

/// `2 tanh x - tanh 2x`, positive for every `x > 0`.
pub fn lambert_margin(x: f64) -> f64 {
    // tanh 2x = 2 tanh x / (1 + tanh^2 x), so the margin is 2 tanh^3 x / (1 + tanh^2 x)
    let t = x.tanh();
    2.0 * t * t * t / (1.0 + t * t)
}

fn report<G: Geometry>(side: f64, circumradius: f64) -> Result<LambertReport> {
    G::KIND.check_side(side)?;
    let tri = Triangle::<G>::new(
        G::polar(circumradius, 0.0),
        G::polar(circumradius, 2.0 * PI / 3.0),
        G::polar(circumradius, 4.0 * PI / 3.0),
    )?;
    let d = G::midpoint(&tri.b, &tri.c)?;
    let e = G::midpoint(&tri.c, &tri.a)?;
    let f = G::midpoint(&tri.a, &tri.b)?;
    let near = G::origin();
    let o = G::meet(
        &G::line_through(&tri.a, &d)?,
        &G::line_through(&tri.b, &e)?,
        &near,
    )?
    .ok_or(Error::Degenerate("medians do not meet"))?;
    let concurrency_residual = G::side(&G::line_through(&tri.c, &f)?, &o).abs();
    let frame = cevian_frame(&tri, &o)?;
    Ok(LambertReport {
        geometry: G::KIND,
        side,
        ratios: [frame.alpha, frame.beta, frame.gamma],
        ad_over_od: G::distance(&tri.a, &d) / G::distance(&o, &d),
        concurrency_residual,
    })
}

/// Build the equilateral triangle of side `side`, centred at the origin, and
/// measure its medians.
pub fn lambert_median_report(side: f64, kind: GeometryKind) -> Result<LambertReport> {
    if !(side > 0.0) {
        return Err(Error::Domain(format!("side {side} is not positive")));
    }
    // circumradius: S(R) = (2/sqrt 3) S(side/2) with S = sinh, sin or identity
    let k = 2.0 / 3f64.sqrt();
    match kind {
        GeometryKind::Hyperbolic => report::<Hyperbolic>(side, (k * (0.5 * side).sinh()).asinh()),
        GeometryKind::Spherical => {
            if side >= kind.max_side() {
                return Err(Error::Range(format!("spherical side {side} >= pi/2")));
            }
            report::<Spherical>(side, (k * (0.5 * side).sin()).asin())
        }
        GeometryKind::Euclidean => report::<Euclidean>(side, k * 0.5 * side),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn side_lengths_match() {
        for kind in GeometryKind::ALL {
            let r = lambert_median_report(1.3, kind).unwrap();
            assert!((r.side - 1.3).abs() < 1e-15);
            assert!(r.residual() < 1e-10, "{kind}: {r:?}");
        }
    }

    #[test]
    fn orderings() {
        let h = lambert_median_report(2.0, GeometryKind::Hyperbolic).unwrap();
        assert!(h.ad_over_od > 3.0 + 1e-3);
        let s = lambert_median_report(1.0, GeometryKind::Spherical).unwrap();
        assert!(s.ad_over_od < 3.0 - 1e-3);
        let e = lambert_median_report(5.0, GeometryKind::Euclidean).unwrap();
        assert!((e.ad_over_od - 3.0).abs() < 1e-12);
    }

    #[test]
    fn margin_is_positive_and_matches_direct_form() {
        for x in [1e-3, 0.1, 1.0, 5.0] {
            let direct = 2.0 * f64::tanh(x) - f64::tanh(2.0 * x);
            assert!(lambert_margin(x) > 0.0);
            assert!((lambert_margin(x) - direct).abs() < 1e-15);
        }
    }
}
