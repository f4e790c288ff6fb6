use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{cevian_frame, CevianFrame, Triangle};
use crate::error::{Error, Result};
use crate::kernel::{Geometry, GeometryKind};
use crate::tol::{TOL_CLAMP, TOL_CONSTRUCT};

/// The six cevian segment lengths: `AO, BO, CO` from the vertices and
/// `OD, OE, OF` to the feet.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioSumInput {
    pub ao: f64,
    pub bo: f64,
    pub co: f64,
    pub od: f64,
    pub oe: f64,
    pub of: f64,
}

impl RatioSumInput {
    pub fn from_frame<G: Geometry>(frame: &CevianFrame<G>) -> Self {
        Self {
            ao: frame.ao,
            bo: frame.bo,
            co: frame.co,
            od: frame.od,
            oe: frame.oe,
            of: frame.of,
        }
    }

    pub fn lengths(&self) -> [f64; 6] {
        [self.ao, self.bo, self.co, self.od, self.oe, self.of]
    }

    /// `[alpha, beta, gamma]` under the length transform of `kind`.
    pub fn ratios(&self, kind: GeometryKind) -> [f64; 3] {
        let t = |x| kind.ratio_len(x);
        [
            t(self.ao) / t(self.od),
            t(self.bo) / t(self.oe),
            t(self.co) / t(self.of),
        ]
    }

    /// `alpha*beta*gamma - (alpha+beta+gamma+2)`.
    pub fn relation_residual(&self, kind: GeometryKind) -> f64 {
        let [a, b, c] = self.ratios(kind);
        a * b * c - (a + b + c + 2.0)
    }

    /// Allowed `|relation_residual|`: `TOL_CONSTRUCT * (1 + alpha*beta*gamma)`.
    pub fn relation_tolerance(&self, kind: GeometryKind) -> f64 {
        let [a, b, c] = self.ratios(kind);
        TOL_CONSTRUCT * (1.0 + (a * b * c).abs())
    }
}

/// A triangle rebuilt from six lengths, with the intermediate quantities and
/// the residuals of the re-measured frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(bound(serialize = "G::Point: Serialize"))]
pub struct Construction<G: Geometry> {
    pub input: RatioSumInput,
    pub triangle: Triangle<G>,
    pub o: G::Point,
    /// Feet placed on their rays before re-measurement.
    pub placed_feet: [G::Point; 3],
    pub frame: CevianFrame<G>,
    /// `G = T(AO)T(OD)/(T(AO)+T(OD))` and cyclically; proportional to the
    /// sines of `p, q, r`.
    pub ghi: [f64; 3],
    /// Heron radicand `(G+H+I)(-G+H+I)(G-H+I)(G+H-I)`.
    pub delta: f64,
    /// Area of the Euclidean triangle with sides `G, H, I`.
    pub area: f64,
    /// `[p, q, r]` = angles `BOF`, `AOF`, `BOD`.
    pub angles: [f64; 3],
    pub relation_residual: f64,
    pub angle_sum_residual: f64,
    /// Largest `|side|` of each placed foot against its side line.
    pub containment_residual: f64,
    /// Largest difference between an input length and its re-measured value.
    pub length_residual: f64,
    /// Largest difference between `[p, q, r]` and the re-measured angles.
    pub angle_residual: f64,
}

impl<G: Geometry> Construction<G> {
    /// Angles `[AOB, BOC, COA]` at `O`.
    pub fn vertex_angles(&self) -> [f64; 3] {
        let [p, q, r] = self.angles;
        [p + q, q + r, r + p]
    }
}

/// Build the triangle whose cevian segments through a common point have the
/// given lengths.
///
/// Fails with [`Error::RelationResidual`] when the ratios violate the
/// ratio-sum relation, [`Error::HeronRadicand`] when `G, H, I` violate the
/// triangle inequality, and [`Error::SineBound`] when a recovered sine leaves
/// `[0, 1]`.
pub fn construct_from_ratios<G: Geometry>(input: &RatioSumInput) -> Result<Construction<G>> {
    for len in input.lengths() {
        if !len.is_finite() || len <= 0.0 {
            return Err(Error::Domain(format!("length {len} is not positive")));
        }
        if G::KIND == GeometryKind::Spherical && len >= G::KIND.max_side() {
            return Err(Error::Range(format!("spherical length {len} >= pi/2")));
        }
        G::KIND.check_side(len)?;
    }

    let residual = input.relation_residual(G::KIND);
    let tolerance = input.relation_tolerance(G::KIND);
    if !(residual.abs() <= tolerance) {
        return Err(Error::RelationResidual {
            residual,
            tolerance,
        });
    }

    let t = G::ratio_len;
    let harm = |long: f64, short: f64| t(long) * t(short) / (t(long) + t(short));
    let (g, h, i) = (
        harm(input.ao, input.od),
        harm(input.bo, input.oe),
        harm(input.co, input.of),
    );

    let delta = (g + h + i) * (-g + h + i) * (g - h + i) * (g + h - i);
    if !(delta > 0.0) {
        return Err(Error::HeronRadicand(delta));
    }
    let area = 0.25 * delta.sqrt();

    for (name, s) in [
        ("p", 2.0 * area / (h * i)),
        ("q", 2.0 * area / (i * g)),
        ("r", 2.0 * area / (g * h)),
    ] {
        if s > 1.0 + TOL_CLAMP {
            return Err(Error::SineBound {
                angle: name,
                value: s,
            });
        }
    }
    let p = (4.0 * area).atan2(h * h + i * i - g * g);
    let q = (4.0 * area).atan2(i * i + g * g - h * h);
    let r = (4.0 * area).atan2(g * g + h * h - i * i);
    let angle_sum_residual = p + q + r - PI;

    let o = G::origin();
    let a = G::polar(input.ao, 0.0);
    let f = G::polar(input.of, q);
    let b = G::polar(input.bo, q + p);
    let d = G::polar(input.od, PI);
    let c = G::polar(input.co, PI + q);
    let e = G::polar(input.oe, PI + q + p);

    let triangle = Triangle::new(a, b, c)?;
    let on = |u: &G::Point, v: &G::Point, x: &G::Point| -> Result<f64> {
        Ok(G::side(&G::line_through(u, v)?, x).abs())
    };
    let containment_residual = on(&b, &c, &d)?.max(on(&c, &a, &e)?).max(on(&a, &b, &f)?);

    let frame = cevian_frame(&triangle, &o)?;
    let length_residual = input
        .lengths()
        .iter()
        .zip(frame.lengths())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    let angle_residual = [frame.p, frame.q, frame.r]
        .iter()
        .zip([p, q, r])
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);

    Ok(Construction {
        input: *input,
        triangle,
        o,
        placed_feet: [d, e, f],
        frame,
        ghi: [g, h, i],
        delta,
        area,
        angles: [p, q, r],
        relation_residual: residual,
        angle_sum_residual,
        containment_residual,
        length_residual,
        angle_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cevians::euler_relation_residual;
    use crate::kernel::{Euclidean, Hyperbolic, Spherical};

    fn round_trip<G: Geometry>(a: G::Point, b: G::Point, c: G::Point, w: [f64; 3]) {
        let tri = Triangle::<G>::new(a, b, c).unwrap();
        let o = G::combine([&tri.a, &tri.b, &tri.c], w).unwrap();
        let frame = cevian_frame(&tri, &o).unwrap();
        let input = RatioSumInput::from_frame(&frame);
        let built = construct_from_ratios::<G>(&input).unwrap();
        assert!(
            built.containment_residual < 1e-9,
            "{}",
            built.containment_residual
        );
        assert!(built.length_residual < 1e-9, "{}", built.length_residual);
        assert!(built.angle_residual < 1e-9, "{}", built.angle_residual);
        assert!(built.angle_sum_residual.abs() < 1e-12);
        assert!(euler_relation_residual(&built.frame).scaled < 1e-10);
        // the rebuilt triangle is congruent to the original
        let (s0, s1) = (tri.sides(), built.triangle.sides());
        for k in 0..3 {
            assert!((s0[k] - s1[k]).abs() < 1e-9, "{s0:?} {s1:?}");
        }
    }

    #[test]
    fn round_trips_in_every_geometry() {
        round_trip::<Hyperbolic>(
            Hyperbolic::polar(2.0, 0.2),
            Hyperbolic::polar(1.1, 2.2),
            Hyperbolic::polar(1.7, 4.1),
            [0.3, 0.45, 0.25],
        );
        round_trip::<Spherical>(
            Spherical::polar(0.6, 0.0),
            Spherical::polar(0.5, 2.0),
            Spherical::polar(0.7, 4.3),
            [0.2, 0.3, 0.5],
        );
        round_trip::<Euclidean>(
            Euclidean::polar(2.0, 0.4),
            Euclidean::polar(1.0, 2.4),
            Euclidean::polar(1.5, 4.0),
            [0.5, 0.2, 0.3],
        );
    }

    #[test]
    fn euclidean_centroid_lengths() {
        // centroid of a triangle with medians 3, 3, 3
        let input = RatioSumInput {
            ao: 2.0,
            bo: 2.0,
            co: 2.0,
            od: 1.0,
            oe: 1.0,
            of: 1.0,
        };
        let built = construct_from_ratios::<Euclidean>(&input).unwrap();
        for s in built.triangle.sides() {
            assert!((s - 2.0 * 3f64.sqrt()).abs() < 1e-12);
        }
        for a in built.angles {
            assert!((a - PI / 3.0).abs() < 1e-12);
        }
        for a in built.vertex_angles() {
            assert!((a - 2.0 * PI / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_relation_violation() {
        let input = RatioSumInput {
            ao: 1.0,
            bo: 1.0,
            co: 1.0,
            od: 0.5,
            oe: 0.5,
            of: 0.6,
        };
        assert!(matches!(
            construct_from_ratios::<Hyperbolic>(&input),
            Err(Error::RelationResidual { .. })
        ));
    }

    #[test]
    fn rejects_heron_violation() {
        // alpha = 1 leaves beta, gamma with (beta-1)(gamma-1) = 4; take beta =
        // gamma = 3, i.e. the ratio 1:1 at A. Scaling A's segments up makes G
        // exceed H + I.
        let input = RatioSumInput {
            ao: 40.0,
            od: 40.0,
            bo: 3.0,
            oe: 1.0,
            co: 3.0,
            of: 1.0,
        };
        assert!(matches!(
            construct_from_ratios::<Euclidean>(&input),
            Err(Error::HeronRadicand(_))
        ));
    }

    #[test]
    fn rejects_bad_lengths() {
        let mut input = RatioSumInput {
            ao: 2.0,
            bo: 2.0,
            co: 2.0,
            od: 1.0,
            oe: 1.0,
            of: 1.0,
        };
        input.od = -1.0;
        assert!(matches!(
            construct_from_ratios::<Euclidean>(&input),
            Err(Error::Domain(_))
        ));
        input.od = 1.0;
        input.ao = 1.6;
        assert!(matches!(
            construct_from_ratios::<Spherical>(&input),
            Err(Error::Range(_))
        ));
    }
}
