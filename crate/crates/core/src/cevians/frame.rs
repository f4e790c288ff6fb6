use std::f64::consts::PI;

use serde::Serialize;

use super::Triangle;
use crate::error::{Error, Result};
use crate::kernel::Geometry;
use crate::tol::TOL_ID;

/// A triangle, an interior point `O`, the cevian feet and every quantity
/// measured from them.
///
/// Feet: `D` on `BC`, `E` on `CA`, `F` on `AB`. Angles at `O`:
/// `p = BOF`, `q = AOF`, `r = BOD`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(bound(serialize = "G::Point: Serialize"))]
pub struct CevianFrame<G: Geometry> {
    pub tri: Triangle<G>,
    pub o: G::Point,
    pub d: G::Point,
    pub e: G::Point,
    pub f: G::Point,
    pub ao: f64,
    pub bo: f64,
    pub co: f64,
    pub od: f64,
    pub oe: f64,
    pub of: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub p: f64,
    pub q: f64,
    pub r: f64,
    /// `P = sin p / T(AO)`.
    pub big_p: f64,
    /// `Q = sin q / T(BO)`.
    pub big_q: f64,
    /// `R = sin r / T(CO)`.
    pub big_r: f64,
}

impl<G: Geometry> CevianFrame<G> {
    /// `p + q + r - pi`.
    pub fn angle_sum_residual(&self) -> f64 {
        self.p + self.q + self.r - PI
    }

    /// Largest `|side|` of a foot against the line it should lie on, and of
    /// `O` against each cevian.
    pub fn containment_residual(&self) -> f64 {
        let t = &self.tri;
        let on = |u: &G::Point, v: &G::Point, x: &G::Point| {
            G::line_through(u, v)
                .map(|l| G::side(&l, x).abs())
                .unwrap_or(f64::INFINITY)
        };
        [
            on(&t.b, &t.c, &self.d),
            on(&t.c, &t.a, &self.e),
            on(&t.a, &t.b, &self.f),
            on(&t.a, &self.d, &self.o),
            on(&t.b, &self.e, &self.o),
            on(&t.c, &self.f, &self.o),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn lengths(&self) -> [f64; 6] {
        [self.ao, self.bo, self.co, self.od, self.oe, self.of]
    }
}

/// Measure the cevian frame of `tri` through the interior point `o`.
pub fn cevian_frame<G: Geometry>(tri: &Triangle<G>, o: &G::Point) -> Result<CevianFrame<G>> {
    let sides = tri.barycentric_sides(o);
    if sides.iter().any(|s| s.abs() <= TOL_ID) {
        return Err(Error::Degenerate("cevian point lies on a side or vertex"));
    }
    if sides.iter().any(|s| *s < 0.0) {
        return Err(Error::OutOfScope("cevian point outside the triangle"));
    }

    let foot = |v: &G::Point, u: &G::Point, w: &G::Point| -> Result<G::Point> {
        let cevian = G::line_through(v, o)?;
        let side = G::line_through(u, w)?;
        G::meet(&cevian, &side, o)?.ok_or(Error::Degenerate("cevian misses the opposite side"))
    };
    let d = foot(&tri.a, &tri.b, &tri.c)?;
    let e = foot(&tri.b, &tri.c, &tri.a)?;
    let f = foot(&tri.c, &tri.a, &tri.b)?;

    let dist = |x: &G::Point| G::distance(o, x);
    let (ao, bo, co) = (dist(&tri.a), dist(&tri.b), dist(&tri.c));
    let (od, oe, of) = (dist(&d), dist(&e), dist(&f));
    let t = G::ratio_len;

    let p = G::angle_at(o, &tri.b, &f)?;
    let q = G::angle_at(o, &tri.a, &f)?;
    let r = G::angle_at(o, &tri.b, &d)?;

    Ok(CevianFrame {
        tri: *tri,
        o: *o,
        d,
        e,
        f,
        ao,
        bo,
        co,
        od,
        oe,
        of,
        alpha: t(ao) / t(od),
        beta: t(bo) / t(oe),
        gamma: t(co) / t(of),
        p,
        q,
        r,
        big_p: p.sin() / t(ao),
        big_q: q.sin() / t(bo),
        big_r: r.sin() / t(co),
    })
}

/// Residuals of the ratio-sum relation in its two equivalent forms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EulerResidual {
    /// `alpha*beta*gamma - (alpha+beta+gamma+2)`.
    pub product: f64,
    /// `|product| / (1 + |alpha*beta*gamma|)`.
    pub scaled: f64,
    /// `sum T(OD)/(T(AO)+T(OD)) - 1`, i.e. `sum 1/(alpha+1) - 1`.
    pub reciprocal: f64,
}

pub fn euler_relation_residual<G: Geometry>(frame: &CevianFrame<G>) -> EulerResidual {
    let (a, b, c) = (frame.alpha, frame.beta, frame.gamma);
    let abc = a * b * c;
    let product = abc - (a + b + c + 2.0);
    let t = G::ratio_len;
    let term = |long: f64, short: f64| t(short) / (t(long) + t(short));
    let reciprocal =
        term(frame.ao, frame.od) + term(frame.bo, frame.oe) + term(frame.co, frame.of) - 1.0;
    EulerResidual {
        product,
        scaled: product.abs() / (1.0 + abc.abs()),
        reciprocal,
    }
}

/// The linear system `gamma R = P + Q`, `alpha P = Q + R`, `beta Q = R + P`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PqrSystem {
    pub big_p: f64,
    pub big_q: f64,
    pub big_r: f64,
    /// `[|gamma R - (P+Q)|, |alpha P - (Q+R)|, |beta Q - (R+P)|]`.
    pub residuals: [f64; 3],
    /// `|sin r - T(OF) (sin p / T(AO) + sin q / T(BO))|` with every term
    /// measured from coordinates.
    pub lemma_residual: f64,
    /// `1 + max(|gamma R|, |alpha P|, |beta Q|)`, for relative comparisons.
    pub scale: f64,
}

impl PqrSystem {
    pub fn max_scaled_residual(&self) -> f64 {
        self.residuals
            .iter()
            .fold(self.lemma_residual, |m, r| m.max(*r))
            / self.scale
    }
}

pub fn pqr_system<G: Geometry>(frame: &CevianFrame<G>) -> PqrSystem {
    let (p, q, r) = (frame.big_p, frame.big_q, frame.big_r);
    let (a, b, c) = (frame.alpha, frame.beta, frame.gamma);
    let t = G::ratio_len;
    let lemma = t(frame.of) * (frame.p.sin() / t(frame.ao) + frame.q.sin() / t(frame.bo));
    PqrSystem {
        big_p: p,
        big_q: q,
        big_r: r,
        residuals: [
            (c * r - (p + q)).abs(),
            (a * p - (q + r)).abs(),
            (b * q - (r + p)).abs(),
        ],
        lemma_residual: (frame.r.sin() - lemma).abs(),
        scale: 1.0 + (c * r).abs().max((a * p).abs()).max((b * q).abs()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{Euclidean, Hyperbolic, Spherical};

    fn equilateral<G: Geometry>(radius: f64) -> Triangle<G> {
        Triangle::new(
            G::polar(radius, 0.0),
            G::polar(radius, 2.0 * PI / 3.0),
            G::polar(radius, 4.0 * PI / 3.0),
        )
        .unwrap()
    }

    #[test]
    fn euclidean_centroid_has_ratio_two() {
        let t = Triangle::<Euclidean>::new(
            crate::kernel::Point2::new(0.0, 0.0),
            crate::kernel::Point2::new(4.0, 0.5),
            crate::kernel::Point2::new(1.0, 3.0),
        )
        .unwrap();
        let g = crate::kernel::Point2::new(5.0 / 3.0, 3.5 / 3.0);
        let f = cevian_frame(&t, &g).unwrap();
        for x in [f.alpha, f.beta, f.gamma] {
            assert!((x - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn equilateral_median_frames() {
        let h = cevian_frame(&equilateral::<Hyperbolic>(1.2), &Hyperbolic::origin()).unwrap();
        assert!((h.alpha - 2.0).abs() < 1e-12);
        assert!(euler_relation_residual(&h).product.abs() < 1e-12);
        let sys = pqr_system(&h);
        assert!((sys.big_p - sys.big_q).abs() < 1e-12 && (sys.big_q - sys.big_r).abs() < 1e-12);
        assert!(sys.max_scaled_residual() < 1e-12);
        let s = cevian_frame(&equilateral::<Spherical>(0.6), &Spherical::origin()).unwrap();
        assert!((s.gamma - 2.0).abs() < 1e-12);
    }

    #[test]
    fn scalene_frame_identities() {
        let t = Triangle::<Hyperbolic>::new(
            Hyperbolic::polar(2.1, 0.3),
            Hyperbolic::polar(0.9, 2.4),
            Hyperbolic::polar(1.6, 4.4),
        )
        .unwrap();
        let o = Hyperbolic::combine([&t.a, &t.b, &t.c], [0.2, 0.5, 0.3]).unwrap();
        let f = cevian_frame(&t, &o).unwrap();
        assert!(f.containment_residual() < 1e-12);
        assert!(f.angle_sum_residual().abs() < 1e-12);
        let e = euler_relation_residual(&f);
        assert!(e.scaled < 1e-12 && e.reciprocal.abs() < 1e-12);
        assert!(pqr_system(&f).max_scaled_residual() < 1e-12);
    }

    #[test]
    fn boundary_and_exterior_points() {
        let t = equilateral::<Hyperbolic>(1.0);
        assert!(matches!(cevian_frame(&t, &t.a), Err(Error::Degenerate(_))));
        let mid = Hyperbolic::midpoint(&t.a, &t.b).unwrap();
        assert!(matches!(cevian_frame(&t, &mid), Err(Error::Degenerate(_))));
        let far = Hyperbolic::polar(3.0, 1.0);
        assert!(matches!(cevian_frame(&t, &far), Err(Error::OutOfScope(_))));
    }
}
