use std::f64::consts::PI;

use rand::Rng;
use serde::Serialize;

use super::area::{apex_area_formula, triangle_area_of};
use super::hypercycle::Hypercycle;
use crate::error::{Error, Result};
use crate::kernel::{
    geodesic_through, intersect_geodesics, midpoint, Geodesic, HPoint, Isometry, MinkowskiVec,
};
use crate::tol::{MAX_HYPERBOLIC_SIDE, TOL_ID};

/// A base segment `AB` of length `2x` and the isometry taking its standard
/// position (`A = (x, 0)`, `B = (-x, 0)` in polar terms) to the world frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaseConfig {
    pub x: f64,
    /// `A` in standard position.
    pub a: HPoint,
    /// `B` in standard position.
    pub b: HPoint,
    pub to_world: Isometry,
}

impl BaseConfig {
    pub fn new(x: f64) -> Result<Self> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("half-base {x} is not positive")));
        }
        if 2.0 * x > MAX_HYPERBOLIC_SIDE {
            return Err(Error::Range(format!(
                "base 2*{x} exceeds {MAX_HYPERBOLIC_SIDE}"
            )));
        }
        Ok(Self {
            x,
            a: HPoint::from_polar(x, 0.0),
            b: HPoint::from_polar(x, PI),
            to_world: Isometry::identity(),
        })
    }

    /// The base through arbitrary world points `a`, `b`.
    pub fn from_points(a: &HPoint, b: &HPoint) -> Result<Self> {
        let m = midpoint(a, b)?;
        let mut base = Self::new(0.5 * a.dist(b))?;
        base.to_world = Isometry::from_frame(&m, a)?;
        Ok(base)
    }

    pub fn world(&self, p: &HPoint) -> HPoint {
        self.to_world.apply(p)
    }

    pub fn standard(&self, p: &HPoint) -> HPoint {
        self.to_world.apply_inverse(p)
    }

    /// The perpendicular bisector of `AB` in standard position.
    fn bisector_reflect(p: &HPoint) -> HPoint {
        let v = p.vec();
        HPoint::normalize(MinkowskiVec::new(v.x0, -v.x1, v.x2))
            .expect("reflection preserves the sheet")
    }
}

/// One component of the constant-area locus, in standard position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaLocus {
    pub base: BaseConfig,
    pub apex: HPoint,
    /// Reflection of the apex in the perpendicular bisector of `AB`.
    pub apex_reflected: HPoint,
    /// Midpoints of `PA` and `P'B`.
    pub midpoints: [HPoint; 2],
    /// The geodesic `G` through the two midpoints, with the apex on its left.
    pub axis: Geodesic,
    /// `C'`: the hypercycle through the apex.
    pub carrier: Hypercycle,
    /// `C`: the mirror hypercycle, through `A` and `B`.
    pub mirror: Hypercycle,
    /// Area of `ABP`.
    pub area: f64,
    /// Distance from the origin to where the carrier crosses the bisector.
    pub bisector_height: f64,
}

/// Residuals of an [`AreaLocus`] against its defining properties.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocusCheck {
    pub samples: usize,
    /// `max - min` of `area(ABZ)` over sampled `Z` on the carrier.
    pub area_spread: f64,
    /// Largest `|area(ABZ) - area(ABP)|`.
    pub area_deviation: f64,
    /// `|area(ABP) - apex_area_formula(x, bisector_height)|`.
    pub formula_residual: f64,
    /// Largest hypercycle residual of `A`, `B` on the mirror.
    pub mirror_residual: f64,
    /// Largest `|<M, n>|` for the midpoints `M` of `ZA`, `ZB`.
    pub midpoint_residual: f64,
}

impl LocusCheck {
    pub fn max_area_residual(&self) -> f64 {
        self.area_spread
            .max(self.area_deviation)
            .max(self.formula_residual)
    }

    pub fn max_incidence_residual(&self) -> f64 {
        self.mirror_residual.max(self.midpoint_residual)
    }
}

impl AreaLocus {
    /// Points of the carrier at `n` evenly spaced parameters in `[lo, hi]`.
    pub fn sample_carrier(&self, lo: f64, hi: f64, n: usize) -> Result<Vec<HPoint>> {
        if n < 2 {
            return Err(Error::Domain("need at least two samples".into()));
        }
        self.carrier.polyline(lo, hi, n - 1)
    }

    /// Check constancy, mirror incidence and the midpoint line over `n`
    /// carrier samples with parameter in `[-3, 3]`.
    pub fn check(&self, n: usize) -> Result<LocusCheck> {
        let (a, b) = (self.base.a, self.base.b);
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut deviation = 0.0f64;
        let mut mid_res = 0.0f64;
        for z in self.sample_carrier(-3.0, 3.0, n)? {
            let area = triangle_area_of(&a, &b, &z)?;
            lo = lo.min(area);
            hi = hi.max(area);
            deviation = deviation.max((area - self.area).abs());
            for m in [midpoint(&z, &a)?, midpoint(&z, &b)?] {
                mid_res = mid_res.max(self.axis.side(&m).abs());
            }
        }
        let formula = apex_area_formula(self.base.x, self.bisector_height)?;
        Ok(LocusCheck {
            samples: n,
            area_spread: hi - lo,
            area_deviation: deviation,
            formula_residual: (formula - self.area).abs(),
            mirror_residual: self.mirror.residual(&a).max(self.mirror.residual(&b)),
            midpoint_residual: mid_res,
        })
    }
}

/// Build the constant-area locus through the world point `apex`.
pub fn lexell_locus(base: &BaseConfig, apex: &HPoint) -> Result<AreaLocus> {
    let p = base.standard(apex);
    if p.vec().x2.abs() <= TOL_ID {
        return Err(Error::Degenerate("apex lies on the base line"));
    }
    let p_ref = BaseConfig::bisector_reflect(&p);
    let m1 = midpoint(&p, &base.a)?;
    let m2 = midpoint(&p_ref, &base.b)?;
    if m1.dist(&m2) <= TOL_ID {
        return Err(Error::Degenerate("midpoints coincide"));
    }
    // orient the axis so the apex is on its left and the carrier offset is positive
    let axis = geodesic_through(&m1, &m2)?;
    let axis = if axis.side(&p) < 0.0 {
        axis.reversed()
    } else {
        axis
    };
    let carrier = Hypercycle::through(axis, &p);
    let mirror = carrier.mirror();
    let area = triangle_area_of(&base.a, &base.b, &p)?;
    let crossing = carrier.sample(0.0)?;
    Ok(AreaLocus {
        base: *base,
        apex: p,
        apex_reflected: p_ref,
        midpoints: [m1, m2],
        axis,
        carrier,
        mirror,
        area,
        bisector_height: crossing.dist(&HPoint::ORIGIN),
    })
}

/// `|XR - RY|` for the chord from `x` on the mirror to `y` on the carrier,
/// where `R` is where the chord crosses the axis.
pub fn equal_subarc(locus: &AreaLocus, x: &HPoint, y: &HPoint) -> Result<f64> {
    let (sx, sy) = (locus.axis.side(x), locus.axis.side(y));
    if sx * sy >= 0.0 {
        return Err(Error::Domain(
            "chord endpoints on the same side of the axis".into(),
        ));
    }
    let chord = geodesic_through(x, y)?;
    let r = intersect_geodesics(&chord, &locus.axis)?
        .ok_or(Error::Degenerate("chord misses the axis"))?;
    Ok((x.dist(&r) - r.dist(y)).abs())
}

/// Largest [`equal_subarc`] over `n` random chords with endpoint parameters
/// in `[-3, 3]`.
pub fn equal_subarc_check<R: Rng>(locus: &AreaLocus, n: usize, rng: &mut R) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..n {
        let x = locus.mirror.sample(rng.random_range(-3.0..=3.0))?;
        let y = locus.carrier.sample(rng.random_range(-3.0..=3.0))?;
        worst = worst.max(equal_subarc(locus, &x, &y)?);
    }
    Ok(worst)
}
