use serde::Serialize;

use crate::error::Result;
use crate::kernel::{Geodesic, HPoint};

/// The points at signed distance `offset` from `axis`, positive on its left.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Hypercycle {
    pub axis: Geodesic,
    pub offset: f64,
}

impl Hypercycle {
    pub fn new(axis: Geodesic, offset: f64) -> Self {
        Self { axis, offset }
    }

    /// The hypercycle about `axis` through `p`.
    pub fn through(axis: Geodesic, p: &HPoint) -> Self {
        Self::new(axis, axis.signed_distance(p))
    }

    /// Same axis, opposite offset.
    pub fn mirror(&self) -> Self {
        Self::new(self.axis, -self.offset)
    }

    /// `|<p, n> - sinh(offset)|`.
    pub fn residual(&self, p: &HPoint) -> f64 {
        (self.axis.side(p) - self.offset.sinh()).abs()
    }

    /// Signed distance of `p` from the axis minus the offset.
    pub fn signed_gap(&self, p: &HPoint) -> f64 {
        self.axis.signed_distance(p) - self.offset
    }

    /// `cosh(offset) g(s) + sinh(offset) n`, where `g` is the unit-speed axis
    /// through the foot of the basepoint and `n` the axis normal.
    pub fn sample(&self, s: f64) -> Result<HPoint> {
        let g = self.axis.point_at(s).vec();
        HPoint::normalize(g * self.offset.cosh() + self.axis.normal() * self.offset.sinh())
    }

    /// `n + 1` points evenly spaced in `s` over `[lo, hi]`.
    pub fn polyline(&self, lo: f64, hi: f64, n: usize) -> Result<Vec<HPoint>> {
        (0..=n)
            .map(|k| self.sample(lo + (hi - lo) * k as f64 / n as f64))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::geodesic_through;

    #[test]
    fn samples_lie_on_the_curve() {
        let axis = geodesic_through(
            &HPoint::from_polar(0.4, 1.0),
            &HPoint::from_polar(1.2, -0.5),
        )
        .unwrap();
        let h = Hypercycle::new(axis, 0.8);
        for s in [-3.0, -0.5, 0.0, 2.0, 3.0] {
            let p = h.sample(s).unwrap();
            assert!(h.residual(&p) < 1e-12);
            assert!(h.signed_gap(&p).abs() < 1e-12);
        }
        let m = h.mirror();
        assert!(m.residual(&m.sample(1.0).unwrap()) < 1e-12);
        assert!(axis.side(&m.sample(1.0).unwrap()) < 0.0);
    }

    #[test]
    fn zero_offset_is_the_axis() {
        let axis = geodesic_through(&HPoint::ORIGIN, &HPoint::from_polar(1.0, 0.3)).unwrap();
        let h = Hypercycle::new(axis, 0.0);
        assert!(axis.side(&h.sample(2.0).unwrap()).abs() < 1e-14);
    }
}
