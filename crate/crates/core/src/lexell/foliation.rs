use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use super::area::apex_area_formula;
use super::locus::{lexell_locus, AreaLocus, BaseConfig};
use crate::error::{Error, Result};
use crate::kernel::HPoint;

const Y_MAX: f64 = 40.0;
const BISECTION_STEPS: usize = 200;
const Y_TOL: f64 = 1e-12;

/// Supremum of the areas over the base `2x`: the apex escapes to the ideal
/// point of the bisector, giving `2 arccos(1 / cosh x)`.
pub fn foliation_limit(x: f64) -> f64 {
    2.0 * (1.0 / x.cosh()).acos()
}

/// The height `y` on the bisector with `apex_area_formula(x, y) = target`.
pub fn solve_apex_height(x: f64, target: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("half-base {x} is not positive")));
    }
    if !(target > 0.0) {
        return Err(Error::Domain(format!(
            "target area {target} is not positive"
        )));
    }
    let limit = foliation_limit(x);
    if target >= limit || target > apex_area_formula(x, Y_MAX)? {
        return Err(Error::InfeasibleArea { target, limit });
    }
    let (mut lo, mut hi) = (0.0, Y_MAX);
    for _ in 0..BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if apex_area_formula(x, mid)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= Y_TOL {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// One locus per target area, apex on the upper half of the bisector, sorted
/// by area.
pub fn foliation(base: &BaseConfig, areas: &[f64]) -> Result<Vec<AreaLocus>> {
    let mut leaves = areas
        .par_iter()
        .map(|&target| {
            let y = solve_apex_height(base.x, target)?;
            lexell_locus(base, &base.world(&HPoint::from_polar(y, 0.5 * PI)))
        })
        .collect::<Result<Vec<_>>>()?;
    leaves.sort_by(|a, b| a.area.total_cmp(&b.area));
    Ok(leaves)
}

/// How far apart two leaves stay, measured at sample points of the first.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LeafSeparation {
    /// Smallest `|d(Z, axis_2) - offset_2|` over samples `Z` of leaf 1.
    pub min_gap: f64,
    /// Whether every sample of leaf 1 lies on the same side of leaf 2.
    pub one_sided: bool,
}

pub fn leaf_separation(
    first: &AreaLocus,
    second: &AreaLocus,
    samples: usize,
) -> Result<LeafSeparation> {
    let gaps = first
        .sample_carrier(-3.0, 3.0, samples)?
        .iter()
        .map(|z| second.carrier.signed_gap(z))
        .collect::<Vec<_>>();
    let min_gap = gaps.iter().map(|g| g.abs()).fold(f64::INFINITY, f64::min);
    let one_sided = gaps.iter().all(|g| *g > 0.0) || gaps.iter().all(|g| *g < 0.0);
    Ok(LeafSeparation { min_gap, one_sided })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisection_recovers_height() {
        let target = apex_area_formula(0.8, 1.0).unwrap();
        let y = solve_apex_height(0.8, target).unwrap();
        assert!((y - 1.0).abs() < 1e-9);
    }

    #[test]
    fn infeasible_and_empty() {
        let base = BaseConfig::new(0.5).unwrap();
        let limit = foliation_limit(0.5);
        assert!(matches!(
            solve_apex_height(0.5, limit),
            Err(Error::InfeasibleArea { .. })
        ));
        assert!(matches!(
            solve_apex_height(0.5, -1.0),
            Err(Error::Domain(_))
        ));
        assert!(foliation(&base, &[]).unwrap().is_empty());
    }

    #[test]
    fn leaves_are_sorted_and_disjoint() {
        let base = BaseConfig::new(0.7).unwrap();
        let limit = foliation_limit(0.7);
        let areas: Vec<f64> = [0.7, 0.1, 0.3, 0.5, 0.9]
            .iter()
            .map(|f| f * limit)
            .collect();
        let leaves = foliation(&base, &areas).unwrap();
        assert_eq!(leaves.len(), 5);
        for w in leaves.windows(2) {
            assert!(w[0].area < w[1].area);
            assert!(w[0].bisector_height < w[1].bisector_height);
            assert!(0.0 < w[0].carrier.offset && w[0].carrier.offset < w[1].carrier.offset);
            let sep = leaf_separation(&w[0], &w[1], 50).unwrap();
            assert!(sep.one_sided && sep.min_gap > 0.0, "{sep:?}");
        }
        for (leaf, target) in leaves.iter().zip([0.1, 0.3, 0.5, 0.7, 0.9]) {
            assert!((leaf.area - target * limit).abs() < 1e-9);
        }
    }
}
