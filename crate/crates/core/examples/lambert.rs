//! Medians of equilateral triangles: the ratio at the centroid is always 2,
//! while AD/OD sits above, at, or below 3 depending on curvature.

use curvgeom::cevians::{lambert_margin, lambert_median_report};
use curvgeom::{GeometryKind, Result};

fn main() -> Result<()> {
    for (kind, sides) in [
        (GeometryKind::Hyperbolic, &[1e-3, 0.5, 1.0, 2.0, 4.0][..]),
        (GeometryKind::Euclidean, &[1.0, 10.0][..]),
        (GeometryKind::Spherical, &[0.3, 0.6, 1.2][..]),
    ] {
        for &side in sides {
            let r = lambert_median_report(side, kind)?;
            println!(
                "{:<10} side {side:<6} ratios {:.12} {:.12} {:.12}  AD/OD {:.12}",
                kind.as_str(),
                r.ratios[0],
                r.ratios[1],
                r.ratios[2],
                r.ad_over_od
            );
        }
    }
    for x in [0.1, 1.0, 3.0] {
        println!("2 tanh {x} - tanh {} = {:.6}", 2.0 * x, lambert_margin(x));
    }
    Ok(())
}
