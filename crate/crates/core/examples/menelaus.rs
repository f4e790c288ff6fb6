//! Menelaus' ratio for right triangles built with perpendicular feet, in all
//! three geometries.

use curvgeom::trig::RightTriangleConfig;
use curvgeom::{Euclidean, Geometry, Hyperbolic, Result, Spherical};

fn show<G: Geometry>(b: f64, alpha: f64) -> Result<()> {
    let t = RightTriangleConfig::synthetic::<G>(b, alpha)?;
    println!(
        "{:<10} AC={b:.2} alpha={alpha:.2}  AB={:.12}  pythagoras={:+.1e}  cathetus={:+.1e}  menelaus={:.1e}",
        G::KIND.as_str(),
        t.c,
        t.pythagoras_residual(),
        t.cathetus_residual(),
        t.menelaus_residual()?
    );
    Ok(())
}

fn main() -> Result<()> {
    for (b, alpha) in [(0.5, 0.3), (1.2, 1.0), (1.5, 1.4)] {
        show::<Hyperbolic>(b, alpha)?;
        show::<Spherical>(b, alpha)?;
        show::<Euclidean>(b, alpha)?;
    }
    Ok(())
}
