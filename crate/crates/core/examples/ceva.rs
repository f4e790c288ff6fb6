//! Ceva's sine-ratio product for concurrent cevians, and for a configuration
//! where one foot has been moved.

use curvgeom::cevians::ceva_product;
use curvgeom::sampling::{random_frame, trial_rng};
use curvgeom::{Euclidean, Geometry, Hyperbolic, Result, Spherical};

fn show<G: Geometry>() -> Result<()> {
    let f = random_frame::<G, _>(&mut trial_rng(3, 0));
    let good = ceva_product(&f.tri, &f.d, &f.e, &f.f)?;
    let moved = G::combine([&f.tri.a, &f.tri.b, &f.f], [0.0, 0.1, 0.9])?;
    let bad = ceva_product(&f.tri, &f.d, &f.e, &moved)?;
    println!(
        "{:<10} concurrent: product {:.15} defect {:.1e} | moved foot: product {:.6} defect {:.3}",
        G::KIND.as_str(),
        good.product,
        good.concurrency_defect,
        bad.product,
        bad.concurrency_defect
    );
    Ok(())
}

fn main() -> Result<()> {
    show::<Hyperbolic>()?;
    show::<Spherical>()?;
    show::<Euclidean>()
}
