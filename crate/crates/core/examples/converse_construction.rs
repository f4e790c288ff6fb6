//! Rebuild a triangle from the six cevian lengths of a measured frame, and
//! show the three ways an input can be rejected.

use curvgeom::cevians::{cevian_frame, construct_from_ratios, RatioSumInput, Triangle};
use curvgeom::{Euclidean, Geometry, Hyperbolic, Result};

fn main() -> Result<()> {
    let tri = Triangle::<Hyperbolic>::new(
        Hyperbolic::polar(1.8, 0.3),
        Hyperbolic::polar(1.2, 2.3),
        Hyperbolic::polar(1.5, 4.2),
    )?;
    let o = Hyperbolic::combine([&tri.a, &tri.b, &tri.c], [0.3, 0.3, 0.4])?;
    let input = RatioSumInput::from_frame(&cevian_frame(&tri, &o)?);
    println!("input lengths {:?}", input.lengths());

    let built = construct_from_ratios::<Hyperbolic>(&input)?;
    println!("G, H, I        {:?}", built.ghi);
    println!("angles p, q, r {:?}", built.angles);
    println!("angles at O    {:?}", built.vertex_angles());
    println!("sides  before  {:?}", tri.sides());
    println!("sides  after   {:?}", built.triangle.sides());
    println!(
        "residuals: lengths {:.1e}  angles {:.1e}  containment {:.1e}",
        built.length_residual, built.angle_residual, built.containment_residual
    );

    let mut bad = input;
    bad.od *= 1.1;
    println!(
        "10% longer OD: {}",
        construct_from_ratios::<Hyperbolic>(&bad).unwrap_err()
    );
    let lopsided = RatioSumInput {
        ao: 40.0,
        od: 40.0,
        bo: 3.0,
        oe: 1.0,
        co: 3.0,
        of: 1.0,
    };
    println!(
        "lopsided:      {}",
        construct_from_ratios::<Euclidean>(&lopsided).unwrap_err()
    );
    Ok(())
}
