//! The monotone area function and its derivative, the apex-height area, and
//! the split into two right triangles.

use curvgeom::lexell::{
    apex_area_formula, apex_area_synthetic, area_derivative, area_function,
    finite_difference_derivative, split_area_synthetic, split_areas,
};
use curvgeom::Result;

fn main() -> Result<()> {
    for x in [0.5, 1.0, 2.0] {
        for u in [1.5, 5.0, 20.0] {
            println!(
                "x={x} u={u:<4} f={:.10}  f'={:+.10}  central difference {:+.10}",
                area_function(x, u),
                area_derivative(x, u),
                finite_difference_derivative(x, u, 1e-5)
            );
        }
    }
    for (x, y) in [(0.5, 0.5), (1.0, 2.0), (2.0, 6.0)] {
        println!(
            "apex x={x} y={y}: formula {:.12} synthetic {:.12}",
            apex_area_formula(x, y)?,
            apex_area_synthetic(x, y)?
        );
    }
    let (x, a) = (1.0, 0.3);
    // coordinates stay trustworthy up to distance about 10
    for t in [0.5, 2.0, 8.0] {
        let (d1, d2) = split_areas(x, a, t)?;
        println!(
            "split t={t:<4} D1+D2 {:.12} synthetic {:.12}",
            d1 + d2,
            split_area_synthetic(x, a, t)?
        );
    }
    let (d1, d2) = split_areas(x, a, 20.0)?;
    println!("split t=20   D1+D2 {:.12}", d1 + d2);
    let ideal = (1.0 / (x - a).cosh()).acos() + (1.0 / (x + a).cosh()).acos();
    println!("t -> infinity limit {ideal:.12}");
    Ok(())
}
