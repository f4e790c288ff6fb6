//! Triangles with two ideal vertices: the angle form of the finite side and
//! the area as the base grows without bound.

use curvgeom::lexell::{
    asymptotic_defect, cosh_c_from_angles, ideal_half_area, ideal_limit_area, sinh_c_from_angles,
    truncated_ideal_area,
};
use curvgeom::Result;

fn main() -> Result<()> {
    for (a, b) in [(0.4, 0.9), (1.0, 1.0), (0.2, 2.5)] {
        let (s, c) = (sinh_c_from_angles(a, b)?, cosh_c_from_angles(a, b)?);
        println!(
            "alpha={a} beta={b}: sinh c={s:.10} cosh c={c:.10} cosh^2-sinh^2-1={:+.1e} ray defect {:.1e}",
            c * c - s * s - 1.0,
            asymptotic_defect(a, b)?
        );
    }
    let c = 0.9;
    println!(
        "half area {:.10}, full {:.10}",
        ideal_half_area(c)?,
        ideal_limit_area(c)?
    );
    for t in [2.0, 5.0, 10.0, 15.0] {
        println!("truncated at {t:>4}: {:.10}", truncated_ideal_area(c, t)?);
    }
    Ok(())
}
