//! The constant-area locus through an apex: build it, sample it, and check
//! the mirror hypercycle and the midpoint line.

use curvgeom::kernel::HPoint;
use curvgeom::lexell::{equal_subarc_check, lexell_locus, BaseConfig};
use curvgeom::sampling::trial_rng;
use curvgeom::Result;

fn main() -> Result<()> {
    let base = BaseConfig::new(0.8)?;
    let locus = lexell_locus(&base, &HPoint::from_polar(1.3, 1.1))?;
    println!(
        "area {:.12}  offset {:.12}  bisector height {:.12}",
        locus.area, locus.carrier.offset, locus.bisector_height
    );
    let check = locus.check(20)?;
    println!("{check:#?}");
    let chords = equal_subarc_check(&locus, 100, &mut trial_rng(0, 0))?;
    println!("equal subarc residual over 100 chords {chords:.1e}");

    // the same construction with A and B placed anywhere
    let moved =
        BaseConfig::from_points(&HPoint::from_polar(1.0, 0.5), &HPoint::from_polar(0.6, 2.5))?;
    let world = lexell_locus(&moved, &HPoint::from_polar(1.5, -1.0))?;
    println!(
        "moved base: area {:.12}  spread {:.1e}",
        world.area,
        world.check(20)?.area_spread
    );
    Ok(())
}
