//! Foliate the plane over a base by constant-area leaves and write the
//! picture to `foliation.svg` (or the path given as the first argument).

use curvgeom::figures::foliation_scene;
use curvgeom::lexell::{foliation, foliation_limit, leaf_separation, BaseConfig};
use curvgeom::Result;

fn main() -> Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "foliation.svg".into());
    let base = BaseConfig::new(0.7)?;
    let limit = foliation_limit(base.x);
    let areas: Vec<f64> = (1..=6).map(|k| limit * k as f64 / 7.0).collect();
    let leaves = foliation(&base, &areas)?;
    for leaf in &leaves {
        println!(
            "area {:.6}  offset {:.6}  height {:.6}",
            leaf.area, leaf.carrier.offset, leaf.bisector_height
        );
    }
    for w in leaves.windows(2) {
        let s = leaf_separation(&w[0], &w[1], 40)?;
        println!("gap {:.4} one-sided {}", s.min_gap, s.one_sided);
    }
    let scene = foliation_scene(&leaves);
    scene.validate().expect("scene is well formed");
    std::fs::write(&path, scene.to_svg()).expect("write svg");
    println!("wrote {path} (areas below {limit:.6})");
    Ok(())
}
