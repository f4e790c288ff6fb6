//! Write every built-in figure as SVG into a directory (default `figures/`).

use curvgeom::cli::{figure_scene, Figure};
use curvgeom::Result;

fn main() -> Result<()> {
    let dir = std::path::PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir).expect("create output directory");
    for (figure, name) in [
        (Figure::Cevians, "cevians"),
        (Figure::Lexell, "lexell"),
        (Figure::Foliation, "foliation"),
        (Figure::Limit, "limit"),
    ] {
        let scene = figure_scene(figure, 1)?;
        scene.validate().expect("scene is well formed");
        let path = dir.join(format!("{name}.svg"));
        std::fs::write(&path, scene.to_svg()).expect("write svg");
        println!("{} ({} elements)", path.display(), scene.elements.len());
    }
    Ok(())
}
