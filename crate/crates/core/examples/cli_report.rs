//! Drive a campaign through the library and print the JSON the CLI emits.

use curvgeom::campaign::{run_campaign, Theorem};
use curvgeom::{json, GeometryKind, Result};

fn main() -> Result<()> {
    for theorem in Theorem::ALL {
        for kind in GeometryKind::ALL {
            if !theorem.supports(kind) {
                continue;
            }
            let r = run_campaign(theorem, kind, 100, 42, None)?;
            println!(
                "{:<12} {:<10} max {:.2e} pass {}",
                theorem.as_str(),
                kind.as_str(),
                r.max_residual.0,
                r.pass
            );
        }
    }
    print!(
        "{}",
        json::to_string(&run_campaign(
            Theorem::EulerRatio,
            GeometryKind::Hyperbolic,
            200,
            42,
            None
        )?)
    );
    Ok(())
}
