//! Central projection onto the tangent plane at O turns a hyperbolic cevian
//! frame into a Euclidean one with the same ratios.

use curvgeom::cevians::projection_oracle;
use curvgeom::sampling::{random_frame, trial_rng};
use curvgeom::Hyperbolic;

fn main() {
    for t in 0..5 {
        let frame = random_frame::<Hyperbolic, _>(&mut trial_rng(9, t));
        let p = projection_oracle(&frame);
        println!(
            "frame {t}: hyperbolic {:>9.6} {:>9.6} {:>9.6}  projected {:>9.6} {:>9.6} {:>9.6}  dev {:.1e}  flat relation {:.1e}",
            frame.alpha,
            frame.beta,
            frame.gamma,
            p.euclidean_ratios[0],
            p.euclidean_ratios[1],
            p.euclidean_ratios[2],
            p.max_ratio_deviation,
            p.euclidean_relation_residual
        );
    }
}
