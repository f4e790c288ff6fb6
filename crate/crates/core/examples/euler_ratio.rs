//! The ratio-sum relation and the P/Q/R system on random cevian frames.

use curvgeom::cevians::{euler_relation_residual, pqr_system};
use curvgeom::sampling::{random_frame, trial_rng};
use curvgeom::{Euclidean, Geometry, Hyperbolic, Spherical};

fn report<G: Geometry>(trials: u64) {
    let (mut worst, mut recip, mut pqr) = (0.0f64, 0.0f64, 0.0f64);
    for t in 0..trials {
        let frame = random_frame::<G, _>(&mut trial_rng(1, t));
        let e = euler_relation_residual(&frame);
        worst = worst.max(e.scaled);
        recip = recip.max(e.reciprocal.abs());
        pqr = pqr.max(pqr_system(&frame).max_scaled_residual());
        if t == 0 {
            println!(
                "{:<10} first frame: alpha={:.6} beta={:.6} gamma={:.6}",
                G::KIND.as_str(),
                frame.alpha,
                frame.beta,
                frame.gamma
            );
        }
    }
    println!(
        "{:<10} {trials} frames: relation {worst:.1e}  reciprocal {recip:.1e}  pqr {pqr:.1e}",
        G::KIND.as_str()
    );
}

fn main() {
    report::<Hyperbolic>(200);
    report::<Spherical>(200);
    report::<Euclidean>(200);
}
