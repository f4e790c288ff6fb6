//! Seeded random configurations for verification campaigns.
//!
//! Every trial draws from its own ChaCha8 stream: the generator is seeded
//! with the campaign seed and the stream is set to the trial index, so a
//! trial's configuration does not depend on which thread runs it or on the
//! other trials.

use std::f64::consts::{FRAC_PI_4, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cevians::{cevian_frame, CevianFrame, Triangle};
use crate::kernel::{Geometry, GeometryKind};

/// Smallest interior angle accepted for random triangles.
pub const MIN_ANGLE: f64 = 0.15;
/// Shortest side accepted for random triangles.
pub const MIN_SIDE: f64 = 0.05;
/// Rejection-sampling attempts before giving up.
const MAX_ATTEMPTS: usize = 10_000;

/// The generator for trial `trial` of the campaign seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Vertices are drawn within this distance of the origin.
pub fn vertex_radius(kind: GeometryKind) -> f64 {
    match kind {
        GeometryKind::Hyperbolic => 3.0,
        GeometryKind::Spherical => FRAC_PI_4,
        GeometryKind::Euclidean => 3.0,
    }
}

/// A point at uniform distance in `[0, vertex_radius]` and uniform direction.
pub fn random_point<G: Geometry, R: Rng>(rng: &mut R) -> G::Point {
    let r = rng.random_range(0.0..=vertex_radius(G::KIND));
    G::polar(r, rng.random_range(0.0..TAU))
}

/// A triangle with every angle at least [`MIN_ANGLE`] and every side at
/// least [`MIN_SIDE`].
pub fn random_triangle<G: Geometry, R: Rng>(rng: &mut R) -> Triangle<G> {
    for _ in 0..MAX_ATTEMPTS {
        let (a, b, c) = (
            random_point::<G, _>(rng),
            random_point::<G, _>(rng),
            random_point::<G, _>(rng),
        );
        let Ok(tri) = Triangle::<G>::new(a, b, c) else {
            continue;
        };
        if tri.sides().iter().any(|s| *s < MIN_SIDE) {
            continue;
        }
        match tri.angles() {
            Ok(angles) if angles.iter().all(|x| *x >= MIN_ANGLE) => return tri,
            _ => continue,
        }
    }
    panic!("triangle sampler exhausted {MAX_ATTEMPTS} attempts")
}

/// A positive combination of the vertices with weights in `[0.05, 1]`.
pub fn random_interior_point<G: Geometry, R: Rng>(tri: &Triangle<G>, rng: &mut R) -> G::Point {
    let w = [(); 3].map(|_| rng.random_range(0.05..=1.0));
    G::combine([&tri.a, &tri.b, &tri.c], w).expect("positive weights")
}

/// A random triangle and interior point, measured.
pub fn random_frame<G: Geometry, R: Rng>(rng: &mut R) -> CevianFrame<G> {
    for _ in 0..MAX_ATTEMPTS {
        let tri = random_triangle::<G, _>(rng);
        let o = random_interior_point(&tri, rng);
        if let Ok(frame) = cevian_frame(&tri, &o) {
            return frame;
        }
    }
    panic!("frame sampler exhausted {MAX_ATTEMPTS} attempts")
}

/// An angle in `[lo, hi]`, drawn uniformly; a convenience for campaigns.
pub fn uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..=hi)
}

/// A direction in `[0.2, pi - 0.2]`, mirrored to the lower half with
/// probability one half, keeping clear of the base line.
pub fn off_axis_direction<R: Rng>(rng: &mut R) -> f64 {
    let theta = rng.random_range(0.2..=PI - 0.2);
    if rng.random_bool(0.5) {
        -theta
    } else {
        theta
    }
}
