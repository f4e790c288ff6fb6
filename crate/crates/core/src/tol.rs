//! Numerical tolerances shared by every module.
//!
//! Side lengths are capped at [`MAX_HYPERBOLIC_SIDE`], so `cosh` stays below
//! roughly 1.1e4 and double precision leaves several digits of headroom for
//! each of these thresholds.

/// Allowed drift of `<p,p> + 1` for hyperboloid points and of `|n| - 1` for
/// unit vectors.
pub const TOL_POINT: f64 = 1e-10;

/// Residual bound for exact identities.
pub const TOL_ID: f64 = 1e-9;

/// Slack for clamping `acosh`/`acos`/`atanh` arguments at domain boundaries.
pub const TOL_CLAMP: f64 = 1e-12;

/// Relation residual accepted when building a triangle from six lengths.
/// Inputs usually come from measured frames and carry one extra rounding stage.
pub const TOL_CONSTRUCT: f64 = 1e-8;

/// Area comparisons: areas come out of `acos` of composite expressions.
pub const TOL_AREA: f64 = 1e-8;

/// Longest hyperbolic side accepted by triangle-level operations.
pub const MAX_HYPERBOLIC_SIDE: f64 = 10.0;

/// Longest spherical side: triangles live in a quarter plane.
pub const MAX_SPHERICAL_SIDE: f64 = std::f64::consts::FRAC_PI_2;

/// Clamp `x` into `[lo, hi]` when it overshoots by at most [`TOL_CLAMP`].
/// Returns `None` when the overshoot is larger.
pub(crate) fn clamp_within(x: f64, lo: f64, hi: f64) -> Option<f64> {
    if x < lo - TOL_CLAMP || x > hi + TOL_CLAMP || x.is_nan() {
        None
    } else {
        Some(x.clamp(lo, hi))
    }
}
