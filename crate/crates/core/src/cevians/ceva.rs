use serde::Serialize;

use super::Triangle;
use crate::error::{Error, Result};
use crate::kernel::Geometry;
use crate::tol::{TOL_ID, TOL_POINT};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CevaReport {
    /// `S(BD)/S(DC) * S(CE)/S(EA) * S(AF)/S(FB)` with `S` the sine transform.
    pub product: f64,
    /// Largest pairwise distance between the three pairwise meets of
    /// `AD`, `BE`, `CF`; infinite when two of them do not meet.
    pub concurrency_defect: f64,
}

impl CevaReport {
    pub fn product_residual(&self) -> f64 {
        (self.product - 1.0).abs()
    }
}

fn check_on_segment<G: Geometry>(u: &G::Point, v: &G::Point, x: &G::Point) -> Result<(f64, f64)> {
    let (ux, xv, uv) = (G::distance(u, x), G::distance(x, v), G::distance(u, v));
    if ux <= TOL_POINT || xv <= TOL_POINT {
        return Err(Error::Degenerate("cevian foot at a vertex"));
    }
    if ux + xv - uv > TOL_ID * (1.0 + uv) {
        return Err(Error::Domain("cevian foot off its side segment".into()));
    }
    Ok((ux, xv))
}

/// Ceva's product for feet `D` on `BC`, `E` on `CA`, `F` on `AB`, together
/// with a direct measure of how far the three cevians are from concurrent.
pub fn ceva_product<G: Geometry>(
    tri: &Triangle<G>,
    d: &G::Point,
    e: &G::Point,
    f: &G::Point,
) -> Result<CevaReport> {
    let (bd, dc) = check_on_segment::<G>(&tri.b, &tri.c, d)?;
    let (ce, ea) = check_on_segment::<G>(&tri.c, &tri.a, e)?;
    let (af, fb) = check_on_segment::<G>(&tri.a, &tri.b, f)?;
    let s = G::sine_len;
    let product = s(bd) / s(dc) * s(ce) / s(ea) * s(af) / s(fb);

    let ad = G::line_through(&tri.a, d)?;
    let be = G::line_through(&tri.b, e)?;
    let cf = G::line_through(&tri.c, f)?;
    let near = G::combine([&tri.a, &tri.b, &tri.c], [1.0, 1.0, 1.0])?;
    let meets = [
        G::meet(&ad, &be, &near)?,
        G::meet(&be, &cf, &near)?,
        G::meet(&cf, &ad, &near)?,
    ];
    let concurrency_defect = match meets {
        [Some(x), Some(y), Some(z)] => G::distance(&x, &y)
            .max(G::distance(&y, &z))
            .max(G::distance(&z, &x)),
        _ => f64::INFINITY,
    };
    Ok(CevaReport {
        product,
        concurrency_defect,
    })
}
