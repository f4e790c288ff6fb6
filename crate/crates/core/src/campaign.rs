//! Randomized verification campaigns, one per identity.
//!
//! A campaign draws `trials` configurations from seeded per-trial streams
//! (see [`crate::sampling`]), computes a residual for each, and reports the
//! largest. Trials run in parallel; the reduction keeps the largest residual
//! and, on ties, the lowest trial index, so reports do not depend on
//! scheduling.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cevians::{ceva_product, euler_relation_residual, lambert_median_report, pqr_system};
use crate::error::{Error, Result};
use crate::json::Real;
use crate::kernel::{Euclidean, Geometry, GeometryKind, HPoint, Hyperbolic, Spherical};
use crate::lexell::{equal_subarc_check, lexell_locus, BaseConfig};
use crate::sampling::{off_axis_direction, random_frame, trial_rng, uniform};
use crate::tol::{TOL_AREA, TOL_ID};
use crate::trig::RightTriangleConfig;

/// Locus samples per lexell trial.
const LEXELL_SAMPLES: usize = 20;
/// Random chords per lexell trial.
const LEXELL_CHORDS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Menelaus,
    EulerRatio,
    Ceva,
    Lambert,
    Lexell,
    Pqr,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Self::Menelaus,
        Self::EulerRatio,
        Self::Ceva,
        Self::Lambert,
        Self::Lexell,
        Self::Pqr,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Menelaus => "menelaus",
            Self::EulerRatio => "euler-ratio",
            Self::Ceva => "ceva",
            Self::Lambert => "lambert",
            Self::Lexell => "lexell",
            Self::Pqr => "pqr",
        }
    }

    pub fn supports(&self, kind: GeometryKind) -> bool {
        !matches!(self, Self::Lexell) || kind == GeometryKind::Hyperbolic
    }

    pub fn default_tolerance(&self) -> f64 {
        match self {
            Self::Lexell => TOL_AREA,
            _ => TOL_ID,
        }
    }

    /// What the residual measures.
    pub fn residual_kind(&self) -> &'static str {
        match self {
            Self::Menelaus => "relative",
            Self::EulerRatio | Self::Pqr => "scaled",
            Self::Ceva | Self::Lambert => "absolute",
            Self::Lexell => "area",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown theorem '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub theorem: Theorem,
    pub geometry: GeometryKind,
    pub trials: u64,
    pub seed: u64,
    pub max_residual: Real,
    pub tolerance: Real,
    pub pass: bool,
    /// Trial with the largest residual.
    pub worst_trial: Option<u64>,
    /// Trials whose construction failed outright; each counts as an
    /// infinite residual.
    pub errors: u64,
    pub residual_kind: &'static str,
    pub units: &'static str,
}

#[derive(Debug, Clone, Copy)]
struct Worst {
    residual: f64,
    trial: Option<u64>,
    errors: u64,
}

impl Worst {
    const EMPTY: Worst = Worst {
        residual: 0.0,
        trial: None,
        errors: 0,
    };

    fn merge(self, o: Worst) -> Worst {
        let errors = self.errors + o.errors;
        let pick_other = match (self.trial, o.trial) {
            (_, None) => false,
            (None, Some(_)) => true,
            (Some(a), Some(b)) => {
                o.residual > self.residual || (o.residual == self.residual && b < a)
            }
        };
        let best = if pick_other { o } else { self };
        Worst { errors, ..best }
    }
}

/// Residual of one trial.
pub fn trial_residual(theorem: Theorem, kind: GeometryKind, seed: u64, trial: u64) -> Result<f64> {
    let mut rng = trial_rng(seed, trial);
    match kind {
        GeometryKind::Hyperbolic => residual::<Hyperbolic, _>(theorem, &mut rng),
        GeometryKind::Spherical => residual::<Spherical, _>(theorem, &mut rng),
        GeometryKind::Euclidean => residual::<Euclidean, _>(theorem, &mut rng),
    }
}

fn residual<G: Geometry, R: Rng>(theorem: Theorem, rng: &mut R) -> Result<f64> {
    match theorem {
        Theorem::Menelaus => {
            let hi = match G::KIND {
                GeometryKind::Spherical => FRAC_PI_2 - 0.1,
                _ => 5.0,
            };
            let b = uniform(rng, 0.1, hi);
            let alpha = uniform(rng, 0.1, FRAC_PI_2 - 0.1);
            RightTriangleConfig::synthetic::<G>(b, alpha)?.menelaus_residual()
        }
        Theorem::EulerRatio => {
            let e = euler_relation_residual(&random_frame::<G, _>(rng));
            Ok(e.scaled.max(e.reciprocal.abs()))
        }
        Theorem::Pqr => Ok(pqr_system(&random_frame::<G, _>(rng)).max_scaled_residual()),
        Theorem::Ceva => {
            let f = random_frame::<G, _>(rng);
            Ok(ceva_product(&f.tri, &f.d, &f.e, &f.f)?.product_residual())
        }
        Theorem::Lambert => {
            let hi = match G::KIND {
                GeometryKind::Spherical => 1.5,
                _ => 4.0,
            };
            Ok(lambert_median_report(uniform(rng, 0.01, hi), G::KIND)?.residual())
        }
        Theorem::Lexell => {
            if G::KIND != GeometryKind::Hyperbolic {
                return Err(Error::OutOfScope(
                    "the constant-area locus is hyperbolic only",
                ));
            }
            let base = BaseConfig::new(uniform(rng, 0.2, 2.0))?;
            let apex = HPoint::from_polar(uniform(rng, 0.2, 3.0), off_axis_direction(rng));
            let locus = lexell_locus(&base, &apex)?;
            let check = locus.check(LEXELL_SAMPLES)?;
            let chords = equal_subarc_check(&locus, LEXELL_CHORDS, rng)?;
            Ok(check
                .max_area_residual()
                .max(check.max_incidence_residual())
                .max(chords))
        }
    }
}

/// Run a campaign. Fails with [`Error::OutOfScope`] for unsupported
/// theorem/geometry pairs.
pub fn run_campaign(
    theorem: Theorem,
    kind: GeometryKind,
    trials: u64,
    seed: u64,
    tolerance: Option<f64>,
) -> Result<VerifyReport> {
    if !theorem.supports(kind) {
        return Err(Error::OutOfScope("theorem not available in this geometry"));
    }
    let tolerance = tolerance.unwrap_or(theorem.default_tolerance());
    let worst = (0..trials)
        .into_par_iter()
        .map(|t| match trial_residual(theorem, kind, seed, t) {
            Ok(r) if !r.is_nan() => Worst {
                residual: r,
                trial: Some(t),
                errors: 0,
            },
            _ => Worst {
                residual: f64::INFINITY,
                trial: Some(t),
                errors: 1,
            },
        })
        .reduce(|| Worst::EMPTY, Worst::merge);
    Ok(VerifyReport {
        theorem,
        geometry: kind,
        trials,
        seed,
        max_residual: Real(worst.residual),
        tolerance: Real(tolerance),
        pass: worst.residual <= tolerance,
        worst_trial: worst.trial,
        errors: worst.errors,
        residual_kind: theorem.residual_kind(),
        units: if theorem == Theorem::Lexell {
            crate::json::UNITS_ANGLE
        } else {
            "dimensionless"
        },
    })
}
