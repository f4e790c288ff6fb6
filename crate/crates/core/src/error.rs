use thiserror::Error;

/// Failure modes of the geometry kernel and the constructions built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("contract violation: {0}")]
    Contract(&'static str),
    #[error("point outside the model: {0}")]
    OutOfModel(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("outside the working range: {0}")]
    Range(String),
    #[error("configuration out of scope: {0}")]
    OutOfScope(&'static str),
    #[error("infeasible input: relation residual {residual:.3e} exceeds {tolerance:.1e}")]
    RelationResidual { residual: f64, tolerance: f64 },
    #[error("infeasible geometry: heron radicand {0:.3e} is not positive")]
    HeronRadicand(f64),
    #[error("infeasible geometry: sine bound exceeded for angle {angle} ({value})")]
    SineBound { angle: &'static str, value: f64 },
    #[error("infeasible area: target {target} is not below the supremum {limit}")]
    InfeasibleArea { target: f64, limit: f64 },
}

impl Error {
    /// Short machine-readable tag used in CLI reports.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::InvalidPoint(_) => "invalid point",
            Error::Degenerate(_) => "degenerate input",
            Error::Contract(_) => "contract violation",
            Error::OutOfModel(_) => "out of model",
            Error::Domain(_) => "domain",
            Error::Range(_) => "range",
            Error::OutOfScope(_) => "out of scope",
            Error::RelationResidual { .. } => "relation residual",
            Error::HeronRadicand(_) => "heron radicand",
            Error::SineBound { .. } => "sine bound",
            Error::InfeasibleArea { .. } => "infeasible area",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
