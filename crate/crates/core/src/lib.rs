//! Triangle geometry in the hyperbolic, spherical and Euclidean planes.
//!
//! The [`kernel`] provides points, lines and measurements for each plane behind
//! the [`kernel::Geometry`] trait. On top of it sit right-triangle laws
//! ([`trig`]), concurrent cevians ([`cevians`]) and the area loci of
//! hyperbolic triangles on a fixed base ([`lexell`]).

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod campaign;
pub mod cevians;
pub mod cli;
pub mod error;
pub mod figures;
pub mod json;
pub mod kernel;
pub mod lexell;
pub mod render;
pub mod sampling;
pub mod tol;
pub mod trig;

pub use error::{Error, Result};
pub use kernel::{Euclidean, Geometry, GeometryKind, Hyperbolic, Spherical};
