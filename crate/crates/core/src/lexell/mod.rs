//! Areas of hyperbolic triangles on a fixed base and the loci of apexes with
//! constant area.
//!
//! The base `AB` has length `2x` and, in standard position, `A` and `B` sit on
//! the real axis of the disk chart at distance `x` on either side of the
//! origin. For an apex `P`, the apexes `Z` with `area(ABZ) = area(ABP)` on
//! `P`'s side of `AB` form a hypercycle whose mirror image passes through `A`
//! and `B`.

mod area;
mod foliation;
mod hypercycle;
mod ideal;
mod locus;

pub use area::{
    apex_area_formula, apex_area_synthetic, area_derivative, area_function, area_function_expanded,
    finite_difference_derivative, right_triangle_area, split_area_synthetic, split_areas,
    triangle_area, triangle_area_of,
};
pub use foliation::{
    foliation, foliation_limit, leaf_separation, solve_apex_height, LeafSeparation,
};
pub use hypercycle::Hypercycle;
pub use ideal::{
    asymptotic_defect, cosh_c_from_angles, ideal_half_area, ideal_limit_area, sinh_c_from_angles,
    truncated_ideal_area,
};
pub use locus::{
    equal_subarc, equal_subarc_check, lexell_locus, AreaLocus, BaseConfig, LocusCheck,
};
