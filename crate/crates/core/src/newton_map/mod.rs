//! Newton maps of factored rational functions, their fixed points and
//! residue indices, and critical points of rational maps.

mod critical;
mod factored;
mod fixed_points;
mod rational_map;

pub use critical::{critical_points, CriticalPoints};
pub use factored::{FactoredRational, MIN_SEPARATION};
pub use fixed_points::{
    build_newton_map, fixed_points, map_fixed_points, multiplier_at, newton_degree, reconstruct_pq,
    residue_index, residue_index_contour, simple_fixed_points, verify_rfpt, FixedPointClass,
    FixedPointRecord, NumericFixedPoint, CLASS_TOL, FIXED_TOL, MAX_MULTIPLICITY, PQ_TOL, RFPT_TOL,
    SIMPLE_SEPARATION,
};
pub(crate) use fixed_points::check_simple;
pub use rational_map::{RationalMap, COMMON_ROOT_RELATIVE};
