//! Newton maps of rational functions on the Riemann sphere.
//!
//! The crate builds the Newton map `N_R(z) = z - R(z)/R'(z)` of a rational
//! function given in factored form, enumerates its fixed points together with
//! their multipliers and residue indices, decides conformal conjugacy for the
//! quadratic and cubic cases, predicts the topology of the Julia set and
//! rasterizes basins of attraction.
//!
//! Everything here is pure computation on values: no IO, no global state.
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use newton_atlas_core::{FactoredRational, Cx, newton_map::build_newton_map};
//!
//! // z^4 / ((z - 1/2)^2 (z + 1/2)^2)
//! let r = FactoredRational::new(
//!     vec![(Cx::new(0.0, 0.0), 4)],
//!     vec![(Cx::new(0.5, 0.0), 2), (Cx::new(-0.5, 0.0), 2)],
//! )
//! .unwrap();
//! let n = build_newton_map(&r).unwrap();
//! // z^3 + 3/4 z
//! assert!((n.num().coeff(1) - Cx::new(0.75, 0.0)).norm() < 1e-12);
//! assert!((n.num().coeff(3) - Cx::new(1.0, 0.0)).norm() < 1e-12);
//! ```
#![cfg_attr(not(test), no_std)]
// `!(x <= tol)` is used on purpose so that NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod conjugacy;
pub mod dynamics;
mod error;
pub mod newton_map;
pub mod rational_core;

pub use conjugacy::{CaseId, CubicPolyReport, MobiusMap, QuadClass, QuadVariant};
pub use dynamics::{BasinImage, JuliaClass, JuliaTopology, OrbitResult, Viewport};
pub use error::{Error, Result};
pub use newton_map::{FactoredRational, FixedPointClass, FixedPointRecord, RationalMap};
pub use rational_core::{Cx, ExtendedPoint, Poly};
