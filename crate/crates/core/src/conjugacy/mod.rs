//! Möbius algebra, recognition of Newton maps, and conjugacy decisions for
//! quadratic and cubic Newton maps.

mod conjugate;
mod cubic;
mod mobius;
mod quadratic;
mod recognize;

pub use conjugate::{
    conjugate_map, multiplier_spectrum, probe_points, quadratic_conjugacy_witness, spectra_match,
    witness_error, CONJUGATE_TRIM, PROBE_COUNT, SPECTRUM_TOL, WITNESS_TOL,
};
pub use cubic::{
    cubic_polynomial_condition, exceptional_point_check, normal_form, normalize_affine,
    polynomial_conjugate, unicritical_check, CaseId, CubicCandidate, CubicPolyReport, NormalForm,
    CONDITION_TOL, EXCEPTIONAL_TOL,
};
pub use mobius::{MobiusMap, SINGULAR_RELATIVE, TRIPLE_SEPARATION};
pub use quadratic::{
    classify_quadratic, quadratic_poly_conjugate_by_family, quadratic_poly_conjugate_by_multiplier,
    quadratic_variant, QuadClass, QuadVariant,
};
pub use recognize::{
    format_multiplier, recognize_newton_map, recognize_newton_map_detailed, Recognition, RECOGNITION_TOL,
};
