//! Complex polynomial arithmetic and root finding.

mod poly;
mod roots;

pub use poly::{poly_arith, Poly, PolyOp, TRIM_RELATIVE};
pub use roots::{
    cluster_points, poly_roots, poly_roots_with_cap, roots_with_multiplicity, CLUSTER_RELATIVE,
    DEFAULT_MAX_ITER, DEFAULT_ROOT_TOL,
};

use num_complex::Complex64;

/// A finite complex number.
pub type Cx = Complex64;

#[inline]
pub fn cx(re: f64, im: f64) -> Cx {
    Cx::new(re, im)
}

#[inline]
pub(crate) fn is_finite(z: Cx) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// A point of the extended complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtendedPoint {
    Finite(Cx),
    Infinity,
}

impl ExtendedPoint {
    pub fn finite(self) -> Option<Cx> {
        match self {
            ExtendedPoint::Finite(z) => Some(z),
            ExtendedPoint::Infinity => None,
        }
    }

    pub fn is_infinity(self) -> bool {
        matches!(self, ExtendedPoint::Infinity)
    }

    /// Non-finite complex values collapse to the point at infinity.
    pub fn from_cx(z: Cx) -> Self {
        if is_finite(z) {
            ExtendedPoint::Finite(z)
        } else {
            ExtendedPoint::Infinity
        }
    }

    /// Chordal distance on the Riemann sphere (diameter 2).
    pub fn chordal_distance(self, other: ExtendedPoint) -> f64 {
        use ExtendedPoint::*;
        match (self, other) {
            (Infinity, Infinity) => 0.0,
            (Finite(z), Infinity) | (Infinity, Finite(z)) => 2.0 / num_traits::Float::sqrt(1.0 + z.norm_sqr()),
            (Finite(a), Finite(b)) => {
                2.0 * (a - b).norm()
                    / num_traits::Float::sqrt((1.0 + a.norm_sqr()) * (1.0 + b.norm_sqr()))
            }
        }
    }
}

impl From<Cx> for ExtendedPoint {
    fn from(z: Cx) -> Self {
        ExtendedPoint::Finite(z)
    }
}
