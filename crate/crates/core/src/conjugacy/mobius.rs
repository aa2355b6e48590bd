use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational_core::{is_finite, Cx, ExtendedPoint};

/// Determinant threshold, relative to the squared largest entry.
pub const SINGULAR_RELATIVE: f64 = 1e-12;
/// Points closer than this (chordally) count as repeated.
pub const TRIPLE_SEPARATION: f64 = 1e-12;

/// `z -> (a z + b) / (c z + d)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MobiusMap {
    pub a: Cx,
    pub b: Cx,
    pub c: Cx,
    pub d: Cx,
}

impl MobiusMap {
    pub fn new(a: Cx, b: Cx, c: Cx, d: Cx) -> Result<Self> {
        let m = MobiusMap { a, b, c, d };
        let scale = m.max_entry();
        if !(scale.is_finite()) || scale == 0.0 || m.det().norm() <= SINGULAR_RELATIVE * scale * scale {
            return Err(Error::SingularMobius);
        }
        Ok(m.normalized())
    }

    pub fn identity() -> Self {
        MobiusMap { a: Cx::one(), b: Cx::zero(), c: Cx::zero(), d: Cx::one() }
    }

    /// `z -> scale * z + shift`.
    pub fn affine(scale: Cx, shift: Cx) -> Result<Self> {
        Self::new(scale, shift, Cx::zero(), Cx::one())
    }

    pub fn det(&self) -> Cx {
        self.a * self.d - self.b * self.c
    }

    fn max_entry(&self) -> f64 {
        [self.a, self.b, self.c, self.d].iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Scales the entries so the largest has modulus one.
    fn normalized(self) -> Self {
        let s = self.max_entry();
        if s == 0.0 || !s.is_finite() {
            return self;
        }
        let k = 1.0 / s;
        MobiusMap { a: self.a * k, b: self.b * k, c: self.c * k, d: self.d * k }
    }

    pub fn is_affine(&self) -> bool {
        self.c.norm() <= SINGULAR_RELATIVE * self.max_entry()
    }

    pub fn apply(&self, z: ExtendedPoint) -> ExtendedPoint {
        match z {
            ExtendedPoint::Infinity => {
                if self.c.is_zero() {
                    ExtendedPoint::Infinity
                } else {
                    ExtendedPoint::from_cx(self.a / self.c)
                }
            }
            ExtendedPoint::Finite(z) => {
                let den = self.c * z + self.d;
                if den.is_zero() {
                    ExtendedPoint::Infinity
                } else {
                    ExtendedPoint::from_cx((self.a * z + self.b) / den)
                }
            }
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        MobiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
        .normalized()
    }

    pub fn inverse(&self) -> MobiusMap {
        MobiusMap { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// The unique map with `src[i] -> dst[i]`.
    pub fn from_three_points(src: [ExtendedPoint; 3], dst: [ExtendedPoint; 3]) -> Result<Self> {
        let to_src = to_standard(src)?;
        let to_dst = to_standard(dst)?;
        let m = to_dst.inverse().compose(&to_src);
        MobiusMap::new(m.a, m.b, m.c, m.d)
    }

    /// Chordal distance between the images of `z` under both maps.
    pub fn chordal_distance_at(&self, other: &MobiusMap, z: ExtendedPoint) -> f64 {
        self.apply(z).chordal_distance(other.apply(z))
    }
}

/// Sends `(z1, z2, z3)` to `(0, 1, infinity)`.
fn to_standard(p: [ExtendedPoint; 3]) -> Result<MobiusMap> {
    for i in 0..3 {
        for j in i + 1..3 {
            if p[i].chordal_distance(p[j]) <= TRIPLE_SEPARATION {
                return Err(Error::DegenerateTriple);
            }
        }
    }
    let one = Cx::one();
    let zero = Cx::zero();
    let m = match (p[0], p[1], p[2]) {
        (ExtendedPoint::Finite(z1), ExtendedPoint::Finite(z2), ExtendedPoint::Finite(z3)) => MobiusMap {
            a: z2 - z3,
            b: -z1 * (z2 - z3),
            c: z2 - z1,
            d: -z3 * (z2 - z1),
        },
        (ExtendedPoint::Infinity, ExtendedPoint::Finite(z2), ExtendedPoint::Finite(z3)) => {
            MobiusMap { a: zero, b: z2 - z3, c: one, d: -z3 }
        }
        (ExtendedPoint::Finite(z1), ExtendedPoint::Infinity, ExtendedPoint::Finite(z3)) => {
            MobiusMap { a: one, b: -z1, c: one, d: -z3 }
        }
        (ExtendedPoint::Finite(z1), ExtendedPoint::Finite(z2), ExtendedPoint::Infinity) => {
            MobiusMap { a: one, b: -z1, c: zero, d: z2 - z1 }
        }
        _ => return Err(Error::DegenerateTriple),
    };
    if [m.a, m.b, m.c, m.d].iter().any(|z| !is_finite(*z)) {
        return Err(Error::DegenerateTriple);
    }
    Ok(m.normalized())
}
