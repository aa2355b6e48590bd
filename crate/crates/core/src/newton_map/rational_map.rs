use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational_core::{roots_with_multiplicity, Cx, ExtendedPoint, Poly, DEFAULT_ROOT_TOL};

/// Roots of numerator and denominator closer than this (relative) are
/// treated as a common factor.
pub const COMMON_ROOT_RELATIVE: f64 = 1e-8;

/// `num(z) / den(z)` with coefficient-form polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap {
    num: Poly,
    den: Poly,
}

impl RationalMap {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidMap("denominator is the zero polynomial"));
        }
        Ok(RationalMap { num, den })
    }

    pub fn polynomial(p: Poly) -> Self {
        RationalMap { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.num.degree_or_zero().max(self.den.degree_or_zero())
    }

    /// Scales numerator and denominator so the denominator is monic.
    pub fn normalized(&self) -> Self {
        let lead = self.den.leading().expect("nonzero denominator").inv();
        RationalMap {
            num: self.num.scale(lead),
            den: self.den.scale(lead),
        }
    }

    /// Cancels roots shared by numerator and denominator.
    pub fn reduced(&self) -> Result<Self> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        if num.is_zero() {
            return Ok(RationalMap::polynomial(Poly::zero()));
        }
        loop {
            if den.degree_or_zero() == 0 || num.degree_or_zero() == 0 {
                break;
            }
            let candidates = roots_with_multiplicity(&den, DEFAULT_ROOT_TOL)?;
            let common = candidates.into_iter().map(|c| c.0).find(|&r| {
                let (v, scale) = num.eval_with_scale(r);
                v.norm() <= COMMON_ROOT_RELATIVE * scale.max(num.max_abs_coeff())
            });
            match common {
                Some(r) => {
                    num = num.deflate(r).0;
                    den = den.deflate(r).0;
                }
                None => break,
            }
        }
        Ok(RationalMap { num, den })
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree_or_zero() == 0
    }

    /// `num - z den`, whose roots are the finite fixed points.
    pub fn fixed_point_polynomial(&self) -> Poly {
        &self.num - &(&Poly::z() * &self.den)
    }

    /// `num - w den`, whose roots are the finite preimages of `w`.
    pub fn preimage_polynomial(&self, w: Cx) -> Poly {
        &self.num - &self.den.scale(w)
    }

    pub fn value_at_infinity(&self) -> ExtendedPoint {
        if self.num.is_zero() {
            return ExtendedPoint::Finite(Cx::zero());
        }
        let (dn, dd) = (self.num.degree_or_zero(), self.den.degree_or_zero());
        match dn.cmp(&dd) {
            core::cmp::Ordering::Greater => ExtendedPoint::Infinity,
            core::cmp::Ordering::Equal => {
                ExtendedPoint::Finite(self.num.leading().unwrap() / self.den.leading().unwrap())
            }
            core::cmp::Ordering::Less => ExtendedPoint::Finite(Cx::zero()),
        }
    }

    /// Evaluates at a finite point. For `|z| > 1` the reversed polynomials are
    /// evaluated at `1/z`, which keeps large orbits from overflowing early.
    pub fn eval_finite(&self, z: Cx) -> ExtendedPoint {
        if z.norm() <= 1.0 {
            let d = self.den.eval(z);
            if d.is_zero() {
                return ExtendedPoint::Infinity;
            }
            return ExtendedPoint::from_cx(self.num.eval(z) / d);
        }
        let w = z.inv();
        let d = self.den.eval_reversed(w);
        if d.is_zero() {
            return ExtendedPoint::Infinity;
        }
        let shift = self.num.degree_or_zero() as i32 - self.den.degree_or_zero() as i32;
        ExtendedPoint::from_cx(self.num.eval_reversed(w) / d * z.powi(shift))
    }

    pub fn eval(&self, z: ExtendedPoint) -> ExtendedPoint {
        match z {
            ExtendedPoint::Finite(z) => self.eval_finite(z),
            ExtendedPoint::Infinity => self.value_at_infinity(),
        }
    }

    /// Derivative at a finite point; `None` at a pole.
    pub fn derivative_at(&self, z: Cx) -> Option<Cx> {
        let (n, dn) = self.num.eval_with_derivative(z);
        let (d, dd) = self.den.eval_with_derivative(z);
        if d.is_zero() {
            return None;
        }
        Some((dn * d - n * dd) / (d * d))
    }

    /// Numerator of `N'`: `num' den - num den'`.
    pub fn wronskian(&self) -> Poly {
        &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative())
    }

    /// Largest coefficient difference after making both denominators monic,
    /// relative to the largest coefficient. `None` when degrees differ.
    pub fn coefficient_distance(&self, other: &RationalMap) -> Option<f64> {
        let a = self.normalized();
        let b = other.normalized();
        if a.num.degree() != b.num.degree() || a.den.degree() != b.den.degree() {
            return None;
        }
        let scale = a.num.max_abs_coeff().max(a.den.max_abs_coeff()).max(1.0);
        let diff = |p: &Poly, q: &Poly| {
            (0..p.coeffs().len().max(q.coeffs().len()))
                .map(|k| (p.coeff(k) - q.coeff(k)).norm())
                .fold(0.0, f64::max)
        };
        Some(diff(&a.num, &b.num).max(diff(&a.den, &b.den)) / scale)
    }
}
