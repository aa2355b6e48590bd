use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::Cx;

/// Relative threshold under which trailing coefficients are dropped after
/// addition or subtraction.
pub const TRIM_RELATIVE: f64 = 1e-12;

/// Dense complex polynomial, coefficients in ascending degree.
///
/// The last stored coefficient is nonzero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Poly {
    coeffs: Vec<Cx>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &Poly, b: &Poly, op: PolyOp) -> Poly {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Cx::new(1.0, 0.0))
    }

    pub fn constant(c: Cx) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Poly::from_coeffs(vec![Cx::zero(), Cx::new(1.0, 0.0)])
    }

    /// `z - root`
    pub fn linear(root: Cx) -> Self {
        Poly::from_coeffs(vec![-root, Cx::new(1.0, 0.0)])
    }

    /// Builds a polynomial from ascending coefficients, dropping exact
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Cx>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Cx::new(c, 0.0)).collect())
    }

    /// Monic expansion of `prod (z - root)^mult`.
    pub fn from_factors(factors: &[(Cx, u32)]) -> Self {
        let mut p = Poly::one();
        for &(root, mult) in factors {
            let lin = Poly::linear(root);
            for _ in 0..mult {
                p = &p * &lin;
            }
        }
        p
    }

    pub fn coeffs(&self) -> &[Cx] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Cx> {
        self.coeffs
    }

    /// Coefficient of `z^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Cx {
        self.coeffs.get(k).copied().unwrap_or_else(Cx::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as degree 0.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Cx> {
        self.coeffs.last().copied()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Cx) -> Cx {
        self.coeffs.iter().rev().fold(Cx::zero(), |acc, &c| acc * z + c)
    }

    /// Value together with `sum |c_i| |z|^i`, the scale against which the
    /// rounding error of the evaluation is measured.
    pub fn eval_with_scale(&self, z: Cx) -> (Cx, f64) {
        let r = z.norm();
        let mut acc = Cx::zero();
        let mut scale = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
            scale = scale * r + c.norm();
        }
        (acc, scale)
    }

    /// Value and first derivative in one Horner pass.
    pub fn eval_with_derivative(&self, z: Cx) -> (Cx, Cx) {
        let mut p = Cx::zero();
        let mut dp = Cx::zero();
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// Evaluates the reversed polynomial `w^deg p(1/w)`.
    pub fn eval_reversed(&self, w: Cx) -> Cx {
        self.coeffs.iter().fold(Cx::zero(), |acc, &c| acc * w + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// k-th derivative divided by k!, i.e. the k-th Taylor coefficient
    /// polynomial. Numerically gentler than repeated differentiation.
    pub fn taylor_derivative(&self, k: usize) -> Poly {
        if self.coeffs.len() <= k {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(k)
                .map(|(i, &c)| c * binomial(i, k))
                .collect(),
        )
    }

    pub fn scale(&self, s: Cx) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Drops trailing coefficients below `rel * max|c|`.
    pub fn trimmed(mut self, rel: f64) -> Poly {
        let cutoff = rel * self.max_abs_coeff();
        while self.coeffs.last().is_some_and(|c| c.norm() <= cutoff) {
            self.coeffs.pop();
        }
        self
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(lead) => self.scale(lead.inv()),
            None => Poly::zero(),
        }
    }

    /// `p(z + shift)`
    pub fn taylor_shift(&self, shift: Cx) -> Poly {
        // repeated synthetic division
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let next = c[j + 1];
                c[j] += shift * next;
            }
        }
        Poly::from_coeffs(c)
    }

    /// `p(scale * z + shift)`
    pub fn compose_affine(&self, scale: Cx, shift: Cx) -> Poly {
        let shifted = self.taylor_shift(shift);
        let mut pow = Cx::new(1.0, 0.0);
        let mut out = Vec::with_capacity(shifted.coeffs.len());
        for &c in &shifted.coeffs {
            out.push(c * pow);
            pow *= scale;
        }
        Poly::from_coeffs(out)
    }

    /// `p(q(z))` by Horner on polynomials.
    pub fn compose(&self, q: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, &c| &(&acc * q) + &Poly::constant(c))
    }

    /// Synthetic division by `z - root`; returns quotient and remainder.
    pub fn deflate(&self, root: Cx) -> (Poly, Cx) {
        let n = self.coeffs.len();
        if n == 0 {
            return (Poly::zero(), Cx::zero());
        }
        let mut q = vec![Cx::zero(); n - 1];
        let mut carry = Cx::zero();
        for i in (0..n).rev() {
            let v = self.coeffs[i] + carry * root;
            if i == 0 {
                return (Poly::from_coeffs(q), v);
            }
            q[i - 1] = v;
            carry = v;
        }
        unreachable!()
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc as f64
}

fn add_impl(a: &Poly, b: &Poly, sign: f64) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs: Vec<Cx> = (0..n).map(|k| a.coeff(k) + b.coeff(k) * sign).collect();
    // measure the trim threshold against the operands, not the result, so
    // cancellation of the leading terms is recognized
    let scale = a.max_abs_coeff().max(b.max_abs_coeff());
    let mut p = Poly::from_coeffs(coeffs);
    let cutoff = TRIM_RELATIVE * scale;
    while p.coeffs.last().is_some_and(|c| c.norm() <= cutoff) {
        p.coeffs.pop();
    }
    p
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        add_impl(self, rhs, 1.0)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        add_impl(self, rhs, -1.0)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Cx::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}
