use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rational_core::{is_finite, Cx, Poly};

/// Minimum separation between distinct roots/poles.
pub const MIN_SEPARATION: f64 = 1e-9;

/// `prod (z - alpha_i)^{d_i} / prod (z - beta_j)^{e_j}` with distinct roots
/// and distinct poles, none shared.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredRational {
    roots: Vec<(Cx, u32)>,
    poles: Vec<(Cx, u32)>,
}

impl FactoredRational {
    pub fn new(roots: Vec<(Cx, u32)>, poles: Vec<(Cx, u32)>) -> Result<Self> {
        if roots.is_empty() && poles.is_empty() {
            return Err(Error::InvalidFactored("needs at least one root or pole".into()));
        }
        for (kind, list) in [("root", &roots), ("pole", &poles)] {
            for &(z, k) in list {
                if k == 0 {
                    return Err(Error::InvalidFactored(format!("{kind} {z} has multiplicity 0")));
                }
                if !is_finite(z) {
                    return Err(Error::InvalidFactored(format!("{kind} {z} is not finite")));
                }
            }
            for (i, &(a, _)) in list.iter().enumerate() {
                for &(b, _) in &list[i + 1..] {
                    if (a - b).norm() <= MIN_SEPARATION {
                        return Err(Error::InvalidFactored(format!("{kind}s {a} and {b} coincide")));
                    }
                }
            }
        }
        for &(a, _) in &roots {
            for &(b, _) in &poles {
                if (a - b).norm() <= MIN_SEPARATION {
                    return Err(Error::InvalidFactored(format!("root {a} coincides with pole {b}")));
                }
            }
        }
        Ok(FactoredRational { roots, poles })
    }

    pub fn polynomial(roots: Vec<(Cx, u32)>) -> Result<Self> {
        Self::new(roots, Vec::new())
    }

    pub fn roots(&self) -> &[(Cx, u32)] {
        &self.roots
    }

    pub fn poles(&self) -> &[(Cx, u32)] {
        &self.poles
    }

    /// Number of distinct roots.
    pub fn m(&self) -> usize {
        self.roots.len()
    }

    /// Number of distinct poles.
    pub fn n(&self) -> usize {
        self.poles.len()
    }

    /// Degree of the numerator.
    pub fn d(&self) -> u32 {
        self.roots.iter().map(|r| r.1).sum()
    }

    /// Degree of the denominator.
    pub fn e(&self) -> u32 {
        self.poles.iter().map(|p| p.1).sum()
    }

    pub fn numerator(&self) -> Poly {
        Poly::from_factors(&self.roots)
    }

    pub fn denominator(&self) -> Poly {
        Poly::from_factors(&self.poles)
    }

    /// `R(z)`; `None` at a pole.
    pub fn eval(&self, z: Cx) -> Option<Cx> {
        let mut num = Cx::new(1.0, 0.0);
        for &(a, k) in &self.roots {
            num *= (z - a).powi(k as i32);
        }
        let mut den = Cx::new(1.0, 0.0);
        for &(b, k) in &self.poles {
            den *= (z - b).powi(k as i32);
        }
        (den.norm() > 0.0).then(|| num / den)
    }

    /// `R(scale * z + shift)` in monic factored form: every root and pole `p`
    /// moves to `(p - shift) / scale`.
    pub fn compose_affine(&self, scale: Cx, shift: Cx) -> Result<Self> {
        if scale.norm() == 0.0 {
            return Err(Error::InvalidArgument("affine scale must be nonzero"));
        }
        let pull = |list: &[(Cx, u32)]| list.iter().map(|&(z, k)| ((z - shift) / scale, k)).collect();
        Self::new(pull(&self.roots), pull(&self.poles))
    }

    /// Same roots and poles up to reordering, locations within `tol`.
    pub fn approx_eq(&self, other: &FactoredRational, tol: f64) -> bool {
        fn same(a: &[(Cx, u32)], b: &[(Cx, u32)], tol: f64) -> bool {
            a.len() == b.len()
                && a.iter().all(|&(z, k)| b.iter().any(|&(w, j)| j == k && (z - w).norm() <= tol))
        }
        same(&self.roots, &other.roots, tol) && same(&self.poles, &other.poles, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational_core::cx;

    #[test]
    fn rejects_invalid_data() {
        assert!(FactoredRational::new(vec![], vec![]).is_err());
        assert!(FactoredRational::new(vec![(cx(0.0, 0.0), 0)], vec![]).is_err());
        assert!(FactoredRational::new(vec![(cx(0.0, 0.0), 1), (cx(0.0, 0.0), 2)], vec![]).is_err());
        assert!(FactoredRational::new(vec![(cx(1.0, 0.0), 1)], vec![(cx(1.0, 0.0), 1)]).is_err());
        assert!(FactoredRational::new(vec![(cx(f64::NAN, 0.0), 1)], vec![]).is_err());
    }

    #[test]
    fn counts() {
        let r = FactoredRational::new(
            vec![(cx(0.0, 0.0), 4)],
            vec![(cx(0.5, 0.0), 2), (cx(-0.5, 0.0), 2)],
        )
        .unwrap();
        assert_eq!((r.m(), r.n(), r.d(), r.e()), (1, 2, 4, 4));
    }

    #[test]
    fn affine_pullback() {
        let r = FactoredRational::new(
            vec![(cx(0.0, 0.0), 4)],
            vec![(cx(0.5, 0.0), 2), (cx(-0.5, 0.0), 2)],
        )
        .unwrap();
        let s = r.compose_affine(cx(0.5, 0.0), cx(0.0, 0.0)).unwrap();
        assert_eq!(s.poles()[0].0, cx(1.0, 0.0));
        assert_eq!(s.poles()[1].0, cx(-1.0, 0.0));
        // R(T z) and the pulled-back factorization agree up to a constant
        let z = cx(0.3, 0.7);
        let ratio = r.eval(0.5 * z).unwrap() / s.eval(z).unwrap();
        let w = cx(-1.3, 0.2);
        let ratio2 = r.eval(0.5 * w).unwrap() / s.eval(w).unwrap();
        assert!((ratio - ratio2).norm() < 1e-12);
    }
}
