use super::{conjugate::quadratic_conjugacy_witness, MobiusMap};
use crate::error::{Error, Result};
use crate::newton_map::{build_newton_map, fixed_points, newton_degree, FactoredRational, FixedPointClass, RationalMap};
use crate::rational_core::Poly;

/// The two quadratic Newton maps up to conjugacy, with `d1 <= d2` and
/// `e1 <= e2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadVariant {
    /// Newton map of `z^d1 (z - 1)^d2`.
    N1 { d1: u32, d2: u32 },
    /// Newton map of `1 / (z^e1 (z - 1)^e2)`.
    N2 { e1: u32, e2: u32 },
}

impl QuadVariant {
    pub fn n1(a: u32, b: u32) -> Self {
        QuadVariant::N1 { d1: a.min(b), d2: a.max(b) }
    }

    pub fn n2(a: u32, b: u32) -> Self {
        QuadVariant::N2 { e1: a.min(b), e2: a.max(b) }
    }

    pub fn name(&self) -> &'static str {
        match self {
            QuadVariant::N1 { .. } => "N1",
            QuadVariant::N2 { .. } => "N2",
        }
    }

    pub fn params(&self) -> (u32, u32) {
        match *self {
            QuadVariant::N1 { d1, d2 } => (d1, d2),
            QuadVariant::N2 { e1, e2 } => (e1, e2),
        }
    }

    /// `((d1+d2-1) z^2 + (1-d1) z) / ((d1+d2) z - d1)` or
    /// `((e1+e2+1) z^2 - (1+e1) z) / ((e1+e2) z - e1)`.
    pub fn canonical_map(&self) -> RationalMap {
        let (num, den) = match *self {
            QuadVariant::N1 { d1, d2 } => {
                let (a, b) = (d1 as f64, d2 as f64);
                ([0.0, 1.0 - a, a + b - 1.0], [-a, a + b])
            }
            QuadVariant::N2 { e1, e2 } => {
                let (a, b) = (e1 as f64, e2 as f64);
                ([0.0, -1.0 - a, a + b + 1.0], [-a, a + b])
            }
        };
        RationalMap::new(Poly::from_real(&num), Poly::from_real(&den))
            .expect("nonzero denominator")
            .normalized()
    }
}

/// Conjugacy class of a quadratic Newton map; `witness` sends it onto the
/// canonical form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadClass {
    pub variant: QuadVariant,
    pub witness: MobiusMap,
}

/// Variant from the (m, n, d, e) pattern alone.
pub fn quadratic_variant(r: &FactoredRational) -> Result<QuadVariant> {
    let degree = newton_degree(r);
    if degree != 2 {
        return Err(Error::NotQuadratic { degree });
    }
    let roots = r.roots();
    let poles = r.poles();
    let (d, e) = (r.d(), r.e());
    Ok(match (r.m(), r.n()) {
        (2, 0) => QuadVariant::n1(roots[0].1, roots[1].1),
        (0, 2) => QuadVariant::n2(poles[0].1, poles[1].1),
        (1, 1) if d <= e => QuadVariant::n1(d, e - d + 1),
        (1, 1) => QuadVariant::n2(e, d - e - 1),
        (1, 2) => QuadVariant::n2(poles[0].1, poles[1].1),
        (2, 1) => QuadVariant::n1(roots[0].1, roots[1].1),
        _ => unreachable!("degree 2 forces m + n in {{2, 3}}"),
    })
}

pub fn classify_quadratic(r: &FactoredRational) -> Result<QuadClass> {
    let variant = quadratic_variant(r)?;
    let n = build_newton_map(r)?;
    let witness = quadratic_conjugacy_witness(&variant.canonical_map(), &n)?
        .ok_or(Error::InvalidMap("no conjugacy witness verified"))?;
    Ok(QuadClass { variant, witness })
}

/// Polynomial conjugacy of a quadratic Newton map read off its fixed
/// points: it holds iff one of them is superattracting.
pub fn quadratic_poly_conjugate_by_multiplier(r: &FactoredRational) -> Result<bool> {
    let degree = newton_degree(r);
    if degree != 2 {
        return Err(Error::NotQuadratic { degree });
    }
    Ok(fixed_points(r)?.iter().any(|p| p.class == FixedPointClass::Superattracting))
}

/// The same decision by matching `R` against the four families
/// `(z-a)(z-b)^k`, `(z-a)/(z-b)^k`, `(z-a)(z-b)^k/(z-c)^k` and `(z-a)^k/(z-b)^k`.
pub fn quadratic_poly_conjugate_by_family(r: &FactoredRational) -> Result<bool> {
    let degree = newton_degree(r);
    if degree != 2 {
        return Err(Error::NotQuadratic { degree });
    }
    let roots = r.roots();
    let poles = r.poles();
    Ok(match (r.m(), r.n()) {
        (2, 0) => roots.iter().any(|x| x.1 == 1),
        (1, 1) => roots[0].1 == 1 || roots[0].1 == poles[0].1,
        (2, 1) => {
            let e = poles[0].1;
            (roots[0].1 == 1 && roots[1].1 == e) || (roots[1].1 == 1 && roots[0].1 == e)
        }
        _ => false,
    })
}
