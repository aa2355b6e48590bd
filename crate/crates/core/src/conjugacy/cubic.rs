use alloc::vec::Vec;

use num_traits::{Float, Zero};

use super::{conjugate_map, MobiusMap};
use crate::error::{Error, Result};
use crate::newton_map::{
    build_newton_map, fixed_points, map_fixed_points, multiplier_at, newton_degree, FactoredRational,
    RationalMap,
};
use crate::rational_core::{poly_roots, Cx, ExtendedPoint, Poly, DEFAULT_ROOT_TOL};

/// Absolute tolerance on the normalized row conditions.
pub const CONDITION_TOL: f64 = 1e-8;
/// Relative tolerance of the total-invariance test.
pub const EXCEPTIONAL_TOL: f64 = 1e-7;
const SUPERATTRACTING_TOL: f64 = 1e-8;
const CRITICAL_SEPARATION: f64 = 1e-6;

/// Rows of the cubic table: Case I has `d = e + 1` and `m + n = 4`, Case II
/// has `d != e + 1` and `m + n = 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseId {
    IA,
    IB,
    IC,
    IIA,
    IIBi,
    IIBii,
    IICi,
    IICii,
    IID,
}

impl CaseId {
    pub const ALL: [CaseId; 9] = [
        CaseId::IA,
        CaseId::IB,
        CaseId::IC,
        CaseId::IIA,
        CaseId::IIBi,
        CaseId::IIBii,
        CaseId::IICi,
        CaseId::IICii,
        CaseId::IID,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::IA => "IA",
            CaseId::IB => "IB",
            CaseId::IC => "IC",
            CaseId::IIA => "IIA",
            CaseId::IIBi => "IIBi",
            CaseId::IIBii => "IIBii",
            CaseId::IICi => "IICi",
            CaseId::IICii => "IICii",
            CaseId::IID => "IID",
        }
    }

    /// Rows whose maps are never conjugate to a polynomial.
    pub fn is_never(self) -> bool {
        matches!(self, CaseId::IA | CaseId::IIA)
    }
}

/// One superattracting fixed point tested as the possible exceptional point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicCandidate {
    pub case_id: CaseId,
    pub point: ExtendedPoint,
    /// Left side minus right side of the row condition.
    pub condition_value: Cx,
    pub satisfied: bool,
    /// Outcome of the preimage test at `point`.
    pub exceptional: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CubicPolyReport {
    pub case_id: CaseId,
    /// `None` for the rows that never qualify and for maps without a
    /// superattracting fixed point.
    pub condition_value: Option<Cx>,
    pub conjugate_to_poly: bool,
    pub exceptional_point: Option<ExtendedPoint>,
    pub exceptional_confirmed: Option<bool>,
    /// `(a, b)` of `z^3 + a z + b`; `b` is fixed only up to sign.
    pub normal_form: Option<(Cx, Cx)>,
    /// Residue indices of the three remaining fixed points, descending.
    pub indices: Option<[i32; 3]>,
    pub candidates: Vec<CubicCandidate>,
}

/// `z^3 + a z + b` together with the map `psi` conjugating `N` onto it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalForm {
    pub a: Cx,
    pub b: Cx,
    pub conjugacy: MobiusMap,
}

fn affine_to(p1: Cx, p2: Cx) -> impl Fn(Cx) -> Cx {
    move |x| (x - p1) / (p2 - p1)
}

/// Moves two distinguished finite roots/poles to 0 and 1. A simple root is
/// preferred for 0, then the first root, then the first pole; 1 goes to the
/// next root, else the first remaining pole. Returns `R∘T` and `T`.
pub fn normalize_affine(r: &FactoredRational) -> Result<(FactoredRational, MobiusMap)> {
    if r.m() + r.n() < 2 {
        return Err(Error::TooFewPoints);
    }
    let roots = r.roots();
    let poles = r.poles();
    let (p1, first_is_root) = match roots.iter().find(|x| x.1 == 1).or(roots.first()) {
        Some(&(z, _)) => (z, true),
        None => (poles[0].0, false),
    };
    let p2 = if first_is_root {
        roots.iter().find(|x| x.0 != p1).or(poles.first()).map(|x| x.0)
    } else {
        poles.get(1).map(|x| x.0)
    }
    .ok_or(Error::TooFewPoints)?;
    let t = MobiusMap::affine(p2 - p1, p1)?;
    Ok((r.compose_affine(p2 - p1, p1)?, t))
}

fn row_candidates(r: &FactoredRational) -> (CaseId, Vec<(CaseId, ExtendedPoint, Cx)>) {
    let roots = r.roots();
    let poles = r.poles();
    let (d, e) = (r.d(), r.e());
    let f = |x: u32| x as f64;
    let simple: Vec<usize> = (0..roots.len()).filter(|&i| roots[i].1 == 1).collect();
    let others = |s: usize| -> Vec<usize> { (0..roots.len()).filter(|&i| i != s).collect() };
    let mut out = Vec::new();
    let default = if d == e + 1 {
        match (r.m(), r.n()) {
            (1, 3) => CaseId::IA,
            (2, 2) => {
                for &s in &simple {
                    let o = others(s)[0];
                    let t = affine_to(roots[s].0, roots[o].0);
                    let (g1, g2) = (t(poles[0].0), t(poles[1].0));
                    let (e1, e2) = (f(poles[0].1), f(poles[1].1));
                    let cond = g1 * g2 * (e1 + e2) - g2 * e1 - g1 * e2;
                    out.push((CaseId::IB, ExtendedPoint::Finite(roots[s].0), cond));
                }
                CaseId::IB
            }
            _ => {
                for &s in &simple {
                    let o = others(s);
                    let t = affine_to(roots[s].0, roots[o[0]].0);
                    let alpha = t(roots[o[1]].0);
                    let gamma = t(poles[0].0);
                    let (d2, d3) = (f(roots[o[0]].1), f(roots[o[1]].1));
                    let cond = alpha * gamma * d2 + gamma * d3 - alpha * (d2 + d3);
                    out.push((CaseId::IC, ExtendedPoint::Finite(roots[s].0), cond));
                }
                CaseId::IC
            }
        }
    } else {
        match (r.m(), r.n()) {
            (0, 3) => CaseId::IIA,
            (1, 2) => {
                let t = affine_to(roots[0].0, poles[0].0);
                let gamma = t(poles[1].0);
                let (e1, e2) = (f(poles[0].1), f(poles[1].1));
                if d == e {
                    out.push((CaseId::IIBi, ExtendedPoint::Infinity, gamma + e1 / e2));
                }
                if d == 1 {
                    out.push((CaseId::IIBii, ExtendedPoint::Finite(roots[0].0), gamma + e2 / e1));
                }
                if d == 1 {
                    CaseId::IIBii
                } else {
                    CaseId::IIBi
                }
            }
            (2, 1) => {
                if e == d {
                    let gamma = affine_to(roots[0].0, roots[1].0)(poles[0].0);
                    let (d1, d2) = (f(roots[0].1), f(roots[1].1));
                    out.push((CaseId::IICi, ExtendedPoint::Infinity, gamma - d2 / (d1 + d2)));
                }
                for &s in &simple {
                    let o = others(s)[0];
                    let gamma = affine_to(roots[s].0, roots[o].0)(poles[0].0);
                    out.push((CaseId::IICii, ExtendedPoint::Finite(roots[s].0), gamma - f(e) / f(roots[o].1)));
                }
                if e != d && !simple.is_empty() {
                    CaseId::IICii
                } else {
                    CaseId::IICi
                }
            }
            _ => {
                for &s in &simple {
                    let o = others(s);
                    let alpha = affine_to(roots[s].0, roots[o[0]].0)(roots[o[1]].0);
                    let (d2, d3) = (f(roots[o[0]].1), f(roots[o[1]].1));
                    out.push((CaseId::IID, ExtendedPoint::Finite(roots[s].0), alpha + d3 / d2));
                }
                CaseId::IID
            }
        }
    };
    (default, out)
}

/// Decides whether the cubic Newton map of `r` is conjugate to a
/// polynomial, by the row condition of its table entry.
pub fn cubic_polynomial_condition(r: &FactoredRational) -> Result<CubicPolyReport> {
    let degree = newton_degree(r);
    if degree != 3 {
        return Err(Error::NotCubic { degree });
    }
    let n = build_newton_map(r)?;
    let (default, raw) = row_candidates(r);
    let mut candidates = Vec::with_capacity(raw.len());
    for (case_id, point, condition_value) in raw {
        let exceptional = exceptional_point_check(&n, point).unwrap_or(false);
        candidates.push(CubicCandidate {
            case_id,
            point,
            condition_value,
            satisfied: condition_value.norm() <= CONDITION_TOL,
            exceptional,
        });
    }
    let primary = candidates.iter().find(|c| c.satisfied).or(candidates.first()).copied();
    let Some(primary) = primary else {
        return Ok(CubicPolyReport {
            case_id: default,
            condition_value: None,
            conjugate_to_poly: false,
            exceptional_point: None,
            exceptional_confirmed: None,
            normal_form: None,
            indices: None,
            candidates,
        });
    };
    let mut report = CubicPolyReport {
        case_id: primary.case_id,
        condition_value: Some(primary.condition_value),
        conjugate_to_poly: primary.satisfied,
        exceptional_point: None,
        exceptional_confirmed: None,
        normal_form: None,
        indices: None,
        candidates,
    };
    if primary.satisfied {
        report.exceptional_point = Some(primary.point);
        report.exceptional_confirmed = Some(primary.exceptional);
        report.normal_form = normal_form(&n, primary.point).ok().map(|nf| (nf.a, nf.b));
        report.indices = remaining_indices(r, primary.point)?;
    }
    Ok(report)
}

fn remaining_indices(r: &FactoredRational, w: ExtendedPoint) -> Result<Option<[i32; 3]>> {
    let recs = fixed_points(r)?;
    let mut idx: Vec<i32> = recs
        .iter()
        .filter(|p| p.location.chordal_distance(w) > 1e-12)
        .filter_map(|p| p.index.map(|i| Float::round(i.re) as i32))
        .collect();
    if idx.len() != 3 {
        return Ok(None);
    }
    idx.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Some([idx[0], idx[1], idx[2]]))
}

/// Whether `z0` is its own only preimage, i.e. has local degree `deg n`.
fn totally_invariant(n: &RationalMap, z0: ExtendedPoint) -> Result<bool> {
    let k = n.degree();
    match z0 {
        ExtendedPoint::Infinity => {
            if n.num().degree_or_zero() != k {
                return Ok(false);
            }
            if n.den().degree_or_zero() == 0 {
                return Ok(true);
            }
            let poles = poly_roots(n.den(), DEFAULT_ROOT_TOL)?;
            Ok(poles
                .iter()
                .all(|&p| ExtendedPoint::Finite(p).chordal_distance(ExtendedPoint::Infinity) <= EXCEPTIONAL_TOL))
        }
        ExtendedPoint::Finite(w) => {
            let g = n.preimage_polynomial(w);
            let h = g.taylor_shift(w);
            let top = h.coeff(k).norm();
            if top == 0.0 {
                return Ok(false);
            }
            let s = w.norm().max(1.0);
            Ok((0..k).all(|i| h.coeff(i).norm() <= EXCEPTIONAL_TOL * top * s.powi((k - i) as i32)))
        }
    }
}

/// Whether the superattracting fixed point `z0` of a cubic map is exceptional.
pub fn exceptional_point_check(n: &RationalMap, z0: ExtendedPoint) -> Result<bool> {
    let n = n.reduced()?;
    let degree = n.degree();
    if degree != 3 {
        return Err(Error::NotCubic { degree });
    }
    if multiplier_at(&n, z0)?.norm() > SUPERATTRACTING_TOL {
        return Err(Error::NotSuperattracting);
    }
    totally_invariant(&n, z0)
}

/// Möbius map sending `w` to infinity and fixing two other fixed points
/// when both are finite.
fn send_to_infinity(n: &RationalMap, w: ExtendedPoint) -> Result<MobiusMap> {
    if w.is_infinity() {
        return Ok(MobiusMap::identity());
    }
    let pts = map_fixed_points(n)?;
    let mut others: Vec<ExtendedPoint> =
        pts.iter().map(|p| p.location).filter(|p| p.chordal_distance(w) > 1e-6).collect();
    others.sort_by_key(|p| p.is_infinity());
    if others.len() < 2 {
        return Err(Error::NotPolynomialConjugate);
    }
    let (f1, f2) = (others[0], others[1]);
    let dst = if f1.is_infinity() || f2.is_infinity() {
        [ExtendedPoint::Finite(Cx::zero()), ExtendedPoint::Finite(Cx::new(1.0, 0.0)), ExtendedPoint::Infinity]
    } else {
        [f1, f2, ExtendedPoint::Infinity]
    };
    MobiusMap::from_three_points([f1, f2, w], dst)
}

/// `n` conjugated by `m`, when the result is a polynomial of full degree.
fn conjugate_polynomial(n: &RationalMap, m: &MobiusMap) -> Result<Poly> {
    let c = conjugate_map(n, m)?;
    if c.den().degree_or_zero() != 0 || c.num().degree_or_zero() != n.degree() {
        return Err(Error::NotPolynomialConjugate);
    }
    Ok(c.num().scale(c.den().coeff(0).inv()))
}

/// First superattracting, totally invariant fixed point of `n`, with the
/// polynomial obtained by moving it to infinity and the conjugating map.
pub fn polynomial_conjugate(n: &RationalMap) -> Result<Option<(Poly, MobiusMap, ExtendedPoint)>> {
    let n = n.reduced()?;
    for p in map_fixed_points(&n)? {
        if p.multiplier.norm() > SUPERATTRACTING_TOL || !totally_invariant(&n, p.location)? {
            continue;
        }
        let m = send_to_infinity(&n, p.location)?;
        if let Ok(poly) = conjugate_polynomial(&n, &m) {
            return Ok(Some((poly, m, p.location)));
        }
    }
    Ok(None)
}

/// `z^3 + a z + b` conjugate to the cubic `n` with exceptional point `w`.
/// The square-root branch has nonnegative real part, positive imaginary
/// part on the cut.
pub fn normal_form(n: &RationalMap, w: ExtendedPoint) -> Result<NormalForm> {
    let n = n.reduced()?;
    if n.degree() != 3 {
        return Err(Error::NotCubic { degree: n.degree() });
    }
    let m = send_to_infinity(&n, w)?;
    let p = conjugate_polynomial(&n, &m)?;
    let (a3, a2) = (p.coeff(3), p.coeff(2));
    let mut mu = a3.inv().sqrt();
    if mu.re < 0.0 || (mu.re == 0.0 && mu.im < 0.0) {
        mu = -mu;
    }
    let nu = -a2 / (a3 * 3.0);
    // psi(z) = mu z + nu; the normal form is psi^{-1} ∘ P ∘ psi
    let shifted = &p.compose_affine(mu, nu) - &Poly::constant(nu);
    let q = shifted.scale(mu.inv());
    let psi_inv = MobiusMap::affine(mu.inv(), -nu / mu)?;
    Ok(NormalForm { a: q.coeff(1), b: q.coeff(0), conjugacy: psi_inv.compose(&m) })
}

/// For a map conjugate to a polynomial, whether that polynomial has at
/// least two distinct finite critical points.
pub fn unicritical_check(n: &RationalMap) -> Result<bool> {
    let degree = n.degree();
    if degree < 3 {
        return Err(Error::DegreeTooLow { degree, required: 3 });
    }
    let (p, _, _) = polynomial_conjugate(n)?.ok_or(Error::NotPolynomialConjugate)?;
    let crit = poly_roots(&p.derivative(), DEFAULT_ROOT_TOL)?;
    let scale = crit.iter().map(|z| z.norm()).fold(1.0, f64::max);
    Ok(crit
        .iter()
        .enumerate()
        .any(|(i, a)| crit[i + 1..].iter().any(|b| (a - b).norm() > CRITICAL_SEPARATION * scale)))
}
