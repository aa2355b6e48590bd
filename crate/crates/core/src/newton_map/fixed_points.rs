use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_traits::{Float, Zero};

use super::{FactoredRational, RationalMap};
use crate::error::{Error, Result};
use crate::rational_core::{roots_with_multiplicity, Cx, ExtendedPoint, Poly, DEFAULT_ROOT_TOL};

/// Multipliers within this distance of 0 or of the unit circle are treated as
/// exactly superattracting or indifferent.
pub const CLASS_TOL: f64 = 1e-9;
/// `|N(z0) - z0|` allowed for a finite point to count as fixed.
pub const FIXED_TOL: f64 = 1e-6;
/// Largest `q` accepted when reading a multiplier as `p/q`.
pub const MAX_MULTIPLICITY: u32 = 64;
/// Tolerance of the `p/q` reconstruction.
pub const PQ_TOL: f64 = 1e-6;
/// Tolerance of the residue-index sum.
pub const RFPT_TOL: f64 = 1e-7;
/// Minimum separation between numerically found fixed points.
pub const SIMPLE_SEPARATION: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedPointClass {
    Superattracting,
    Attracting,
    Repelling,
    /// `|lambda| = 1`; rational and irrational rotation numbers are not told apart.
    Indifferent,
}

impl FixedPointClass {
    pub fn of(multiplier: Cx) -> Self {
        let r = multiplier.norm();
        if r <= CLASS_TOL {
            FixedPointClass::Superattracting
        } else if (r - 1.0).abs() <= CLASS_TOL {
            FixedPointClass::Indifferent
        } else if r < 1.0 {
            FixedPointClass::Attracting
        } else {
            FixedPointClass::Repelling
        }
    }

    pub fn is_attracting(self) -> bool {
        matches!(self, FixedPointClass::Superattracting | FixedPointClass::Attracting)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FixedPointClass::Superattracting => "superattracting",
            FixedPointClass::Attracting => "attracting",
            FixedPointClass::Repelling => "repelling",
            FixedPointClass::Indifferent => "indifferent",
        }
    }
}

/// One fixed point with its multiplier, its `p/q` form when the multiplier
/// has one, and its residue index (absent at a parabolic point).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FixedPointRecord {
    pub location: ExtendedPoint,
    pub multiplier: Cx,
    pub pq: Option<(u32, u32)>,
    pub index: Option<Cx>,
    pub class: FixedPointClass,
}

impl FixedPointRecord {
    /// Record for a numerically measured multiplier.
    pub fn from_multiplier(location: ExtendedPoint, multiplier: Cx) -> Self {
        let pq = reconstruct_pq(multiplier);
        let mut rec = FixedPointRecord {
            location,
            multiplier,
            pq,
            index: None,
            class: FixedPointClass::of(multiplier),
        };
        rec.index = residue_index(&rec).ok();
        rec
    }

    /// Record with the exact multiplier `p/q`.
    fn exact(location: ExtendedPoint, p: u32, q: u32) -> Self {
        let multiplier = Cx::new(p as f64 / q as f64, 0.0);
        let index = if p < q { q as f64 } else { -(q as f64) };
        FixedPointRecord {
            location,
            multiplier,
            pq: Some((p, q)),
            index: Some(Cx::new(index, 0.0)),
            class: FixedPointClass::of(multiplier),
        }
    }
}

/// Reads `lambda` as `p/q` with `|p - q| = 1`, `q <= MAX_MULTIPLICITY`.
pub fn reconstruct_pq(lambda: Cx) -> Option<(u32, u32)> {
    if lambda.im.abs() > 1e-8 || !lambda.re.is_finite() {
        return None;
    }
    let x = lambda.re;
    let (p, q) = if x < 1.0 {
        let q = Float::round(1.0 / (1.0 - x));
        if q < 1.0 || q > MAX_MULTIPLICITY as f64 {
            return None;
        }
        (q as u32 - 1, q as u32)
    } else if x > 1.0 {
        let q = Float::round(1.0 / (x - 1.0));
        if q < 1.0 || q > MAX_MULTIPLICITY as f64 {
            return None;
        }
        (q as u32 + 1, q as u32)
    } else {
        return None;
    };
    ((lambda - Cx::new(p as f64 / q as f64, 0.0)).norm() <= PQ_TOL).then_some((p, q))
}

/// Degree of the Newton map: `m + n - 1` when `d = e + 1`, else `m + n`.
pub fn newton_degree(r: &FactoredRational) -> usize {
    let mn = r.m() + r.n();
    if r.d() == r.e() + 1 {
        mn - 1
    } else {
        mn
    }
}

/// `N_R = z - A B / (A~ - B~)` expanded into coefficient form, reduced and
/// scaled to a monic denominator.
pub fn build_newton_map(r: &FactoredRational) -> Result<RationalMap> {
    let expected = newton_degree(r);
    if expected == 0 {
        return Err(Error::DegenerateMap { degree: 0 });
    }
    let linear = |list: &[(Cx, u32)]| -> Vec<Poly> { list.iter().map(|&(z, _)| Poly::linear(z)).collect() };
    let root_factors = linear(r.roots());
    let pole_factors = linear(r.poles());
    let product = |fs: &[Poly]| fs.iter().fold(Poly::one(), |acc, f| &acc * f);
    // sum_i w_i prod_{k != i} f_k
    let weighted = |fs: &[Poly], weights: &[(Cx, u32)]| {
        (0..fs.len()).fold(Poly::zero(), |acc, i| {
            let others = fs
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .fold(Poly::one(), |p, (_, f)| &p * f);
            &acc + &others.scale(Cx::new(weights[i].1 as f64, 0.0))
        })
    };
    let a = product(&root_factors);
    let b = product(&pole_factors);
    let a_tilde = &b * &weighted(&root_factors, r.roots());
    let b_tilde = &a * &weighted(&pole_factors, r.poles());
    let den = &a_tilde - &b_tilde;
    let num = &(&Poly::z() * &den) - &(&a * &b);
    let map = RationalMap::new(num, den)?.reduced()?.normalized();
    let actual = map.degree();
    if actual != expected {
        return Err(Error::DegreeMismatch { expected, actual });
    }
    Ok(map)
}

/// Closed-form fixed points of `N_R`: every root, every pole, and infinity
/// when `d != e + 1`.
pub fn fixed_points(r: &FactoredRational) -> Result<Vec<FixedPointRecord>> {
    let degree = newton_degree(r);
    if degree < 2 {
        return Err(Error::DegreeTooLow { degree, required: 2 });
    }
    let mut out = Vec::with_capacity(degree + 1);
    for &(alpha, d) in r.roots() {
        out.push(FixedPointRecord::exact(ExtendedPoint::Finite(alpha), d - 1, d));
    }
    for &(beta, e) in r.poles() {
        out.push(FixedPointRecord::exact(ExtendedPoint::Finite(beta), e + 1, e));
    }
    let (d, e) = (r.d() as i64, r.e() as i64);
    if d != e + 1 {
        // (d - e) / (d - e - 1) as p/q with q = |d - e - 1|
        let q = (d - e - 1).unsigned_abs() as u32;
        let p = (d - e).unsigned_abs() as u32;
        out.push(FixedPointRecord::exact(ExtendedPoint::Infinity, p, q));
    }
    Ok(out)
}

/// Multiplier of `n` at the fixed point `z0`. At infinity the leading
/// coefficients decide: `b0/a0` when `deg num = deg den + 1`, 0 beyond.
pub fn multiplier_at(n: &RationalMap, z0: ExtendedPoint) -> Result<Cx> {
    match z0 {
        ExtendedPoint::Finite(z) => {
            let image = n.eval_finite(z).finite().ok_or(Error::NotFixed)?;
            if (image - z).norm() > FIXED_TOL * z.norm().max(1.0) {
                return Err(Error::NotFixed);
            }
            n.derivative_at(z).ok_or(Error::NotFixed)
        }
        ExtendedPoint::Infinity => {
            let (k, l) = (n.num().degree_or_zero(), n.den().degree_or_zero());
            if n.num().is_zero() || k <= l {
                return Err(Error::NotFixed);
            }
            if k == l + 1 {
                Ok(n.den().leading().unwrap() / n.num().leading().unwrap())
            } else {
                Ok(Cx::zero())
            }
        }
    }
}

/// `1/(1 - lambda)`, exactly `+q` or `-q` when the record carries `p/q`.
pub fn residue_index(rec: &FixedPointRecord) -> Result<Cx> {
    if (rec.multiplier - 1.0).norm() < CLASS_TOL {
        return Err(Error::ParabolicPoint);
    }
    Ok(match rec.pq {
        Some((p, q)) if p < q => Cx::new(q as f64, 0.0),
        Some((_, q)) => Cx::new(-(q as f64), 0.0),
        None => (Cx::new(1.0, 0.0) - rec.multiplier).inv(),
    })
}

/// Fixed point found by root finding on `num - z den`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericFixedPoint {
    pub location: ExtendedPoint,
    pub multiplier: Cx,
    pub multiplicity: u32,
}

/// Fixed points of an arbitrary rational map, with multiplicity.
pub fn map_fixed_points(n: &RationalMap) -> Result<Vec<NumericFixedPoint>> {
    let fp = n.fixed_point_polynomial();
    if fp.is_zero() {
        return Err(Error::InvalidMap("identity map has no isolated fixed points"));
    }
    let mut out = Vec::new();
    if fp.degree_or_zero() > 0 {
        for (z, k) in roots_with_multiplicity(&fp, DEFAULT_ROOT_TOL)? {
            let multiplier = n.derivative_at(z).ok_or(Error::NotFixed)?;
            out.push(NumericFixedPoint { location: ExtendedPoint::Finite(z), multiplier, multiplicity: k });
        }
    }
    let (k, l) = (n.num().degree_or_zero(), n.den().degree_or_zero());
    if !n.num().is_zero() && k > l {
        let multiplier = multiplier_at(n, ExtendedPoint::Infinity)?;
        // a parabolic infinity absorbs the fixed points lost from the top of
        // num - z den
        let missing = (n.degree() + 1).saturating_sub(fp.degree_or_zero()) as u32;
        out.push(NumericFixedPoint { location: ExtendedPoint::Infinity, multiplier, multiplicity: missing.max(1) });
    }
    Ok(out)
}

/// Fixed points of an arbitrary map as records, after checking they are all
/// simple.
pub fn simple_fixed_points(n: &RationalMap) -> Result<Vec<FixedPointRecord>> {
    let pts = map_fixed_points(n)?;
    check_simple(&pts)?;
    Ok(pts.iter().map(|p| FixedPointRecord::from_multiplier(p.location, p.multiplier)).collect())
}

pub(crate) fn check_simple(pts: &[NumericFixedPoint]) -> Result<()> {
    for (i, a) in pts.iter().enumerate() {
        if a.multiplicity != 1 || (a.multiplier - 1.0).norm() < CLASS_TOL {
            return Err(Error::NonSimpleFixedPoint);
        }
        for b in &pts[i + 1..] {
            if let (Some(x), Some(y)) = (a.location.finite(), b.location.finite()) {
                if (x - y).norm() < SIMPLE_SEPARATION {
                    return Err(Error::NonSimpleFixedPoint);
                }
            }
        }
    }
    Ok(())
}

/// Contour-integral evaluation of the residue index,
/// `(1/2 pi i) \oint dz / (z - N(z))` over a circle around `z0`,
/// by the trapezoidal rule.
pub fn residue_index_contour(n: &RationalMap, z0: Cx, radius: f64, samples: usize) -> Result<Cx> {
    if samples < 64 {
        return Err(Error::InvalidArgument("contour needs at least 64 samples"));
    }
    if !(radius > 0.0) {
        return Err(Error::InvalidArgument("contour radius must be positive"));
    }
    for p in map_fixed_points(n)? {
        if let Some(z) = p.location.finite() {
            let dist = (z - z0).norm();
            let is_center = dist <= FIXED_TOL * z0.norm().max(1.0);
            if !is_center && dist <= 2.0 * radius {
                return Err(Error::LoopTooLarge { radius });
            }
        }
    }
    let mut acc = Cx::zero();
    for k in 0..samples {
        let offset = Cx::from_polar(radius, TAU * k as f64 / samples as f64);
        let z = z0 + offset;
        if let Some(image) = n.eval_finite(z).finite() {
            acc += offset / (z - image);
        }
    }
    Ok(acc / samples as f64)
}

/// Sum of residue indices and whether it equals 1.
pub fn verify_rfpt(recs: &[FixedPointRecord]) -> (Cx, bool) {
    let mut sum = Cx::zero();
    for r in recs {
        match r.index {
            Some(i) => sum += i,
            None => return (Cx::new(f64::NAN, f64::NAN), false),
        }
    }
    (sum, (sum - 1.0).norm() <= RFPT_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational_core::cx;
    use alloc::vec;

    fn r(roots: &[(f64, f64, u32)], poles: &[(f64, f64, u32)]) -> FactoredRational {
        let f = |l: &[(f64, f64, u32)]| l.iter().map(|&(a, b, k)| (cx(a, b), k)).collect();
        FactoredRational::new(f(roots), f(poles)).unwrap()
    }

    fn assert_map(n: &RationalMap, num: &[f64], den: &[f64]) {
        let want = RationalMap::new(Poly::from_real(num), Poly::from_real(den)).unwrap();
        let d = n.coefficient_distance(&want).expect("degrees differ");
        assert!(d < 1e-12, "{n:?} vs {want:?}");
    }

    #[test]
    fn newton_map_of_z2_times_z_minus_1() {
        let n = build_newton_map(&r(&[(0.0, 0.0, 2), (1.0, 0.0, 1)], &[])).unwrap();
        assert_map(&n, &[0.0, -1.0, 2.0], &[-2.0, 3.0]);
    }

    #[test]
    fn the_two_odd_cubics() {
        let a = build_newton_map(&r(&[(0.0, 0.0, 4)], &[(0.5, 0.0, 2), (-0.5, 0.0, 2)])).unwrap();
        assert_map(&a, &[0.0, 0.75, 0.0, 1.0], &[1.0]);
        let b = build_newton_map(&r(&[(0.0, 0.5, 2), (0.0, -0.5, 2)], &[(0.0, 0.0, 4)])).unwrap();
        assert_map(&b, &[0.0, 1.25, 0.0, 1.0], &[1.0]);
    }

    #[test]
    fn newton_map_of_a_double_root() {
        let n = build_newton_map(&r(&[(0.0, 0.0, 2)], &[])).unwrap();
        assert_map(&n, &[0.0, 0.5], &[1.0]);
    }

    #[test]
    fn degenerate_map_is_rejected() {
        assert_eq!(build_newton_map(&r(&[(0.0, 0.0, 1)], &[])), Err(Error::DegenerateMap { degree: 0 }));
    }

    #[test]
    fn degree_formula() {
        assert_eq!(newton_degree(&r(&[(0.0, 0.0, 4)], &[(0.5, 0.0, 2), (-0.5, 0.0, 2)])), 3);
        assert_eq!(newton_degree(&r(&[(0.0, 0.5, 2), (0.0, -0.5, 2)], &[(0.0, 0.0, 4)])), 3);
        assert_eq!(newton_degree(&r(&[(0.0, 0.0, 1), (1.0, 0.0, 1)], &[(2.0, 0.0, 1)])), 2);
    }

    #[test]
    fn closed_form_records() {
        let recs = fixed_points(&r(&[(0.0, 0.0, 2), (1.0, 0.0, 1)], &[])).unwrap();
        let got: Vec<_> = recs.iter().map(|x| (x.location, x.multiplier.re, x.index.unwrap().re)).collect();
        assert_eq!(
            got,
            vec![
                (ExtendedPoint::Finite(cx(0.0, 0.0)), 0.5, 2.0),
                (ExtendedPoint::Finite(cx(1.0, 0.0)), 0.0, 1.0),
                (ExtendedPoint::Infinity, 1.5, -2.0),
            ]
        );
        assert!(verify_rfpt(&recs).1);

        let recs = fixed_points(&r(&[(0.0, 0.0, 4)], &[(0.5, 0.0, 2), (-0.5, 0.0, 2)])).unwrap();
        let lambdas: Vec<f64> = recs.iter().map(|x| x.multiplier.re).collect();
        assert_eq!(lambdas, vec![0.75, 1.5, 1.5, 0.0]);
        assert_eq!(recs[3].class, FixedPointClass::Superattracting);
        assert!(verify_rfpt(&recs).1);
    }

    #[test]
    fn reciprocal_function() {
        // R = 1/z: N = 2z, fixed points 0 (lambda 2) and infinity (lambda 1/2)
        let rr = r(&[], &[(0.0, 0.0, 1)]);
        let n = build_newton_map(&rr).unwrap();
        assert_map(&n, &[0.0, 2.0], &[1.0]);
        assert_eq!(fixed_points(&rr), Err(Error::DegreeTooLow { degree: 1, required: 2 }));
        // the multipliers still follow from the map itself
        assert_eq!(multiplier_at(&n, ExtendedPoint::Finite(cx(0.0, 0.0))).unwrap(), cx(2.0, 0.0));
        assert_eq!(multiplier_at(&n, ExtendedPoint::Infinity).unwrap(), cx(0.5, 0.0));
        let h = 1e-6;
        let fd = (n.eval_finite(cx(h, 0.0)).finite().unwrap() - n.eval_finite(cx(-h, 0.0)).finite().unwrap()) / (2.0 * h);
        assert!((fd - 2.0).norm() < 1e-9);
    }

    #[test]
    fn multipliers_from_coefficients() {
        let cubic = RationalMap::polynomial(Poly::from_real(&[0.0, 0.75, 0.0, 1.0]));
        assert!((multiplier_at(&cubic, ExtendedPoint::Finite(cx(0.0, 0.0))).unwrap() - 0.75).norm() < 1e-15);
        assert_eq!(multiplier_at(&cubic, ExtendedPoint::Infinity).unwrap(), cx(0.0, 0.0));
        let quad = RationalMap::new(Poly::from_real(&[0.0, -1.0, 2.0]), Poly::from_real(&[-2.0, 3.0])).unwrap();
        assert_eq!(multiplier_at(&quad, ExtendedPoint::Infinity).unwrap(), cx(1.5, 0.0));
        assert_eq!(multiplier_at(&quad, ExtendedPoint::Finite(cx(0.3, 0.0))), Err(Error::NotFixed));
        let z_half = RationalMap::polynomial(Poly::from_real(&[0.0, 0.5]));
        assert_eq!(multiplier_at(&z_half, ExtendedPoint::Infinity).unwrap(), cx(2.0, 0.0));
    }

    #[test]
    fn index_from_multiplier() {
        let rec = |l: f64| FixedPointRecord::from_multiplier(ExtendedPoint::Finite(cx(0.0, 0.0)), cx(l, 0.0));
        assert_eq!(residue_index(&rec(0.5)).unwrap(), cx(2.0, 0.0));
        assert_eq!(residue_index(&rec(1.5)).unwrap(), cx(-2.0, 0.0));
        assert_eq!(residue_index(&rec(0.0)).unwrap(), cx(1.0, 0.0));
        assert_eq!(residue_index(&rec(1.0)), Err(Error::ParabolicPoint));
        let odd = rec(0.3);
        assert_eq!(odd.pq, None);
        assert!((odd.index.unwrap() - 1.0 / 0.7).norm() < 1e-12);
    }

    #[test]
    fn pq_reconstruction() {
        assert_eq!(reconstruct_pq(cx(0.75, 0.0)), Some((3, 4)));
        assert_eq!(reconstruct_pq(cx(1.5, 0.0)), Some((3, 2)));
        assert_eq!(reconstruct_pq(cx(2.0, 0.0)), Some((2, 1)));
        assert_eq!(reconstruct_pq(cx(0.0, 0.0)), Some((0, 1)));
        assert_eq!(reconstruct_pq(cx(3.0, 0.0)), None);
        assert_eq!(reconstruct_pq(cx(-1.0, 0.0)), None);
        assert_eq!(reconstruct_pq(cx(0.5, 0.1)), None);
        assert_eq!(reconstruct_pq(cx(1.0 - 1.0 / 100.0, 0.0)), None);
        for q in 1..=MAX_MULTIPLICITY {
            let qf = q as f64;
            assert_eq!(reconstruct_pq(cx((qf - 1.0) / qf, 0.0)), Some((q - 1, q)));
            assert_eq!(reconstruct_pq(cx((qf + 1.0) / qf, 0.0)), Some((q + 1, q)));
        }
    }

    #[test]
    fn contour_oracle() {
        let half = RationalMap::polynomial(Poly::from_real(&[0.0, 0.5]));
        let i = residue_index_contour(&half, cx(0.0, 0.0), 0.1, 64).unwrap();
        assert!((i - 2.0).norm() < 1e-12);

        let cubic = RationalMap::polynomial(Poly::from_real(&[0.0, 0.75, 0.0, 1.0]));
        let i = residue_index_contour(&cubic, cx(0.5, 0.0), 0.05, 64).unwrap();
        assert!((i + 2.0).norm() < 1e-10);

        // Newton map of z(z - 1): z^2 / (2z - 1)
        let n = RationalMap::new(Poly::from_real(&[0.0, 0.0, 1.0]), Poly::from_real(&[-1.0, 2.0])).unwrap();
        let i = residue_index_contour(&n, cx(0.0, 0.0), 0.1, 64).unwrap();
        assert!((i - 1.0).norm() < 1e-12);

        assert!(matches!(residue_index_contour(&cubic, cx(0.5, 0.0), 0.4, 64), Err(Error::LoopTooLarge { .. })));
        assert!(residue_index_contour(&cubic, cx(0.5, 0.0), 0.05, 16).is_err());
    }

    #[test]
    fn rfpt_check_on_the_cubic() {
        let cubic = RationalMap::polynomial(Poly::from_real(&[0.0, 0.75, 0.0, 1.0]));
        let recs = simple_fixed_points(&cubic).unwrap();
        let mut idx: Vec<f64> = recs.iter().map(|r| r.index.unwrap().re).collect();
        idx.sort_by(f64::total_cmp);
        let want = [-2.0, -2.0, 1.0, 4.0];
        for (a, b) in idx.iter().zip(want) {
            assert!((a - b).abs() < 1e-9);
        }
        let (sum, pass) = verify_rfpt(&recs);
        assert!(pass, "{sum}");

        let mut fake = recs.clone();
        fake.push(FixedPointRecord::from_multiplier(ExtendedPoint::Finite(cx(9.0, 0.0)), cx(0.5, 0.0)));
        assert!(!verify_rfpt(&fake).1);
    }

    #[test]
    fn parabolic_points_are_not_simple() {
        // z + z^2 has a parabolic fixed point at 0
        let n = RationalMap::polynomial(Poly::from_real(&[0.0, 1.0, 1.0]));
        assert_eq!(simple_fixed_points(&n), Err(Error::NonSimpleFixedPoint));
    }
}
