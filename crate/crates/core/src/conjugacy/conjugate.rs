use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::MobiusMap;
use crate::error::{Error, Result};
use crate::newton_map::{check_simple, map_fixed_points, NumericFixedPoint, RationalMap};
use crate::rational_core::{Cx, ExtendedPoint, Poly};

/// Coefficients of a conjugated map below this fraction of the largest one
/// are dropped from the top.
pub const CONJUGATE_TRIM: f64 = 1e-11;
/// Multipliers closer than this are paired when matching spectra.
pub const SPECTRUM_TOL: f64 = 1e-6;
/// Chordal tolerance of witness verification.
pub const WITNESS_TOL: f64 = 1e-7;
pub const PROBE_COUNT: usize = 20;

/// Coefficient form of `M ∘ N ∘ M^{-1}`.
pub fn conjugate_map(n: &RationalMap, m: &MobiusMap) -> Result<RationalMap> {
    let k = n.degree();
    let inv = m.inverse();
    // numerator and denominator of M^{-1}
    let top = Poly::from_coeffs(alloc::vec![inv.b, inv.a]);
    let bottom = Poly::from_coeffs(alloc::vec![inv.d, inv.c]);
    let mut top_pow = Vec::with_capacity(k + 1);
    let mut bottom_pow = Vec::with_capacity(k + 1);
    top_pow.push(Poly::one());
    bottom_pow.push(Poly::one());
    for i in 1..=k {
        top_pow.push(&top_pow[i - 1] * &top);
        bottom_pow.push(&bottom_pow[i - 1] * &bottom);
    }
    let homogenize = |p: &Poly| {
        let mut acc = Poly::zero();
        for (i, &c) in p.coeffs().iter().enumerate() {
            let term = &top_pow[i] * &bottom_pow[k - i];
            acc = &acc + &term.scale(c);
        }
        acc
    };
    let p_hat = homogenize(n.num());
    let q_hat = homogenize(n.den());
    let num = &p_hat.scale(m.a) + &q_hat.scale(m.b);
    let den = &p_hat.scale(m.c) + &q_hat.scale(m.d);
    let scale = num.max_abs_coeff().max(den.max_abs_coeff());
    let trim = |p: Poly| {
        let mut c = p.into_coeffs();
        while c.last().is_some_and(|x| x.norm() <= CONJUGATE_TRIM * scale) {
            c.pop();
        }
        Poly::from_coeffs(c)
    };
    let out = RationalMap::new(trim(num), trim(den))?.reduced()?.normalized();
    Ok(out)
}

/// Multipliers at all fixed points, which must be simple.
pub fn multiplier_spectrum(n: &RationalMap) -> Result<Vec<Cx>> {
    let pts = simple_points(n)?;
    Ok(pts.iter().map(|p| p.multiplier).collect())
}

fn simple_points(n: &RationalMap) -> Result<Vec<NumericFixedPoint>> {
    let pts = map_fixed_points(n)?;
    check_simple(&pts)?;
    Ok(pts)
}

/// Equal as multisets, pairing within `tol`.
pub fn spectra_match(a: &[Cx], b: &[Cx], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = alloc::vec![false; b.len()];
    'outer: for x in a {
        for (j, y) in b.iter().enumerate() {
            if !used[j] && (x - y).norm() <= tol {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Fixed probe points spread over an annulus around the origin.
pub fn probe_points() -> [ExtendedPoint; PROBE_COUNT] {
    core::array::from_fn(|k| {
        let t = k as f64 / PROBE_COUNT as f64;
        ExtendedPoint::Finite(Cx::from_polar(0.35 + 2.1 * t, TAU * t * 3.0 + 0.37))
    })
}

/// Largest chordal distance between `f1` and `M ∘ f2 ∘ M^{-1}` over the probes.
pub fn witness_error(f1: &RationalMap, f2: &RationalMap, m: &MobiusMap) -> f64 {
    let inv = m.inverse();
    probe_points()
        .iter()
        .map(|&z| f1.eval(z).chordal_distance(m.apply(f2.eval(inv.apply(z)))))
        .fold(0.0, f64::max)
}

/// A Möbius `M` with `M ∘ f2 ∘ M^{-1} = f1` for quadratic maps, found by
/// pairing fixed points with equal multipliers.
pub fn quadratic_conjugacy_witness(f1: &RationalMap, f2: &RationalMap) -> Result<Option<MobiusMap>> {
    for f in [f1, f2] {
        if f.degree() != 2 {
            return Err(Error::NotQuadratic { degree: f.degree() });
        }
    }
    let p1 = simple_points(f1)?;
    let p2 = simple_points(f2)?;
    let s1: Vec<Cx> = p1.iter().map(|p| p.multiplier).collect();
    let s2: Vec<Cx> = p2.iter().map(|p| p.multiplier).collect();
    if p1.len() != 3 || p2.len() != 3 || !spectra_match(&s1, &s2, SPECTRUM_TOL) {
        return Ok(None);
    }
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for perm in PERMS {
        if (0..3).any(|i| (s1[i] - s2[perm[i]]).norm() > SPECTRUM_TOL) {
            continue;
        }
        let src = [p2[perm[0]].location, p2[perm[1]].location, p2[perm[2]].location];
        let dst = [p1[0].location, p1[1].location, p1[2].location];
        let Ok(m) = MobiusMap::from_three_points(src, dst) else {
            continue;
        };
        if witness_error(f1, f2, &m) <= WITNESS_TOL {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
