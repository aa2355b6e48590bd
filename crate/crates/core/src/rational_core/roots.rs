//! Simultaneous (Aberth–Ehrlich) root finding with cluster consolidation.
//!
//! Multiple roots defeat plain Newton iteration and only resolve to about
//! `eps^(1/k)` under any simultaneous method, so after the Aberth sweep the
//! approximations are grouped, each group is tested against the spread a
//! genuine k-fold root would show at rounding level, and accepted groups are
//! polished on the (k-1)-th derivative, where the root is simple.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_traits::{Float, Zero};

use super::{Cx, Poly};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ITER: usize = 500;
pub const DEFAULT_ROOT_TOL: f64 = 1e-9;
/// Radius (relative to `max(1, |z|)`) under which approximations are always
/// considered the same root.
pub const CLUSTER_RELATIVE: f64 = 1e-6;

const SEED: u64 = 0x5eed_1e55_ca75_0d01;
const GROUP_RADIUS: f64 = 1e-2;
const FLOOR: f64 = 4.0 * f64::EPSILON;

/// All `deg p` roots of `p`, repeated according to multiplicity.
pub fn poly_roots(p: &Poly, tol: f64) -> Result<Vec<Cx>> {
    poly_roots_with_cap(p, tol, DEFAULT_MAX_ITER)
}

pub fn poly_roots_with_cap(p: &Poly, tol: f64, max_iter: usize) -> Result<Vec<Cx>> {
    Ok(solve(p, tol, max_iter)?
        .into_iter()
        .flat_map(|(z, k)| core::iter::repeat_n(z, k as usize))
        .collect())
}

/// Distinct roots of `p` with their multiplicities.
pub fn roots_with_multiplicity(p: &Poly, tol: f64) -> Result<Vec<(Cx, u32)>> {
    solve(p, tol, DEFAULT_MAX_ITER)
}

/// Single-linkage merge of points closer than `rel * max(1, |z|)`; each
/// cluster is reported at its centroid.
pub fn cluster_points(points: &[Cx], rel: f64) -> Vec<(Cx, u32)> {
    groups(points, rel)
        .into_iter()
        .map(|g| (centroid(&g), g.len() as u32))
        .collect()
}

fn solve(p: &Poly, tol: f64, max_iter: usize) -> Result<Vec<(Cx, u32)>> {
    let degree = p.degree_or_zero();
    if degree == 0 {
        return Err(Error::DegreeTooLow { degree, required: 1 });
    }

    // roots at exactly zero are split off so they come back exact
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let reduced = Poly::from_coeffs(p.coeffs()[zeros..].to_vec()).monic();
    let mut out = Vec::new();
    if zeros > 0 {
        out.push((Cx::zero(), zeros as u32));
    }
    match reduced.degree_or_zero() {
        0 => {}
        1 => out.push((-reduced.coeff(0), 1)),
        _ => {
            let approx = aberth(&reduced, max_iter);
            out.extend(consolidate(&reduced, &approx));
        }
    }

    let floor = p.max_abs_coeff();
    for &(r, _) in &out {
        let (v, scale) = p.eval_with_scale(r);
        if !(v.norm() <= tol * scale.max(floor)) {
            return Err(Error::NonConvergence { iterations: max_iter });
        }
    }
    Ok(out)
}

struct SplitMix64(u64);

impl SplitMix64 {
    fn next_f64(&mut self) -> f64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^= z >> 31;
        (z >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// `p` monic with degree >= 2.
fn aberth(p: &Poly, max_iter: usize) -> Vec<Cx> {
    let n = p.degree_or_zero();
    let radius = 1.0
        + p.coeffs()[..n]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
    let mut rng = SplitMix64(SEED);
    let mut z: Vec<Cx> = (0..n)
        .map(|k| {
            let jitter = 0.5 * (rng.next_f64() - 0.5);
            Cx::from_polar(radius, TAU * (k as f64 + 0.25 + jitter) / n as f64)
        })
        .collect();

    let mut frozen = vec![false; n];
    for _ in 0..max_iter {
        let mut settled = true;
        for k in 0..n {
            if frozen[k] {
                continue;
            }
            let (v, scale) = p.eval_with_scale(z[k]);
            if v.norm() <= FLOOR * scale {
                frozen[k] = true;
                continue;
            }
            let (_, d) = p.eval_with_derivative(z[k]);
            let mut repulsion = Cx::zero();
            for j in 0..n {
                if j != k && z[j] != z[k] {
                    repulsion += (z[k] - z[j]).inv();
                }
            }
            let step = if d.is_zero() {
                // stationary point of p: kick off it deterministically
                Cx::from_polar(1e-3 * (1.0 + z[k].norm()), rng.next_f64() * TAU)
            } else {
                let ratio = v / d;
                ratio / (Cx::new(1.0, 0.0) - ratio * repulsion)
            };
            if !(step.re.is_finite() && step.im.is_finite()) {
                continue;
            }
            z[k] -= step;
            if step.norm() <= FLOOR * z[k].norm().max(f64::MIN_POSITIVE) {
                frozen[k] = true;
            } else {
                settled = false;
            }
        }
        if settled {
            break;
        }
    }
    z
}

fn centroid(points: &[Cx]) -> Cx {
    points.iter().fold(Cx::zero(), |a, &b| a + b) / points.len() as f64
}

fn groups(points: &[Cx], rel: f64) -> Vec<Vec<Cx>> {
    let n = points.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], mut i: usize) -> usize {
        while label[i] != i {
            label[i] = label[label[i]];
            i = label[i];
        }
        i
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let scale = points[i].norm().max(points[j].norm()).max(1.0);
            if (points[i] - points[j]).norm() <= rel * scale {
                let (a, b) = (find(&mut label, i), find(&mut label, j));
                if a != b {
                    label[b.max(a)] = a.min(b);
                }
            }
        }
    }
    let mut out: Vec<(usize, Vec<Cx>)> = Vec::new();
    for (i, &z) in points.iter().enumerate() {
        let root = find(&mut label, i);
        match out.iter_mut().find(|(r, _)| *r == root) {
            Some((_, g)) => g.push(z),
            None => out.push((root, vec![z])),
        }
    }
    out.into_iter().map(|(_, g)| g).collect()
}

fn consolidate(p: &Poly, approx: &[Cx]) -> Vec<(Cx, u32)> {
    let mut out = Vec::new();
    consolidate_at(p, approx, GROUP_RADIUS, &mut out);
    out
}

fn consolidate_at(p: &Poly, points: &[Cx], radius: f64, out: &mut Vec<(Cx, u32)>) {
    for g in groups(points, radius) {
        if g.len() == 1 {
            out.push((polish_simple(p, g[0]), 1));
            continue;
        }
        let k = g.len();
        let c = centroid(&g);
        if is_plausible_multiple_root(p, &g, c) {
            out.push((polish_multiple(p, c, k), k as u32));
        } else if radius > CLUSTER_RELATIVE {
            consolidate_at(p, &g, radius / 10.0, out);
        } else {
            out.extend(g.into_iter().map(|z| (polish_simple(p, z), 1)));
        }
    }
}

/// A genuine k-fold root leaves its approximations spread over roughly
/// `(eps * scale / |p^(k)(c)/k!|)^(1/k)`; distinct roots sit further apart.
fn is_plausible_multiple_root(p: &Poly, group: &[Cx], c: Cx) -> bool {
    let k = group.len();
    let spread = group.iter().map(|z| (z - c).norm()).fold(0.0, f64::max);
    let floor = CLUSTER_RELATIVE * c.norm().max(1.0);
    if spread <= floor {
        return true;
    }
    let (_, scale) = p.eval_with_scale(c);
    let lead = p.taylor_derivative(k).eval(c).norm();
    if lead == 0.0 {
        return false;
    }
    let eta = 16.0 * p.degree_or_zero() as f64 * f64::EPSILON;
    let expected = Float::powf(eta * scale / lead, 1.0 / k as f64);
    spread <= 10.0 * expected
}

fn polish_simple(p: &Poly, mut z: Cx) -> Cx {
    let mut best = p.eval(z).norm();
    for _ in 0..3 {
        let (v, d) = p.eval_with_derivative(z);
        if d.is_zero() {
            break;
        }
        let cand = z - v / d;
        let r = p.eval(cand).norm();
        if !(r < best) {
            break;
        }
        best = r;
        z = cand;
    }
    z
}

fn polish_multiple(p: &Poly, mut c: Cx, k: usize) -> Cx {
    // p^(k-1) has a simple root at a k-fold root of p
    let g = p.taylor_derivative(k - 1);
    let dg = g.derivative();
    let mut best = g.eval(c).norm();
    for _ in 0..8 {
        let d = dg.eval(c);
        if d.is_zero() {
            break;
        }
        let cand = c - g.eval(c) / d;
        let r = g.eval(cand).norm();
        if !(r < best) {
            break;
        }
        best = r;
        c = cand;
    }
    c
}
