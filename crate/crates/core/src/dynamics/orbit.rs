use alloc::vec::Vec;

use crate::error::Result;
use crate::newton_map::{build_newton_map, critical_points, fixed_points, FactoredRational, RationalMap};
use crate::rational_core::ExtendedPoint;

pub const DEFAULT_EPS: f64 = 1e-8;
pub const ANALYSIS_MAX_ITER: usize = 200;
pub const RENDER_MAX_ITER: usize = 1000;
/// Extra steps an orbit must stay inside the capture disk.
pub const CONFIRM_STEPS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitResult {
    /// Position in the supplied attractor list.
    pub attractor_index: Option<usize>,
    /// Map applications before capture, or `max_iter` without one.
    pub iterations: usize,
    pub final_point: ExtendedPoint,
}

fn captured_by(z: ExtendedPoint, attractors: &[ExtendedPoint], eps: f64) -> Option<usize> {
    attractors.iter().position(|&a| match (a, z) {
        (ExtendedPoint::Infinity, ExtendedPoint::Infinity) => true,
        (ExtendedPoint::Infinity, ExtendedPoint::Finite(w)) => w.norm() > 1.0 / eps,
        (ExtendedPoint::Finite(a), ExtendedPoint::Finite(w)) => (w - a).norm() <= eps,
        (ExtendedPoint::Finite(_), ExtendedPoint::Infinity) => false,
    })
}

/// Iterates `n` from `z0` until the orbit enters the `eps`-disk of a finite
/// attractor and stays there for `CONFIRM_STEPS` more steps, or leaves the
/// disk of radius `1/eps` when infinity is an attractor.
pub fn iterate_orbit(
    n: &RationalMap,
    z0: ExtendedPoint,
    attractors: &[ExtendedPoint],
    max_iter: usize,
    eps: f64,
) -> OrbitResult {
    let mut z = z0;
    let mut it = 0;
    loop {
        if let Some(k) = captured_by(z, attractors, eps) {
            let confirmed = attractors[k].is_infinity() || {
                let mut w = z;
                (0..CONFIRM_STEPS).all(|_| {
                    w = n.eval(w);
                    captured_by(w, &attractors[k..=k], eps).is_some()
                })
            };
            if confirmed {
                return OrbitResult { attractor_index: Some(k), iterations: it, final_point: z };
            }
        }
        if it >= max_iter {
            return OrbitResult { attractor_index: None, iterations: it, final_point: z };
        }
        z = n.eval(z);
        it += 1;
    }
}

/// Attracting fixed points of `N_R` and the fate of each critical point.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalOrbits {
    pub attractors: Vec<ExtendedPoint>,
    /// Critical point, its multiplicity and its orbit.
    pub orbits: Vec<(ExtendedPoint, u32, OrbitResult)>,
}

impl CriticalOrbits {
    /// Whether every attractor captures at least one critical point.
    pub fn every_attractor_has_critical_point(&self) -> bool {
        (0..self.attractors.len()).all(|k| self.orbits.iter().any(|o| o.2.attractor_index == Some(k)))
    }
}

pub fn classify_critical_orbits(r: &FactoredRational, max_iter: usize, eps: f64) -> Result<CriticalOrbits> {
    let attractors: Vec<ExtendedPoint> =
        fixed_points(r)?.iter().filter(|p| p.class.is_attracting()).map(|p| p.location).collect();
    let n = build_newton_map(r)?;
    let crit = critical_points(&n)?;
    let mut orbits = Vec::with_capacity(crit.finite.len() + 1);
    for &(c, k) in &crit.finite {
        let z = ExtendedPoint::Finite(c);
        orbits.push((z, k, iterate_orbit(&n, z, &attractors, max_iter, eps)));
    }
    if crit.infinity > 0 {
        let z = ExtendedPoint::Infinity;
        orbits.push((z, crit.infinity, iterate_orbit(&n, z, &attractors, max_iter, eps)));
    }
    Ok(CriticalOrbits { attractors, orbits })
}
