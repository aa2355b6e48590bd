use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::newton_map::{
    build_newton_map, check_simple, map_fixed_points, reconstruct_pq, FactoredRational, RationalMap,
};
use crate::rational_core::{Cx, ExtendedPoint};

/// Relative coefficient distance allowed between the input and the rebuilt
/// Newton map.
pub const RECOGNITION_TOL: f64 = 1e-7;

/// Outcome of trying to read a rational map as a Newton map.
#[derive(Clone, Debug, PartialEq)]
pub struct Recognition {
    pub generator: Option<FactoredRational>,
    /// Why recognition failed.
    pub reason: Option<String>,
    /// Coefficient distance between the input and the rebuilt Newton map.
    pub residual: Option<f64>,
}

impl Recognition {
    fn reject(reason: String) -> Self {
        Recognition { generator: None, reason: Some(reason), residual: None }
    }
}

/// Compact rendering of a multiplier for messages.
pub fn format_multiplier(z: Cx) -> String {
    let r = |x: f64| Float::round(x * 1e9) / 1e9 + 0.0;
    if z.im.abs() <= 1e-9 {
        format!("{}", r(z.re))
    } else {
        format!("{}{:+}i", r(z.re), r(z.im))
    }
}

/// Every finite fixed point with multiplier `p/q`, `p < q`, becomes a root
/// of multiplicity `q`; with `p > q`, a pole of multiplicity `q`. The
/// rebuilt function is accepted when its Newton map reproduces `n`.
pub fn recognize_newton_map_detailed(n: &RationalMap) -> Result<Recognition> {
    let n = n.reduced()?;
    let degree = n.degree();
    if degree < 2 {
        return Err(Error::DegreeTooLow { degree, required: 2 });
    }
    let pts = map_fixed_points(&n)?;
    check_simple(&pts)?;
    let mut roots = Vec::new();
    let mut poles = Vec::new();
    for p in &pts {
        let ExtendedPoint::Finite(z) = p.location else {
            continue;
        };
        match reconstruct_pq(p.multiplier) {
            Some((p_, q)) if p_ < q => roots.push((z, q)),
            Some((_, q)) => poles.push((z, q)),
            None => {
                return Ok(Recognition::reject(format!(
                    "multiplier {} not of form p/q with |p-q|=1",
                    format_multiplier(p.multiplier)
                )))
            }
        }
    }
    let r = match FactoredRational::new(roots, poles) {
        Ok(r) => r,
        Err(e) => return Ok(Recognition::reject(format!("{e}"))),
    };
    let rebuilt = match build_newton_map(&r) {
        Ok(m) => m,
        Err(e) => return Ok(Recognition::reject(format!("{e}"))),
    };
    let Some(residual) = rebuilt.coefficient_distance(&n) else {
        return Ok(Recognition::reject("rebuilt Newton map has different degrees".into()));
    };
    if residual > RECOGNITION_TOL {
        return Ok(Recognition {
            generator: None,
            reason: Some(format!("rebuilt Newton map differs by {residual:e}")),
            residual: Some(residual),
        });
    }
    Ok(Recognition { generator: Some(r), reason: None, residual: Some(residual) })
}

pub fn recognize_newton_map(n: &RationalMap) -> Result<Option<FactoredRational>> {
    Ok(recognize_newton_map_detailed(n)?.generator)
}
