use alloc::vec::Vec;

use super::RationalMap;
use crate::error::{Error, Result};
use crate::rational_core::{roots_with_multiplicity, Cx, DEFAULT_ROOT_TOL};

/// Critical points counted with multiplicity (local degree minus one).
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalPoints {
    pub finite: Vec<(Cx, u32)>,
    /// Multiplicity of infinity as a critical point, 0 when it is not one.
    pub infinity: u32,
}

impl CriticalPoints {
    pub fn total(&self) -> u32 {
        self.finite.iter().map(|c| c.1).sum::<u32>() + self.infinity
    }

    pub fn infinity_is_critical(&self) -> bool {
        self.infinity > 0
    }
}

/// Finite critical points are the roots of `num' den - num den'`; whatever
/// is missing from the total `2 deg - 2` sits at infinity.
pub fn critical_points(n: &RationalMap) -> Result<CriticalPoints> {
    let n = n.reduced()?;
    let degree = n.degree();
    if degree < 2 {
        return Err(Error::DegreeTooLow { degree, required: 2 });
    }
    let w = n.wronskian();
    let finite = if w.degree_or_zero() == 0 {
        Vec::new()
    } else {
        roots_with_multiplicity(&w, DEFAULT_ROOT_TOL)?
    };
    let found: usize = finite.iter().map(|c| c.1 as usize).sum();
    let infinity = (2 * degree - 2).saturating_sub(found) as u32;
    Ok(CriticalPoints { finite, infinity })
}
