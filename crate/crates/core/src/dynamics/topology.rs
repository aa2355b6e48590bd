use crate::conjugacy::{cubic_polynomial_condition, quadratic_variant, QuadVariant};
use crate::error::{Error, Result};
use crate::newton_map::{newton_degree, FactoredRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JuliaTopology {
    JordanCurve,
    TotallyDisconnected,
    SelfIntersectingClosedCurve,
    Undetermined,
}

impl JuliaTopology {
    pub fn as_str(self) -> &'static str {
        match self {
            JuliaTopology::JordanCurve => "JordanCurve",
            JuliaTopology::TotallyDisconnected => "TotallyDisconnected",
            JuliaTopology::SelfIntersectingClosedCurve => "SelfIntersectingClosedCurve",
            JuliaTopology::Undetermined => "Undetermined",
        }
    }
}

/// Predicted topology of the Julia set and the result it rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JuliaClass {
    pub topology: JuliaTopology,
    pub provenance: &'static str,
}

/// Topology read off the conjugacy class for degree 2, and off the
/// polynomial normal form for degree 3.
pub fn julia_topology_predict(r: &FactoredRational) -> Result<JuliaClass> {
    let degree = newton_degree(r);
    let (topology, provenance) = match degree {
        2 => match quadratic_variant(r)? {
            QuadVariant::N1 { .. } => (
                JuliaTopology::JordanCurve,
                "quadratic Newton map with two completely invariant attracting domains",
            ),
            QuadVariant::N2 { .. } => (
                JuliaTopology::TotallyDisconnected,
                "quadratic Newton map with one attracting domain holding both critical points",
            ),
        },
        3 => {
            let rep = cubic_polynomial_condition(r)?;
            let attracting = rep.indices.map(|ix| ix.iter().filter(|&&n| n > 0).count());
            match (rep.conjugate_to_poly, attracting) {
                (true, Some(2)) => (
                    JuliaTopology::SelfIntersectingClosedCurve,
                    "cubic Newton map conjugate to a polynomial with two finite attracting fixed points",
                ),
                (true, Some(1)) => (
                    JuliaTopology::JordanCurve,
                    "cubic Newton map conjugate to a polynomial with one finite attracting fixed point",
                ),
                (true, _) => (JuliaTopology::Undetermined, "cubic normal form unavailable"),
                (false, _) => (
                    JuliaTopology::Undetermined,
                    "cubic Newton map not conjugate to a polynomial",
                ),
            }
        }
        _ => return Err(Error::UnsupportedDegree { degree }),
    };
    Ok(JuliaClass { topology, provenance })
}
