//! JSON shapes of the command outputs. Field order is the key order.

use serde::Serialize;

use newton_atlas_core::conjugacy::CubicCandidate;
use newton_atlas_core::newton_map::{CriticalPoints, RationalMap};
use newton_atlas_core::{
    CubicPolyReport, Cx, ExtendedPoint, FixedPointRecord, JuliaClass, MobiusMap, QuadClass, QuadVariant,
};

use crate::spec::{format_coeffs, format_factors, FunctionSpec};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl From<Cx> for Complex {
    fn from(z: Cx) -> Self {
        Complex { re: z.re + 0.0, im: z.im + 0.0 }
    }
}

/// A finite point as `{re, im}`, infinity as the string `"infinity"`.
#[derive(Clone, Copy, Debug, Serialize)]
#[serde(untagged)]
pub enum Point {
    Finite(Complex),
    Infinity(&'static str),
}

impl From<ExtendedPoint> for Point {
    fn from(p: ExtendedPoint) -> Self {
        match p {
            ExtendedPoint::Finite(z) => Point::Finite(z.into()),
            ExtendedPoint::Infinity => Point::Infinity("infinity"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Factor {
    pub re: f64,
    pub im: f64,
    pub mult: u32,
}

fn factors(list: &[(Cx, u32)]) -> Vec<Factor> {
    list.iter().map(|&(z, mult)| Factor { re: z.re + 0.0, im: z.im + 0.0, mult }).collect()
}

fn complexes(list: &[Cx]) -> Vec<Complex> {
    list.iter().map(|&z| z.into()).collect()
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Input {
    Factored { roots: Vec<Factor>, poles: Vec<Factor>, canonical: FactoredText },
    Raw { num: Vec<Complex>, den: Vec<Complex>, canonical: RawText },
}

#[derive(Clone, Debug, Serialize)]
pub struct FactoredText {
    pub roots: String,
    pub poles: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RawText {
    pub num: String,
    pub den: String,
}

impl From<&FunctionSpec> for Input {
    fn from(s: &FunctionSpec) -> Self {
        match s {
            FunctionSpec::Factored { roots, poles } => Input::Factored {
                roots: factors(roots),
                poles: factors(poles),
                canonical: FactoredText { roots: format_factors(roots), poles: format_factors(poles) },
            },
            FunctionSpec::Raw { num, den } => Input::Raw {
                num: complexes(num),
                den: complexes(den),
                canonical: RawText { num: format_coeffs(num), den: format_coeffs(den) },
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MapCoeffs {
    pub num: Vec<Complex>,
    pub den: Vec<Complex>,
}

impl From<&RationalMap> for MapCoeffs {
    fn from(n: &RationalMap) -> Self {
        let n = n.normalized();
        MapCoeffs { num: complexes(n.num().coeffs()), den: complexes(n.den().coeffs()) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedPoint {
    pub location: Point,
    pub multiplier: Complex,
    pub p: Option<u32>,
    pub q: Option<u32>,
    pub index: Option<Complex>,
    pub class: &'static str,
}

impl From<&FixedPointRecord> for FixedPoint {
    fn from(r: &FixedPointRecord) -> Self {
        FixedPoint {
            location: r.location.into(),
            multiplier: r.multiplier.into(),
            p: r.pq.map(|x| x.0),
            q: r.pq.map(|x| x.1),
            index: r.index.map(Into::into),
            class: r.class.as_str(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalPoint {
    pub location: Point,
    pub multiplicity: u32,
}

pub fn critical_list(c: &CriticalPoints) -> Vec<CriticalPoint> {
    let mut out: Vec<CriticalPoint> = c
        .finite
        .iter()
        .map(|&(z, k)| CriticalPoint { location: ExtendedPoint::Finite(z).into(), multiplicity: k })
        .collect();
    if c.infinity > 0 {
        out.push(CriticalPoint { location: ExtendedPoint::Infinity.into(), multiplicity: c.infinity });
    }
    out
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Mobius {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub d: Complex,
}

impl From<&MobiusMap> for Mobius {
    fn from(m: &MobiusMap) -> Self {
        Mobius { a: m.a.into(), b: m.b.into(), c: m.c.into(), d: m.d.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuadReport {
    pub class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d1: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d2: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e1: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e2: Option<u32>,
    pub canonical_map: MapCoeffs,
    /// Sends the Newton map onto `canonical_map`.
    pub witness: Mobius,
}

impl From<&QuadClass> for QuadReport {
    fn from(c: &QuadClass) -> Self {
        let (d1, d2, e1, e2) = match c.variant {
            QuadVariant::N1 { d1, d2 } => (Some(d1), Some(d2), None, None),
            QuadVariant::N2 { e1, e2 } => (None, None, Some(e1), Some(e2)),
        };
        QuadReport {
            class: c.variant.name(),
            d1,
            d2,
            e1,
            e2,
            canonical_map: (&c.variant.canonical_map()).into(),
            witness: (&c.witness).into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalFormReport {
    pub a: Complex,
    pub b: Complex,
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub case: &'static str,
    pub point: Point,
    pub condition_residual: Complex,
    pub satisfied: bool,
    pub exceptional: bool,
}

impl From<&CubicCandidate> for Candidate {
    fn from(c: &CubicCandidate) -> Self {
        Candidate {
            case: c.case_id.as_str(),
            point: c.point.into(),
            condition_residual: c.condition_value.into(),
            satisfied: c.satisfied,
            exceptional: c.exceptional,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CubicReport {
    pub case: &'static str,
    pub condition_residual: Option<Complex>,
    pub conjugate_to_poly: bool,
    pub exceptional_point: Option<Point>,
    pub exceptional_confirmed: Option<bool>,
    pub normal_form: Option<NormalFormReport>,
    pub indices: Option<[i32; 3]>,
    pub candidates: Vec<Candidate>,
}

impl From<&CubicPolyReport> for CubicReport {
    fn from(r: &CubicPolyReport) -> Self {
        CubicReport {
            case: r.case_id.as_str(),
            condition_residual: r.condition_value.map(Into::into),
            conjugate_to_poly: r.conjugate_to_poly,
            exceptional_point: r.exceptional_point.map(Into::into),
            exceptional_confirmed: r.exceptional_confirmed,
            normal_form: r.normal_form.map(|(a, b)| NormalFormReport { a: a.into(), b: b.into() }),
            indices: r.indices,
            candidates: r.candidates.iter().map(Into::into).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Julia {
    pub topology: &'static str,
    pub provenance: &'static str,
}

impl From<JuliaClass> for Julia {
    fn from(j: JuliaClass) -> Self {
        Julia { topology: j.topology.as_str(), provenance: j.provenance }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub command: &'static str,
    pub input: Input,
    pub degree: usize,
    pub newton_map: MapCoeffs,
    pub fixed_points: Vec<FixedPoint>,
    pub rfpt_sum: Complex,
    pub rfpt_pass: bool,
    pub critical_points: Vec<CriticalPoint>,
    pub quad_class: Option<QuadReport>,
    pub cubic_report: Option<CubicReport>,
    pub julia_class: Option<Julia>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum ClassDetail {
    Quadratic(QuadReport),
    Cubic(CubicReport),
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub command: &'static str,
    pub input: Input,
    pub degree: usize,
    #[serde(flatten)]
    pub detail: ClassDetail,
    pub julia: &'static str,
    pub provenance: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterizeReport {
    pub command: &'static str,
    pub input: Input,
    pub is_newton_map: bool,
    pub generator: Option<FactoredText>,
    pub reason: Option<String>,
    pub residual: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ViewportReport {
    pub cx: f64,
    pub cy: f64,
    pub w: f64,
    pub h: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AttractorEntry {
    pub location: Point,
    pub color: [u8; 3],
}

#[derive(Clone, Debug, Serialize)]
pub struct RenderReport {
    pub command: &'static str,
    pub input: Input,
    pub image: String,
    pub width: usize,
    pub height: usize,
    pub viewport: ViewportReport,
    pub max_iter: usize,
    pub eps: f64,
    pub attractors: Vec<AttractorEntry>,
    pub unresolved_color: [u8; 3],
    pub captured_fraction: f64,
}
