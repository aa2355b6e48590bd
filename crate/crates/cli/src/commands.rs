use std::path::{Path, PathBuf};

use rayon::prelude::*;

use newton_atlas_core::conjugacy::{classify_quadratic, cubic_polynomial_condition, recognize_newton_map_detailed};
use newton_atlas_core::dynamics::{attractor_color, julia_topology_predict, render_row, rgb_bytes, DARK_GRAY};
use newton_atlas_core::newton_map::{
    build_newton_map, critical_points, fixed_points, newton_degree, simple_fixed_points, verify_rfpt,
};
use newton_atlas_core::{BasinImage, Cx, Error, ExtendedPoint, FactoredRational, FixedPointRecord, RationalMap, Viewport};

use crate::ppm::ppm_bytes;
use crate::report::*;
use crate::spec::{format_factors, FunctionSpec, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Validation(_) => 2,
            CliError::Io { .. } => 5,
            CliError::Core(e) => match e {
                Error::DegenerateMap { .. } | Error::DegreeMismatch { .. } | Error::NonConvergence { .. } => 3,
                Error::UnsupportedDegree { .. } | Error::NotQuadratic { .. } | Error::NotCubic { .. } => 4,
                _ => 2,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types always serialize")
}

/// Newton map, fixed points and, when known, the generating function.
struct Analyzed {
    generator: Option<FactoredRational>,
    map: RationalMap,
    fixed: Vec<FixedPointRecord>,
}

fn analyze_spec(spec: &FunctionSpec) -> CliResult<Analyzed> {
    match spec {
        FunctionSpec::Factored { .. } => {
            let r = spec.to_factored().expect("factored spec")?;
            let map = build_newton_map(&r)?;
            let fixed = fixed_points(&r)?;
            Ok(Analyzed { generator: Some(r), map, fixed })
        }
        FunctionSpec::Raw { .. } => {
            let map = spec.to_raw_map().expect("raw spec")?.reduced()?;
            let degree = map.degree();
            if degree < 2 {
                return Err(Error::DegreeTooLow { degree, required: 2 }.into());
            }
            let fixed = simple_fixed_points(&map)?;
            Ok(Analyzed { generator: None, map, fixed })
        }
    }
}

pub fn analyze(spec: &FunctionSpec) -> CliResult<String> {
    let a = analyze_spec(spec)?;
    let (sum, pass) = verify_rfpt(&a.fixed);
    let crit = critical_points(&a.map)?;
    let (mut quad, mut cubic, mut julia) = (None, None, None);
    if let Some(r) = &a.generator {
        match newton_degree(r) {
            2 => quad = Some((&classify_quadratic(r)?).into()),
            3 => cubic = Some((&cubic_polynomial_condition(r)?).into()),
            _ => {}
        }
        if matches!(newton_degree(r), 2 | 3) {
            julia = Some(julia_topology_predict(r)?.into());
        }
    }
    Ok(to_json(&AnalysisReport {
        command: "analyze",
        input: spec.into(),
        degree: a.map.degree(),
        newton_map: (&a.map).into(),
        fixed_points: a.fixed.iter().map(Into::into).collect(),
        rfpt_sum: sum.into(),
        rfpt_pass: pass,
        critical_points: critical_list(&crit),
        quad_class: quad,
        cubic_report: cubic,
        julia_class: julia,
    }))
}

/// The function to classify; raw maps must first be recognized.
fn generator_of(spec: &FunctionSpec) -> CliResult<FactoredRational> {
    match spec {
        FunctionSpec::Factored { .. } => Ok(spec.to_factored().expect("factored spec")?),
        FunctionSpec::Raw { .. } => {
            let n = spec.to_raw_map().expect("raw spec")?;
            let rec = recognize_newton_map_detailed(&n)?;
            rec.generator.ok_or_else(|| {
                CliError::Validation(format!(
                    "raw map is not a Newton map: {}",
                    rec.reason.unwrap_or_else(|| "unknown reason".into())
                ))
            })
        }
    }
}

pub fn classify(spec: &FunctionSpec) -> CliResult<String> {
    let r = generator_of(spec)?;
    let degree = newton_degree(&r);
    let detail = match degree {
        2 => ClassDetail::Quadratic((&classify_quadratic(&r)?).into()),
        3 => ClassDetail::Cubic((&cubic_polynomial_condition(&r)?).into()),
        _ => return Err(Error::UnsupportedDegree { degree }.into()),
    };
    let j = julia_topology_predict(&r)?;
    Ok(to_json(&ClassifyReport {
        command: "classify",
        input: spec.into(),
        degree,
        detail,
        julia: j.topology.as_str(),
        provenance: j.provenance,
    }))
}

pub fn characterize(spec: &FunctionSpec) -> CliResult<String> {
    let n = spec
        .to_raw_map()
        .ok_or_else(|| CliError::Validation("characterize takes --num/--den coefficients".into()))??;
    let report = match recognize_newton_map_detailed(&n) {
        Ok(rec) => CharacterizeReport {
            command: "characterize",
            input: spec.into(),
            is_newton_map: rec.generator.is_some(),
            generator: rec
                .generator
                .as_ref()
                .map(|g| FactoredText { roots: format_factors(g.roots()), poles: format_factors(g.poles()) }),
            reason: rec.reason,
            residual: rec.residual,
        },
        Err(e @ Error::NonSimpleFixedPoint) => CharacterizeReport {
            command: "characterize",
            input: spec.into(),
            is_newton_map: false,
            generator: None,
            reason: Some(e.to_string()),
            residual: None,
        },
        Err(e) => return Err(e.into()),
    };
    Ok(to_json(&report))
}

#[derive(Clone, Debug)]
pub struct RenderOptions {
    pub viewport: Viewport,
    pub max_iter: usize,
    pub eps: f64,
    pub out: PathBuf,
    /// Worker count; `None` leaves the choice to rayon.
    pub threads: Option<usize>,
}

/// Rows are computed independently and collected in order, so the image
/// does not depend on the worker count.
pub fn render_image(
    n: &RationalMap,
    attractors: &[ExtendedPoint],
    opts: &RenderOptions,
) -> CliResult<BasinImage> {
    if attractors.is_empty() {
        return Err(CliError::Validation("map has no attracting fixed point to render".into()));
    }
    let vp = opts.viewport;
    let rows = || -> Vec<_> {
        (0..vp.px_h).into_par_iter().map(|j| render_row(n, attractors, &vp, j, opts.max_iter, opts.eps)).collect()
    };
    let rows = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Validation(format!("cannot start {t} render threads: {e}")))?
            .install(rows),
        None => rows(),
    };
    Ok(BasinImage::from_rows(vp, rows)?)
}

pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn write(path: &Path, bytes: &[u8]) -> CliResult<()> {
    std::fs::write(path, bytes).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn render(spec: &FunctionSpec, opts: &RenderOptions) -> CliResult<String> {
    let a = analyze_spec(spec)?;
    let attractors: Vec<ExtendedPoint> =
        a.fixed.iter().filter(|p| p.class.is_attracting()).map(|p| p.location).collect();
    let img = render_image(&a.map, &attractors, opts)?;
    let vp = opts.viewport;
    let report = RenderReport {
        command: "render",
        input: spec.into(),
        image: opts.out.display().to_string(),
        width: vp.px_w,
        height: vp.px_h,
        viewport: ViewportReport { cx: vp.center.re, cy: vp.center.im, w: vp.width, h: vp.height },
        max_iter: opts.max_iter,
        eps: opts.eps,
        attractors: attractors
            .iter()
            .enumerate()
            .map(|(k, &p)| AttractorEntry { location: p.into(), color: attractor_color(&attractors, k) })
            .collect(),
        unresolved_color: DARK_GRAY,
        captured_fraction: img.captured_fraction(),
    };
    let json = to_json(&report);
    write(&opts.out, &ppm_bytes(vp.px_w, vp.px_h, &rgb_bytes(&img, &attractors)))?;
    write(&sidecar_path(&opts.out), format!("{json}\n").as_bytes())?;
    Ok(json)
}

/// `cx,cy,w,h`.
pub fn parse_viewport(s: &str, size: (usize, usize)) -> CliResult<Viewport> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Validation(format!("--viewport `{s}`: expected cx,cy,w,h")))?;
    let [cx, cy, w, h] = parts[..] else {
        return Err(CliError::Validation(format!("--viewport `{s}`: expected four numbers")));
    };
    Viewport::new(Cx::new(cx, cy), w, h, size.0, size.1).map_err(|e| CliError::Validation(format!("--viewport: {e}")))
}

/// `WxH`.
pub fn parse_size(s: &str) -> CliResult<(usize, usize)> {
    let bad = || CliError::Validation(format!("--size `{s}`: expected WxH with positive integers"));
    let (w, h) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    let w: usize = w.trim().parse().map_err(|_| bad())?;
    let h: usize = h.trim().parse().map_err(|_| bad())?;
    if w == 0 || h == 0 {
        return Err(bad());
    }
    Ok((w, h))
}

/// Value of `NEWTON_ATLAS_THREADS`, which must be an integer >= 1.
pub fn parse_threads(v: Option<&str>) -> CliResult<Option<usize>> {
    match v {
        None => Ok(None),
        Some(s) => match s.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(Some(t)),
            _ => Err(CliError::Validation(format!("NEWTON_ATLAS_THREADS=`{s}` is not an integer >= 1"))),
        },
    }
}
