use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use newton_atlas::commands::{self, parse_size, parse_threads, parse_viewport};
use newton_atlas::spec::{parse_coeffs, parse_factors};
use newton_atlas::{CliError, CliResult, FunctionSpec, RenderOptions};
use newton_atlas_core::dynamics::{DEFAULT_EPS, RENDER_MAX_ITER};

#[derive(Parser)]
#[command(name = "newton-atlas", version, about = "Newton maps of rational functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fixed points, multipliers, residue indices and critical points.
    Analyze(FunctionArgs),
    /// Conjugacy class of a quadratic or cubic Newton map.
    Classify(FunctionArgs),
    /// Decide whether raw coefficients form a Newton map.
    Characterize(FunctionArgs),
    /// Basin image as binary PPM plus a JSON sidecar.
    Render(RenderArgs),
}

#[derive(Args)]
struct FunctionArgs {
    /// Roots as `re,im:mult;...`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["num", "den"])]
    roots: Option<String>,
    /// Poles as `re,im:mult;...`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["num", "den"])]
    poles: Option<String>,
    /// Numerator coefficients `re[,im];...`, constant term first.
    #[arg(long, allow_hyphen_values = true)]
    num: Option<String>,
    /// Denominator coefficients, constant term first; defaults to 1.
    #[arg(long, allow_hyphen_values = true, requires = "num")]
    den: Option<String>,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    function: FunctionArgs,
    /// `cx,cy,w,h`.
    #[arg(long, default_value = "0,0,4,4", allow_hyphen_values = true)]
    viewport: String,
    /// `WxH` in pixels.
    #[arg(long, default_value = "256x256")]
    size: String,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = RENDER_MAX_ITER)]
    max_iter: usize,
    #[arg(long, default_value_t = DEFAULT_EPS)]
    eps: f64,
}

impl FunctionArgs {
    fn spec(&self) -> CliResult<FunctionSpec> {
        if let Some(num) = &self.num {
            let den = self.den.as_deref().unwrap_or("1");
            return Ok(FunctionSpec::Raw { num: parse_coeffs("--num", num)?, den: parse_coeffs("--den", den)? });
        }
        if self.roots.is_none() && self.poles.is_none() {
            return Err(CliError::Validation("give --roots/--poles or --num/--den".into()));
        }
        Ok(FunctionSpec::Factored {
            roots: parse_factors("--roots", self.roots.as_deref().unwrap_or(""))?,
            poles: parse_factors("--poles", self.poles.as_deref().unwrap_or(""))?,
        })
    }
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Analyze(f) => commands::analyze(&f.spec()?),
        Command::Classify(f) => commands::classify(&f.spec()?),
        Command::Characterize(f) => commands::characterize(&f.spec()?),
        Command::Render(r) => {
            let spec = r.function.spec()?;
            if !(r.eps > 0.0 && r.eps.is_finite()) {
                return Err(CliError::Validation(format!("--eps {} must be positive", r.eps)));
            }
            let opts = RenderOptions {
                viewport: parse_viewport(&r.viewport, parse_size(&r.size)?)?,
                max_iter: r.max_iter,
                eps: r.eps,
                out: r.out,
                threads: parse_threads(std::env::var("NEWTON_ATLAS_THREADS").ok().as_deref())?,
            };
            commands::render(&spec, &opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(json) => {
            println!("{json}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
