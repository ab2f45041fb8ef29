//! Command-line interface behind the `minsurf` binary.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::{self, HMode, Params, BUILTIN};
use crate::curve::{self, CurveFunctional, CurvePoly};
use crate::engine::{self, RunSettings, SurfaceSpec, DEFAULT_QUAD_ORDER, MIN_QUAD_ORDER};
use crate::polyopt::Bracket;
use crate::report::{self, Document, MeshFormat, Payload, TableFormat};

/// Steps of the curve run shown in the original table.
pub const CURVE_DEFAULT_MAX_STEPS: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "minsurf", version, about = "Iterative curvature-driven area reduction")]
pub struct Cli {
    /// Worker threads for per-node evaluation (default: all cores).
    #[arg(long, global = true, env = "MINSURF_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Iterate a catalog or custom surface and write a JSON report.
    Run(RunArgs),
    /// Run the planar curve analogue.
    Curve(CurveArgs),
    /// Print the summary table of a report.
    Table(TableArgs),
    /// Sample a surface of a run as OBJ or a plain grid.
    ExportMesh(MeshArgs),
    /// List built-in surfaces.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HModeArg {
    TrueH,
    UnitHFirstStep,
    UnitHEveryStep,
}

impl From<HModeArg> for HMode {
    fn from(m: HModeArg) -> Self {
        match m {
            HModeArg::TrueH => HMode::TrueH,
            HModeArg::UnitHFirstStep => HMode::UnitHFirstStep,
            HModeArg::UnitHEveryStep => HMode::UnitHEveryStep,
        }
    }
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// hemiellipsoid, hump, bilinear or custom.
    #[arg(long, required_unless_present = "resume")]
    pub surface: Option<String>,
    /// Surface parameter, e.g. `b=2`.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, f64)>,
    /// JSON description of a custom surface.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub steps: u64,
    /// Gauss points per axis [default: 32, or the resumed run's].
    #[arg(long)]
    pub quad: Option<usize>,
    /// Search interval for t as `lo,hi`.
    #[arg(long, value_parser = parse_bracket, allow_hyphen_values = true)]
    pub bracket: Option<Bracket>,
    #[arg(long, value_enum)]
    pub h0_mode: Option<HModeArg>,
    /// Override the reference minimal area.
    #[arg(long)]
    pub reference_area: Option<f64>,
    /// Continue the run stored in this report.
    #[arg(long, conflicts_with_all = ["surface", "params", "config"])]
    pub resume: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long, default_value_t = CURVE_DEFAULT_MAX_STEPS)]
    pub steps: usize,
    /// Allow more steps than the default maximum.
    #[arg(long)]
    pub force: bool,
    #[arg(long, value_enum, default_value_t = FunctionalArg::Slope)]
    pub functional: FunctionalArg,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionalArg {
    /// Minimize the integral of the squared slope.
    Slope,
    /// Minimize the integral of the squared second derivative.
    Curvature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormatArg {
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = TableFormatArg::Csv)]
    pub format: TableFormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeshFormatArg {
    Obj,
    Grid,
}

#[derive(Debug, Args)]
pub struct MeshArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub step: usize,
    #[arg(long, default_value_t = 33)]
    pub res: usize,
    #[arg(long, value_enum, default_value_t = MeshFormatArg::Obj)]
    pub format: MeshFormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_param(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    let v: f64 = v.trim().parse().map_err(|e| format!("bad value in `{s}`: {e}"))?;
    Ok((k.trim().to_string(), v))
}

fn parse_bracket(s: &str) -> Result<Bracket, String> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| format!("expected lo,hi, got `{s}`"))?;
    let lo: f64 = lo.trim().parse().map_err(|e| format!("bad bound: {e}"))?;
    let hi: f64 = hi.trim().parse().map_err(|e| format!("bad bound: {e}"))?;
    Bracket::new(lo, hi).map_err(|e| e.to_string())
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => report::write_atomic(p, text.as_bytes())?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Builds the starting spec for a fresh run.
pub fn build_spec(args: &RunArgs) -> CliResult<SurfaceSpec> {
    let name = args.surface.as_deref().unwrap_or_default();
    let mut entry = if name == "custom" {
        let path = args
            .config
            .as_ref()
            .ok_or("--surface custom needs --config FILE")?;
        if !args.params.is_empty() {
            return Err("custom surfaces take no --param".into());
        }
        let text = std::fs::read_to_string(path)?;
        catalog::load_custom(&text)?
    } else {
        if args.config.is_some() {
            return Err("--config only applies to --surface custom".into());
        }
        let params: Params = args.params.iter().cloned().collect();
        catalog::get_entry(name, &params)?
    };
    if let Some(m) = args.h0_mode {
        entry.h_mode = m.into();
    }
    if let Some(a) = args.reference_area {
        if !(a.is_finite() && a > 0.0) {
            return Err(format!("reference area must be positive, got {a}").into());
        }
        entry.reference_area = Some(a);
    }
    Ok(SurfaceSpec::new(entry))
}

pub fn cmd_run(args: &RunArgs) -> CliResult<ExitCode> {
    if args.quad.is_some_and(|q| q < MIN_QUAD_ORDER) {
        return Err(format!("--quad must be at least {MIN_QUAD_ORDER}").into());
    }
    let steps = args.steps as usize;
    let report = match &args.resume {
        Some(path) => {
            let doc = Document::read(path)?;
            let mut r = doc.surface()?.clone();
            if args.h0_mode.is_some() || args.reference_area.is_some() {
                return Err("--h0-mode and --reference-area cannot change a resumed run".into());
            }
            // records are only comparable within one quadrature order
            if args.quad.is_some_and(|q| q != r.config.settings.quad_order) {
                return Err("--quad differs from the resumed run".into());
            }
            if let Some(b) = args.bracket {
                r.config.settings.bracket = b;
            }
            engine::continue_run(&mut r, steps)?;
            r
        }
        None => {
            let spec = build_spec(args)?;
            let settings = RunSettings {
                quad_order: args.quad.unwrap_or(DEFAULT_QUAD_ORDER),
                bracket: args.bracket.unwrap_or_default(),
            };
            engine::iterate(spec, steps, settings)?
        }
    };
    let failed = report.error.clone();
    Document::new(Payload::Surface(report)).write(&args.out)?;
    match failed {
        Some(e) => {
            eprintln!("error: {e} (partial report written to {})", args.out.display());
            Ok(ExitCode::from(2))
        }
        None => Ok(ExitCode::SUCCESS),
    }
}

pub fn cmd_curve(args: &CurveArgs) -> CliResult<ExitCode> {
    if args.steps == 0 {
        return Err("--steps must be at least 1".into());
    }
    if args.steps > CURVE_DEFAULT_MAX_STEPS && !args.force {
        return Err(format!(
            "--steps above {CURVE_DEFAULT_MAX_STEPS} needs --force"
        )
        .into());
    }
    let functional = match args.functional {
        FunctionalArg::Slope => CurveFunctional::SlopeSquared,
        FunctionalArg::Curvature => CurveFunctional::CurvatureSquared,
    };
    let r = curve::curve_iterate(&CurvePoly::chi0(), args.steps, functional)?;
    Document::new(Payload::Curve(r)).write(&args.out)?;
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_table(args: &TableArgs) -> CliResult<ExitCode> {
    let doc = Document::read(&args.file)?;
    let format = match args.format {
        TableFormatArg::Csv => TableFormat::Csv,
        TableFormatArg::Text => TableFormat::Text,
    };
    emit(args.out.as_deref(), &report::render_table(&doc.payload, format))?;
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_export_mesh(args: &MeshArgs) -> CliResult<ExitCode> {
    let doc = Document::read(&args.file)?;
    let format = match args.format {
        MeshFormatArg::Obj => MeshFormat::Obj,
        MeshFormatArg::Grid => MeshFormat::Grid,
    };
    let text = report::export_mesh(doc.surface()?, args.step, args.res, format)?;
    emit(args.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_list() -> String {
    let mut s = String::new();
    for (name, desc) in BUILTIN {
        s.push_str(&format!("{name:<14} {desc}\n"));
    }
    s.push_str("custom         user patch from --config FILE (JSON)\n");
    s
}

/// Runs a parsed command line.
pub fn run(cli: Cli) -> CliResult<ExitCode> {
    if let Some(n) = cli.threads {
        // a second initialization in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match &cli.command {
        Command::Run(a) => cmd_run(a),
        Command::Curve(a) => cmd_curve(a),
        Command::Table(a) => cmd_table(a),
        Command::ExportMesh(a) => cmd_export_mesh(a),
        Command::List => {
            print!("{}", cmd_list());
            Ok(ExitCode::SUCCESS)
        }
    }
}

pub fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
