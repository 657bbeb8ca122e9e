//! Command-line front end: density tables, sampling, figure sweeps and the
//! validation suite.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage or parameter error,
//! 3 numerical failure.

pub mod figure;
pub mod validate;

use crate::base_models::{gamma_pdf, EtaMuParams, LambdaMuParams, MultipathParams, ShadowParams};
use crate::composite::{evaluate, linear_grid, CompositeSpec, Method, Mixing, PdfEvaluation};
use crate::error::Error;
use crate::oracle::{sample_composite, sample_gamma, sample_multipath_power};
use crate::specfun::SeriesOrder;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Right edge of the default `pdf` grid in units of `√Ω`.
pub const DEFAULT_SPAN: f64 = 5.0;
pub const DEFAULT_POINTS: usize = 501;

#[derive(Debug, Parser)]
#[command(name = "composite-fading", version, about = "eta-mu/gamma and lambda-mu/gamma fading densities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a density table `x,density`.
    Pdf {
        #[command(flatten)]
        model: ModelArgs,
        /// MIN:MAX:POINTS, default 0:5*sqrt(omega):501.
        #[arg(long)]
        grid: Option<Grid>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write Monte-Carlo draws, one per row.
    Sample {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the CSV files and gnuplot script of figure 1, 2, 3 or 4.
    Figure {
        id: u8,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = MixingArg::Rms)]
        mixing: MixingArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Quad)]
        method: MethodArg,
        #[arg(long, default_value_t = SeriesOrder::DEFAULT.get())]
        series_order: u32,
        /// MIN:MAX:POINTS, default 0:12*sqrt(omega):501.
        #[arg(long)]
        grid: Option<Grid>,
        /// Replaces the swept values, comma separated.
        #[arg(long, value_delimiter = ',')]
        values: Option<Vec<f64>>,
    },
    /// Run the self-check suite.
    Validate {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true, default_value_t = 0.0)]
        perturb_h: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    EtaMuGamma,
    LambdaMuGamma,
    EtaMu,
    LambdaMu,
    Gamma,
}

impl ModelKind {
    fn name(self) -> &'static str {
        match self {
            ModelKind::EtaMuGamma => "eta-mu-gamma",
            ModelKind::LambdaMuGamma => "lambda-mu-gamma",
            ModelKind::EtaMu => "eta-mu",
            ModelKind::LambdaMu => "lambda-mu",
            ModelKind::Gamma => "gamma",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MixingArg {
    Msq,
    Rms,
}

impl From<MixingArg> for Mixing {
    fn from(m: MixingArg) -> Self {
        match m {
            MixingArg::Msq => Mixing::MeanSquareGamma,
            MixingArg::Rms => Mixing::RmsGamma,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Quad,
    Closed,
    Series,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Quad => Method::Quadrature,
            MethodArg::Closed => Method::ClosedFormIntegerMu,
            MethodArg::Series => Method::SeriesRealMu,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

/// Model selection; `--omega` is the gamma scale for the composite and
/// gamma models and the mean power `E[R²]` (default 1) for the multipath
/// models.
#[derive(Debug, Clone, Args)]
struct ModelArgs {
    #[arg(long, value_enum)]
    model: ModelKind,
    #[arg(long, conflicts_with = "lambda")]
    eta: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    omega: Option<f64>,
    #[arg(long, value_enum)]
    mixing: Option<MixingArg>,
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    #[arg(long)]
    series_order: Option<u32>,
}

/// `MIN:MAX:POINTS`.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Grid {
    min: f64,
    max: f64,
    points: usize,
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, points] = parts.as_slice() else {
            return Err(format!("expected MIN:MAX:POINTS, got {s}"));
        };
        let num = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("{v}: {e}"));
        Ok(Grid {
            min: num(min)?,
            max: num(max)?,
            points: points.trim().parse().map_err(|e| format!("{points}: {e}"))?,
        })
    }
}

impl Grid {
    fn values(self) -> Result<Vec<f64>, Failure> {
        linear_grid(self.min, self.max, self.points).map_err(Failure::from)
    }
}

/// Why a command stopped.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Numerical(String),
    Validation,
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Numerical(_) => EXIT_NUMERICAL,
            Failure::Validation => EXIT_VALIDATION,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parameter_error() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Numerical(e.to_string())
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Usage(format!("cannot write {}: {e}", path.display()))
}

/// A resolved model.
enum Model {
    Composite(CompositeSpec),
    Multipath { params: MultipathParams, omega: f64 },
    Gamma(ShadowParams),
}

impl Model {
    fn omega(&self) -> f64 {
        match self {
            Model::Composite(s) => s.shadow().omega(),
            Model::Multipath { omega, .. } => *omega,
            Model::Gamma(s) => s.omega(),
        }
    }
}

fn require(value: Option<f64>, flag: &str, model: ModelKind) -> Result<f64, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for --model {}", model.name())))
}

fn forbid<T>(value: &Option<T>, flag: &str, model: ModelKind) -> Result<(), Failure> {
    match value {
        Some(_) => Err(Failure::Usage(format!("--{flag} does not apply to --model {}", model.name()))),
        None => Ok(()),
    }
}

impl ModelArgs {
    fn resolve(&self) -> Result<Model, Failure> {
        let kind = self.model;
        let composite = matches!(kind, ModelKind::EtaMuGamma | ModelKind::LambdaMuGamma);
        if !composite {
            forbid(&self.mixing, "mixing", kind)?;
            forbid(&self.method, "method", kind)?;
            forbid(&self.series_order, "series-order", kind)?;
        }
        let multipath = || -> Result<MultipathParams, Failure> {
            let mu = require(self.mu, "mu", kind)?;
            Ok(match kind {
                ModelKind::EtaMuGamma | ModelKind::EtaMu => {
                    forbid(&self.lambda, "lambda", kind)?;
                    EtaMuParams::new(require(self.eta, "eta", kind)?, mu)?.into()
                }
                _ => {
                    forbid(&self.eta, "eta", kind)?;
                    LambdaMuParams::new(require(self.lambda, "lambda", kind)?, mu)?.into()
                }
            })
        };
        Ok(match kind {
            ModelKind::EtaMuGamma | ModelKind::LambdaMuGamma => {
                let shadow = ShadowParams::new(require(self.b, "b", kind)?, require(self.omega, "omega", kind)?)?;
                let order = SeriesOrder::new(self.series_order.unwrap_or(SeriesOrder::DEFAULT.get()))?;
                let spec = CompositeSpec::builder(multipath()?, shadow)
                    .mixing(self.mixing.unwrap_or(MixingArg::Rms).into())
                    .method(self.method.unwrap_or(MethodArg::Quad).into())
                    .series_order(order)
                    .build()?;
                Model::Composite(spec)
            }
            ModelKind::EtaMu | ModelKind::LambdaMu => {
                forbid(&self.b, "b", kind)?;
                let omega = self.omega.unwrap_or(1.0);
                if !(omega > 0.0 && omega.is_finite()) {
                    return Err(Failure::Usage(format!("--omega = {omega} must be positive")));
                }
                Model::Multipath {
                    params: multipath()?,
                    omega,
                }
            }
            ModelKind::Gamma => {
                forbid(&self.eta, "eta", kind)?;
                forbid(&self.lambda, "lambda", kind)?;
                forbid(&self.mu, "mu", kind)?;
                Model::Gamma(ShadowParams::new(require(self.b, "b", kind)?, require(self.omega, "omega", kind)?)?)
            }
        })
    }
}

/// `key=value` pairs naming the model with the same keys as the flags.
fn model_line(model: &Model) -> String {
    match model {
        Model::Composite(spec) => spec_line(spec),
        Model::Multipath { params, omega } => format!("{} omega={omega}", multipath_keys(params, "")),
        Model::Gamma(s) => format!("model=gamma b={} omega={}", s.b(), s.omega()),
    }
}

fn multipath_keys(p: &MultipathParams, suffix: &str) -> String {
    match p {
        MultipathParams::EtaMu(e) => format!("model=eta-mu{suffix} eta={} mu={}", e.eta(), e.mu()),
        MultipathParams::LambdaMu(l) => format!("model=lambda-mu{suffix} lambda={} mu={}", l.lambda(), l.mu()),
    }
}

fn spec_line(spec: &CompositeSpec) -> String {
    let mixing = match spec.mixing() {
        Mixing::MeanSquareGamma => "msq",
        Mixing::RmsGamma => "rms",
    };
    format!(
        "{} b={} omega={} mixing={mixing} method={} series-order={}",
        multipath_keys(spec.multipath(), "-gamma"),
        spec.shadow().b(),
        spec.shadow().omega(),
        spec.method(),
        spec.series_order()
    )
}

fn push_row(out: &mut String, x: f64, v: f64) {
    let _ = writeln!(out, "{x:.16e},{v:.16e}");
}

/// CSV text of a composite evaluation.
fn composite_csv(spec: &CompositeSpec, e: &PdfEvaluation) -> String {
    let mut out = format!("# {}\nx,density\n", spec_line(spec));
    for (&x, &d) in e.x_grid.iter().zip(&e.density) {
        push_row(&mut out, x, d);
    }
    if e.method_used != Method::Quadrature {
        let _ = writeln!(out, "# S={:.16e}", e.atom_weight_s);
        let _ = writeln!(out, "# diagnostic={:.16e}", e.diagnostics.headline(e.method_used));
        if e.diagnostics.truncation_unreliable {
            let _ = writeln!(out, "# warning=series truncation ratio above 1e-8");
        }
    }
    if e.diagnostics.clamped_points > 0 {
        let _ = writeln!(out, "# clamped={}", e.diagnostics.clamped_points);
    }
    out
}

fn pdf_table(model: &Model, grid: &[f64]) -> Result<String, Failure> {
    match model {
        Model::Composite(spec) => Ok(composite_csv(spec, &evaluate(spec, grid)?)),
        Model::Multipath { params, omega } => {
            let r_hat = omega.sqrt();
            let d: Vec<f64> = grid.par_iter().map(|&x| params.envelope_pdf(x, r_hat)).collect::<Result<_, _>>()?;
            Ok(plain_csv(model, grid, &d))
        }
        Model::Gamma(s) => {
            let d: Vec<f64> = grid.par_iter().map(|&y| gamma_pdf(y, s)).collect::<Result<_, _>>()?;
            Ok(plain_csv(model, grid, &d))
        }
    }
}

fn plain_csv(model: &Model, grid: &[f64], density: &[f64]) -> String {
    let mut out = format!("# {}\nx,density\n", model_line(model));
    for (&x, &d) in grid.iter().zip(density) {
        push_row(&mut out, x, d);
    }
    out
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| io_failure(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_pdf(model: &ModelArgs, grid: Option<Grid>, out: Option<&Path>) -> Result<(), Failure> {
    let model = model.resolve()?;
    let grid = match grid {
        Some(g) => g.values()?,
        None => linear_grid(0.0, DEFAULT_SPAN * model.omega().sqrt(), DEFAULT_POINTS)?,
    };
    emit(out, &pdf_table(&model, &grid)?)
}

fn cmd_sample(model: &ModelArgs, count: usize, seed: u64, out: Option<&Path>) -> Result<(), Failure> {
    let model = model.resolve()?;
    let values = match &model {
        Model::Composite(spec) => sample_composite(spec, count, seed)?.values,
        Model::Multipath { params, omega } => sample_multipath_power(params, count, seed)?
            .values
            .into_iter()
            .map(|w| (omega * w).sqrt())
            .collect(),
        Model::Gamma(s) => sample_gamma(s, count, seed)?.values,
    };
    let mut text = format!("# {}\n# seed={seed} count={count}\nvalue\n", model_line(&model));
    for v in values {
        let _ = writeln!(text, "{v:.16e}");
    }
    emit(out, &text)
}

struct FigureArgs {
    id: u8,
    out: PathBuf,
    mixing: Mixing,
    method: Method,
    order: SeriesOrder,
    grid: Option<Grid>,
    values: Option<Vec<f64>>,
}

fn cmd_figure(a: FigureArgs) -> Result<(), Failure> {
    let mut variants = figure::variants(a.id)?;
    if let Some(v) = &a.values {
        if v.is_empty() {
            return Err(Failure::Usage("--values needs at least one value".into()));
        }
        for var in &mut variants {
            var.values = v.clone();
        }
    }
    std::fs::create_dir_all(&a.out).map_err(|e| io_failure(&a.out, e))?;
    for var in &variants {
        let grid = match a.grid {
            Some(g) => g.values()?,
            None => linear_grid(0.0, figure::GRID_SPAN * var.omega.sqrt(), figure::GRID_POINTS)?,
        };
        for &v in &var.values {
            let spec = var.spec(v, a.mixing, a.method, a.order)?;
            let path = a.out.join(format!("{}.csv", figure::curve_stem(a.id, var, v)));
            emit(Some(&path), &composite_csv(&spec, &evaluate(&spec, &grid)?))?;
            println!("{}", path.display());
        }
    }
    let script = a.out.join(format!("fig{}.gp", a.id));
    emit(Some(&script), &figure::gnuplot_script(a.id, &variants))?;
    println!("{}", script.display());
    Ok(())
}

fn cmd_validate(level: LevelArg, out: Option<&Path>, perturb_h: f64) -> Result<(), Failure> {
    let level = match level {
        LevelArg::Quick => validate::Level::Quick,
        LevelArg::Full => validate::Level::Full,
    };
    let report = validate::run(level, validate::Faults { perturb_h });
    let text = report.to_string();
    print!("{text}");
    if let Some(path) = out {
        std::fs::write(path, &text).map_err(|e| io_failure(path, e))?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Validation)
    }
}

/// Parses `args` (program name first) and runs the command; returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Pdf { model, grid, out } => cmd_pdf(&model, grid, out.as_deref()),
        Command::Sample {
            model,
            count,
            seed,
            out,
        } => cmd_sample(&model, count, seed, out.as_deref()),
        Command::Figure {
            id,
            out,
            mixing,
            method,
            series_order,
            grid,
            values,
        } => SeriesOrder::new(series_order).map_err(Failure::from).and_then(|order| {
            cmd_figure(FigureArgs {
                id,
                out,
                mixing: mixing.into(),
                method: method.into(),
                order,
                grid,
                values,
            })
        }),
        Command::Validate { level, out, perturb_h } => cmd_validate(level, out.as_deref(), perturb_h),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Numerical(m) => eprintln!("numerical failure: {m}"),
                Failure::Validation => eprintln!("validation failed"),
            }
            f.code()
        }
    }
}
