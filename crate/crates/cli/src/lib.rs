//! Command-line front end: figure datasets, ad-hoc sweeps, critical values
//! and a randomized closed-form versus numeric check.

pub mod config;
pub mod presets;

use std::fmt;
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use spinchain_core::analysis::{
    critical_temperatures, detect_revival, verify_sweep, Interval, SweepResult, VerifyReport,
};
use spinchain_core::entanglement::oracle_thermal_concurrence;
use spinchain_core::{
    analytic_spectrum, build_hamiltonian, hermitian_eigensolve, sweep, thermal_concurrence, Axis,
    ModelParams, SweepParam, SweepSpec, Temperature,
};

use config::SweepConfig;
use presets::{CriticalQuery, Density, Figure};

/// Failure with the process exit status it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub const USAGE: u8 = 2;
    pub const OUTPUT: u8 = 3;
    pub const VERIFY: u8 = 4;

    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: Self::USAGE, message: message.into() }
    }

    pub fn output(message: impl Into<String>) -> Self {
        Self { code: Self::OUTPUT, message: message.into() }
    }

    pub fn verify(message: impl Into<String>) -> Self {
        Self { code: Self::VERIFY, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<spinchain_core::Error> for CliError {
    fn from(e: spinchain_core::Error) -> Self {
        let code = match e {
            spinchain_core::Error::NoConvergence { .. } => 1,
            _ => Self::USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

#[derive(Debug, Parser)]
#[command(name = "spinchain", version, about = "Thermal and ground-state entanglement of a two-qubit XYZ model with DM interaction")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the dataset(s) of a figure preset as CSV.
    Figure(FigureArgs),
    /// Run a sweep described by flags and/or a TOML config file.
    Sweep(SweepArgs),
    /// Print critical fields, DM strengths and temperatures.
    Critical(CriticalArgs),
    /// Compare closed forms with the numeric route on random parameters.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Figure id, e.g. fig1a, fig5, fig7A.
    pub id: String,
    /// Directory for the CSV files.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
    /// Points along one-dimensional sweeps.
    #[arg(long)]
    pub points: Option<usize>,
    /// Points per axis of two-dimensional sweeps.
    #[arg(long)]
    pub surface_points: Option<usize>,
    #[command(flatten)]
    pub check: CheckArgs,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Re-evaluate a strided subset of points through the numeric route.
    #[arg(long)]
    pub verify: bool,
    /// Check every n-th point when verifying.
    #[arg(long, default_value_t = 10)]
    pub stride: usize,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// TOML file with sweep keys; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[command(flatten)]
    pub keys: SweepConfig,
    #[command(flatten)]
    pub check: CheckArgs,
}

#[derive(Debug, Args)]
pub struct CriticalArgs {
    /// Report the critical values of a figure preset.
    #[arg(long, conflicts_with_all = ["axis", "jx", "jy", "jz", "d", "b_uniform", "b_nonuniform"])]
    pub figure: Option<String>,
    /// Field axis (default x).
    #[arg(long)]
    pub axis: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub jx: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub jy: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub jz: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b_uniform: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b_nonuniform: Option<f64>,
    /// Upper end of the critical-temperature scan.
    #[arg(long, default_value_t = 10.0)]
    pub t_max: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 10_000)]
    pub draws: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

/// Runs one command; the summary goes to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Figure(a) => run_figure(a, out),
        Command::Sweep(a) => run_sweep(a, out),
        Command::Critical(a) => run_critical(a, out),
        Command::Verify(a) => run_verify(a, out),
    }
}

fn say(out: &mut dyn Write, line: impl fmt::Display) -> Result<(), CliError> {
    writeln!(out, "{line}").map_err(|e| CliError::output(format!("cannot write summary: {e}")))
}

fn lookup_figure(id: &str, density: Density) -> Result<Figure, CliError> {
    presets::figure(id, density).ok_or_else(|| {
        CliError::usage(format!("unknown figure id '{id}' (known: {})", presets::FIGURE_IDS.join(", ")))
    })
}

fn write_csv(result: &SweepResult, path: &Path) -> Result<(), CliError> {
    let fail = |e: io::Error| CliError::output(format!("cannot write {}: {e}", path.display()));
    let mut w = BufWriter::new(File::create(path).map_err(fail)?);
    result.write_csv(&mut w).map_err(fail)?;
    w.flush().map_err(fail)
}

fn fmt_intervals(ivs: &[Interval]) -> String {
    if ivs.is_empty() {
        return "none".into();
    }
    ivs.iter()
        .map(|iv| format!("[{:.6}, {:.6}]", iv.lo, iv.hi))
        .collect::<Vec<_>>()
        .join(", ")
}

fn fmt_list(xs: &[f64]) -> String {
    if xs.is_empty() {
        return "none".into();
    }
    xs.iter().map(|x| format!("{x:.6}")).collect::<Vec<_>>().join(", ")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "none".to_string(), |v| format!("{v:.6}"))
}

/// Zero crossings or positive intervals of a one-dimensional sweep.
fn describe_line(spec: &SweepSpec) -> Result<Option<String>, CliError> {
    if spec.axis2.is_some() {
        return Ok(None);
    }
    let values = &spec.axis1.values;
    if spec.axis1.param == SweepParam::T {
        let t_max = values.iter().copied().fold(0.0, f64::max);
        if t_max <= 0.0 {
            return Ok(None);
        }
        let ts = critical_temperatures(&spec.base, t_max)?;
        return Ok(Some(format!("T_c = {}", fmt_list(&ts))));
    }
    if values.len() < 2 {
        return Ok(None);
    }
    let report = detect_revival(spec, 1e-9)?;
    let mut s = format!("C > 0 for {} in {}", spec.axis1.param, fmt_intervals(&report.intervals));
    if let Some(x) = report.onset() {
        s.push_str(&format!("; revival from {x:.6}"));
    }
    Ok(Some(s))
}

fn report_verify(out: &mut dyn Write, name: &str, v: &VerifyReport) -> Result<bool, CliError> {
    say(
        out,
        format!(
            "{name}: verified {} points ({} skipped), max |Δ| = {:.3e}{}",
            v.checked,
            v.skipped,
            v.max_deviation,
            if v.passed() { "" } else { " FAILED" }
        ),
    )?;
    Ok(v.passed())
}

fn critical_lines(fig: &Figure) -> Result<Vec<String>, CliError> {
    let mut lines = Vec::new();
    for q in &fig.criticals {
        let values: Vec<(String, Option<f64>)> = fig
            .curves
            .iter()
            .map(|c| Ok((c.label.clone(), q.evaluate(&c.spec.base)?)))
            .collect::<Result<_, CliError>>()?;
        let same = values.windows(2).all(|w| w[0].1 == w[1].1);
        if same {
            lines.push(format!("{} = {}", q.name(), fmt_opt(values[0].1)));
        } else {
            for (label, v) in values {
                lines.push(format!("{} ({label}) = {}", q.name(), fmt_opt(v)));
            }
        }
    }
    Ok(lines)
}

fn run_figure(a: &FigureArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let mut density = Density::default();
    if let Some(n) = a.points {
        density.line = n;
    }
    if let Some(n) = a.surface_points {
        density.surface = n;
    }
    if density.line < 2 || density.surface < 2 {
        return Err(CliError::usage("grids need at least 2 points per axis"));
    }
    if a.check.verify && a.check.stride == 0 {
        return Err(CliError::usage("--stride must be at least 1"));
    }
    let fig = lookup_figure(&a.id, density)?;
    fs::create_dir_all(&a.out_dir)
        .map_err(|e| CliError::output(format!("cannot create {}: {e}", a.out_dir.display())))?;
    say(out, format!("{}: {}", fig.id, fig.title))?;
    let mut all_passed = true;
    for c in &fig.curves {
        let name = if c.label.is_empty() { fig.id.clone() } else { format!("{}_{}", fig.id, c.label) };
        let result = sweep(&c.spec)?;
        let path = a.out_dir.join(format!("{name}.csv"));
        write_csv(&result, &path)?;
        say(
            out,
            format!("{name}: {} points -> {}, max C = {:.6}", result.rows.len(), path.display(), result.max_concurrence()),
        )?;
        if let Some(line) = describe_line(&c.spec)? {
            say(out, format!("{name}: {line}"))?;
        }
        if a.check.verify {
            all_passed &= report_verify(out, &name, &verify_sweep(&result, a.check.stride)?)?;
        }
    }
    for line in critical_lines(&fig)? {
        say(out, line)?;
    }
    if !all_passed {
        return Err(CliError::verify("closed form and numeric route disagree beyond 1e-8"));
    }
    Ok(())
}

fn run_sweep(a: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let file = match &a.config {
        Some(path) => SweepConfig::from_file(path)?,
        None => SweepConfig::default(),
    };
    let cfg = a.keys.clone().over(file);
    let spec = cfg.to_spec()?;
    if a.check.verify && a.check.stride == 0 {
        return Err(CliError::usage("--stride must be at least 1"));
    }
    let result = sweep(&spec)?;
    let to_file = cfg.output.as_deref().filter(|o| *o != "-");
    match to_file {
        Some(path) => {
            write_csv(&result, Path::new(path))?;
            say(out, format!("{} points -> {path}, max C = {:.6}", result.rows.len(), result.max_concurrence()))?;
            if let Some(line) = describe_line(&spec)? {
                say(out, line)?;
            }
        }
        None => {
            result
                .write_csv(&mut *out)
                .map_err(|e| CliError::output(format!("cannot write CSV: {e}")))?;
        }
    }
    if a.check.verify {
        let v = verify_sweep(&result, a.check.stride)?;
        // keep standard output pure CSV when it carries the data
        let passed = if to_file.is_some() {
            report_verify(out, "sweep", &v)?
        } else {
            report_verify(&mut io::stderr(), "sweep", &v)?
        };
        if !passed {
            return Err(CliError::verify("closed form and numeric route disagree beyond 1e-8"));
        }
    }
    Ok(())
}

fn run_critical(a: &CriticalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if !(a.t_max.is_finite() && a.t_max > 0.0) {
        return Err(CliError::usage("--t-max must be positive"));
    }
    if let Some(id) = &a.figure {
        let fig = lookup_figure(id, Density::default())?;
        let mut printed = false;
        for line in critical_lines(&fig)? {
            say(out, line)?;
            printed = true;
        }
        for c in &fig.curves {
            if c.spec.axis2.is_none() && c.spec.axis1.param == SweepParam::T {
                let t_max = c.spec.axis1.values.iter().copied().fold(0.0, f64::max);
                let ts = critical_temperatures(&c.spec.base, t_max)?;
                let name = if c.label.is_empty() { fig.id.clone() } else { format!("{}_{}", fig.id, c.label) };
                say(out, format!("{name}: T_c = {}", fmt_list(&ts)))?;
                printed = true;
            }
        }
        if !printed {
            say(out, format!("{id}: no critical values for this figure"))?;
        }
        return Ok(());
    }
    let p: ModelParams = config::model_params_with(
        a.axis.as_deref(),
        Axis::X,
        [a.jx, a.jy, a.jz, a.d, a.b_uniform, a.b_nonuniform],
    )?;
    if p.axis() == Axis::X {
        for q in [CriticalQuery::DmStrength, CriticalQuery::UniformField, CriticalQuery::NonuniformField] {
            say(out, format!("{} = {}", q.name(), fmt_opt(q.evaluate(&p)?)))?;
        }
    }
    let ts = critical_temperatures(&p, a.t_max)?;
    say(out, format!("T_c = {}", fmt_list(&ts)))
}

fn run_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if a.draws == 0 {
        return Err(CliError::usage("--draws must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let draws: Vec<(ModelParams, f64)> = (0..a.draws)
        .map(|_| {
            let v: [f64; 6] = std::array::from_fn(|_| rng.random_range(-3.0..3.0));
            let axis = if rng.random_bool(0.5) { Axis::X } else { Axis::Z };
            let t = rng.random_range(0.05f64.ln()..10f64.ln()).exp();
            (ModelParams::z(v[0], v[1], v[2], v[3], v[4], v[5]).with_axis(axis), t)
        })
        .collect();
    let (dc, de) = draws
        .par_iter()
        .map(|(p, t)| -> Result<(f64, f64), CliError> {
            let t = Temperature::new(*t)?;
            let dc = (thermal_concurrence(p, t)?.value() - oracle_thermal_concurrence(p, t)?.value()).abs();
            let a = analytic_spectrum(p)?.eigenvalues;
            let b = hermitian_eigensolve(&build_hamiltonian(p)?)?.eigenvalues;
            let de = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            Ok((dc, de))
        })
        .try_reduce(|| (0.0, 0.0), |x, y| Ok((x.0.max(y.0), x.1.max(y.1))))?;
    let passed = dc <= VerifyReport::TOLERANCE && de <= 1e-10;
    say(
        out,
        format!(
            "verify: {} draws (seed {}), max |ΔC| = {dc:.3e} (≤ 1e-8), max |ΔE| = {de:.3e} (≤ 1e-10): {}",
            a.draws,
            a.seed,
            if passed { "ok" } else { "FAILED" }
        ),
    )?;
    if passed {
        Ok(())
    } else {
        Err(CliError::verify("closed form and numeric route disagree"))
    }
}

/// Applies `SPINCHAIN_THREADS` (unset or 0: one worker per core).
pub fn configure_threads(value: Option<&str>) -> Result<(), CliError> {
    let Some(v) = value else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("SPINCHAIN_THREADS must be a non-negative integer, got '{v}'")))?;
    if n > 0 {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}
