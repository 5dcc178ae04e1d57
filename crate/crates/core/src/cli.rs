//! Command-line front end.
//!
//! Precedence for run settings is flag, then environment, then config file,
//! then built-in default. Output goes to `--output` or stdout; counts and
//! notes go to stderr.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::{
    berezin_upper, dirichlet_2d_explicit_upper, higher_riesz_lower, hull_isoperimetric_lower_2d, laptev_lower,
    polya_counting_lower, product_twoterm_lower, rectangle_center, rectangle_envelopes, twoterm_lower,
    weak_twoterm_lower, BoundEvaluation, TwoTermVariant,
};
use crate::error::{Error, Result};
use crate::geometry::Domain;
use crate::inequalities::{holder_gaps, young_gap, HolderForm, YoungForm};
use crate::report::{records_table, write_json, Cell, Meta, Table, VerificationRecord};
use crate::riesz1d::{riesz1_beta_bounds, riesz1_bounds, riesz1_dirichlet_variants, riesz1_sqrt_upper, riesz1_direct, RieszPower};
use crate::spectra_exact::{enumerate_domain, BoundaryCondition, ExactSpectrum};
use crate::verify::{holder_sample, run_suite, young_sample, Suite, VerifyParams};

/// Environment variable overriding the worker thread count.
pub const THREADS_ENV: &str = "SPECTRAL_RIESZ_THREADS";
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "spectral-riesz", version, about = "Laplacian spectra and eigenvalue-mean bounds")]
pub struct Cli {
    /// key=value file with defaults for seed, threads, format and output.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads; overrides the environment and the config file.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Exact eigenvalues of an interval, box or product domain.
    Spectrum(SpectrumArgs),
    /// One-dimensional lattice Riesz means and their envelopes.
    Riesz1d(Riesz1dArgs),
    /// Evaluate one bound at one z, term by term.
    Bounds(BoundArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Evaluate a bound over a z grid next to its exact oracle.
    Sweep(SweepArgs),
    /// Random checks of one Young or Hölder form (always JSON).
    Ineq(IneqArgs),
}

#[derive(Debug, Clone, Args)]
#[command(group(clap::ArgGroup::new("extent").required(true).args(["cutoff", "count"])))]
pub struct SpectrumArgs {
    /// Domain as JSON, e.g. {"type":"box","lengths":[1,1]}.
    #[arg(long)]
    pub domain: String,
    #[arg(long, default_value = "neumann")]
    pub bc: BoundaryCondition,
    /// Every eigenvalue strictly below this value.
    #[arg(long)]
    pub cutoff: Option<f64>,
    /// The lowest `count` eigenvalues.
    #[arg(long)]
    pub count: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PowerArg {
    One,
    Beta,
    Half,
}

#[derive(Debug, Clone, Args)]
pub struct Riesz1dArgs {
    /// A single radius; otherwise the grid from --r-from to --r-to.
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long, default_value_t = 0.1)]
    pub r_from: f64,
    #[arg(long, default_value_t = 10.0)]
    pub r_to: f64,
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = PowerArg::One)]
    pub power: PowerArg,
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    /// Sum over k ≥ 1 instead of k ≥ 0.
    #[arg(long)]
    pub dirichlet: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundName {
    Berezin,
    Laptev,
    Twoterm,
    TwotermPositivePart,
    ProductTwoterm,
    WeakTwoterm,
    HigherRiesz,
    Hull,
    CorrectedPolya,
    RectangleLower,
    RectangleUpper,
    DirichletExplicit,
}

#[derive(Debug, Clone, Args)]
pub struct GeometryArgs {
    /// Domain JSON; a box gives exact oracles.
    #[arg(long, default_value = r#"{"type":"box","lengths":[1,1]}"#)]
    pub domain: String,
    /// Width used by width-dependent bounds; default is the smallest axis width.
    #[arg(long)]
    pub width: Option<f64>,
    #[arg(long, default_value_t = 2.0)]
    pub gamma: f64,
    /// Boundary condition for the rectangle envelopes.
    #[arg(long, default_value = "neumann")]
    pub bc: BoundaryCondition,
    /// Enclosing box sides for the explicit Dirichlet bound.
    #[arg(long, num_args = 2, value_names = ["L1", "L2"])]
    pub enclosing: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    #[arg(long, value_enum)]
    pub bound: BoundName,
    #[arg(long)]
    pub z: f64,
    #[command(flatten)]
    pub geometry: GeometryArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub suite: Suite,
    /// unit-square, unit-cube, rect-sqrt2 or box JSON; replaces the default boxes.
    #[arg(long)]
    pub domain: Option<String>,
    #[arg(long)]
    pub kmax: Option<usize>,
    #[arg(long)]
    pub l1: Option<f64>,
    #[arg(long)]
    pub l2: Option<f64>,
    /// Single z for the rectangle suite.
    #[arg(long)]
    pub z: Option<f64>,
    /// Reduced sample sizes.
    #[arg(long)]
    pub quick: bool,
    /// Skip the finite-difference part of the dirichlet-box suite.
    #[arg(long)]
    pub no_numeric: bool,
    /// Only write failing rows.
    #[arg(long)]
    pub failures_only: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub bound: String,
    #[arg(long)]
    pub z_from: f64,
    #[arg(long)]
    pub z_to: f64,
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    #[command(flatten)]
    pub geometry: GeometryArgs,
}

#[derive(Debug, Clone, Args)]
pub struct IneqArgs {
    /// refined1, reversed1, refined2, reversed2, 1a, 1b or 1c.
    #[arg(long)]
    pub form: String,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
}

/// Settings after merging flags, environment and config file.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub threads: usize,
    pub command_line: String,
}

/// Parses `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::arg(format!("config line {}: expected key=value", no + 1)))?;
        let key = k.trim().to_string();
        if !matches!(key.as_str(), "seed" | "threads" | "format" | "output") {
            return Err(Error::arg(format!("config line {}: unknown key '{key}'", no + 1)));
        }
        map.insert(key, v.trim().to_string());
    }
    Ok(map)
}

fn parse_value<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::arg(format!("invalid value '{v}' for {key}")))
}

impl RunConfig {
    pub fn resolve(cli: Cli, env_threads: Option<String>, command_line: String) -> Result<Self> {
        let file = match &cli.config {
            Some(path) => parse_config(&fs::read_to_string(path)?)?,
            None => BTreeMap::new(),
        };
        let seed = match (cli.seed, file.get("seed")) {
            (Some(s), _) => s,
            (None, Some(v)) => parse_value("seed", v)?,
            (None, None) => DEFAULT_SEED,
        };
        let threads = match (cli.threads, env_threads.filter(|s| !s.trim().is_empty()), file.get("threads")) {
            (Some(t), _, _) => t,
            (None, Some(v), _) => parse_value(THREADS_ENV, v.trim())?,
            (None, None, Some(v)) => parse_value("threads", v)?,
            (None, None, None) => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        if threads == 0 {
            return Err(Error::arg("thread count must be positive"));
        }
        let format = match (cli.format, file.get("format")) {
            (Some(f), _) => f,
            (None, Some(v)) => Format::from_str(v, true).map_err(|_| Error::arg(format!("invalid format '{v}'")))?,
            (None, None) => Format::Csv,
        };
        let output = cli.output.or_else(|| file.get("output").map(PathBuf::from));
        Ok(RunConfig { command: cli.command, format, output, seed, threads, command_line })
    }
}

/// Runs the CLI and returns the exit status. Reports go to `--output` or `out`.
pub fn run<I, T>(args: I, env_threads: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let command_line = args.iter().map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = RunConfig::resolve(cli, env_threads, command_line).and_then(|cfg| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .map_err(|e| Error::Resource(e.to_string()))?;
        // the pool needs Send closures, so output is buffered and copied after
        let (result, obuf, ebuf) = pool.install(|| {
            let (mut o, mut e) = (Vec::new(), Vec::new());
            let r = execute(&cfg, &mut o, &mut e);
            (r, o, e)
        });
        out.write_all(&obuf)?;
        err.write_all(&ebuf)?;
        result
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn main_from_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), std::env::var(THREADS_ENV).ok(), &mut stdout.lock(), &mut stderr.lock())
}

fn emit(cfg: &RunConfig, table: &Table, out: &mut dyn Write) -> Result<()> {
    match &cfg.output {
        Some(path) => {
            let file = fs::File::create(path)?;
            write_table(cfg, table, std::io::BufWriter::new(file))
        }
        None => write_table(cfg, table, out),
    }
}

fn write_table<W: Write>(cfg: &RunConfig, table: &Table, w: W) -> Result<()> {
    match cfg.format {
        Format::Csv => table.write_csv(w),
        Format::Json => write_json(w, &Meta::new(cfg.seed, cfg.command_line.clone()), table.json_rows()),
    }
}

fn execute(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match &cfg.command {
        Command::Spectrum(a) => cmd_spectrum(cfg, a, out),
        Command::Riesz1d(a) => cmd_riesz1d(cfg, a, out),
        Command::Bounds(a) => cmd_bounds(cfg, a, out, err),
        Command::Verify(a) => cmd_verify(cfg, a, out, err),
        Command::Sweep(a) => cmd_sweep(cfg, a, out, err),
        Command::Ineq(a) => cmd_ineq(cfg, a, out),
    }
}

/// Lowest `count` eigenvalues by doubling the cutoff until enough are found.
fn spectrum_by_count(domain: &Domain, bc: BoundaryCondition, count: usize) -> Result<ExactSpectrum> {
    let d = domain.dimension();
    let mut cutoff = 2.0 * crate::special::weyl_constant(d) * ((count + 1) as f64 / domain.volume()).powf(2.0 / d as f64) + 1.0;
    loop {
        let s = enumerate_domain(domain, bc, cutoff)?;
        if s.len() >= count {
            return Ok(s);
        }
        cutoff *= 2.0;
    }
}

fn cmd_spectrum(cfg: &RunConfig, a: &SpectrumArgs, out: &mut dyn Write) -> Result<i32> {
    let domain = Domain::from_json(&a.domain)?;
    let (spectrum, take) = match (a.cutoff, a.count) {
        (Some(c), _) => {
            let s = enumerate_domain(&domain, a.bc, c)?;
            let n = s.len();
            (s, n)
        }
        (None, Some(k)) => (spectrum_by_count(&domain, a.bc, k)?, k),
        (None, None) => unreachable!("clap requires --cutoff or --count"),
    };
    let mut table = Table::new(["index", "eigenvalue"]);
    for (i, &e) in spectrum.eigenvalues().iter().take(take).enumerate() {
        table.push(vec![Cell::from(i + 1), Cell::from(e)]);
    }
    emit(cfg, &table, out)?;
    Ok(0)
}

fn cmd_riesz1d(cfg: &RunConfig, a: &Riesz1dArgs, out: &mut dyn Write) -> Result<i32> {
    let grid: Vec<f64> = match a.r {
        Some(r) => vec![r],
        None => {
            if !(a.r_from < a.r_to) || a.steps < 2 {
                return Err(Error::arg("need r-from < r-to and steps >= 2"));
            }
            (0..a.steps).map(|i| a.r_from + (a.r_to - a.r_from) * i as f64 / (a.steps - 1) as f64).collect()
        }
    };
    let power = match a.power {
        PowerArg::One => RieszPower::One,
        PowerArg::Beta => RieszPower::Beta(a.beta),
        PowerArg::Half => RieszPower::Half,
    };
    let mut table = Table::new(["r", "power", "lower", "exact", "upper", "margin", "holds"]);
    let mut violations = 0;
    for r in grid {
        let b = if a.dirichlet {
            riesz1_dirichlet_variants(r, power)?
        } else {
            match power {
                RieszPower::One => riesz1_bounds(r)?,
                RieszPower::Beta(beta) => riesz1_beta_bounds(r, beta)?,
                RieszPower::Half => crate::riesz1d::Riesz1DBounds {
                    lower: None,
                    upper: riesz1_sqrt_upper(r)?,
                    exact: riesz1_direct(r, 0.5),
                    r,
                    power: 0.5,
                },
            }
        };
        violations += usize::from(!b.holds());
        table.push(vec![r.into(), b.power.into(), b.lower.into(), b.exact.into(), b.upper.into(), b.margin().into(), b.holds().into()]);
    }
    emit(cfg, &table, out)?;
    Ok(if violations > 0 { 1 } else { 0 })
}

/// Geometry resolved from [`GeometryArgs`].
struct Geometry {
    domain: Domain,
    d: usize,
    volume: f64,
    width: f64,
    hull_perimeter: Option<f64>,
    rectangle: Option<(f64, f64)>,
    enclosing: Option<(f64, f64)>,
    gamma: f64,
    bc: BoundaryCondition,
}

impl Geometry {
    fn new(g: &GeometryArgs) -> Result<Self> {
        let domain = Domain::from_json(&g.domain)?;
        let width = match g.width {
            Some(w) => w,
            None => domain.axis_widths().into_iter().fold(f64::INFINITY, f64::min),
        };
        let hull_perimeter = match &domain {
            Domain::Polygon(p) => Some(p.hull_perimeter()?),
            Domain::Box(l) if l.len() == 2 => Some(2.0 * (l[0] + l[1])),
            _ => None,
        };
        let rectangle = match domain.box_lengths() {
            Some(l) if l.len() == 2 => Some((l[0].min(l[1]), l[0].max(l[1]))),
            _ => None,
        };
        let enclosing = g.enclosing.as_ref().map(|v| (v[0], v[1]));
        Ok(Geometry {
            d: domain.dimension(),
            volume: domain.volume(),
            domain,
            width,
            hull_perimeter,
            rectangle,
            enclosing,
            gamma: g.gamma,
            bc: g.bc,
        })
    }

    fn rectangle(&self) -> Result<(f64, f64)> {
        self.rectangle.ok_or_else(|| Error::arg("rectangle bounds need a two-dimensional box domain"))
    }
}

fn evaluate(name: BoundName, z: f64, g: &Geometry) -> Result<BoundEvaluation> {
    match name {
        BoundName::Berezin => berezin_upper(z, g.d, g.volume),
        BoundName::Laptev => laptev_lower(z, g.d, g.volume),
        BoundName::Twoterm => twoterm_lower(z, g.d, g.volume, g.width, TwoTermVariant::Plain),
        BoundName::TwotermPositivePart => twoterm_lower(z, g.d, g.volume, g.width, TwoTermVariant::PositivePart),
        BoundName::ProductTwoterm => product_twoterm_lower(z, g.d, g.volume, g.width),
        BoundName::WeakTwoterm => weak_twoterm_lower(z, g.d, g.volume, g.width),
        BoundName::HigherRiesz => higher_riesz_lower(z, g.gamma, g.d, g.volume, g.width),
        BoundName::Hull => {
            let p = g.hull_perimeter.ok_or_else(|| Error::arg("the hull bound needs a planar domain"))?;
            hull_isoperimetric_lower_2d(z, g.volume, p)
        }
        BoundName::CorrectedPolya => polya_counting_lower(z, g.d, g.volume, g.width),
        BoundName::RectangleLower | BoundName::RectangleUpper => {
            let (l1, l2) = g.rectangle()?;
            let (lo, up) = rectangle_envelopes(l1, l2, z, g.bc)?;
            Ok(if name == BoundName::RectangleLower { lo } else { up })
        }
        BoundName::DirichletExplicit => {
            let (l1, l2) = g.enclosing.ok_or_else(|| Error::arg("the explicit bound needs --enclosing L1 L2"))?;
            if g.d != 2 {
                return Err(Error::arg("the explicit bound is planar"));
            }
            dirichlet_2d_explicit_upper(z, g.volume, l1, l2)
        }
    }
}

/// Boundary condition of the spectrum a bound is compared with.
fn oracle_bc(name: BoundName, g: &Geometry) -> BoundaryCondition {
    match name {
        BoundName::Berezin | BoundName::DirichletExplicit => BoundaryCondition::Dirichlet,
        BoundName::RectangleLower | BoundName::RectangleUpper => g.bc,
        _ => BoundaryCondition::Neumann,
    }
}

/// Exact value the bound is about, when the domain has an exact spectrum.
fn oracle(name: BoundName, z: f64, g: &Geometry, s: &ExactSpectrum) -> Result<f64> {
    Ok(match name {
        BoundName::CorrectedPolya => s.counting(z)? as f64,
        BoundName::HigherRiesz => s.riesz_mean(z, g.gamma)?,
        BoundName::RectangleLower | BoundName::RectangleUpper => {
            let (l1, l2) = g.rectangle()?;
            rectangle_center(s.riesz_mean(z, 1.0)?, l1, l2, z, g.bc)
        }
        _ => s.riesz_mean(z, 1.0)?,
    })
}

fn margin(bound: &BoundEvaluation, oracle: f64) -> f64 {
    match bound.side {
        crate::bounds::Side::Lower => oracle - bound.total,
        crate::bounds::Side::Upper => bound.total - oracle,
    }
}

fn oracle_spectrum(name: BoundName, g: &Geometry, z_max: f64) -> Option<ExactSpectrum> {
    if matches!(g.domain, Domain::Polygon(_)) {
        return None;
    }
    enumerate_domain(&g.domain, oracle_bc(name, g), z_max * (1.0 + 1e-12) + 1.0).ok()
}

fn cmd_bounds(cfg: &RunConfig, a: &BoundArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = Geometry::new(&a.geometry)?;
    let b = evaluate(a.bound, a.z, &g)?;
    if let Some(note) = &b.validity {
        writeln!(err, "note: {note}")?;
    }
    let mut table = Table::new(["bound", "side", "z", "term", "value"]);
    let row = |term: &str, value: f64| vec![Cell::from(b.name.as_str()), Cell::from(b.side.to_string()), a.z.into(), term.into(), value.into()];
    for (label, value) in &b.terms {
        table.push(row(label, *value));
    }
    table.push(row("total", b.total));
    let mut code = 0;
    if let Some(s) = oracle_spectrum(a.bound, &g, a.z) {
        let o = oracle(a.bound, a.z, &g, &s)?;
        let m = margin(&b, o);
        table.push(row("oracle", o));
        table.push(row("margin", m));
        if m < -crate::verify::SUITE_RTOL * o.abs().max(1.0) {
            code = 1;
        }
    }
    emit(cfg, &table, out)?;
    Ok(code)
}

/// Named presets accepted by `verify --domain`.
pub fn named_box(name: &str) -> Result<Vec<f64>> {
    match name {
        "unit-square" => Ok(vec![1.0, 1.0]),
        "unit-cube" => Ok(vec![1.0, 1.0, 1.0]),
        "rect-sqrt2" => Ok(vec![1.0, 2f64.sqrt()]),
        json => Domain::from_json(json)?
            .box_lengths()
            .ok_or_else(|| Error::arg("verification domains must be boxes")),
    }
}

fn cmd_verify(cfg: &RunConfig, a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let mut p = if a.quick { VerifyParams::quick() } else { VerifyParams::default() };
    p.seed = cfg.seed;
    if let Some(d) = &a.domain {
        let lengths = named_box(d)?;
        p.kroeger_boxes = vec![lengths.clone()];
        p.twoterm_boxes = vec![lengths];
    }
    if let Some(k) = a.kmax {
        p.kmax = k;
    }
    match (a.l1, a.l2) {
        (Some(l1), Some(l2)) => p.rectangle = Some((l1, l2)),
        (None, None) => {}
        _ => return Err(Error::arg("--l1 and --l2 go together")),
    }
    p.rectangle_z = a.z;
    if a.no_numeric {
        p.numeric = false;
    }
    let reports = run_suite(a.suite, &p)?;
    let mut records: Vec<VerificationRecord> = Vec::new();
    let mut failed = 0;
    for r in &reports {
        writeln!(err, "{}: pass {} fail {} skipped {}", r.suite, r.passed(), r.failed(), r.skipped)?;
        failed += r.failed();
        if a.failures_only {
            records.extend(r.failures().cloned());
        } else {
            records.extend(r.records.iter().cloned());
        }
    }
    emit(cfg, &records_table(&records), out)?;
    Ok(if failed > 0 { 1 } else { 0 })
}

fn cmd_sweep(cfg: &RunConfig, a: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let name = BoundName::from_str(&a.bound, true).map_err(|_| Error::arg(format!("unknown bound '{}'", a.bound)))?;
    if !(a.z_from < a.z_to) || !(a.z_from >= 0.0) || !a.z_to.is_finite() || a.steps < 2 {
        return Err(Error::arg("need 0 <= z-from < z-to and steps >= 2"));
    }
    let g = Geometry::new(&a.geometry)?;
    let spectrum = oracle_spectrum(name, &g, a.z_to);
    let zs: Vec<f64> = (0..a.steps).map(|i| a.z_from + (a.z_to - a.z_from) * i as f64 / (a.steps - 1) as f64).collect();
    let evals: Vec<BoundEvaluation> = zs.iter().map(|&z| evaluate(name, z, &g)).collect::<Result<_>>()?;
    let labels: Vec<String> = evals[0].terms.iter().map(|(l, _)| l.clone()).collect();
    let mut columns = vec!["z".to_string(), "bound_total".to_string()];
    columns.extend(labels);
    columns.extend(["oracle".to_string(), "margin".to_string()]);
    let mut table = Table::new(columns);
    let mut violations = 0;
    for (z, b) in zs.iter().zip(&evals) {
        let mut row = vec![Cell::from(*z), Cell::from(b.total)];
        row.extend(b.terms.iter().map(|(_, v)| Cell::from(*v)));
        match &spectrum {
            Some(s) => {
                let o = oracle(name, *z, &g, s)?;
                let m = margin(b, o);
                violations += usize::from(m < -crate::verify::SUITE_RTOL * o.abs().max(1.0));
                row.extend([Cell::from(o), Cell::from(m)]);
            }
            None => row.extend([Cell::Empty, Cell::Empty]),
        }
        table.push(row);
    }
    if let Some(note) = &evals[0].validity {
        writeln!(err, "note: {note}")?;
    }
    if violations > 0 {
        writeln!(err, "{violations} grid points violate the bound")?;
    }
    emit(cfg, &table, out)?;
    Ok(if violations > 0 { 1 } else { 0 })
}

fn cmd_ineq(cfg: &RunConfig, a: &IneqArgs, out: &mut dyn Write) -> Result<i32> {
    if a.samples == 0 {
        return Err(Error::arg("samples must be positive"));
    }
    let mut worst = f64::INFINITY;
    let mut violations: Vec<VerificationRecord> = Vec::new();
    if let Ok(form) = a.form.parse::<YoungForm>() {
        for i in 0..a.samples as u64 {
            let (x, y, pair) = young_sample(cfg.seed, i);
            let gap = young_gap(x, y, pair, form)?;
            let m = gap.margin(form);
            worst = worst.min(m);
            if !gap.holds {
                violations.push(VerificationRecord::new(
                    format!("young_{form}"),
                    format!("a={x:?} b={y:?} s={:?}", pair.s),
                    i as f64,
                    gap.bound,
                    gap.lhs,
                    m,
                    0.0,
                ));
            }
        }
    } else {
        let form: HolderForm = a.form.parse().map_err(|_| Error::arg(format!("unknown form '{}'", a.form)))?;
        for i in 0..a.samples as u64 {
            let (x, y, pair, _) = holder_sample(cfg.seed, i)?;
            let g = holder_gaps(&x, &y, pair, form)?;
            let m = (g.middle - g.lower).min(g.upper - g.middle);
            worst = worst.min(m);
            if !g.holds {
                violations.push(VerificationRecord::new(
                    format!("holder_{form}"),
                    format!("seed={} i={i} s={:?}", cfg.seed, pair.s),
                    i as f64,
                    g.lower,
                    g.middle,
                    m,
                    0.0,
                ));
            }
        }
    }
    let doc = json!({
        "meta": Meta::new(cfg.seed, cfg.command_line.clone()),
        "form": a.form,
        "samples": a.samples,
        "violations": violations,
        "worst_margin": worst,
    });
    let write = |w: &mut dyn Write| -> Result<()> {
        serde_json::to_writer_pretty(&mut *w, &doc)?;
        writeln!(w)?;
        Ok(())
    };
    match &cfg.output {
        Some(path) => write(&mut fs::File::create(path)?)?,
        None => write(out)?,
    }
    Ok(if violations.is_empty() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(args.iter().copied(), Some("2".into()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn spectrum_unit_square() {
        let (code, out, _) = run_capture(&[
            "x", "spectrum", "--domain", r#"{"type":"box","lengths":[1,1]}"#, "--bc", "neumann", "--cutoff", "25",
        ]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "index,eigenvalue");
        assert!(lines[2].starts_with("2,9.8696044010893"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["x", "spectrum", "--domain", "{oops", "--cutoff", "1"]).0, 2);
        assert_eq!(run_capture(&["x", "sweep", "--bound", "nope", "--z-from", "1", "--z-to", "2"]).0, 2);
        assert_eq!(run_capture(&["x", "frobnicate"]).0, 2);
        assert_eq!(run_capture(&["x", "--help"]).0, 0);
    }

    #[test]
    fn config_parsing() {
        let m = parse_config("# defaults\nseed = 7\nformat=json\n\n").unwrap();
        assert_eq!(m["seed"], "7");
        assert_eq!(m["format"], "json");
        assert!(parse_config("colour=blue").is_err());
        assert!(parse_config("seed").is_err());
    }
}
