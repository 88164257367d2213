//! Command-line front end. Every command produces one table, written once
//! all computation has succeeded; `simulate` and `edge1d --profile-out` may
//! add a second table with its own path.

mod commands;
mod simulate;
mod table;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::error::{ContextKind, ContextValue, ErrorKind};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::chain1d::Band;
use crate::honeycomb::{Pairing, Valley};
use crate::lattice::{ChainBoundary, RibbonBoundary};
use crate::Error;

pub use simulate::{ChainSection, InitialSection, ModelKind, OutputSection, RibbonSection, SimulationConfig};
pub use table::{format_sig9, Cell, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "topomech", version, about = "Bands, topological invariants and interface modes of spring-mass lattices")]
struct Cli {
    /// Output file; standard output when absent.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Seed for the randomized parts of a command.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Clone, Debug, PartialEq)]
pub enum Command {
    /// Dispersion of the diatomic chain over the Brillouin zone.
    Bands1d(Bands1dArgs),
    /// Discrete Zak phase of one band.
    Zak(ZakArgs),
    /// Interface modes of two joined chains, with the finite-chain check.
    Edge1d(Edge1dArgs),
    /// Honeycomb bands on a grid of reduced wave vectors.
    Bands2d(Bands2dArgs),
    /// Cone slopes at the zone corners for equal masses.
    Dirac(DiracArgs),
    /// Discrete valley Chern numbers.
    Chern(ChernArgs),
    /// Berry phase around the zone boundary.
    Berry(BerryArgs),
    /// Interface frequencies along the interface, with the ribbon check.
    Edge2d(Edge2dArgs),
    /// Full spectrum of one interface ribbon.
    Ribbon(RibbonArgs),
    /// Time-domain run described by a TOML file.
    Simulate(SimulateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BandArg {
    Minus,
    Plus,
}

impl From<BandArg> for Band {
    fn from(b: BandArg) -> Self {
        match b {
            BandArg::Minus => Band::Minus,
            BandArg::Plus => Band::Plus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChainBoundaryArg {
    Clamped,
    ClampedWholeCells,
    Free,
}

impl From<ChainBoundaryArg> for ChainBoundary {
    fn from(b: ChainBoundaryArg) -> Self {
        match b {
            ChainBoundaryArg::Clamped => ChainBoundary::Clamped,
            ChainBoundaryArg::ClampedWholeCells => ChainBoundary::ClampedWholeCells,
            ChainBoundaryArg::Free => ChainBoundary::Free,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RibbonBoundaryArg {
    Closed,
    Clamped,
}

impl From<RibbonBoundaryArg> for RibbonBoundary {
    fn from(b: RibbonBoundaryArg) -> Self {
        match b {
            RibbonBoundaryArg::Closed => RibbonBoundary::Closed,
            RibbonBoundaryArg::Clamped => RibbonBoundary::Clamped,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PairingArg {
    Plain,
    MassWeighted,
}

impl From<PairingArg> for Pairing {
    fn from(p: PairingArg) -> Self {
        match p {
            PairingArg::Plain => Pairing::Plain,
            PairingArg::MassWeighted => Pairing::MassWeighted,
        }
    }
}

#[derive(Args, Clone, Debug, PartialEq)]
pub struct Bands1dArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: f64,
    #[arg(long, default_value_t = 201)]
    pub samples: usize,
}

#[derive(Args, Clone, Debug, PartialEq)]
pub struct ZakArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: f64,
    /// Half the number of sample points over [−π, π).
    #[arg(long, default_value_t = 2048)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = BandArg::Plus)]
    pub band: BandArg,
}

#[derive(Args, Clone, Debug, PartialEq)]
pub struct Edge1dArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub gamma_left: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma_right: f64,
    /// Cells per side, for the profile and the finite chain.
    #[arg(long, default_value_t = 50)]
    pub cells: usize,
    #[arg(long, default_value_t = crate::chain1d::DEFAULT_SCAN_GRID)]
    pub grid: usize,
    #[arg(long, value_enum, default_value_t = ChainBoundaryArg::Clamped)]
    pub boundary: ChainBoundaryArg,
    /// Also write the first mode's profile (cell, ua, ub) here.
    #[arg(long, value_name = "PATH")]
    pub profile_out: Option<PathBuf>,
}

#[derive(Args, Clone, Debug, PartialEq)]
pub struct Bands2dArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 64)]
    pub grid: usize,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
}

#[derive(Args, Clone, Debug, PartialEq)]
pub struct DiracArgs {
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// All six corners when absent.
    #[arg(long)]
    pub valley: Option<Valley>,
    #[arg(long, default_value_t = 1e-4)]
    pub h: f64,
    #[arg(long, default_value_t = 8)]
    pub directions: usize,
}

#[derive(Args, Clone, Debug, PartialEq)]
pub struct ChernArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// All six valleys when absent.
    #[arg(long)]
    pub valley: Option<Valley>,
    /// Both bands when absent.
    #[arg(long, value_enum)]
    pub band: Option<BandArg>,
    /// Loop radius; 0.05·|K₁| when absent.
    #[arg(long)]
    pub radius: Option<f64>,
    #[arg(long, default_value_t = 512)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = PairingArg::Plain)]
    pub pairing: PairingArg,
}

#[derive(Args, Clone, Debug, PartialEq)]
pub struct BerryArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, value_enum)]
    pub band: Option<BandArg>,
    #[arg(long, default_value_t = 600)]
    pub n: usize,
}

#[derive(Args, Clone, Debug, PartialEq)]
pub struct Edge2dArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, default_value_t = 33)]
    pub kpar_samples: usize,
    /// Ribbon cells per side.
    #[arg(long, default_value_t = 40)]
    pub width: usize,
    #[arg(long, value_enum, default_value_t = RibbonBoundaryArg::Closed)]
    pub boundary: RibbonBoundaryArg,
}

#[derive(Args, Clone, Debug, PartialEq)]
pub struct RibbonArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long)]
    pub k_par: f64,
    #[arg(long, default_value_t = 40)]
    pub width: usize,
    #[arg(long, value_enum, default_value_t = RibbonBoundaryArg::Closed)]
    pub boundary: RibbonBoundaryArg,
}

#[derive(Args, Clone, Debug, PartialEq)]
pub struct SimulateArgs {
    pub config: PathBuf,
}

/// One fully parsed invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
}

/// A failed run: exit code plus the `<field>: <reason>` diagnostic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub field: String,
    pub reason: String,
}

pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

impl Failure {
    pub fn validation(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Failure { code: EXIT_VALIDATION, field: field.into(), reason: reason.into() }
    }

    pub fn numerical(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Failure { code: EXIT_NUMERICAL, field: field.into(), reason: reason.into() }
    }

    /// Same failure reported against another field name.
    pub fn at(mut self, field: impl Into<String>) -> Self {
        self.field = field.into();
        self
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error: {}: {}", self.field, self.reason)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_validation() { EXIT_VALIDATION } else { EXIT_NUMERICAL };
        let text = e.to_string();
        let (field, reason) = text.split_once(": ").unwrap_or(("error", text.as_str()));
        Failure { code, field: field.to_string(), reason: reason.to_string() }
    }
}

/// What a parse produced: a run, or text clap wants shown (help, version).
#[derive(Debug)]
pub enum Parsed {
    Run(RunConfig),
    Display(String),
}

impl RunConfig {
    pub fn parse_from<I, T>(args: I) -> Result<Parsed, Failure>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        match Cli::try_parse_from(args) {
            Ok(cli) => Ok(Parsed::Run(RunConfig { command: cli.command, out: cli.out, format: cli.format, seed: cli.seed })),
            Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
                Ok(Parsed::Display(e.to_string()))
            }
            Err(e) if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                Err(Failure::validation("command", "missing subcommand"))
            }
            Err(e) => Err(clap_failure(&e)),
        }
    }
}

fn clap_failure(e: &clap::Error) -> Failure {
    let field = match e.get(ContextKind::InvalidArg) {
        Some(ContextValue::String(s)) => arg_field(s),
        Some(ContextValue::Strings(v)) if !v.is_empty() => arg_field(&v[0]),
        _ => "args".to_string(),
    };
    let text = e.to_string();
    let first = text.lines().next().unwrap_or("invalid arguments");
    Failure::validation(field, first.trim_start_matches("error: ").trim())
}

fn arg_field(spec: &str) -> String {
    let name = spec.split_whitespace().next().unwrap_or(spec);
    name.trim_start_matches('-').trim_matches(|c| c == '<' || c == '>').replace('-', "_").to_lowercase()
}

/// A table and where it goes; `None` is standard output.
#[derive(Clone, Debug, PartialEq)]
pub struct Artifact {
    pub path: Option<PathBuf>,
    pub table: Table,
}

/// Runs the command and returns everything to be written. Nothing touches
/// the file system here except reading a simulation config.
pub fn run(cfg: &RunConfig) -> Result<Vec<Artifact>, Failure> {
    let main = |table: Table| Artifact { path: cfg.out.clone(), table };
    Ok(match &cfg.command {
        Command::Bands1d(a) => vec![main(commands::bands1d(a)?)],
        Command::Zak(a) => vec![main(commands::zak(a)?)],
        Command::Edge1d(a) => {
            let (table, profile) = commands::edge1d(a)?;
            let mut out = vec![main(table)];
            if let Some(path) = &a.profile_out {
                out.push(Artifact { path: Some(path.clone()), table: profile });
            }
            out
        }
        Command::Bands2d(a) => vec![main(commands::bands2d(a)?)],
        Command::Dirac(a) => vec![main(commands::dirac(a, cfg.seed)?)],
        Command::Chern(a) => vec![main(commands::chern(a)?)],
        Command::Berry(a) => vec![main(commands::berry(a)?)],
        Command::Edge2d(a) => vec![main(commands::edge2d(a)?)],
        Command::Ribbon(a) => vec![main(commands::ribbon(a)?)],
        Command::Simulate(a) => {
            let text = std::fs::read_to_string(&a.config)
                .map_err(|e| Failure::validation("config", format!("cannot read {}: {e}", a.config.display())))?;
            let sim = SimulationConfig::from_toml(&text)?;
            let (energy, profile) = simulate::run(&sim)?;
            let energy_path = cfg.out.clone().or_else(|| sim.output.energy.clone());
            let mut out = vec![Artifact { path: energy_path, table: energy }];
            if let Some(path) = &sim.output.profile {
                out.push(Artifact { path: Some(path.clone()), table: profile });
            }
            out
        }
    })
}

/// Parses, runs and writes; returns the process exit code.
pub fn execute<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = RunConfig::parse_from(args).and_then(|parsed| match parsed {
        Parsed::Display(text) => {
            let _ = write!(stdout, "{text}");
            Ok(())
        }
        Parsed::Run(cfg) => {
            let artifacts = run(&cfg)?;
            write_artifacts(&artifacts, cfg.format, stdout)
        }
    });
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "{f}");
            f.code
        }
    }
}

fn write_artifacts(artifacts: &[Artifact], format: Format, stdout: &mut dyn Write) -> Result<(), Failure> {
    for a in artifacts {
        let text = a.table.render(format);
        match &a.path {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::validation("out", format!("cannot write {}: {e}", path.display())))?,
            None => stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::validation("out", format!("cannot write to standard output: {e}")))?,
        }
    }
    Ok(())
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    execute(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
