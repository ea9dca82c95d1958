use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "wavetriad",
    version,
    about = "Exact and approximate three-wave resonances on finite spectral domains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate exact, near-resonant (D <= d_max) or large-discrepancy (D >= d_min) triads.
    FindTriads(FindArgs),
    /// Split the domain into active, passive and neutral modes.
    Classify(ClassifyArgs),
    /// Discrepancy lower bounds, or the planetary amplitude bound with --m/--n.
    Bound(BoundArgs),
    /// Type A / Type B triads with recommended amplitudes.
    Plan(PlanArgs),
    /// Triad inventory and class counts over a grid of basin sizes.
    Sweep(SweepArgs),
    /// Frequency of a single mode.
    Eval(EvalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Square,
    Triangular,
}

#[derive(Debug, Clone, Args)]
pub struct DispersionArgs {
    /// rossby-sphere, capillary, gravity-capillary, gravity-tanh or bve-plane.
    #[arg(long)]
    pub dispersion: Option<String>,
    /// Surface tension over density, cm³/s².
    #[arg(long = "mu-nu")]
    pub mu_nu: Option<f64>,
    /// water, glycerine, benzol or benzaldehyde.
    #[arg(long)]
    pub liquid: Option<String>,
    /// Gravitational acceleration, cm/s².
    #[arg(long)]
    pub g: Option<f64>,
    /// Depth parameter of gravity-tanh.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// printed, deformation or barotropic.
    #[arg(long = "plane-form")]
    pub plane_form: Option<String>,
    /// Basin length along x, cm.
    #[arg(long)]
    pub lx: Option<f64>,
    /// Basin length along y, cm.
    #[arg(long)]
    pub ly: Option<f64>,
    /// Dispersion configuration file (JSON or TOML).
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct DomainArgs {
    /// Truncation T.
    #[arg(long = "T", short = 'T')]
    pub truncation: u32,
    /// Defaults to triangular for rossby-sphere and square otherwise.
    #[arg(long, value_enum)]
    pub shape: Option<Shape>,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// sum or standing.
    #[arg(long)]
    pub closure: Option<String>,
    /// auto, none or sphere-triangle.
    #[arg(long)]
    pub selection: Option<String>,
    /// Worker threads; output does not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Omit the run header.
    #[arg(long = "no-header")]
    pub no_header: bool,
}

#[derive(Debug, Args)]
pub struct FindArgs {
    #[command(flatten)]
    pub dispersion: DispersionArgs,
    #[command(flatten)]
    pub domain: DomainArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long = "d-max", conflicts_with_all = ["d_min", "exact"])]
    pub d_max: Option<f64>,
    #[arg(long = "d-min", conflicts_with = "exact")]
    pub d_min: Option<f64>,
    /// Exact rational search (rossby-sphere only).
    #[arg(long)]
    pub exact: bool,
    /// Keep only the first N triads.
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub dispersion: DispersionArgs,
    #[command(flatten)]
    pub domain: DomainArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long = "omega-max")]
    pub omega_max: Option<f64>,
    /// per-pair or per-triad.
    #[arg(long)]
    pub bridge: Option<String>,
    /// Calibrated settings: sphere, square or rectangle.
    #[arg(long)]
    pub preset: Option<String>,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub dispersion: DispersionArgs,
    #[arg(long = "T", short = 'T')]
    pub truncation: Option<u32>,
    #[arg(long, value_enum)]
    pub shape: Option<Shape>,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Zonal wavenumber for the planetary amplitude bound.
    #[arg(long, requires = "n", allow_negative_numbers = true)]
    pub m: Option<i64>,
    #[arg(long, requires = "m", allow_negative_numbers = true)]
    pub n: Option<i64>,
}

#[derive(Debug, Args)]
pub struct PlanArgs {
    #[command(flatten)]
    pub dispersion: DispersionArgs,
    #[command(flatten)]
    pub domain: DomainArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long = "d-max", default_value_t = 1e-6)]
    pub d_max: f64,
    #[arg(long = "d-min", default_value_t = 0.1)]
    pub d_min: f64,
    #[arg(long, default_value_t = 0.1)]
    pub epsilon: f64,
    /// Keep only the first N triads of each type.
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub dispersion: DispersionArgs,
    #[command(flatten)]
    pub domain: DomainArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long = "lx-values", value_delimiter = ',', required = true)]
    pub lx_values: Vec<f64>,
    #[arg(long = "ly-values", value_delimiter = ',', required = true)]
    pub ly_values: Vec<f64>,
    #[arg(long = "d-max", default_value_t = 1e-6)]
    pub d_max: f64,
    #[arg(long = "omega-max")]
    pub omega_max: f64,
    #[arg(long)]
    pub bridge: Option<String>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub dispersion: DispersionArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub m: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub n: i64,
}
