//! Command-line surface and the resolved run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hemisphere_core::expansion::{
    ProjectionSettings, DEFAULT_N_MAX, DEFAULT_PANEL_LEVELS, DEFAULT_RULE_ORDER,
};
use hemisphere_core::{FrequencyLimit, Mode, PhaseConvention};

#[derive(Debug, Parser)]
#[command(name = "hemisphere", version, about = "Added mass of a floating hemisphere at Ka -> 0 and Ka -> inf")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dirichlet and Neumann expansion coefficients of a load.
    Coeffs {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Added-mass coefficient of one mode and frequency limit.
    AddedMass {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        scale: ScaleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Partial sums for a doubling schedule of truncation orders.
    Convergence {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// All four cases against the published values.
    Report {
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Heave,
    Surge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LimitArg {
    Low,
    High,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Plain,
    Cs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct CaseArgs {
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    #[arg(long, value_enum)]
    pub limit: LimitArg,
}

#[derive(Debug, Args)]
pub struct SolverArgs {
    /// Truncation degree N.
    #[arg(long, default_value_t = DEFAULT_N_MAX, value_parser = positive_usize)]
    pub n_max: usize,
    /// Minimum Gauss points per panel.
    #[arg(long, default_value_t = DEFAULT_RULE_ORDER, value_parser = positive_usize)]
    pub rule_order: usize,
    /// Geometric grading levels toward each pole.
    #[arg(long, default_value_t = DEFAULT_PANEL_LEVELS, value_parser = positive_usize)]
    pub panel_levels: usize,
    #[arg(long, value_enum, default_value_t = ConventionArg::Plain)]
    pub convention: ConventionArg,
}

#[derive(Debug, Args)]
pub struct ScaleArgs {
    /// Fluid density.
    #[arg(long, default_value_t = 1.0, value_parser = positive_f64)]
    pub rho: f64,
    /// Hemisphere radius.
    #[arg(long, default_value_t = 1.0, value_parser = positive_f64)]
    pub radius: f64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Defaults to json for added-mass and csv otherwise.
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(format!("expected a positive integer, got `{s}`")),
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("expected a positive number, got `{s}`")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Coeffs,
    AddedMass,
    Convergence,
    Report,
}

/// Fully resolved options of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub mode: Mode,
    pub limit: FrequencyLimit,
    pub n_max: usize,
    pub rule_order: usize,
    pub panel_levels: usize,
    pub convention: PhaseConvention,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub rho: f64,
    pub radius: f64,
}

impl RunConfig {
    pub fn new(command: CommandKind, mode: Mode, limit: FrequencyLimit) -> Self {
        Self {
            command,
            mode,
            limit,
            n_max: DEFAULT_N_MAX,
            rule_order: DEFAULT_RULE_ORDER,
            panel_levels: DEFAULT_PANEL_LEVELS,
            convention: PhaseConvention::Plain,
            format: default_format(command),
            out: None,
            rho: 1.0,
            radius: 1.0,
        }
    }

    pub fn settings(&self) -> ProjectionSettings {
        ProjectionSettings {
            n_max: self.n_max,
            rule_order: self.rule_order,
            panel_levels: self.panel_levels,
            convention: self.convention,
        }
    }

    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }

    pub fn with_format(mut self, format: OutputFormat) -> Self {
        self.format = format;
        self
    }
}

fn default_format(command: CommandKind) -> OutputFormat {
    match command {
        CommandKind::AddedMass => OutputFormat::Json,
        _ => OutputFormat::Csv,
    }
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Heave => Mode::Heave,
            ModeArg::Surge => Mode::Surge,
        }
    }
}

impl From<LimitArg> for FrequencyLimit {
    fn from(l: LimitArg) -> Self {
        match l {
            LimitArg::Low => FrequencyLimit::Low,
            LimitArg::High => FrequencyLimit::High,
        }
    }
}

impl From<ConventionArg> for PhaseConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Plain => PhaseConvention::Plain,
            ConventionArg::Cs => PhaseConvention::CondonShortley,
        }
    }
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let (kind, case, solver, scale, output) = match cli.command {
            Command::Coeffs { case, solver, output } => (CommandKind::Coeffs, Some(case), solver, None, output),
            Command::AddedMass { case, solver, scale, output } => {
                (CommandKind::AddedMass, Some(case), solver, Some(scale), output)
            }
            Command::Convergence { case, solver, output } => {
                (CommandKind::Convergence, Some(case), solver, None, output)
            }
            Command::Report { solver, output } => (CommandKind::Report, None, solver, None, output),
        };
        let (mode, limit) = case.map_or((Mode::Heave, FrequencyLimit::Low), |c| (c.mode.into(), c.limit.into()));
        let mut cfg = RunConfig::new(kind, mode, limit);
        cfg.n_max = solver.n_max;
        cfg.rule_order = solver.rule_order;
        cfg.panel_levels = solver.panel_levels;
        cfg.convention = solver.convention.into();
        cfg.format = output.format.unwrap_or(cfg.format);
        cfg.out = output.out;
        if let Some(s) = scale {
            cfg.rho = s.rho;
            cfg.radius = s.radius;
        }
        cfg
    }
}
