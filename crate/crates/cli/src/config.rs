//! Command-line and config-file handling: flag definitions, the key=value
//! config file, merge precedence (flags win), and validation into an
//! [`ExperimentConfig`].

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

/// Default eigenfilter cutoff: transfer-matrix eigenvalues with
/// `|λ − 1| ≤ 1 − cutoff` count as persistent modes.
pub const DEFAULT_CUTOFF: f64 = 1.0 - 1e-9;

/// Default quadrature size for asymptotics (the moment sweeps default to
/// the smallest exact grid `4·steps + 2` instead).
pub const DEFAULT_ASYMPTOTICS_GRID: usize = 242;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] qwduet_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, CliError>;

fn config_error(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

/// Everything the runner can compute or dump.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Observable {
    Joint,
    Marginals,
    Moments,
    Mi,
    Qmi,
    Mid,
    Classical,
    MomentumMoments,
    Asymptotics,
}

impl Observable {
    pub const ALL: [Observable; 9] = [
        Observable::Joint,
        Observable::Marginals,
        Observable::Moments,
        Observable::Mi,
        Observable::Qmi,
        Observable::Mid,
        Observable::Classical,
        Observable::MomentumMoments,
        Observable::Asymptotics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Observable::Joint => "joint",
            Observable::Marginals => "marginals",
            Observable::Moments => "moments",
            Observable::Mi => "mi",
            Observable::Qmi => "qmi",
            Observable::Mid => "mid",
            Observable::Classical => "classical",
            Observable::MomentumMoments => "momentum-moments",
            Observable::Asymptotics => "asymptotics",
        }
    }
}

/// Parser shared by the `--observables` flag and the config file, so both
/// reject unknown names with the same message.
pub fn parse_observable(s: &str) -> std::result::Result<Observable, String> {
    Observable::ALL
        .into_iter()
        .find(|o| o.name() == s)
        .ok_or_else(|| {
            let known: Vec<_> = Observable::ALL.iter().map(|o| o.name()).collect();
            format!("unknown observable `{s}` (expected one of: {})", known.join(", "))
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

pub fn parse_format(s: &str) -> std::result::Result<Format, String> {
    match s {
        "csv" => Ok(Format::Csv),
        "json" => Ok(Format::Json),
        other => Err(format!("unknown format `{other}` (expected csv or json)")),
    }
}

/// Which engine family a subcommand drives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineKind {
    Simulate,
    Momentum,
    Classical,
}

impl EngineKind {
    pub fn name(self) -> &'static str {
        match self {
            EngineKind::Simulate => "simulate",
            EngineKind::Momentum => "momentum",
            EngineKind::Classical => "classical",
        }
    }

    fn allowed(self) -> &'static [Observable] {
        match self {
            EngineKind::Simulate => &Observable::ALL,
            EngineKind::Momentum => &[Observable::MomentumMoments, Observable::Asymptotics],
            EngineKind::Classical => &[Observable::Classical],
        }
    }

    fn default_observables(self) -> Vec<Observable> {
        match self {
            EngineKind::Simulate => vec![
                Observable::Moments,
                Observable::Mi,
                Observable::Qmi,
                Observable::Mid,
            ],
            EngineKind::Momentum => {
                vec![Observable::MomentumMoments, Observable::Asymptotics]
            }
            EngineKind::Classical => vec![Observable::Classical],
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "qwduet", version, about = "Two coined walkers with fractionally swapped coins")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evolve the walker pair exactly and record correlations
    Simulate(RunArgs),
    /// Momentum-space analytic backend: exact moments and asymptotics
    Momentum(RunArgs),
    /// Classical re-randomized baseline walk
    Classical(RunArgs),
}

impl Command {
    pub fn split(self) -> (EngineKind, RunArgs) {
        match self {
            Command::Simulate(a) => (EngineKind::Simulate, a),
            Command::Momentum(a) => (EngineKind::Momentum, a),
            Command::Classical(a) => (EngineKind::Classical, a),
        }
    }
}

#[derive(Args, Debug, Default)]
pub struct RunArgs {
    /// Number of steps T; records cover t = 1..=T
    #[arg(long)]
    pub steps: Option<usize>,

    /// Comma-separated SWAP powers in [0, 1] (swap probabilities for `classical`)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub tau: Option<Vec<f64>>,

    /// Comma-separated observables to compute
    #[arg(long, value_delimiter = ',', value_parser = parse_observable)]
    pub observables: Option<Vec<Observable>>,

    /// Output path for the main table; sidecar files reuse its stem
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Output format (default csv)
    #[arg(long, value_parser = parse_format)]
    pub format: Option<Format>,

    /// Quadrature nodes per momentum axis (defaults: 4·steps+2 for moments,
    /// 242 for asymptotics)
    #[arg(long)]
    pub quadrature: Option<usize>,

    /// Eigenfilter cutoff in (0, 1) for asymptotics (default 1 − 1e−9)
    #[arg(long)]
    pub cutoff: Option<f64>,

    /// key=value config file; explicit flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Fully merged and validated run description.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentConfig {
    pub command: EngineKind,
    pub steps: usize,
    pub tau_grid: Vec<f64>,
    pub observables: Vec<Observable>,
    pub out: PathBuf,
    pub format: Format,
    pub quadrature: Option<usize>,
    pub cutoff: f64,
}

impl ExperimentConfig {
    pub fn wants(&self, o: Observable) -> bool {
        self.observables.contains(&o)
    }
}

#[derive(Debug, Default)]
struct FileValues {
    steps: Option<usize>,
    tau: Option<Vec<f64>>,
    observables: Option<Vec<Observable>>,
    out: Option<PathBuf>,
    format: Option<Format>,
    quadrature: Option<usize>,
    cutoff: Option<f64>,
}

fn parse_config_file(path: &Path) -> Result<FileValues> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut v = FileValues::default();
    let mut seen = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            config_error(format!(
                "{}:{}: expected key=value, got `{line}`",
                path.display(),
                lineno + 1
            ))
        })?;
        let (key, value) = (key.trim(), value.trim());
        if seen.contains(&key.to_string()) {
            return Err(config_error(format!(
                "{}:{}: duplicate key `{key}`",
                path.display(),
                lineno + 1
            )));
        }
        seen.push(key.to_string());
        let at = |what: &str| format!("{}:{}: {what}", path.display(), lineno + 1);
        match key {
            "steps" => {
                v.steps = Some(value.parse().map_err(|_| {
                    config_error(at(&format!("invalid steps value `{value}`")))
                })?)
            }
            "tau" => {
                let mut grid = Vec::new();
                for piece in value.split(',') {
                    grid.push(piece.trim().parse().map_err(|_| {
                        config_error(at(&format!("invalid tau value `{}`", piece.trim())))
                    })?);
                }
                v.tau = Some(grid);
            }
            "observables" => {
                let mut obs = Vec::new();
                for piece in value.split(',') {
                    obs.push(
                        parse_observable(piece.trim())
                            .map_err(|e| config_error(at(&e)))?,
                    );
                }
                v.observables = Some(obs);
            }
            "out" => v.out = Some(PathBuf::from(value)),
            "format" => v.format = Some(parse_format(value).map_err(|e| config_error(at(&e)))?),
            "quadrature" => {
                v.quadrature = Some(value.parse().map_err(|_| {
                    config_error(at(&format!("invalid quadrature value `{value}`")))
                })?)
            }
            "cutoff" => {
                v.cutoff = Some(value.parse().map_err(|_| {
                    config_error(at(&format!("invalid cutoff value `{value}`")))
                })?)
            }
            other => {
                return Err(config_error(at(&format!(
                    "unknown key `{other}` (expected steps, tau, observables, out, format, quadrature, cutoff)"
                ))))
            }
        }
    }
    Ok(v)
}

/// Merge flags over config-file values, apply per-subcommand defaults, and
/// validate everything.
pub fn build_config(kind: EngineKind, args: RunArgs) -> Result<ExperimentConfig> {
    let file = match &args.config {
        Some(path) => parse_config_file(path)?,
        None => FileValues::default(),
    };

    let steps = args
        .steps
        .or(file.steps)
        .ok_or_else(|| config_error("missing required value: steps"))?;
    if steps < 1 {
        return Err(config_error("steps must be at least 1"));
    }

    let tau_grid = args
        .tau
        .or(file.tau)
        .ok_or_else(|| config_error("missing required value: tau"))?;
    if tau_grid.is_empty() {
        return Err(config_error("tau grid must be nonempty"));
    }
    let tau_word = if kind == EngineKind::Classical { "swap probability" } else { "tau" };
    for &tau in &tau_grid {
        if !(tau.is_finite() && (0.0..=1.0).contains(&tau)) {
            return Err(config_error(format!("{tau_word} {tau} outside [0, 1]")));
        }
    }

    let mut observables = args
        .observables
        .or(file.observables)
        .unwrap_or_else(|| kind.default_observables());
    observables.sort();
    observables.dedup();
    if observables.is_empty() {
        return Err(config_error("observables list must be nonempty"));
    }
    for &o in &observables {
        if !kind.allowed().contains(&o) {
            return Err(config_error(format!(
                "observable `{}` is not available under `{}`",
                o.name(),
                kind.name()
            )));
        }
    }

    let out = args
        .out
        .or(file.out)
        .ok_or_else(|| config_error("missing required value: out"))?;
    let format = args.format.or(file.format).unwrap_or(Format::Csv);

    let quadrature = args.quadrature.or(file.quadrature);
    if let Some(n) = quadrature {
        if n < 2 {
            return Err(config_error(format!("quadrature size {n} is too small (need ≥ 2)")));
        }
    }

    let cutoff = args.cutoff.or(file.cutoff).unwrap_or(DEFAULT_CUTOFF);
    if !(cutoff.is_finite() && 0.0 < cutoff && cutoff < 1.0) {
        return Err(config_error(format!("cutoff {cutoff} outside (0, 1)")));
    }

    Ok(ExperimentConfig {
        command: kind,
        steps,
        tau_grid,
        observables,
        out,
        format,
        quadrature,
        cutoff,
    })
}
