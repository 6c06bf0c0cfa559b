//! Run configuration: command-line flags layered over an optional JSON file.

use std::fmt;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, ValueEnum};
use serde::Deserialize;

use crate::theorems::Theorem;

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Radius,
    Verify,
    Sweep,
    Conjecture,
    IdentityCheck,
}

/// Numerical laboratory for Bohr-type inequalities on the disks Ω_γ.
#[derive(Debug, Parser)]
#[command(name = "bohr", version)]
pub struct Cli {
    /// What to run; may instead come from the config file.
    #[arg(value_enum)]
    pub command: Option<Command>,

    /// JSON file with the same keys as the flags; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(flatten)]
    pub settings: Settings,
}

/// Every option, as a flag and as a config-file key.
#[derive(Debug, Clone, Default, PartialEq, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Settings {
    #[arg(skip)]
    pub command: Option<Command>,

    /// Theorem whose radius to compute: A, B, 1, 2, 3, 4 or corollary.
    #[arg(long, value_enum)]
    pub theorem: Option<Theorem>,

    /// Domain parameter γ ∈ [0, 1).
    #[arg(long)]
    pub gamma: Option<f64>,

    /// Dilatation bound k ∈ [0, 1] (harmonic theorems).
    #[arg(long)]
    pub k: Option<f64>,

    /// λ(Ω) for theorem 3; mixing factor of the harmonic extremal for theorem 4.
    #[arg(long)]
    pub lambda: Option<f64>,

    /// Area constant K for theorem 1 (default 8/9).
    #[arg(long = "K")]
    #[serde(rename = "K")]
    pub area_constant: Option<f64>,

    /// Bisection tolerance on the radius.
    #[arg(long)]
    pub tol: Option<f64>,

    /// Comma-separated γ values for sweep and conjecture.
    #[arg(long, value_delimiter = ',')]
    pub grid: Option<Vec<f64>>,

    /// Seed of every random draw (default 42).
    #[arg(long)]
    pub seed: Option<u64>,

    /// Directory for JSON and CSV artifacts.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Random Blaschke samples added to the conjecture search (32 if no count is given).
    #[arg(long, num_args = 0..=1, default_missing_value = "32")]
    pub augment_random_samples: Option<usize>,

    /// Run every verify check.
    #[arg(long)]
    #[serde(default)]
    pub all: bool,

    /// Verify check to run; repeatable.
    #[arg(long)]
    pub check: Option<Vec<String>>,

    /// Family parameter a for identity-check.
    #[arg(long)]
    pub a: Option<f64>,

    /// Radius r for identity-check.
    #[arg(long)]
    pub r: Option<f64>,

    /// Number of random triples for identity-check.
    #[arg(long)]
    pub count: Option<usize>,
}

/// Bad flags, file or parameter values; exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

impl Settings {
    pub fn from_file(path: &Path) -> anyhow::Result<Settings> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))
            .map_err(|e| usage(format!("{e:#}")))?;
        serde_json::from_str(&text).map_err(|e| usage(format!("config {}: {e}", path.display())))
    }

    /// Values set in `self` win over those in `base`.
    pub fn over(self, base: Settings) -> Settings {
        Settings {
            command: self.command.or(base.command),
            theorem: self.theorem.or(base.theorem),
            gamma: self.gamma.or(base.gamma),
            k: self.k.or(base.k),
            lambda: self.lambda.or(base.lambda),
            area_constant: self.area_constant.or(base.area_constant),
            tol: self.tol.or(base.tol),
            grid: self.grid.or(base.grid),
            seed: self.seed.or(base.seed),
            out: self.out.or(base.out),
            augment_random_samples: self.augment_random_samples.or(base.augment_random_samples),
            all: self.all || base.all,
            check: self.check.or(base.check),
            a: self.a.or(base.a),
            r: self.r.or(base.r),
            count: self.count.or(base.count),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }

    /// Range checks shared by every command.
    pub fn validate(&self) -> anyhow::Result<()> {
        let unit = |name: &str, v: Option<f64>, closed: bool| match v {
            Some(x) if !(x >= 0.0 && (x < 1.0 || (closed && x == 1.0))) => {
                let range = if closed { "[0, 1]" } else { "[0, 1)" };
                Err(usage(format!("--{name} must lie in {range}, got {x}")))
            }
            _ => Ok(()),
        };
        unit("gamma", self.gamma, false)?;
        unit("k", self.k, true)?;
        unit("r", self.r, false)?;
        if let Some(a) = self.a {
            if !(a > 0.0 && a < 1.0) {
                return Err(usage(format!("--a must lie in (0, 1), got {a}")));
            }
        }
        if let Some(l) = self.lambda {
            if !(l > 0.0 && l.is_finite()) {
                return Err(usage(format!("--lambda must be positive, got {l}")));
            }
        }
        if let Some(k) = self.area_constant {
            if !(k >= 0.0 && k.is_finite()) {
                return Err(usage(format!("--K must be non-negative, got {k}")));
            }
        }
        if let Some(t) = self.tol {
            if !(t > 0.0 && t < 1.0) {
                return Err(usage(format!("--tol must lie in (0, 1), got {t}")));
            }
        }
        if let Some(grid) = &self.grid {
            if grid.is_empty() {
                return Err(usage("--grid needs at least one value"));
            }
            unit("grid", grid.iter().copied().find(|g| !(0.0..1.0).contains(g)), false)?;
        }
        Ok(())
    }
}

/// Flags merged over the config file, with the command resolved.
pub fn resolve(cli: Cli) -> anyhow::Result<(Command, Settings)> {
    let base = match &cli.config {
        Some(path) => Settings::from_file(path)?,
        None => Settings::default(),
    };
    let mut flags = cli.settings;
    flags.command = cli.command;
    let merged = flags.over(base);
    merged.validate()?;
    let command = merged
        .command
        .ok_or_else(|| usage("no command given (radius, verify, sweep, conjecture, identity-check)"))?;
    Ok((command, merged))
}
