use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use impsub_core::{ImpLattice, Suite};

/// Largest atom count for commands that materialize posets.
pub const POSET_CAP: usize = 8;
/// Largest `n` for pure-arithmetic tables.
pub const ARITHMETIC_CAP: usize = 100;

#[derive(Parser, Debug)]
#[command(
    name = "impsub",
    version,
    about = "Implication sublattices of finite Boolean algebras and their Möbius function"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Lift the safety caps on n.
    #[arg(long, global = true)]
    pub override_cap: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every implication sublattice of B_n.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Möbius value of an interval, by recursion and by closed form.
    Mobius {
        /// Atom count; the interval defaults to [{1}, B_n].
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lower: Option<String>,
        #[arg(long)]
        upper: Option<String>,
    },
    /// Run a verification suite for every n up to --n-max.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
    /// Table of μ({1}, B_n) against both chain sums.
    Identity {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Table of p(k, B_n) by chain sum, composition formula and recursion.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Export an interval as a DOT Hasse diagram or JSON.
    Export {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lower: Option<String>,
        #[arg(long)]
        upper: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// Validated invocation.
#[derive(Debug)]
pub struct RunConfig {
    pub command: CommandConfig,
    pub format: Format,
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CommandConfig {
    Enumerate { n: usize },
    Mobius { lower: ImpLattice, upper: ImpLattice },
    Verify { suite: Suite, n_max: usize },
    Identity { n_max: usize },
    Table { n: usize, k: Option<usize> },
    Export { lower: ImpLattice, upper: ImpLattice },
}

fn check_cap(what: &str, value: usize, cap: usize, override_cap: bool) -> Result<()> {
    if value > cap && !override_cap {
        bail!("{what} = {value} exceeds the safety cap {cap}; pass --override-cap to proceed");
    }
    Ok(())
}

fn parse_lattice(flag: &str, json: &str) -> Result<ImpLattice> {
    serde_json::from_str(json).with_context(|| format!("--{flag}: invalid sublattice {json}"))
}

/// Resolves `--n`/`--lower`/`--upper` into an interval, defaulting to
/// `[{1}, B_n]`.
fn resolve_interval(
    n: Option<usize>,
    lower: Option<String>,
    upper: Option<String>,
) -> Result<(ImpLattice, ImpLattice)> {
    let lower = lower.map(|s| parse_lattice("lower", &s)).transpose()?;
    let upper = upper.map(|s| parse_lattice("upper", &s)).transpose()?;
    let n = n
        .or_else(|| lower.as_ref().map(ImpLattice::n))
        .or_else(|| upper.as_ref().map(ImpLattice::n))
        .ok_or_else(|| anyhow!("give --n or an endpoint via --lower/--upper"))?;
    let lower = match lower {
        Some(l) => l,
        None => ImpLattice::top_only(n)?,
    };
    let upper = match upper {
        Some(u) => u,
        None => ImpLattice::full(n)?,
    };
    if lower.n() != n || upper.n() != n {
        bail!("atom counts disagree: --n {n}, lower has {}, upper has {}", lower.n(), upper.n());
    }
    if !lower.is_sub(&upper)? {
        bail!("lower {lower} is not contained in upper {upper}");
    }
    Ok((lower, upper))
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let cap = cli.override_cap;
        let command = match cli.command {
            Command::Enumerate { n } => {
                check_cap("n", n, POSET_CAP, cap)?;
                CommandConfig::Enumerate { n }
            }
            Command::Mobius { n, lower, upper } => {
                let (lower, upper) = resolve_interval(n, lower, upper)?;
                check_cap("n", upper.n(), POSET_CAP, cap)?;
                CommandConfig::Mobius { lower, upper }
            }
            Command::Verify { suite, n_max } => {
                check_cap("n-max", n_max, POSET_CAP, cap)?;
                let suite = suite.parse::<Suite>()?;
                CommandConfig::Verify { suite, n_max }
            }
            Command::Identity { n_max } => {
                check_cap("n-max", n_max, ARITHMETIC_CAP, cap)?;
                CommandConfig::Identity { n_max }
            }
            Command::Table { n, k } => {
                check_cap("n", n, ARITHMETIC_CAP, cap)?;
                if n == 0 {
                    bail!("n must be at least 1");
                }
                if let Some(k) = k {
                    if k == 0 || k > n {
                        bail!("need 1 <= k <= n, got k = {k}, n = {n}");
                    }
                }
                CommandConfig::Table { n, k }
            }
            Command::Export { n, lower, upper } => {
                let (lower, upper) = resolve_interval(n, lower, upper)?;
                check_cap("n", upper.n(), POSET_CAP, cap)?;
                CommandConfig::Export { lower, upper }
            }
        };
        if cli.format == Format::Dot && !matches!(command, CommandConfig::Export { .. }) {
            bail!("--format dot is only available for export");
        }
        Ok(RunConfig { command, format: cli.format, out: cli.out })
    }

    /// Writes `text` (newline-terminated) to `--out` or stdout.
    pub fn emit(&self, text: &str) -> Result<()> {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.out {
            Some(path) => {
                std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
            }
            None => print!("{text}"),
        }
        Ok(())
    }
}
