//! `argval`: batch front end for the argumentation, dialogue and DKQ engines.

mod commands;
mod config;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::config::Config;
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "argval",
    version,
    about = "Argumentation frameworks, value-based audiences, dialogue games and DKQ derivations"
)]
struct Cli {
    /// Defaults as `key = value` lines (semantics, audience, preset, depth_cap, ...).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for randomized generation.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DotKind {
    /// The attack graph.
    Af,
    /// The attack graph reduced for an audience.
    Reduced,
    /// Hasse diagram of an audience's practice ordering.
    Hasse,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Extensions of an abstract framework (`arg(x).` / `att(x,y).` file).
    Solve {
        file: PathBuf,
        #[arg(long)]
        semantics: Option<String>,
        /// Also print each argument's status.
        #[arg(long)]
        status: bool,
        /// Print labellings instead of extensions.
        #[arg(long)]
        labellings: bool,
    },
    /// Per-audience preferred extensions, statuses and practice ordering.
    Vaf {
        file: PathBuf,
        #[arg(long)]
        audience: Option<String>,
        /// Conflict-freeness reading: `defeat` or `strict`.
        #[arg(long)]
        reading: Option<String>,
    },
    /// Build structured arguments and their attack framework from a knowledge base.
    Build {
        file: PathBuf,
        /// Restrict claims to these formulas (repeatable).
        #[arg(long = "claim")]
        claims: Vec<String>,
        /// File with one claim per line.
        #[arg(long)]
        claims_file: Option<PathBuf>,
        #[arg(long)]
        max_support_size: Option<usize>,
        #[arg(long)]
        allow_inconsistent: bool,
        /// Also write the framework to this file.
        #[arg(long)]
        af_out: Option<PathBuf>,
    },
    /// Replay a scripted dialogue or decide a thesis.
    Dialogue {
        /// Formula, or a sequent `p1, p2 |- c`.
        #[arg(long)]
        thesis: String,
        #[arg(long)]
        preset: Option<String>,
        #[arg(long, conflicts_with = "decide")]
        script: Option<PathBuf>,
        /// Search for a Proponent winning strategy.
        #[arg(long)]
        decide: bool,
        /// With --decide, print the strategy tree.
        #[arg(long, requires = "decide")]
        strategy: bool,
        #[arg(long)]
        depth_cap: Option<usize>,
    },
    /// Check a derivation, or list the schemes a formula instantiates.
    Dkq {
        #[arg(required_unless_present = "matches")]
        file: Option<PathBuf>,
        /// `printed` or `corrected`.
        #[arg(long)]
        schemes: Option<String>,
        /// Formula whose matching schemes are listed.
        #[arg(long = "match", conflicts_with = "file")]
        matches: Option<String>,
    },
    /// Graphviz output.
    Dot {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "af")]
        kind: DotKind,
        #[arg(long)]
        audience: Option<String>,
    },
    /// Random framework, for test corpora.
    Random {
        #[arg(long, default_value_t = 6)]
        nodes: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        /// Emit a value framework over this many values.
        #[arg(long)]
        values: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let config = match &cli.config {
        Some(path) => Config::parse(&commands::read(path)?)?,
        None => Config::default(),
    };
    let out = match cli.command {
        Command::Solve {
            file,
            semantics,
            status,
            labellings,
        } => commands::solve(&config, &file, semantics, status, labellings)?,
        Command::Vaf {
            file,
            audience,
            reading,
        } => commands::vaf(&config, &file, audience, reading)?,
        Command::Build {
            file,
            claims,
            claims_file,
            max_support_size,
            allow_inconsistent,
            af_out,
        } => commands::build(
            &config,
            &file,
            claims,
            claims_file.as_deref(),
            max_support_size,
            allow_inconsistent,
            af_out.as_deref(),
        )?,
        Command::Dialogue {
            thesis,
            preset,
            script,
            decide,
            strategy,
            depth_cap,
        } => commands::dialogue(
            &config,
            &thesis,
            preset,
            script.as_deref(),
            decide,
            strategy,
            depth_cap,
        )?,
        Command::Dkq {
            file,
            schemes,
            matches,
        } => commands::dkq(&config, file.as_deref(), schemes, matches)?,
        Command::Dot {
            file,
            kind,
            audience,
        } => commands::dot(&config, &file, kind, audience)?,
        Command::Random {
            nodes,
            density,
            values,
        } => {
            let seed = config.pick(cli.seed, "seed")?.unwrap_or(0);
            commands::random(seed, nodes, density, values)?
        }
    };
    let target = config.pick(cli.output, "output")?;
    match target {
        Some(path) => {
            std::fs::write(&path, &out)
                .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("argval: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
