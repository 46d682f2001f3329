mod commands;
mod config;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use circtrans::symmetry::GroupKind;
use commands::{CliError, Outcome};
use config::{GlobalArgs, Level, RunConfig};

#[derive(Parser)]
#[command(name = "circtrans", version, about = "Transfer operators for independent sets in strong powers of circulants")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Dihedral,
    Cyclic,
}

#[derive(Subcommand)]
enum Command {
    /// Independent sets of the circulant, with weights.
    States,
    /// Orbit table under the dihedral or cyclic group.
    Orbits {
        #[arg(long, value_enum, default_value_t = GroupArg::Dihedral)]
        group: GroupArg,
    },
    /// Transfer matrix and its orbit-compressed form.
    Transfer,
    /// Independence polynomial of the strip or torus with d layers.
    Indpoly,
    /// Characteristic polynomials of T and T_orb.
    Charpoly,
    /// Anomalous and cyclotomic factors of the characteristic polynomial.
    Factor,
    /// Galois diagnostics for quartic factors (or an explicit quartic).
    Galois {
        /// Comma-separated integer coefficients, ascending degree.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Perron root, orbit eigenvalues and growth statistics.
    Spectral,
    /// Cross-checks at the chosen level; nonzero exit on any mismatch.
    Verify,
    /// Single JSON document with every artifact for n.
    Report,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::States => "states",
            Command::Orbits { .. } => "orbits",
            Command::Transfer => "transfer",
            Command::Indpoly => "indpoly",
            Command::Charpoly => "charpoly",
            Command::Factor => "factor",
            Command::Galois { .. } => "galois",
            Command::Spectral => "spectral",
            Command::Verify => "verify",
            Command::Report => "report",
        }
    }
}

fn run(cfg: &RunConfig, command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::States => commands::states(cfg),
        Command::Orbits { group } => commands::orbits(
            cfg,
            match group {
                GroupArg::Dihedral => GroupKind::Dihedral,
                GroupArg::Cyclic => GroupKind::Cyclic,
            },
        ),
        Command::Transfer => commands::transfer(cfg),
        Command::Indpoly => commands::indpoly(cfg),
        Command::Charpoly => commands::charpoly(cfg),
        Command::Factor => commands::factor(cfg),
        Command::Galois { poly } => commands::galois(cfg, poly.as_deref()),
        Command::Spectral => commands::spectral(cfg),
        Command::Verify => verify::verify(cfg),
        Command::Report => commands::report(cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let default_level = if matches!(cli.command, Command::Verify) { Level::Full } else { Level::None };
    let cfg = match RunConfig::resolve(cli.command.name(), &cli.global, default_level) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: invalid configuration: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(&cfg, &cli.command) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(outcome.doc.render(&cfg).as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            if outcome.mismatch {
                eprintln!("error: verification mismatch");
                ExitCode::from(1)
            } else if outcome.unresolved && cfg.strict {
                eprintln!("error: unresolved irreducibility verdict under --strict");
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
