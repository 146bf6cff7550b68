//! cocert: verification toolkit for closed-open map certificates on toric
//! instances. Exit codes: 0 verdict produced, 1 hypothesis violation,
//! 2 input error, 3 cost guard.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cocert_cli::commands::{
    cmd_ainf_check, cmd_circle, cmd_fibre, cmd_hochschild, cmd_picard2, cmd_rp_report, CliError,
    CommandOutput,
};
use cocert_cli::formats::{AInfFile, CochainFile, FanFile, InstanceFile};
use cocert_core::ainfinity::CircleConfig;

#[derive(Parser)]
#[command(
    name = "cocert",
    version,
    about = "Closed-open map certificates for toric instances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Table over RP^n in CP^n: Frobenius kernels, injectivity verdicts and
    /// non-formality certificates for n = 1..n_max.
    RpReport {
        #[arg(long, default_value_t = 16)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Seed for the randomized self-checks embedded in the report.
        #[arg(long, default_value_t = 0xC0CE)]
        seed: u64,
    },
    /// Verdict for a rank <= 2 toric instance from a JSON descriptor.
    Picard2 {
        /// Path to the instance file; omit when using --inline.
        file: Option<PathBuf>,
        /// Inline JSON instance descriptor.
        #[arg(long, conflicts_with = "file")]
        inline: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long, default_value_t = 0xC0CE)]
        seed: u64,
    },
    /// Critical point table and split-generation verdicts for the monotone
    /// fibre of a toric variety given by a fan file.
    Fibre {
        file: PathBuf,
        /// Field characteristic (a prime not 2 or 3, or 0 for exact
        /// rationals).
        #[arg(long = "char")]
        characteristic: u64,
        /// Largest p^n the exhaustive critical scan may visit.
        #[arg(long, default_value_t = 10_000_000)]
        guard_scan: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long, default_value_t = 0xC0CE)]
        seed: u64,
    },
    /// The two explicit circle models: structure tables, Massey product,
    /// and the non-coboundary witness.
    Circle {
        #[arg(long)]
        config: CircleArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Hochschild cohomology of k\[u\]/(f): closed-form dimensions, optional
    /// bar-complex oracle, optional non-formality certificate.
    Hochschild {
        /// The polynomial f, e.g. "u^24+u^18+1".
        #[arg(long)]
        f: String,
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u64,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        /// Cross-check against the bar-complex oracle (k <= 3).
        #[arg(long)]
        oracle: bool,
        /// Largest algebra dimension the oracle accepts.
        #[arg(long, default_value_t = 5)]
        guard_dim: usize,
        /// Issue the non-formality certificate for the generator u^t.
        #[arg(long)]
        t: Option<u64>,
        /// Assert the geometric pairing input (recorded as an axiom).
        #[arg(long, default_value_t = true)]
        pairing_axiom: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Structure-relation checker and coboundary decider for an
    /// A-infinity algebra given by structure constants.
    AinfCheck {
        file: PathBuf,
        /// Check relations through this total arity (default: all stored).
        #[arg(long)]
        arity: Option<usize>,
        /// Cochain file for a coboundary decision.
        #[arg(long)]
        cochain: Option<PathBuf>,
        /// Truncation length for the coboundary decision (<= 2).
        #[arg(long, default_value_t = 1)]
        length: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CircleArg {
    A,
    B,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(CommandOutput, Format), CliError> {
    match cli.command {
        Command::RpReport {
            n_max,
            format,
            seed,
        } => Ok((cmd_rp_report(n_max, seed)?, format)),
        Command::Picard2 {
            file,
            inline,
            format,
            seed,
        } => {
            let instance: InstanceFile = match (file, inline) {
                (Some(path), None) => read_json(&path)?,
                (None, Some(text)) => serde_json::from_str(&text)
                    .map_err(|e| CliError::Input(format!("inline instance: {e}")))?,
                _ => {
                    return Err(CliError::Input(
                        "provide an instance file or --inline".to_string(),
                    ))
                }
            };
            Ok((cmd_picard2(&instance, seed)?, format))
        }
        Command::Fibre {
            file,
            characteristic,
            guard_scan,
            format,
            seed,
        } => {
            let fan: FanFile = read_json(&file)?;
            Ok((cmd_fibre(&fan, characteristic, guard_scan, seed)?, format))
        }
        Command::Circle { config, format } => {
            let cfg = match config {
                CircleArg::A => CircleConfig::A,
                CircleArg::B => CircleConfig::B,
            };
            Ok((cmd_circle(cfg)?, format))
        }
        Command::Hochschild {
            f,
            characteristic,
            k_max,
            oracle,
            guard_dim,
            t,
            pairing_axiom,
            format,
        } => Ok((
            cmd_hochschild(
                &f,
                characteristic,
                k_max,
                oracle,
                guard_dim,
                t,
                pairing_axiom,
            )?,
            format,
        )),
        Command::AinfCheck {
            file,
            arity,
            cochain,
            length,
            format,
        } => {
            let model: AInfFile = read_json(&file)?;
            let cochain_data: Option<CochainFile> = match cochain {
                Some(path) => Some(read_json(&path)?),
                None => None,
            };
            Ok((
                cmd_ainf_check(&model, arity, cochain_data.as_ref().map(|c| (c, length)))?,
                format,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((output, format)) => {
            match format {
                Format::Table => print!("{}", output.table),
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&output.json).expect("serializable")
                    )
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
