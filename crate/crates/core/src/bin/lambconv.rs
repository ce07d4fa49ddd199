use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lamb_conversion::config::{parse_config, ScenarioConfig};
use lamb_conversion::hydrogen::Channel;
use lamb_conversion::scenario::{self, Objective, SweepParam, SweepSpec};
use lamb_conversion::table::Record;
use lamb_conversion::Error;

/// Microwave-to-optical conversion in metastable hydrogen.
#[derive(Parser, Debug)]
#[command(name = "lambconv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the CGS constants in use.
    Constants,
    /// Print frequencies, dipoles and decay rates of a channel.
    Transition {
        /// fine_structure or lamb_shift
        channel: String,
    },
    /// Tabulate f(beta) and its two approximations.
    Fig1 {
        #[arg(long = "beta-max")]
        beta_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time series and summary for one scenario.
    Scenario {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Grid sweep of one parameter, reporting the maximizing point.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// flux, rho22_0, L, rho_H or detuning
        #[arg(long)]
        param: String,
        #[arg(long, allow_negative_numbers = true)]
        min: f64,
        #[arg(long, allow_negative_numbers = true)]
        max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        log: bool,
        /// eta_max_peak, pulse_energy or tau
        #[arg(long)]
        objective: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        summary: Option<PathBuf>,
    },
}

enum Failure {
    Model(Error),
    Io(String, io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Model(e)
    }
}

fn write_to(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(p.display().to_string(), e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io("stdout".into(), e)),
    }
}

fn write_summary(path: Option<&Path>, record: &Record) -> Result<(), Failure> {
    let text = record.render();
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(p.display().to_string(), e)),
        None => io::stderr()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io("stderr".into(), e)),
    }
}

fn load_config(path: &Path) -> Result<ScenarioConfig, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(path.display().to_string(), e))?;
    Ok(parse_config(&text)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Constants => write_to(None, &scenario::constants_record().render()),
        Command::Transition { channel } => {
            let channel: Channel = channel.parse()?;
            write_to(None, &scenario::transition_record(channel)?.render())
        }
        Command::Fig1 {
            beta_max,
            steps,
            out,
        } => write_to(
            out.as_deref(),
            &scenario::run_fig1(beta_max, steps)?.to_csv(),
        ),
        Command::Scenario {
            config,
            out,
            summary,
        } => {
            let cfg = load_config(&config)?;
            let result = scenario::run_scenario(&cfg)?;
            let out = out.or_else(|| cfg.output.clone());
            write_to(out.as_deref(), &result.table.to_csv())?;
            write_summary(summary.as_deref(), &result.summary)
        }
        Command::Sweep {
            config,
            param,
            min,
            max,
            steps,
            log,
            objective,
            out,
            summary,
        } => {
            let cfg = load_config(&config)?;
            let spec = SweepSpec {
                param: param.parse::<SweepParam>()?,
                min,
                max,
                steps,
                log,
                objective: objective.parse::<Objective>()?,
            };
            let result = scenario::run_sweep(&cfg, &spec)?;
            write_to(out.as_deref(), &result.table().to_csv())?;
            write_summary(summary.as_deref(), &result.argmax_record())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Model(e)) => {
            eprintln!("error: {e}");
            if e.is_input_error() {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
        Err(Failure::Io(what, e)) => {
            eprintln!("error: {what}: {e}");
            ExitCode::from(1)
        }
    }
}
