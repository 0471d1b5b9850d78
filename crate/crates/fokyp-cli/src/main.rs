use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fokyp_cli::config::Command as AnalysisCommand;
use fokyp_cli::jsonfmt::to_json_string;
use fokyp_cli::run::{emit_eigs_csv, emit_sweep_csv, CliError, EXIT_UNDETERMINED};
use fokyp_cli::{run_analysis, AnalysisConfig};

/// Gain-bound certification for fractional-order state-space models.
#[derive(Parser)]
#[command(name = "fokyp", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether a gain bound delta holds over the configured range.
    Check(CommonArgs),
    /// Bracket the norm by bisection between oracle and LMI certificates.
    Norm(CommonArgs),
    /// Tabulate the gain over the configured range.
    Sweep(CommonArgs),
    /// Report the fractional stability verdict and the spectrum of A.
    Stability(CommonArgs),
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Path to the JSON analysis configuration.
    #[arg(long)]
    config: PathBuf,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write CSV plot data here (sweep table, or eigenvalue scatter for
    /// the stability subcommand).
    #[arg(long)]
    plot: Option<PathBuf>,
    /// Override the solver seed from the config.
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, args) = match &cli.command {
        Cmd::Check(a) => (AnalysisCommand::Check, a),
        Cmd::Norm(a) => (AnalysisCommand::Norm, a),
        Cmd::Sweep(a) => (AnalysisCommand::Sweep, a),
        Cmd::Stability(a) => (AnalysisCommand::Stability, a),
    };
    match execute(cmd, args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{}", e.to_json_line());
            ExitCode::from(e.exit_code as u8)
        }
    }
}

fn execute(cmd: AnalysisCommand, args: &CommonArgs) -> Result<i32, CliError> {
    let raw = fs::read_to_string(&args.config)
        .map_err(|e| CliError::invalid(format!("cannot read config: {e}")))?;
    let config: AnalysisConfig = serde_json::from_str(&raw)
        .map_err(|e| CliError::invalid(format!("config parse error: {e}")))?;

    let (report, sweep) = run_analysis(&config, cmd, args.seed)?;

    if let Some(plot) = &args.plot {
        let file = fs::File::create(plot)
            .map_err(|e| CliError::invalid(format!("cannot write plot file: {e}")))?;
        match cmd {
            AnalysisCommand::Stability => {
                let sys = config.model()?;
                let st = sys.stability().map_err(CliError::from_engine)?;
                emit_eigs_csv(&st.eigenvalues, file)
            }
            _ => {
                let sweep = sweep.as_ref().ok_or_else(|| {
                    CliError::invalid("no sweep data available for plotting".to_string())
                })?;
                emit_sweep_csv(sweep, file)
            }
        }
        .map_err(|e| CliError::invalid(format!("cannot write plot file: {e}")))?;
    }

    let json = to_json_string(&report)
        .map_err(|e| CliError::invalid(format!("report serialization failed: {e}")))?;
    match &args.out {
        Some(path) => fs::write(path, json.as_bytes())
            .map_err(|e| CliError::invalid(format!("cannot write report: {e}")))?,
        None => println!("{json}"),
    }

    Ok(if report.verdict.as_deref() == Some("undetermined") {
        EXIT_UNDETERMINED
    } else {
        0
    })
}
