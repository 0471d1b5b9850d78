//! Dispatch, verdict policy, exit codes, and plot emission.

use std::io::Write;
use std::time::Instant;

use fokyp::lmi::{build_hinf_lmi, build_linf_lmi};
use fokyp::oracle::sweep_linf;
use fokyp::sdp::{compute_norm, solve_feasibility, AnalysisKind, Verdict};
use fokyp::{Complex64, Error, SweepResult};

use crate::config::{AnalysisConfig, Command, ModeConfig, NormKind};
use crate::jsonfmt::format_float;
use crate::report::{AnalysisReport, BracketReport, LmiReport, OracleReport, StabilityReportOut};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;

/// Error carrying its exit code and a machine-readable tag.
#[derive(Debug)]
pub struct CliError {
    pub exit_code: i32,
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: String) -> Self {
        Self {
            exit_code: EXIT_INVALID_INPUT,
            code: "invalid_input",
            message,
        }
    }

    pub fn from_engine_input(e: Error) -> Self {
        Self::from_engine(e)
    }

    pub fn from_engine(e: Error) -> Self {
        let (exit_code, code) = match e {
            Error::NumericalFailure | Error::NoConvergence | Error::Singular => {
                (EXIT_NUMERICAL, "numerical_failure")
            }
            Error::NoFeasibleUpperBound => (EXIT_UNDETERMINED, "no_feasible_upper_bound"),
            Error::Unstable => (EXIT_INVALID_INPUT, "unstable_system"),
            _ => (EXIT_INVALID_INPUT, "invalid_input"),
        };
        Self {
            exit_code,
            code,
            message: format!("{e}"),
        }
    }

    /// The single-line JSON emitted on stderr for every failure path.
    pub fn to_json_line(&self) -> String {
        format!(
            "{{\"error\": \"{}\", \"exit_code\": {}, \"message\": {}}}",
            self.code,
            self.exit_code,
            serde_json::to_string(&self.message).unwrap_or_else(|_| "\"\"".into())
        )
    }
}

/// Run one subcommand against a parsed config. Returns the report and a
/// sweep (when one was computed) for optional plot emission.
pub fn run_analysis(
    config: &AnalysisConfig,
    command: Command,
    seed_override: Option<u64>,
) -> Result<(AnalysisReport, Option<SweepResult>), CliError> {
    config.validate()?;
    let start = Instant::now();
    let sys = config.model()?;
    let range = config.range();
    let grid = config.grid();
    let opts = config.solver_options(seed_override);

    let mut report = AnalysisReport {
        command: command.name().to_string(),
        norm: match config.analysis.norm {
            NormKind::Linf => "linf".to_string(),
            NormKind::Hinf => "hinf".to_string(),
        },
        seed: opts.seed,
        verdict: None,
        delta: None,
        bracket: None,
        oracle: None,
        lmi: None,
        stability: None,
        timing_ms: 0.0,
    };
    let mut sweep_out = None;

    match command {
        Command::Stability => {
            let st = sys.stability().map_err(CliError::from_engine)?;
            report.stability = Some(stability_out(&st));
        }
        Command::Sweep => {
            let sweep = sweep_linf(&sys, &range, &grid).map_err(CliError::from_engine)?;
            report.oracle = Some(oracle_out(&sweep));
            sweep_out = Some(sweep);
        }
        Command::Check => {
            let ModeConfig::Check { delta } = config.analysis.mode else {
                return Err(CliError::invalid(
                    "check subcommand requires mode = check{delta}".to_string(),
                ));
            };
            report.delta = Some(delta);
            if config.analysis.norm == NormKind::Hinf {
                let st = sys.stability().map_err(CliError::from_engine)?;
                report.stability = Some(stability_out(&st));
                if !st.stable {
                    return Err(CliError::from_engine(Error::Unstable));
                }
            }
            let sweep = sweep_linf(&sys, &range, &grid).map_err(CliError::from_engine)?;
            report.oracle = Some(oracle_out(&sweep));
            if sweep.peak_sigma >= delta {
                // A sampled frequency already exceeds the bound: refuted,
                // no LMI needed.
                report.verdict = Some("violated".to_string());
            } else {
                let prob = match config.analysis.norm {
                    NormKind::Linf => {
                        build_linf_lmi(&sys, range, delta).map_err(CliError::from_engine)?
                    }
                    NormKind::Hinf => {
                        build_hinf_lmi(&sys, delta).map_err(CliError::from_engine)?
                    }
                };
                let out = solve_feasibility(&prob, &opts).map_err(CliError::from_engine)?;
                report.lmi = Some(LmiReport {
                    feasible: out.verdict == Verdict::Feasible,
                    best_margin: out.best_margin,
                    iterations: out.iterations,
                });
                report.verdict = Some(match out.verdict {
                    Verdict::Feasible => "holds".to_string(),
                    Verdict::NotProven => "undetermined".to_string(),
                });
            }
            sweep_out = Some(sweep);
        }
        Command::Norm => {
            let ModeConfig::Compute { tol } = config.analysis.mode else {
                return Err(CliError::invalid(
                    "norm subcommand requires mode = compute{tol}".to_string(),
                ));
            };
            let kind = match config.analysis.norm {
                NormKind::Linf => AnalysisKind::Linf(range),
                NormKind::Hinf => AnalysisKind::Hinf,
            };
            let sweep = sweep_linf(&sys, &range, &grid).map_err(CliError::from_engine)?;
            report.oracle = Some(oracle_out(&sweep));
            let bracket =
                compute_norm(&sys, &kind, tol, &opts, &grid).map_err(CliError::from_engine)?;
            report.bracket = Some(BracketReport {
                lower: bracket.lower,
                upper: bracket.upper,
                converged: bracket.converged,
                bisections: bracket.bisections,
            });
            sweep_out = Some(sweep);
        }
    }
    report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok((report, sweep_out))
}

fn oracle_out(sweep: &SweepResult) -> OracleReport {
    OracleReport {
        peak_omega: sweep.peak_omega,
        peak_sigma: sweep.peak_sigma,
        samples: sweep.omegas.len(),
        skipped: sweep.skipped.len(),
    }
}

fn stability_out(st: &fokyp::StabilityReport) -> StabilityReportOut {
    let mut eigs: Vec<[f64; 2]> = st.eigenvalues.iter().map(|l| [l.re, l.im]).collect();
    eigs.sort_by(|x, y| x[0].partial_cmp(&y[0]).unwrap().then(x[1].partial_cmp(&y[1]).unwrap()));
    StabilityReportOut {
        stable: st.stable,
        eigenvalues: eigs,
        min_margin: st.min_margin,
    }
}

/// Two-column CSV of a sweep: header then one `omega,sigma_max` row per
/// sample. The tabulated maximum equals the report's claimed peak.
pub fn emit_sweep_csv<W: Write>(sweep: &SweepResult, mut w: W) -> std::io::Result<()> {
    writeln!(w, "omega,sigma_max")?;
    for (omega, sigma) in sweep.omegas.iter().zip(&sweep.sigmas) {
        writeln!(w, "{},{}", format_float(*omega), format_float(*sigma))?;
    }
    Ok(())
}

/// Eigenvalue scatter variant: header then one `re,im` row per eigenvalue.
pub fn emit_eigs_csv<W: Write>(eigs: &[Complex64], mut w: W) -> std::io::Result<()> {
    writeln!(w, "re,im")?;
    for l in eigs {
        writeln!(w, "{},{}", format_float(l.re), format_float(l.im))?;
    }
    Ok(())
}
