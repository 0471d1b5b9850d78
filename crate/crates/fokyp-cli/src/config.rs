//! JSON config schema and conversion into engine types.

use fokyp::{CMat, FosModel, FreqRange, GridSpec, SolverOptions};
use serde::Deserialize;

use crate::run::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    Norm,
    Sweep,
    Stability,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Norm => "norm",
            Command::Sweep => "sweep",
            Command::Stability => "stability",
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisConfig {
    pub system: SystemConfig,
    pub analysis: AnalysisBlock,
    #[serde(default)]
    pub solver: SolverBlock,
    #[serde(default)]
    pub oracle: OracleBlock,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemConfig {
    pub a: Vec<Vec<f64>>,
    pub b: Vec<Vec<f64>>,
    pub c: Vec<Vec<f64>>,
    pub d: Vec<Vec<f64>>,
    pub nu: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisBlock {
    pub norm: NormKind,
    #[serde(default = "default_range")]
    pub frequency_range: RangeConfig,
    pub mode: ModeConfig,
}

fn default_range() -> RangeConfig {
    RangeConfig::Entire
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum NormKind {
    Linf,
    Hinf,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RangeConfig {
    Low { omega_l: f64 },
    Middle { omega_1: f64, omega_2: f64 },
    High { omega_h: f64 },
    Entire,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ModeConfig {
    Check { delta: f64 },
    Compute { tol: f64 },
}

#[derive(Debug, Clone, Copy, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct SolverBlock {
    pub margin: Option<f64>,
    pub max_iter: Option<usize>,
    pub restarts: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct OracleBlock {
    pub grid_points: Option<usize>,
    pub omega_min: Option<f64>,
    pub omega_max: Option<f64>,
}

fn to_cmat(rows: &[Vec<f64>], what: &str) -> Result<CMat, CliError> {
    if rows.is_empty() {
        return Err(CliError::invalid(format!("matrix {what} is empty")));
    }
    let cols = rows[0].len();
    if cols == 0 || rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::invalid(format!("matrix {what} is ragged or empty")));
    }
    let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
    Ok(CMat::from_real_rows(&refs))
}

impl AnalysisConfig {
    pub fn model(&self) -> Result<FosModel, CliError> {
        let a = to_cmat(&self.system.a, "a")?;
        let b = to_cmat(&self.system.b, "b")?;
        let c = to_cmat(&self.system.c, "c")?;
        let d = to_cmat(&self.system.d, "d")?;
        FosModel::new(a, b, c, d, self.system.nu).map_err(CliError::from_engine_input)
    }

    pub fn range(&self) -> FreqRange {
        match self.analysis.frequency_range {
            RangeConfig::Low { omega_l } => FreqRange::Low { omega_l },
            RangeConfig::Middle { omega_1, omega_2 } => FreqRange::Middle { omega_1, omega_2 },
            RangeConfig::High { omega_h } => FreqRange::High { omega_h },
            RangeConfig::Entire => FreqRange::Entire,
        }
    }

    pub fn grid(&self) -> GridSpec {
        let d = GridSpec::default();
        GridSpec {
            points: self.oracle.grid_points.unwrap_or(d.points),
            omega_min: self.oracle.omega_min.unwrap_or(d.omega_min),
            omega_max: self.oracle.omega_max.unwrap_or(d.omega_max),
        }
    }

    pub fn solver_options(&self, seed_override: Option<u64>) -> SolverOptions {
        let d = SolverOptions::default();
        SolverOptions {
            margin: self.solver.margin,
            max_iter: self.solver.max_iter.unwrap_or(d.max_iter),
            restarts: self.solver.restarts.unwrap_or(d.restarts),
            seed: seed_override.or(self.solver.seed).unwrap_or(d.seed),
        }
    }

    /// Structural checks beyond what serde enforces.
    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.system.nu > 0.0 && self.system.nu < 2.0) {
            return Err(CliError::invalid(format!(
                "nu must lie in (0, 2), got {}",
                self.system.nu
            )));
        }
        if self.analysis.norm == NormKind::Hinf
            && !matches!(self.analysis.frequency_range, RangeConfig::Entire)
        {
            return Err(CliError::invalid(
                "hinf analysis requires the entire frequency range".to_string(),
            ));
        }
        match self.analysis.mode {
            ModeConfig::Check { delta } if delta <= 0.0 => {
                Err(CliError::invalid(format!("delta must be positive, got {delta}")))
            }
            ModeConfig::Compute { tol } if !(tol > 0.0 && tol < 1.0) => {
                Err(CliError::invalid(format!("tol must lie in (0, 1), got {tol}")))
            }
            _ => Ok(()),
        }
    }
}
