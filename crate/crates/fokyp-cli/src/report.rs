//! JSON report schema.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub command: String,
    pub norm: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<BracketReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lmi: Option<LmiReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stability: Option<StabilityReportOut>,
    /// Wall-clock duration; the single field excluded from determinism
    /// guarantees.
    pub timing_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BracketReport {
    pub lower: f64,
    pub upper: f64,
    pub converged: bool,
    pub bisections: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub peak_omega: f64,
    pub peak_sigma: f64,
    pub samples: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct LmiReport {
    pub feasible: bool,
    pub best_margin: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilityReportOut {
    pub stable: bool,
    /// Eigenvalues of A as (re, im) pairs, ascending by real part.
    pub eigenvalues: Vec<[f64; 2]>,
    pub min_margin: f64,
}
