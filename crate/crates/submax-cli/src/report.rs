//! The self-contained run report: everything needed to re-verify a run.

use serde::{Deserialize, Serialize};
use submax::{MarginalBounds, RunTrace, SolverConfig};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepSummary {
    pub t: f64,
    pub base: Vec<usize>,
    pub threshold_passes: usize,
    pub value_calls: u64,
    pub independence_calls: u64,
    pub extension_value: f64,
    pub max_coord: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub config: SolverConfig,
    pub bounds: MarginalBounds,
    pub rank: usize,
    pub samples_per_estimate: u64,
    pub final_point: Vec<f64>,
    /// Multilinear extension at the final point; exact when `n <= 20`.
    pub final_value: f64,
    pub final_value_exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_value_stderr: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rounded_set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rounded_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub opt_value: Option<f64>,
    /// `final_value / opt_value`; present only when the optimum was computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    pub value_calls: u64,
    pub independence_calls: u64,
    pub predicted_value_calls: u64,
    pub predicted_independence_calls: u64,
    pub steps: Vec<StepSummary>,
}

pub fn step_summaries(trace: &RunTrace) -> Vec<StepSummary> {
    trace
        .steps
        .iter()
        .map(|s| StepSummary {
            t: s.t,
            base: s.base.clone(),
            threshold_passes: s.thresholds.len(),
            value_calls: s.value_calls,
            independence_calls: s.independence_calls,
            extension_value: s.extension_value,
            max_coord: s.max_coord,
        })
        .collect()
}
