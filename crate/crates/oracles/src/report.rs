//! Machine-readable reports from oracle batches and the acceptance suite.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    /// Exact count of individual checks run.
    pub checks: u64,
    /// Exact count of violations observed (never a sampled estimate).
    pub violations: u64,
    /// Measured constants worth reporting (output-size constants, observed
    /// error ratios, scaling slopes).
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub constants: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub details: String,
    /// Wall-clock seconds; excluded from serialized output so reports stay
    /// byte-identical across runs (timings go to stderr).
    #[serde(skip)]
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}] {} - checks: {}, violations: {}{}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.checks,
            self.violations,
            if self.details.is_empty() {
                String::new()
            } else {
                format!(" ({})", self.details)
            }
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleReport {
    pub criteria: Vec<CriterionResult>,
    pub all_passed: bool,
}

impl OracleReport {
    pub fn new(criteria: Vec<CriterionResult>) -> Self {
        let all_passed = criteria.iter().all(|c| c.passed);
        OracleReport {
            criteria,
            all_passed,
        }
    }
}
