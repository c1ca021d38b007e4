//! Machine-readable verification reports.

use serde::Serialize;

/// One named check with its measured deviation and tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckResult {
    pub fn new(name: &str, measured: f64, tolerance: f64) -> Self {
        CheckResult {
            name: name.to_string(),
            measured,
            tolerance,
            pass: measured.is_finite() && measured <= tolerance,
        }
    }
}

/// Aggregated verification outcome for one parameter set.
///
/// Tolerance misses are reported, never panicked on.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub p: f64,
    pub s_hat: f64,
    pub levels: usize,
    pub grid_half_width: f64,
    pub grid_points: usize,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl FamilyReport {
    pub fn finish(mut self) -> Self {
        self.pass = self.checks.iter().all(|c| c.pass);
        self
    }
}
