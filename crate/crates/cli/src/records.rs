//! Serializable output rows and the bundle a run produces.

use serde::Serialize;

use crate::config::ExperimentConfig;

/// One sweep cell's correlation measures and marginal moments. Fields not
/// requested stay `None` (serialized as `NaN` in CSV, `null` in JSON).
/// Whenever all three are present, `mid_bits` equals
/// `qmi_bits − classical_mi_of_dephased_bits` exactly.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CorrelationRecord {
    pub t: usize,
    pub tau: f64,
    pub mi_bits: Option<f64>,
    pub qmi_bits: Option<f64>,
    pub mid_bits: Option<f64>,
    pub classical_mi_of_dephased_bits: Option<f64>,
    pub mean1: Option<f64>,
    pub mean2: Option<f64>,
    pub var1: Option<f64>,
    pub var2: Option<f64>,
}

impl CorrelationRecord {
    pub fn empty(t: usize, tau: f64) -> Self {
        CorrelationRecord {
            t,
            tau,
            mi_bits: None,
            qmi_bits: None,
            mid_bits: None,
            classical_mi_of_dephased_bits: None,
            mean1: None,
            mean2: None,
            var1: None,
            var2: None,
        }
    }
}

/// Exact momentum-space moments of both walkers at one `(t, τ)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct MomentumRow {
    pub t: usize,
    pub tau: f64,
    pub mean1: f64,
    pub mean2: f64,
    pub second1: f64,
    pub second2: f64,
    pub var1: f64,
    pub var2: f64,
}

/// Long-time ballistic coefficients at one `τ`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct AsymptoticsRow {
    pub tau: f64,
    pub grid: usize,
    pub cutoff: f64,
    pub slope1: f64,
    pub slope2: f64,
    pub c2_1: f64,
    pub c2_2: f64,
    pub fixed_dim_min: usize,
    pub fixed_dim_max: usize,
}

/// Sparse joint position distribution at one `(t, τ)`: `(x, y, p)` triplets
/// on the parity support, lexicographically sorted.
#[derive(Clone, Debug, Serialize)]
pub struct JointDump {
    pub t: usize,
    pub tau: f64,
    pub entries: Vec<(i64, i64, f64)>,
}

/// One walker's marginal at one `(t, τ)`: `(x, p)` pairs in ascending `x`.
#[derive(Clone, Debug, Serialize)]
pub struct MarginalDump {
    pub t: usize,
    pub tau: f64,
    pub walker: usize,
    pub entries: Vec<(i64, f64)>,
}

/// Everything a run computed, paired with the config that produced it.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub config: ExperimentConfig,
    /// Main record table: the coherent-walk records, or the classical
    /// records when no coherent observable was requested.
    pub records: Vec<CorrelationRecord>,
    /// Classical baseline records when they accompany coherent ones.
    pub classical_records: Vec<CorrelationRecord>,
    pub momentum_records: Vec<MomentumRow>,
    pub asymptotics: Vec<AsymptoticsRow>,
    pub joint_dumps: Vec<JointDump>,
    pub marginal_dumps: Vec<MarginalDump>,
    /// `t=…, tau=…:`-prefixed diagnostics (e.g. degenerate dephasing bases).
    pub warnings: Vec<String>,
}
