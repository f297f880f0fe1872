//! Experiment runner around `qwduet-core`: sweeps over `(t, τ)`, collects
//! correlation records and distribution dumps, and exports them as CSV or
//! JSON with deterministic, bit-reproducible formatting.

pub mod config;
pub mod export;
pub mod records;
pub mod run;

pub use config::{build_config, Cli, CliError, EngineKind, ExperimentConfig, Format, Observable};
pub use export::export_records;
pub use records::{
    AsymptoticsRow, CorrelationRecord, JointDump, MarginalDump, MomentumRow, RunOutcome,
};
pub use run::run_experiment;
