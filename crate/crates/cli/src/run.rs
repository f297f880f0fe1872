//! Sweep execution: one cell per `τ`, cells run in parallel, results are
//! assembled in deterministic `(t-major, τ-minor)` order.

use qwduet_core::classical::{
    classical_joint_distribution, classical_step, initial_classical_state,
};
use qwduet_core::correlation::{
    joint_distribution, marginals, measurement_induced_disturbance, mutual_information,
    position_moments, quantum_mutual_information, reduce_to_walkers,
};
use qwduet_core::lattice::{apply_step, initial_state, StepParameters};
use qwduet_core::momentum::{asymptotics_record, moment_sweep};

use crate::config::{ExperimentConfig, Observable, Result, DEFAULT_ASYMPTOTICS_GRID};
use crate::records::{
    AsymptoticsRow, CorrelationRecord, JointDump, MarginalDump, MomentumRow, RunOutcome,
};

struct CellOutput {
    quantum: Vec<CorrelationRecord>,
    classical: Vec<CorrelationRecord>,
    momentum: Vec<MomentumRow>,
    asymptotics: Option<AsymptoticsRow>,
    joint: Option<JointDump>,
    marginals: Vec<MarginalDump>,
    warnings: Vec<String>,
}

fn coherent_cell(cfg: &ExperimentConfig, tau: f64, out: &mut CellOutput) -> Result<()> {
    let wants_rows = [Observable::Moments, Observable::Mi, Observable::Qmi, Observable::Mid]
        .iter()
        .any(|&o| cfg.wants(o));
    let wants_dumps = cfg.wants(Observable::Joint) || cfg.wants(Observable::Marginals);
    if !wants_rows && !wants_dumps {
        return Ok(());
    }

    let params = StepParameters::new(tau)?;
    let mut state = initial_state(cfg.steps)?;
    for t in 1..=cfg.steps {
        state = apply_step(&state, params)?;
        let last = t == cfg.steps;
        if !wants_rows && !(wants_dumps && last) {
            continue;
        }
        let rw = reduce_to_walkers(&state, tau);
        let jd = joint_distribution(&rw);

        if wants_rows {
            let mut row = CorrelationRecord::empty(t, tau);
            if cfg.wants(Observable::Moments) {
                let (m1, m2) = marginals(&jd);
                let (p1, p2) = (position_moments(&m1), position_moments(&m2));
                row.mean1 = Some(p1.mean);
                row.mean2 = Some(p2.mean);
                row.var1 = Some(p1.variance);
                row.var2 = Some(p2.variance);
            }
            if cfg.wants(Observable::Mi) {
                row.mi_bits = Some(mutual_information(&jd));
            }
            if cfg.wants(Observable::Qmi) || cfg.wants(Observable::Mid) {
                let qmi = quantum_mutual_information(&rw)?;
                if cfg.wants(Observable::Qmi) {
                    row.qmi_bits = Some(qmi);
                }
                if cfg.wants(Observable::Mid) {
                    let mid = measurement_induced_disturbance(&rw)?;
                    // fill all three so every row satisfies
                    // mid = qmi − dephased exactly
                    row.qmi_bits = Some(qmi);
                    row.classical_mi_of_dephased_bits = Some(mid.dephased_mi_bits);
                    row.mid_bits = Some(qmi - mid.dephased_mi_bits);
                    for w in mid.warnings {
                        out.warnings.push(format!("t={t} tau={tau}: {w}"));
                    }
                }
            }
            out.quantum.push(row);
        }

        if last && cfg.wants(Observable::Joint) {
            out.joint = Some(JointDump { t, tau, entries: jd.support().collect() });
        }
        if last && cfg.wants(Observable::Marginals) {
            let (m1, m2) = marginals(&jd);
            for (walker, m) in [(1, m1), (2, m2)] {
                out.marginals.push(MarginalDump {
                    t,
                    tau,
                    walker,
                    entries: m.support().collect(),
                });
            }
        }
    }
    Ok(())
}

fn classical_cell(cfg: &ExperimentConfig, swap_prob: f64, out: &mut CellOutput) -> Result<()> {
    if !cfg.wants(Observable::Classical) {
        return Ok(());
    }
    let mut state = initial_classical_state(swap_prob)?;
    for t in 1..=cfg.steps {
        state = classical_step(&state);
        let jd = classical_joint_distribution(&state);
        let (m1, m2) = marginals(&jd);
        let (p1, p2) = (position_moments(&m1), position_moments(&m2));
        let mut row = CorrelationRecord::empty(t, swap_prob);
        row.mi_bits = Some(mutual_information(&jd));
        row.mean1 = Some(p1.mean);
        row.mean2 = Some(p2.mean);
        row.var1 = Some(p1.variance);
        row.var2 = Some(p2.variance);
        out.classical.push(row);
    }
    Ok(())
}

fn momentum_cell(cfg: &ExperimentConfig, tau: f64, out: &mut CellOutput) -> Result<()> {
    if cfg.wants(Observable::MomentumMoments) {
        let n = cfg.quadrature.unwrap_or(4 * cfg.steps + 2);
        for rec in moment_sweep(cfg.steps, tau, n)? {
            out.momentum.push(MomentumRow {
                t: rec.t,
                tau: rec.tau,
                mean1: rec.mean1,
                mean2: rec.mean2,
                second1: rec.second1,
                second2: rec.second2,
                var1: rec.var1,
                var2: rec.var2,
            });
        }
    }
    if cfg.wants(Observable::Asymptotics) {
        let n = cfg.quadrature.unwrap_or(DEFAULT_ASYMPTOTICS_GRID);
        let rec = asymptotics_record(tau, n, cfg.cutoff)?;
        out.asymptotics = Some(AsymptoticsRow {
            tau: rec.tau,
            grid: rec.grid,
            cutoff: rec.cutoff,
            slope1: rec.slope1,
            slope2: rec.slope2,
            c2_1: rec.c2_1,
            c2_2: rec.c2_2,
            fixed_dim_min: rec.fixed_dim_min,
            fixed_dim_max: rec.fixed_dim_max,
        });
    }
    Ok(())
}

fn run_cell(cfg: &ExperimentConfig, tau: f64) -> Result<CellOutput> {
    let mut out = CellOutput {
        quantum: Vec::new(),
        classical: Vec::new(),
        momentum: Vec::new(),
        asymptotics: None,
        joint: None,
        marginals: Vec::new(),
        warnings: Vec::new(),
    };
    coherent_cell(cfg, tau, &mut out)?;
    classical_cell(cfg, tau, &mut out)?;
    momentum_cell(cfg, tau, &mut out)?;
    Ok(out)
}

/// Run every `(t ≤ steps, τ ∈ tau_grid)` cell requested by the config.
/// Cells are independent and run on their own threads; assembly interleaves
/// them back into t-major, τ-minor order.
pub fn run_experiment(cfg: ExperimentConfig) -> Result<RunOutcome> {
    let cells: Vec<CellOutput> = std::thread::scope(|scope| {
        let handles: Vec<_> = cfg
            .tau_grid
            .iter()
            .map(|&tau| scope.spawn({
                let cfg = &cfg;
                move || run_cell(cfg, tau)
            }))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep cell panicked"))
            .collect::<Result<Vec<_>>>()
    })?;

    let mut quantum = Vec::new();
    let mut classical = Vec::new();
    let mut momentum = Vec::new();
    for t in 0..cfg.steps {
        for cell in &cells {
            if let Some(&row) = cell.quantum.get(t) {
                quantum.push(row);
            }
            if let Some(&row) = cell.classical.get(t) {
                classical.push(row);
            }
            if let Some(&row) = cell.momentum.get(t) {
                momentum.push(row);
            }
        }
    }
    let asymptotics: Vec<_> = cells.iter().filter_map(|c| c.asymptotics).collect();
    let joint_dumps: Vec<_> = cells.iter().filter_map(|c| c.joint.clone()).collect();
    let marginal_dumps: Vec<_> = cells.iter().flat_map(|c| c.marginals.clone()).collect();
    let warnings: Vec<_> = cells.iter().flat_map(|c| c.warnings.clone()).collect();

    // without coherent rows the classical table is the main one
    let (records, classical_records) = if quantum.is_empty() {
        (classical, Vec::new())
    } else {
        (quantum, classical)
    };

    Ok(RunOutcome {
        config: cfg,
        records,
        classical_records,
        momentum_records: momentum,
        asymptotics,
        joint_dumps,
        marginal_dumps,
        warnings,
    })
}
