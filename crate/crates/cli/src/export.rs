//! Deterministic serialization. Every real is written as `{:.16e}` — 17
//! significant digits, enough to round-trip `f64` bit-exactly — so two runs
//! of the same config produce byte-identical files.
//!
//! CSV keeps one table per file: the main table at the output path, every
//! other table in a sidecar named `<stem>.<kind>[…].csv`. JSON embeds
//! everything in a single document. Warnings go into `#`-prefixed comment
//! lines right after the CSV header, and into `meta.warnings` in JSON.

use std::io;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::{CliError, Format, Result};
use crate::records::{
    AsymptoticsRow, CorrelationRecord, JointDump, MarginalDump, MomentumRow, RunOutcome,
};

pub const CORRELATION_HEADER: &str =
    "t,tau,mi_bits,qmi_bits,mid_bits,classical_mi_of_dephased_bits,mean1,mean2,var1,var2";
pub const MOMENTUM_HEADER: &str = "t,tau,mean1,mean2,second1,second2,var1,var2";
pub const ASYMPTOTICS_HEADER: &str =
    "tau,grid,cutoff,slope1,slope2,c2_1,c2_2,fixed_dim_min,fixed_dim_max";

/// 17 significant digits: the smallest count that round-trips every f64.
pub fn float17(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt17(v: Option<f64>) -> String {
    v.map(float17).unwrap_or_else(|| "NaN".to_string())
}

fn warning_comments(warnings: &[String]) -> String {
    warnings.iter().map(|w| format!("# {w}\n")).collect()
}

pub fn correlation_csv(records: &[CorrelationRecord], warnings: &[String]) -> String {
    let mut s = format!("{CORRELATION_HEADER}\n{}", warning_comments(warnings));
    for r in records {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.t,
            float17(r.tau),
            opt17(r.mi_bits),
            opt17(r.qmi_bits),
            opt17(r.mid_bits),
            opt17(r.classical_mi_of_dephased_bits),
            opt17(r.mean1),
            opt17(r.mean2),
            opt17(r.var1),
            opt17(r.var2),
        ));
    }
    s
}

pub fn momentum_csv(records: &[MomentumRow]) -> String {
    let mut s = format!("{MOMENTUM_HEADER}\n");
    for r in records {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.t,
            float17(r.tau),
            float17(r.mean1),
            float17(r.mean2),
            float17(r.second1),
            float17(r.second2),
            float17(r.var1),
            float17(r.var2),
        ));
    }
    s
}

pub fn asymptotics_csv(rows: &[AsymptoticsRow]) -> String {
    let mut s = format!("{ASYMPTOTICS_HEADER}\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            float17(r.tau),
            r.grid,
            float17(r.cutoff),
            float17(r.slope1),
            float17(r.slope2),
            float17(r.c2_1),
            float17(r.c2_2),
            r.fixed_dim_min,
            r.fixed_dim_max,
        ));
    }
    s
}

pub fn joint_csv(dump: &JointDump) -> String {
    let mut s = String::from("x,y,p\n");
    for &(x, y, p) in &dump.entries {
        s.push_str(&format!("{x},{y},{}\n", float17(p)));
    }
    s
}

pub fn marginal_csv(dump: &MarginalDump) -> String {
    let mut s = String::from("x,p\n");
    for &(x, p) in &dump.entries {
        s.push_str(&format!("{x},{}\n", float17(p)));
    }
    s
}

/// Config echo plus provenance for the JSON document.
#[derive(Serialize)]
struct Meta<'a> {
    version: &'static str,
    command: &'static str,
    steps: usize,
    tau_grid: &'a [f64],
    observables: Vec<&'static str>,
    format: &'static str,
    out: String,
    quadrature: Option<usize>,
    cutoff: f64,
    warnings: &'a [String],
}

#[derive(Serialize)]
struct Document<'a> {
    meta: Meta<'a>,
    records: &'a [CorrelationRecord],
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    classical_records: &'a [CorrelationRecord],
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    momentum_records: &'a [MomentumRow],
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    asymptotics: &'a [AsymptoticsRow],
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    joint_distributions: &'a [JointDump],
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    marginal_distributions: &'a [MarginalDump],
}

/// `serde_json` formatter that renders every finite real as `{:.16e}`
/// (non-finite reals become `null` before the formatter is consulted).
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

fn json_document(outcome: &RunOutcome) -> String {
    let cfg = &outcome.config;
    let doc = Document {
        meta: Meta {
            version: env!("CARGO_PKG_VERSION"),
            command: cfg.command.name(),
            steps: cfg.steps,
            tau_grid: &cfg.tau_grid,
            observables: cfg.observables.iter().map(|o| o.name()).collect(),
            format: cfg.format.extension(),
            out: cfg.out.display().to_string(),
            quadrature: cfg.quadrature,
            cutoff: cfg.cutoff,
            warnings: &outcome.warnings,
        },
        records: &outcome.records,
        classical_records: &outcome.classical_records,
        momentum_records: &outcome.momentum_records,
        asymptotics: &outcome.asymptotics,
        joint_distributions: &outcome.joint_dumps,
        marginal_distributions: &outcome.marginal_dumps,
    };
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SciFormatter);
    doc.serialize(&mut ser).expect("in-memory JSON serialization cannot fail");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serialized JSON is UTF-8")
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// `<stem>.<suffix>.<ext>` next to the main output file.
fn sidecar_path(out: &Path, suffix: &str, ext: &str) -> PathBuf {
    let stem = out.file_stem().unwrap_or_default().to_string_lossy();
    out.with_file_name(format!("{stem}.{suffix}.{ext}"))
}

/// Write the outcome of a run: the main table at `path`, everything else in
/// sidecar files (CSV) or inline (JSON). Returns every path written, main
/// file first.
pub fn export_records(outcome: &RunOutcome, format: Format, path: &Path) -> Result<Vec<PathBuf>> {
    let mut written = vec![path.to_path_buf()];
    match format {
        Format::Json => {
            write_file(path, &json_document(outcome))?;
        }
        Format::Csv => {
            // the most primary nonempty table owns the output path
            let main = if !outcome.records.is_empty()
                || (outcome.momentum_records.is_empty() && outcome.asymptotics.is_empty())
            {
                correlation_csv(&outcome.records, &outcome.warnings)
            } else if !outcome.momentum_records.is_empty() {
                momentum_csv(&outcome.momentum_records)
            } else {
                asymptotics_csv(&outcome.asymptotics)
            };
            write_file(path, &main)?;

            let mut sidecar = |suffix: &str, contents: String| -> Result<()> {
                let p = sidecar_path(path, suffix, "csv");
                write_file(&p, &contents)?;
                written.push(p);
                Ok(())
            };
            if !outcome.classical_records.is_empty() {
                sidecar("classical", correlation_csv(&outcome.classical_records, &[]))?;
            }
            if !outcome.momentum_records.is_empty() && !outcome.records.is_empty() {
                sidecar("momentum", momentum_csv(&outcome.momentum_records))?;
            }
            if !outcome.asymptotics.is_empty()
                && !(outcome.records.is_empty() && outcome.momentum_records.is_empty())
            {
                sidecar("asymptotics", asymptotics_csv(&outcome.asymptotics))?;
            }
            for dump in &outcome.joint_dumps {
                sidecar(&format!("joint.t{}.tau{}", dump.t, dump.tau), joint_csv(dump))?;
            }
            for dump in &outcome.marginal_dumps {
                sidecar(
                    &format!("marginal{}.t{}.tau{}", dump.walker, dump.t, dump.tau),
                    marginal_csv(dump),
                )?;
            }
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{build_config, EngineKind, RunArgs};

    fn outcome_with(records: Vec<CorrelationRecord>) -> RunOutcome {
        let cfg = build_config(
            EngineKind::Simulate,
            RunArgs {
                steps: Some(2),
                tau: Some(vec![0.5]),
                out: Some(PathBuf::from("main.csv")),
                ..RunArgs::default()
            },
        )
        .unwrap();
        RunOutcome {
            config: cfg,
            records,
            classical_records: Vec::new(),
            momentum_records: Vec::new(),
            asymptotics: Vec::new(),
            joint_dumps: Vec::new(),
            marginal_dumps: Vec::new(),
            warnings: Vec::new(),
        }
    }

    #[test]
    fn empty_record_list_gives_header_only_csv() {
        assert_eq!(correlation_csv(&[], &[]), format!("{CORRELATION_HEADER}\n"));
    }

    #[test]
    fn float17_round_trips_awkward_values() {
        for v in [
            0.1,
            1.0 / 3.0,
            (2.0f64).sqrt(),
            1.0 - 1e-9,
            6.02e23,
            5.43e-121,
            -0.0,
        ] {
            let s = float17(v);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), v.to_bits(), "{s}");
        }
    }

    #[test]
    fn missing_fields_are_nan_in_csv() {
        let mut r = CorrelationRecord::empty(3, 0.25);
        r.mi_bits = Some(0.5);
        let csv = correlation_csv(&[r], &[]);
        let row = csv.lines().nth(1).unwrap();
        assert_eq!(
            row,
            format!("3,{},{},NaN,NaN,NaN,NaN,NaN,NaN,NaN", float17(0.25), float17(0.5))
        );
    }

    #[test]
    fn warnings_become_comment_lines_after_the_header() {
        let csv = correlation_csv(&[], &["t=1 tau=0.5: degenerate".to_string()]);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CORRELATION_HEADER);
        assert_eq!(lines.next().unwrap(), "# t=1 tau=0.5: degenerate");
    }

    #[test]
    fn json_reals_round_trip_bit_exactly() {
        let mut r = CorrelationRecord::empty(1, 1.0 / 3.0);
        r.qmi_bits = Some((2.0f64).sqrt());
        let outcome = outcome_with(vec![r]);
        let text = json_document(&outcome);
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let rec = &parsed["records"][0];
        assert_eq!(rec["tau"].as_f64().unwrap().to_bits(), (1.0f64 / 3.0).to_bits());
        assert_eq!(
            rec["qmi_bits"].as_f64().unwrap().to_bits(),
            (2.0f64).sqrt().to_bits()
        );
        assert!(rec["mid_bits"].is_null());
        assert_eq!(parsed["meta"]["version"], env!("CARGO_PKG_VERSION"));
        assert!(parsed.get("momentum_records").is_none()); // empty sections elided
    }

    #[test]
    fn sidecar_paths_reuse_the_output_stem() {
        let p = sidecar_path(Path::new("dir/run.csv"), "joint.t6.tau0.5", "csv");
        assert_eq!(p, PathBuf::from("dir/run.joint.t6.tau0.5.csv"));
    }
}
