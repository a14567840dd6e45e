use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use amfd::problems::{accuracy, DecodedSolution};
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::{BenchError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplicaSummary {
    pub replica: usize,
    pub seed: u64,
    pub energy: f64,
    pub feasible: bool,
    /// Objective in minimization sign; absent when it is not finite.
    pub score: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub config: RunConfig,
    pub instance: String,
    pub n_spin: usize,
    pub n_step: usize,
    /// Best feasible objective in minimization sign, the sign of the BKS
    /// table. Absent when no replica is feasible.
    pub best_objective: Option<f64>,
    pub best_solution: Option<DecodedSolution>,
    /// Lowest QUBO energy over all replicas, feasible or not.
    pub best_energy: f64,
    pub mean_energy: f64,
    pub feasible_count: usize,
    pub accuracy: Option<f64>,
    /// Solver time only.
    pub wall_ms: f64,
    pub replicas: Vec<ReplicaSummary>,
}

impl RunRecord {
    /// Accuracy from the recorded BKS and best objective.
    pub fn recompute_accuracy(&self) -> Option<f64> {
        match (self.config.bks, self.best_objective) {
            (Some(bks), Some(sol)) => accuracy(bks, sol).ok(),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

impl FromStr for OutputFormat {
    type Err = BenchError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(BenchError::config(format!("unknown output format {s:?}, expected csv or json"))),
        }
    }
}

pub const CSV_HEADER: [&str; 11] = [
    "instance",
    "solver",
    "n_step",
    "n_replicas",
    "seed",
    "best_objective",
    "best_energy",
    "mean_energy",
    "feasible_count",
    "accuracy",
    "wall_ms",
];

/// 17 significant digits, enough to round-trip any `f64`.
fn float(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt_float(v: Option<f64>) -> String {
    v.map(float).unwrap_or_default()
}

pub fn write_csv<W: Write>(records: &[RunRecord], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(CSV_HEADER)?;
    for r in records {
        out.write_record([
            r.instance.clone(),
            r.config.solver.kind().to_string(),
            r.n_step.to_string(),
            r.config.n_replicas.to_string(),
            r.config.seed.to_string(),
            opt_float(r.best_objective),
            float(r.best_energy),
            float(r.mean_energy),
            r.feasible_count.to_string(),
            opt_float(r.accuracy),
            float(r.wall_ms),
        ])?;
    }
    out.flush().map_err(|e| BenchError::Csv(e.into()))?;
    Ok(())
}

/// Pretty-printed array of records.
pub fn write_json<W: Write>(records: &[RunRecord], mut w: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut w, records)?;
    w.write_all(b"\n").map_err(|e| BenchError::Json(serde_json::Error::io(e)))?;
    Ok(())
}

pub fn read_json(text: &str) -> Result<Vec<RunRecord>> {
    Ok(serde_json::from_str(text)?)
}

pub fn write_results<W: Write>(records: &[RunRecord], format: OutputFormat, w: W) -> Result<()> {
    match format {
        OutputFormat::Csv => write_csv(records, w),
        OutputFormat::Json => write_json(records, w),
    }
}

pub fn emit_results(records: &[RunRecord], format: OutputFormat, path: &Path) -> Result<()> {
    let mut buf = Vec::new();
    write_results(records, format, &mut buf)?;
    std::fs::write(path, buf).map_err(|e| BenchError::io(path, e))
}
