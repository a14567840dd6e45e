use std::path::PathBuf;

use amfd::problems::ProblemKind;
use amfd::solvers::StepPreset;
use clap::Parser;

use crate::config::{Plan, Settings, SolverKind, StepChoice};
use crate::error::Result;
use crate::report::OutputFormat;

/// Run a QUBO solver on a benchmark instance and report solution quality.
#[derive(Debug, Clone, Default, Parser)]
#[command(name = "amfd-bench", version)]
pub struct Cli {
    /// `key = value` file; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Published parameter row, e.g. `paper:G1`; lowest priority.
    #[arg(long)]
    pub params: Option<String>,
    /// mcp, misp, tsp, qap or gcp.
    #[arg(long)]
    pub problem: Option<ProblemKind>,
    #[arg(long)]
    pub instance: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub solver: Option<SolverKind>,
    #[arg(long)]
    pub eta: Option<f64>,
    #[arg(long)]
    pub zeta: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub sigma: Option<f64>,
    #[arg(long)]
    pub t_init: Option<f64>,
    #[arg(long)]
    pub t_fin: Option<f64>,
    /// Step count, or a comma list to sweep.
    #[arg(long, value_delimiter = ',', num_args = 1.., conflicts_with = "preset")]
    pub steps: Option<Vec<usize>>,
    /// short, medium or long: 1, 10 or 100 steps per spin.
    #[arg(long)]
    pub preset: Option<StepPreset>,
    #[arg(long)]
    pub replicas: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Best known solution; defaults to the bundled table.
    #[arg(long, allow_negative_numbers = true)]
    pub bks: Option<f64>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Color budget for gcp.
    #[arg(long)]
    pub n_color: Option<usize>,
    #[arg(long)]
    pub threads: Option<usize>,
}

impl Cli {
    /// The flag layer alone.
    pub fn settings(&self) -> Settings {
        let steps = match (&self.steps, self.preset) {
            (Some(list), _) => Some(StepChoice::List(list.clone())),
            (None, Some(p)) => Some(StepChoice::Preset(p)),
            (None, None) => None,
        };
        Settings {
            problem: self.problem,
            instance: self.instance.clone(),
            solver: self.solver,
            eta: self.eta,
            zeta: self.zeta,
            alpha: self.alpha,
            sigma: self.sigma,
            t_init: self.t_init,
            t_fin: self.t_fin,
            steps,
            replicas: self.replicas,
            seed: self.seed,
            bks: self.bks,
            out: self.out.clone(),
            format: self.format,
            params: self.params.clone(),
            n_color: self.n_color,
            threads: self.threads,
        }
    }

    pub fn plan(&self) -> Result<Plan> {
        let file = match &self.config {
            Some(path) => Settings::from_kv_file(path)?,
            None => Settings::default(),
        };
        file.overlay(self.settings()).resolve()
    }
}
