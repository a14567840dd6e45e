use std::time::Instant;

use amfd::ingest::{parse_instance, InstanceData, InstanceFormat, ParsedInstance};
use amfd::problems::{
    accuracy, build_gcp, build_mcp, build_misp, build_qap, build_tsp, decode_gcp, decode_mcp, decode_misp, decode_qap,
    decode_tsp, DecodedSolution, Encoding, ProblemKind, QapInstance, TspInstance, WeightedGraph, DEFAULT_MISP_PENALTY,
};
use amfd::solvers::{
    amfd_solve_with, linear_schedule, mfa_solve_with, pmfa_solve_with, AmfdParams, MfaParams, RunOptions,
    SerialMfaParams, SolveResult,
};
use amfd::{QuboModel, SpinVector};

use crate::config::{validate_steps, RunConfig, SolverSpec, StepSpec};
use crate::error::{BenchError, Result};
use crate::presets::instance_name;
use crate::report::{ReplicaSummary, RunRecord};

#[derive(Debug, Clone)]
enum Native {
    Graph(ProblemKind, WeightedGraph),
    Tsp(TspInstance),
    Qap(QapInstance),
}

/// An instance with its QUBO built, ready to be solved repeatedly.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub name: String,
    pub model: QuboModel,
    pub encoding: Encoding,
    native: Native,
}

impl Prepared {
    /// Reads and builds the instance named by `config`.
    pub fn load(config: &RunConfig) -> Result<Self> {
        let text = std::fs::read_to_string(&config.instance).map_err(|e| BenchError::io(&config.instance, e))?;
        Self::from_text(config, &text)
    }

    /// Builds from file contents in the standard format for the problem.
    pub fn from_text(config: &RunConfig, text: &str) -> Result<Self> {
        let parsed = parse_instance(InstanceFormat::for_problem(config.problem), text)
            .map_err(|source| BenchError::Parse { path: config.instance.clone(), source })?;
        Self::from_parsed(config, parsed)
    }

    pub fn from_parsed(config: &RunConfig, parsed: ParsedInstance) -> Result<Self> {
        for w in &parsed.warnings {
            log::warn!("{}: {w}", config.instance.display());
        }
        let name = instance_name(&config.instance);
        let kind = config.problem;
        let mismatch = || BenchError::config(format!("instance data does not fit problem {kind}"));
        let (model, encoding, native) = match (kind, parsed.data) {
            (ProblemKind::Mcp, InstanceData::Graph(g)) => {
                let (m, e) = build_mcp(&g)?;
                (m, e, Native::Graph(kind, g))
            }
            (ProblemKind::Misp, InstanceData::Graph(g)) => {
                let (m, e) = build_misp(&g, DEFAULT_MISP_PENALTY)?;
                (m, e, Native::Graph(kind, g))
            }
            (ProblemKind::Gcp, InstanceData::Graph(g)) => {
                let (m, e) = build_gcp(&g, config.n_color)?;
                (m, e, Native::Graph(kind, g))
            }
            (ProblemKind::Tsp, InstanceData::Tsp(t)) => {
                let (m, e) = build_tsp(&t)?;
                (m, e, Native::Tsp(t))
            }
            (ProblemKind::Qap, InstanceData::Qap(q)) => {
                let (m, e) = build_qap(&q)?;
                (m, e, Native::Qap(q))
            }
            _ => return Err(mismatch()),
        };
        Ok(Prepared { name, model, encoding, native })
    }

    pub fn n_spin(&self) -> usize {
        self.model.n_spin()
    }

    pub fn decode(&self, s: &SpinVector) -> Result<DecodedSolution> {
        Ok(match &self.native {
            Native::Graph(ProblemKind::Mcp, g) => decode_mcp(g, s)?,
            Native::Graph(ProblemKind::Misp, g) => decode_misp(g, s)?,
            Native::Graph(_, g) => decode_gcp(g, s, &self.encoding)?,
            Native::Tsp(t) => decode_tsp(t, s, &self.encoding)?,
            Native::Qap(q) => decode_qap(q, s, &self.encoding)?,
        })
    }

    /// Solves with `config` and scores every replica.
    pub fn run(&self, config: &RunConfig) -> Result<RunRecord> {
        let n_step = config.steps.n_step(self.n_spin());
        let schedule = linear_schedule(config.t_init, config.t_fin, n_step)?;
        let opts = RunOptions { threads: config.threads, trajectory_stride: None };
        let (seed, n_replicas) = (config.seed, config.n_replicas);

        let start = Instant::now();
        let result: SolveResult = match config.solver {
            SolverSpec::Amfd { eta, zeta } => {
                amfd_solve_with(&self.model, &AmfdParams { eta, zeta, schedule, seed, n_replicas }, &opts)?
            }
            SolverSpec::Mfa => mfa_solve_with(&self.model, &SerialMfaParams { schedule, seed, n_replicas }, &opts)?,
            SolverSpec::Pmfa { alpha } => {
                let p = MfaParams { schedule, seed, alpha, sigma: 0.0, n_replicas };
                pmfa_solve_with(&self.model, &p, &opts)?
            }
            SolverSpec::Nmfa { alpha, sigma } => {
                let p = MfaParams { schedule, seed, alpha, sigma, n_replicas };
                pmfa_solve_with(&self.model, &p, &opts)?
            }
        };
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;

        let mut replicas = Vec::with_capacity(result.per_replica.len());
        let mut best: Option<(f64, f64, DecodedSolution)> = None;
        for (k, r) in result.per_replica.iter().enumerate() {
            let d = self.decode(&r.spins)?;
            let score = d.score();
            replicas.push(ReplicaSummary {
                replica: k,
                seed: r.seed,
                energy: r.energy,
                feasible: d.feasible,
                score: score.is_finite().then_some(score),
            });
            // Feasible and lowest score, then lowest energy, then lowest index.
            let better = match &best {
                _ if !d.feasible => false,
                None => true,
                Some((s, e, _)) => score < *s || (score == *s && r.energy < *e),
            };
            if better {
                best = Some((score, r.energy, d));
            }
        }
        let feasible_count = replicas.iter().filter(|r| r.feasible).count();
        let best_objective = best.as_ref().map(|b| b.0);
        let acc = match (config.bks, best_objective) {
            (Some(bks), Some(sol)) => Some(accuracy(bks, sol)?),
            _ => None,
        };
        Ok(RunRecord {
            config: config.clone(),
            instance: self.name.clone(),
            n_spin: self.n_spin(),
            n_step,
            best_objective,
            best_solution: best.map(|b| b.2),
            best_energy: result.best_energy,
            mean_energy: result.mean_energy,
            feasible_count,
            accuracy: acc,
            wall_ms,
            replicas,
        })
    }
}

/// Parse, build, solve, decode and score one configuration.
pub fn run_benchmark(config: &RunConfig) -> Result<RunRecord> {
    Prepared::load(config)?.run(config)
}

/// One record per step count, all else fixed. The instance is read and
/// built once.
pub fn sweep_nstep(config: &RunConfig, steps: &[usize]) -> Result<Vec<RunRecord>> {
    validate_steps(steps)?;
    let prepared = Prepared::load(config)?;
    sweep_prepared(&prepared, config, steps)
}

pub fn sweep_prepared(prepared: &Prepared, config: &RunConfig, steps: &[usize]) -> Result<Vec<RunRecord>> {
    validate_steps(steps)?;
    steps.iter().map(|&n| prepared.run(&RunConfig { steps: StepSpec::Fixed(n), ..config.clone() })).collect()
}

/// Runs the whole invocation and writes its records.
pub fn execute(plan: &crate::config::Plan) -> Result<Vec<RunRecord>> {
    let records = match &plan.sweep {
        Some(steps) => sweep_nstep(&plan.config, steps)?,
        None => vec![run_benchmark(&plan.config)?],
    };
    match &plan.config.out {
        Some(path) => crate::report::emit_results(&records, plan.format, path)?,
        None => crate::report::write_results(&records, plan.format, std::io::stdout().lock())?,
    }
    Ok(records)
}
