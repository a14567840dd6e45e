//! Independent replica orchestration.
//!
//! Each replica draws from its own ChaCha stream seeded from
//! `replica_seed(master, k)`, so replica `k` can be rerun in isolation and the
//! aggregate does not depend on how many worker threads execute the batch.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qubo::{round_to_binary, QuboModel, SpinVector};

/// SplitMix64 finalizer over `master + (k + 1)·γ`.
pub fn replica_seed(master: u64, replica: u64) -> u64 {
    let mut z = master.wrapping_add(replica.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub(crate) fn replica_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryPoint {
    pub step: usize,
    /// Energy of the rounded state on the original model.
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReplicaOutcome {
    pub spins: SpinVector,
    pub energy: f64,
    pub seed: u64,
    pub trajectory: Option<Vec<TrajectoryPoint>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub best_spins: SpinVector,
    pub best_energy: f64,
    pub best_replica: usize,
    pub mean_energy: f64,
    pub per_replica: Vec<ReplicaOutcome>,
    /// Trajectory of the best replica, when recording was requested.
    pub trajectory: Option<Vec<TrajectoryPoint>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Worker threads for the replica batch; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Record the rounded energy every `stride` steps.
    pub trajectory_stride: Option<usize>,
}

/// Stride-sampled energy recorder. Inert unless a stride is set.
pub struct Tracer<'a> {
    model: &'a QuboModel,
    stride: Option<usize>,
    points: Vec<TrajectoryPoint>,
}

impl<'a> Tracer<'a> {
    pub(crate) fn new(model: &'a QuboModel, stride: Option<usize>) -> Self {
        Self { model, stride: stride.filter(|&s| s > 0), points: Vec::new() }
    }

    #[inline]
    pub(crate) fn observe(&mut self, step: usize, n_step: usize, x: &[f64]) {
        let Some(stride) = self.stride else { return };
        if step.is_multiple_of(stride) || step == n_step {
            let energy = self.model.energy(&round_to_binary(x)).unwrap_or(f64::NAN);
            self.points.push(TrajectoryPoint { step, energy });
        }
    }

    fn finish(self) -> Option<Vec<TrajectoryPoint>> {
        self.stride.map(|_| self.points)
    }
}

/// One annealing trajectory, returning final mf-spins.
pub trait Annealer: Sync {
    /// Whether dynamics run on the normalized model rather than the original.
    fn normalizes(&self) -> bool {
        true
    }

    fn anneal(&self, model: &QuboModel, rng: &mut ChaCha8Rng, tracer: &mut Tracer<'_>) -> Vec<f64>;
}

/// Runs `n_replicas` independent trajectories and aggregates them.
///
/// When the annealer asks for it the model is normalized once and dynamics
/// run on that copy; reported energies always use the original model. Ties on the best energy go to
/// the lowest replica index.
pub fn run_replicas<A: Annealer>(
    model: &QuboModel,
    annealer: &A,
    n_replicas: usize,
    master_seed: u64,
    opts: &RunOptions,
) -> Result<SolveResult> {
    if n_replicas == 0 {
        return Err(Error::InvalidParameter("n_replicas must be at least 1".into()));
    }
    let normalized;
    let dynamics = if annealer.normalizes() {
        normalized = model.normalize()?;
        &normalized
    } else {
        model
    };

    let run_one = |k: usize| -> ReplicaOutcome {
        let seed = replica_seed(master_seed, k as u64);
        let mut rng = replica_rng(seed);
        let mut tracer = Tracer::new(model, opts.trajectory_stride);
        let x = annealer.anneal(dynamics, &mut rng, &mut tracer);
        let spins = round_to_binary(&x);
        let energy = model.energy(&spins).expect("annealer preserves dimension");
        ReplicaOutcome { spins, energy, seed, trajectory: tracer.finish() }
    };

    let per_replica: Vec<ReplicaOutcome> = match opts.threads {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
            pool.install(|| (0..n_replicas).into_par_iter().map(run_one).collect())
        }
        None => (0..n_replicas).into_par_iter().map(run_one).collect(),
    };

    Ok(aggregate(per_replica))
}

fn aggregate(per_replica: Vec<ReplicaOutcome>) -> SolveResult {
    let mut best = 0;
    for (k, r) in per_replica.iter().enumerate() {
        if r.energy < per_replica[best].energy {
            best = k;
        }
    }
    let mean_energy = per_replica.iter().map(|r| r.energy).sum::<f64>() / per_replica.len() as f64;
    SolveResult {
        best_spins: per_replica[best].spins.clone(),
        best_energy: per_replica[best].energy,
        best_replica: best,
        mean_energy,
        trajectory: per_replica[best].trajectory.clone(),
        per_replica,
    }
}
