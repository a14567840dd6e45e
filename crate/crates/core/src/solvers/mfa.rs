//! Mean-field annealing baselines.
//!
//! - serial MFA: one randomly chosen spin per step jumps to its
//!   self-consistent value `1/(1+exp(Φ_i/T))`;
//! - parallel MFA: every spin moves towards its self-consistent value by a
//!   mixing weight `α`, using a mean field computed once per step;
//! - noisy MFA: parallel MFA with i.i.d. Gaussian noise of std `σ` added to
//!   the mean field before the logistic.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::replicas::{run_replicas, Annealer, RunOptions, SolveResult, Tracer};
use super::schedule::Schedule;
use crate::error::{Error, Result};
use crate::mf::self_consistent_scalar;
use crate::qubo::{MfVector, QuboModel};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SerialMfaParams {
    pub schedule: Schedule,
    pub seed: u64,
    pub n_replicas: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MfaParams {
    pub schedule: Schedule,
    pub seed: u64,
    /// Mixing weight in `(0, 1]`.
    pub alpha: f64,
    /// Noise std on the mean field; 0 gives plain parallel MFA.
    pub sigma: f64,
    pub n_replicas: usize,
}

impl MfaParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(Error::InvalidParameter(format!("alpha must lie in (0, 1], got {}", self.alpha)));
        }
        if !(self.sigma >= 0.0 && self.sigma.is_finite()) {
            return Err(Error::InvalidParameter(format!("sigma must be nonnegative, got {}", self.sigma)));
        }
        if self.n_replicas == 0 {
            return Err(Error::InvalidParameter("n_replicas must be at least 1".into()));
        }
        self.schedule.validate()
    }
}

fn uniform_start(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    (0..n).map(|_| rng.random::<f64>()).collect()
}

#[derive(Debug, Clone, Copy)]
pub struct SerialMfa {
    pub schedule: Schedule,
}

impl Annealer for SerialMfa {
    fn normalizes(&self) -> bool {
        false
    }

    fn anneal(&self, model: &QuboModel, rng: &mut ChaCha8Rng, tracer: &mut Tracer<'_>) -> Vec<f64> {
        let n = model.n_spin();
        let mut x = uniform_start(n, rng);
        let n_step = self.schedule.n_step;
        for t in 1..=n_step {
            let i = rng.random_range(0..n);
            let phi = model.mean_field_at(i, &x);
            x[i] = self_consistent_scalar(phi, self.schedule.at(t));
            tracer.observe(t, n_step, &x);
        }
        x
    }
}

pub fn mfa_solve(model: &QuboModel, params: &SerialMfaParams) -> Result<SolveResult> {
    mfa_solve_with(model, params, &RunOptions::default())
}

pub fn mfa_solve_with(model: &QuboModel, params: &SerialMfaParams, opts: &RunOptions) -> Result<SolveResult> {
    params.schedule.validate()?;
    if model.n_spin() == 0 {
        return Err(Error::InvalidInstance("model has no spins".into()));
    }
    run_replicas(model, &SerialMfa { schedule: params.schedule }, params.n_replicas, params.seed, opts)
}

/// One synchronous update
/// `x_new = (1−α)x + α/(1+exp((Φ+ε)/T))` with `Φ = h + Qx`.
pub fn pmfa_step<R: Rng + ?Sized>(
    model: &QuboModel,
    x: &[f64],
    temperature: f64,
    alpha: f64,
    noise_std: f64,
    rng: &mut R,
) -> Result<MfVector> {
    let mut phi = model.mean_field(x)?;
    let mut out = vec![0.0; x.len()];
    pmfa_update(x, &mut phi, &mut out, temperature, alpha, noise_std, rng);
    Ok(MfVector::clamped(out))
}

#[inline]
fn pmfa_update<R: Rng + ?Sized>(
    x: &[f64],
    phi: &mut [f64],
    out: &mut [f64],
    temperature: f64,
    alpha: f64,
    noise_std: f64,
    rng: &mut R,
) {
    if noise_std > 0.0 {
        for f in phi.iter_mut() {
            *f += noise_std * rng.sample::<f64, _>(StandardNormal);
        }
    }
    for ((o, &xi), &f) in out.iter_mut().zip(x).zip(phi.iter()) {
        *o = ((1.0 - alpha) * xi + alpha * self_consistent_scalar(f, temperature)).clamp(0.0, 1.0);
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ParallelMfa {
    pub schedule: Schedule,
    pub alpha: f64,
    pub sigma: f64,
}

impl Annealer for ParallelMfa {
    fn normalizes(&self) -> bool {
        false
    }

    fn anneal(&self, model: &QuboModel, rng: &mut ChaCha8Rng, tracer: &mut Tracer<'_>) -> Vec<f64> {
        let n = model.n_spin();
        let mut x = uniform_start(n, rng);
        let mut next = vec![0.0; n];
        let mut phi = vec![0.0; n];
        let n_step = self.schedule.n_step;
        for t in 1..=n_step {
            model.mean_field_into(&x, &mut phi);
            pmfa_update(&x, &mut phi, &mut next, self.schedule.at(t), self.alpha, self.sigma, rng);
            std::mem::swap(&mut x, &mut next);
            tracer.observe(t, n_step, &x);
        }
        x
    }
}

/// Parallel MFA, or noisy MFA when `sigma > 0`.
pub fn pmfa_solve(model: &QuboModel, params: &MfaParams) -> Result<SolveResult> {
    pmfa_solve_with(model, params, &RunOptions::default())
}

pub fn pmfa_solve_with(model: &QuboModel, params: &MfaParams, opts: &RunOptions) -> Result<SolveResult> {
    params.validate()?;
    let annealer = ParallelMfa { schedule: params.schedule, alpha: params.alpha, sigma: params.sigma };
    run_replicas(model, &annealer, params.n_replicas, params.seed, opts)
}
