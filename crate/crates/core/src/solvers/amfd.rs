//! Annealed mean field descent.
//!
//! Accelerated descent on the temperature-scaled KL divergence with the
//! mf-entropy replaced by its quadratic expansion around 0.5. Each step:
//!
//! 1. forward point `x_fwd = x(t−1) + ζ(x(t−1) − x(t−2))`
//! 2. entropy term `F = T(t)(x(t−1) − 0.5)`
//! 3. mean field at the forward point `Φ = h + Q x_fwd`
//! 4. `x(t) = 2x(t−1) − x(t−2) − ηF`, minus `ηΦ` where `0 < x_i(t−1) < 1`
//! 5. clamp into `[0, 1]`
//!
//! The forward point is never clamped. The final state is rounded at 0.5.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::replicas::{run_replicas, Annealer, RunOptions, SolveResult, Tracer};
use super::schedule::Schedule;
use crate::error::{Error, Result};
use crate::qubo::{MfVector, QuboModel};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmfdParams {
    pub eta: f64,
    pub zeta: f64,
    pub schedule: Schedule,
    pub seed: u64,
    pub n_replicas: usize,
}

impl AmfdParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.eta > 0.0 && self.eta.is_finite()) {
            return Err(Error::InvalidParameter(format!("eta must be positive, got {}", self.eta)));
        }
        if !(self.zeta >= 0.0 && self.zeta.is_finite()) {
            return Err(Error::InvalidParameter(format!("zeta must be nonnegative, got {}", self.zeta)));
        }
        if self.n_replicas == 0 {
            return Err(Error::InvalidParameter("n_replicas must be at least 1".into()));
        }
        self.schedule.validate()
    }
}

/// Draws `x(−1)` uniformly from the unit cube and sets
/// `x(0) = x(−1) − η(x(−1) − 0.5)`, clamped.
pub fn amfd_init<R: Rng + ?Sized>(n_spin: usize, eta: f64, rng: &mut R) -> (MfVector, MfVector) {
    let prev: Vec<f64> = (0..n_spin).map(|_| rng.random::<f64>()).collect();
    let curr = init_from_prev(&prev, eta);
    (MfVector::clamped(prev), MfVector::clamped(curr))
}

fn init_from_prev(prev: &[f64], eta: f64) -> Vec<f64> {
    prev.iter().map(|&p| (p - eta * (p - 0.5)).clamp(0.0, 1.0)).collect()
}

/// Reusable buffers for one trajectory.
struct Workspace {
    prev: Vec<f64>,
    curr: Vec<f64>,
    next: Vec<f64>,
    fwd: Vec<f64>,
    phi: Vec<f64>,
}

impl Workspace {
    fn new(prev: Vec<f64>, curr: Vec<f64>) -> Self {
        let n = curr.len();
        Self { prev, curr, next: vec![0.0; n], fwd: vec![0.0; n], phi: vec![0.0; n] }
    }

    #[inline]
    fn step(&mut self, model: &QuboModel, temperature: f64, eta: f64, zeta: f64) {
        for ((f, &c), &p) in self.fwd.iter_mut().zip(&self.curr).zip(&self.prev) {
            *f = c + zeta * (c - p);
        }
        model.mean_field_into(&self.fwd, &mut self.phi);
        for i in 0..self.curr.len() {
            let c = self.curr[i];
            let entropy_grad = temperature * (c - 0.5);
            let mut x = 2.0 * c - self.prev[i] - eta * entropy_grad;
            if c > 0.0 && c < 1.0 {
                x -= eta * self.phi[i];
            }
            self.next[i] = x.clamp(0.0, 1.0);
        }
        std::mem::swap(&mut self.prev, &mut self.curr);
        std::mem::swap(&mut self.curr, &mut self.next);
    }
}

/// One descent step on an already-normalized model. Returns `x(t)`.
pub fn amfd_step(
    model_norm: &QuboModel,
    x_curr: &[f64],
    x_prev: &[f64],
    temperature: f64,
    eta: f64,
    zeta: f64,
) -> Result<MfVector> {
    let n = model_norm.n_spin();
    for len in [x_curr.len(), x_prev.len()] {
        if len != n {
            return Err(Error::DimensionMismatch { expected: n, found: len });
        }
    }
    let mut ws = Workspace::new(x_prev.to_vec(), x_curr.to_vec());
    ws.step(model_norm, temperature, eta, zeta);
    Ok(MfVector::clamped(ws.curr))
}

#[derive(Debug, Clone, Copy)]
pub struct Amfd {
    pub eta: f64,
    pub zeta: f64,
    pub schedule: Schedule,
}

impl Annealer for Amfd {
    fn anneal(&self, normalized: &QuboModel, rng: &mut ChaCha8Rng, tracer: &mut Tracer<'_>) -> Vec<f64> {
        let (prev, curr) = amfd_init(normalized.n_spin(), self.eta, rng);
        let mut ws = Workspace::new(prev.into_inner(), curr.into_inner());
        let n_step = self.schedule.n_step;
        for t in 1..=n_step {
            ws.step(normalized, self.schedule.at(t), self.eta, self.zeta);
            tracer.observe(t, n_step, &ws.curr);
        }
        ws.curr
    }
}

pub fn amfd_solve(model: &QuboModel, params: &AmfdParams) -> Result<SolveResult> {
    amfd_solve_with(model, params, &RunOptions::default())
}

pub fn amfd_solve_with(model: &QuboModel, params: &AmfdParams, opts: &RunOptions) -> Result<SolveResult> {
    params.validate()?;
    let annealer = Amfd { eta: params.eta, zeta: params.zeta, schedule: params.schedule };
    run_replicas(model, &annealer, params.n_replicas, params.seed, opts)
}
