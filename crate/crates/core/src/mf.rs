//! KL divergence between the mean-field product distribution and the
//! canonical distribution of a QUBO model, split into mf-entropy,
//! log-partition and mf-energy terms, plus the gradients used by the
//! annealers.
//!
//! For a product distribution with `P(s_i = 1) = x_i`,
//!
//! ```text
//! D_KL = Σ_i [(1−x_i)ln(1−x_i) + x_i ln x_i] + ln Z + (1/T)(h·x + Σ_{i>j} Q_ij x_i x_j)
//! ```
//!
//! `ln Z` does not depend on `x` and is only available here by exhaustive
//! enumeration of small models.

use crate::error::{Error, Result};
use crate::qubo::{MfVector, QuboModel};

/// Largest model [`kl_exact_bruteforce`] will enumerate.
pub const MAX_ENUMERATION_SPINS: usize = 20;

/// Logistic exponents are clamped to this magnitude before `exp`.
pub const LOGISTIC_EXPONENT_CLAMP: f64 = 500.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KlBreakdown {
    pub mf_entropy: f64,
    /// `ln Z`, present only when computed by enumeration.
    pub log_partition: Option<f64>,
    pub mf_energy: f64,
    pub temperature: f64,
    /// `Σ_s P_MF(s) ln(P_MF(s)/P_C(s))` summed state by state.
    pub kl_enumerated: Option<f64>,
}

impl KlBreakdown {
    /// Closed-form divergence `entropy + ln Z + energy/T`.
    pub fn kl_total(&self) -> Option<f64> {
        self.log_partition.map(|ln_z| self.mf_entropy + ln_z + self.mf_energy / self.temperature)
    }
}

#[inline]
fn xlnx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// `Σ_i [(1−x_i)ln(1−x_i) + x_i ln x_i]`, with `0·ln 0 = 0`.
pub fn mf_entropy_exact(x: &[f64]) -> f64 {
    x.iter().map(|&v| xlnx(1.0 - v) + xlnx(v)).sum()
}

/// Second-order expansion of the mf-entropy around 0.5:
/// `Σ_i [2(x_i − 0.5)² + ln 0.5]`.
pub fn mf_entropy_taylor(x: &[f64]) -> f64 {
    let ln_half = 0.5f64.ln();
    x.iter().map(|&v| 2.0 * (v - 0.5) * (v - 0.5) + ln_half).sum()
}

/// `h·x + Σ_{i>j} Q_ij x_i x_j` (no constant).
pub fn mf_energy(model: &QuboModel, x: &[f64]) -> Result<f64> {
    check_dim(model, x.len())?;
    Ok(model.quadratic_form(x))
}

/// Exact gradient of the KL divergence: `ln(x_i/(1−x_i)) + Φ_i/T`.
pub fn kl_gradient(model: &QuboModel, x: &[f64], temperature: f64) -> Result<Vec<f64>> {
    check_dim(model, x.len())?;
    check_temperature(temperature)?;
    if let Some(i) = x.iter().position(|&v| !(v > 0.0 && v < 1.0)) {
        return Err(Error::BoundaryGradient(i));
    }
    let phi = model.mean_field(x)?;
    Ok(x.iter().zip(&phi).map(|(&v, &f)| (v / (1.0 - v)).ln() + f / temperature).collect())
}

/// Temperature-scaled gradient with the Taylor-expanded entropy:
/// `T(x_i − 0.5) + Φ_i` for interior `x_i`, `T(x_i − 0.5)` on the boundary.
///
/// `phi` may be evaluated at a different point than `x` (the descent
/// evaluates it at the forward point).
pub fn scaled_kl_gradient(model: &QuboModel, x: &[f64], phi: &[f64], temperature: f64) -> Result<Vec<f64>> {
    check_dim(model, x.len())?;
    check_dim(model, phi.len())?;
    Ok(x.iter()
        .zip(phi)
        .map(|(&v, &f)| {
            let entropy = temperature * (v - 0.5);
            if v > 0.0 && v < 1.0 {
                entropy + f
            } else {
                entropy
            }
        })
        .collect())
}

/// `1 / (1 + exp(z))` with `z` clamped to `±500`.
#[inline]
pub fn logistic_neg(z: f64) -> f64 {
    1.0 / (1.0 + z.clamp(-LOGISTIC_EXPONENT_CLAMP, LOGISTIC_EXPONENT_CLAMP).exp())
}

/// Single-spin self-consistent value `1/(1+exp(Φ/T))`.
///
/// At `T == 0` this is the zero-temperature limit: 1 for negative fields,
/// 0 for positive ones and 0.5 for a zero field.
#[inline]
pub(crate) fn self_consistent_scalar(phi: f64, temperature: f64) -> f64 {
    if temperature > 0.0 {
        logistic_neg(phi / temperature)
    } else if phi < 0.0 {
        1.0
    } else if phi > 0.0 {
        0.0
    } else {
        0.5
    }
}

/// `x_i = 1/(1+exp(Φ_i/T))`.
pub fn self_consistent_value(phi: &[f64], temperature: f64) -> MfVector {
    MfVector::clamped(phi.iter().map(|&f| self_consistent_scalar(f, temperature)).collect())
}

/// Computes `ln Z` and the KL divergence by enumerating all `2^N` states,
/// alongside the closed-form terms.
pub fn kl_exact_bruteforce(model: &QuboModel, x: &MfVector, temperature: f64) -> Result<KlBreakdown> {
    let n = model.n_spin();
    check_dim(model, x.len())?;
    check_temperature(temperature)?;
    if n > MAX_ENUMERATION_SPINS {
        return Err(Error::TooManySpins { n, max: MAX_ENUMERATION_SPINS });
    }

    let mut neg_h_over_t = Vec::with_capacity(1 << n);
    let mut state = vec![0.0; n];
    for mask in 0u64..(1u64 << n) {
        for (i, s) in state.iter_mut().enumerate() {
            *s = ((mask >> i) & 1) as f64;
        }
        neg_h_over_t.push(-model.quadratic_form(&state) / temperature);
    }
    // Log-sum-exp; C cancels between H(s) and ln Z so it is left out of both.
    let max = neg_h_over_t.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let ln_z = max + neg_h_over_t.iter().map(|v| (v - max).exp()).sum::<f64>().ln();

    let mut kl = 0.0;
    'states: for (mask, &log_weight) in neg_h_over_t.iter().enumerate() {
        let mut ln_p_mf = 0.0;
        for (i, &xi) in x.iter().enumerate() {
            let p = if (mask >> i) & 1 == 1 { xi } else { 1.0 - xi };
            if p == 0.0 {
                continue 'states;
            }
            ln_p_mf += p.ln();
        }
        let ln_p_c = log_weight - ln_z;
        kl += ln_p_mf.exp() * (ln_p_mf - ln_p_c);
    }

    Ok(KlBreakdown {
        mf_entropy: mf_entropy_exact(x),
        log_partition: Some(ln_z),
        mf_energy: model.quadratic_form(x),
        temperature,
        kl_enumerated: Some(kl),
    })
}

fn check_dim(model: &QuboModel, len: usize) -> Result<()> {
    if len != model.n_spin() {
        return Err(Error::DimensionMismatch { expected: model.n_spin(), found: len });
    }
    Ok(())
}

fn check_temperature(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("temperature must be positive, got {t}")))
    }
}
