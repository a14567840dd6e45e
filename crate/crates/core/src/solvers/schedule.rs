use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Linear temperature anneal from `t_init` at step 1 to `t_fin` at step
/// `n_step`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Schedule {
    pub t_init: f64,
    pub t_fin: f64,
    pub n_step: usize,
}

pub fn linear_schedule(t_init: f64, t_fin: f64, n_step: usize) -> Result<Schedule> {
    let s = Schedule { t_init, t_fin, n_step };
    s.validate()?;
    Ok(s)
}

impl Schedule {
    pub fn validate(&self) -> Result<()> {
        if self.n_step == 0 {
            return Err(Error::InvalidParameter("n_step must be at least 1".into()));
        }
        for (name, t) in [("t_init", self.t_init), ("t_fin", self.t_fin)] {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be a finite nonnegative temperature, got {t}"
                )));
            }
        }
        Ok(())
    }

    /// `T(t) = T_init − (T_init − T_fin)(t − 1)/(N_step − 1)` for `1 ≤ t ≤ N_step`.
    pub fn temperature(&self, t: usize) -> Result<f64> {
        if t == 0 || t > self.n_step {
            return Err(Error::StepOutOfRange { t, n_step: self.n_step });
        }
        Ok(self.at(t))
    }

    #[inline]
    pub(crate) fn at(&self, t: usize) -> f64 {
        if self.n_step == 1 {
            return self.t_init;
        }
        if t == self.n_step {
            return self.t_fin;
        }
        self.t_init - (self.t_init - self.t_fin) / (self.n_step - 1) as f64 * (t - 1) as f64
    }
}

/// Step budgets as multiples of the QUBO size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepPreset {
    /// `N_step = N_spin`
    Short,
    /// `N_step = 10 N_spin`
    Medium,
    /// `N_step = 100 N_spin`
    Long,
}

impl StepPreset {
    pub fn multiplier(self) -> usize {
        match self {
            StepPreset::Short => 1,
            StepPreset::Medium => 10,
            StepPreset::Long => 100,
        }
    }

    pub fn n_step(self, n_spin: usize) -> usize {
        self.multiplier() * n_spin
    }

    pub fn name(self) -> &'static str {
        match self {
            StepPreset::Short => "short",
            StepPreset::Medium => "medium",
            StepPreset::Long => "long",
        }
    }
}

impl std::str::FromStr for StepPreset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "short" => Ok(StepPreset::Short),
            "medium" => Ok(StepPreset::Medium),
            "long" => Ok(StepPreset::Long),
            _ => Err(Error::InvalidParameter(format!("unknown step preset {s:?}, expected short, medium or long"))),
        }
    }
}
