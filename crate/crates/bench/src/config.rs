//! Run configuration and the layered settings it is resolved from.
//!
//! Settings come from up to three layers, lowest first: a named parameter
//! preset, a `key = value` file, and command-line flags. Higher layers
//! replace individual keys of lower ones.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use amfd::problems::ProblemKind;
use amfd::solvers::StepPreset;
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};
use crate::presets;
use crate::report::OutputFormat;

pub const DEFAULT_ETA: f64 = 0.1;
pub const DEFAULT_ZETA: f64 = 0.0;
pub const DEFAULT_ALPHA: f64 = 0.5;
pub const DEFAULT_SIGMA: f64 = 0.1;
pub const DEFAULT_T_INIT: f64 = 0.3;
pub const DEFAULT_T_FIN: f64 = 0.0;
pub const DEFAULT_REPLICAS: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Amfd,
    /// Serial mean-field annealing.
    Mfa,
    /// Parallel mean-field annealing.
    Pmfa,
    /// Noisy parallel mean-field annealing.
    Nmfa,
}

impl SolverKind {
    pub fn name(self) -> &'static str {
        match self {
            SolverKind::Amfd => "amfd",
            SolverKind::Mfa => "mfa",
            SolverKind::Pmfa => "pmfa",
            SolverKind::Nmfa => "nmfa",
        }
    }

    fn accepts(self, param: &str) -> bool {
        matches!(
            (self, param),
            (SolverKind::Amfd, "eta" | "zeta") | (SolverKind::Pmfa, "alpha") | (SolverKind::Nmfa, "alpha" | "sigma")
        )
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SolverKind {
    type Err = BenchError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "amfd" => Ok(SolverKind::Amfd),
            "mfa" => Ok(SolverKind::Mfa),
            "pmfa" => Ok(SolverKind::Pmfa),
            "nmfa" => Ok(SolverKind::Nmfa),
            _ => Err(BenchError::config(format!("unknown solver {s:?}, expected amfd, mfa, pmfa or nmfa"))),
        }
    }
}

/// Solver together with exactly the parameters it uses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum SolverSpec {
    Amfd { eta: f64, zeta: f64 },
    Mfa,
    Pmfa { alpha: f64 },
    Nmfa { alpha: f64, sigma: f64 },
}

impl SolverSpec {
    pub fn kind(&self) -> SolverKind {
        match self {
            SolverSpec::Amfd { .. } => SolverKind::Amfd,
            SolverSpec::Mfa => SolverKind::Mfa,
            SolverSpec::Pmfa { .. } => SolverKind::Pmfa,
            SolverSpec::Nmfa { .. } => SolverKind::Nmfa,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepSpec {
    Fixed(usize),
    /// Multiple of the QUBO size.
    Preset(StepPreset),
}

impl StepSpec {
    pub fn n_step(self, n_spin: usize) -> usize {
        match self {
            StepSpec::Fixed(n) => n,
            StepSpec::Preset(p) => p.n_step(n_spin),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub problem: ProblemKind,
    pub instance: PathBuf,
    pub solver: SolverSpec,
    pub t_init: f64,
    pub t_fin: f64,
    pub steps: StepSpec,
    pub n_replicas: usize,
    pub seed: u64,
    pub bks: Option<f64>,
    /// Color budget for coloring; defaults to max degree + 1.
    pub n_color: Option<usize>,
    /// Size of a dedicated worker pool. Results do not depend on it.
    pub threads: Option<usize>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    /// Config with default parameters for `solver`.
    pub fn new(problem: ProblemKind, instance: impl Into<PathBuf>, solver: SolverKind) -> Result<Self> {
        Settings {
            problem: Some(problem),
            instance: Some(instance.into()),
            solver: Some(solver),
            ..Settings::default()
        }
        .resolve()
        .map(|plan| plan.config)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepChoice {
    /// One value runs once; several run a sweep.
    List(Vec<usize>),
    Preset(StepPreset),
}

/// One layer of loosely specified settings.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings {
    pub problem: Option<ProblemKind>,
    pub instance: Option<PathBuf>,
    pub solver: Option<SolverKind>,
    pub eta: Option<f64>,
    pub zeta: Option<f64>,
    pub alpha: Option<f64>,
    pub sigma: Option<f64>,
    pub t_init: Option<f64>,
    pub t_fin: Option<f64>,
    pub steps: Option<StepChoice>,
    pub replicas: Option<usize>,
    pub seed: Option<u64>,
    pub bks: Option<f64>,
    pub out: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    /// Named parameter preset such as `paper:G1`.
    pub params: Option<String>,
    pub n_color: Option<usize>,
    pub threads: Option<usize>,
}

/// A resolved invocation: one run, or a sweep over step counts.
#[derive(Debug, Clone, PartialEq)]
pub struct Plan {
    pub config: RunConfig,
    pub sweep: Option<Vec<usize>>,
    pub format: OutputFormat,
}

macro_rules! overlay_fields {
    ($low:ident, $high:ident, $($f:ident),*) => {
        Settings { $($f: $high.$f.or($low.$f)),* }
    };
}

impl Settings {
    /// `top` wins wherever it sets a key.
    pub fn overlay(self, top: Settings) -> Settings {
        overlay_fields!(
            self, top, problem, instance, solver, eta, zeta, alpha, sigma, t_init, t_fin, steps, replicas, seed, bks,
            out, format, params, n_color, threads
        )
    }

    /// Reads `key = value` lines. `#` starts a comment; dashes and
    /// underscores in keys are interchangeable. Relative paths are taken
    /// from `base_dir` when given.
    pub fn from_kv(text: &str, base_dir: Option<&Path>) -> Result<Settings> {
        let mut s = Settings::default();
        let mut seen = std::collections::HashSet::new();
        let mut preset: Option<StepPreset> = None;
        for (idx, raw) in text.lines().enumerate() {
            let ln = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) =
                line.split_once('=').ok_or_else(|| BenchError::config(format!("line {ln}: expected `key = value`")))?;
            let key = key.trim().replace('-', "_");
            let value = value.trim();
            if !seen.insert(key.clone()) {
                return Err(BenchError::config(format!("line {ln}: {key} given twice")));
            }
            let err = |what: &str| BenchError::config(format!("line {ln}: invalid {what} {value:?}"));
            let path = |v: &str| match base_dir {
                Some(dir) if Path::new(v).is_relative() => dir.join(v),
                _ => PathBuf::from(v),
            };
            match key.as_str() {
                "problem" => s.problem = Some(value.parse().map_err(|_| err("problem"))?),
                "instance" => s.instance = Some(path(value)),
                "solver" => s.solver = Some(value.parse()?),
                "eta" => s.eta = Some(value.parse().map_err(|_| err("eta"))?),
                "zeta" => s.zeta = Some(value.parse().map_err(|_| err("zeta"))?),
                "alpha" => s.alpha = Some(value.parse().map_err(|_| err("alpha"))?),
                "sigma" => s.sigma = Some(value.parse().map_err(|_| err("sigma"))?),
                "t_init" => s.t_init = Some(value.parse().map_err(|_| err("t_init"))?),
                "t_fin" => s.t_fin = Some(value.parse().map_err(|_| err("t_fin"))?),
                "steps" => s.steps = Some(StepChoice::List(parse_step_list(value).map_err(|_| err("steps"))?)),
                "preset" => preset = Some(value.parse().map_err(|_| err("preset"))?),
                "replicas" => s.replicas = Some(value.parse().map_err(|_| err("replicas"))?),
                "seed" => s.seed = Some(value.parse().map_err(|_| err("seed"))?),
                "bks" => s.bks = Some(value.parse().map_err(|_| err("bks"))?),
                "out" => s.out = Some(path(value)),
                "format" => s.format = Some(value.parse()?),
                "params" => s.params = Some(value.to_string()),
                "n_color" => s.n_color = Some(value.parse().map_err(|_| err("n_color"))?),
                "threads" => s.threads = Some(value.parse().map_err(|_| err("threads"))?),
                _ => return Err(BenchError::config(format!("line {ln}: unknown key {key:?}"))),
            }
        }
        if let Some(p) = preset {
            if s.steps.is_some() {
                return Err(BenchError::config("steps and preset are mutually exclusive"));
            }
            s.steps = Some(StepChoice::Preset(p));
        }
        Ok(s)
    }

    pub fn from_kv_file(path: &Path) -> Result<Settings> {
        let text = std::fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
        Settings::from_kv(&text, path.parent())
    }

    /// Applies the named preset underneath, fills defaults and validates.
    pub fn resolve(self) -> Result<Plan> {
        let kind = self.solver.unwrap_or(SolverKind::Amfd);
        let s = match &self.params {
            Some(name) => presets::preset_settings(kind, name)?.overlay(self),
            None => self,
        };
        let problem = s.problem.ok_or_else(|| BenchError::config("problem is required"))?;
        let instance = s.instance.clone().ok_or_else(|| BenchError::config("instance is required"))?;

        for (name, set) in [("eta", s.eta), ("zeta", s.zeta), ("alpha", s.alpha), ("sigma", s.sigma)] {
            if set.is_some() && !kind.accepts(name) {
                return Err(BenchError::config(format!("{name} does not apply to solver {kind}")));
            }
        }
        let solver = match kind {
            SolverKind::Amfd => {
                SolverSpec::Amfd { eta: s.eta.unwrap_or(DEFAULT_ETA), zeta: s.zeta.unwrap_or(DEFAULT_ZETA) }
            }
            SolverKind::Mfa => SolverSpec::Mfa,
            SolverKind::Pmfa => SolverSpec::Pmfa { alpha: s.alpha.unwrap_or(DEFAULT_ALPHA) },
            SolverKind::Nmfa => {
                SolverSpec::Nmfa { alpha: s.alpha.unwrap_or(DEFAULT_ALPHA), sigma: s.sigma.unwrap_or(DEFAULT_SIGMA) }
            }
        };

        let (steps, sweep) = match s.steps {
            None => (StepSpec::Preset(StepPreset::Short), None),
            Some(StepChoice::Preset(p)) => (StepSpec::Preset(p), None),
            Some(StepChoice::List(list)) => {
                validate_steps(&list)?;
                if list.len() == 1 {
                    (StepSpec::Fixed(list[0]), None)
                } else {
                    (StepSpec::Fixed(list[0]), Some(list))
                }
            }
        };

        if s.n_color.is_some() && problem != ProblemKind::Gcp {
            return Err(BenchError::config("n_color applies only to gcp"));
        }
        if s.bks == Some(0.0) {
            return Err(BenchError::config("bks must be nonzero"));
        }
        let bks = s.bks.or_else(|| presets::bks_for(problem, &presets::instance_name(&instance)));

        let config = RunConfig {
            problem,
            instance,
            solver,
            t_init: s.t_init.unwrap_or(DEFAULT_T_INIT),
            t_fin: s.t_fin.unwrap_or(DEFAULT_T_FIN),
            steps,
            n_replicas: s.replicas.unwrap_or(DEFAULT_REPLICAS),
            seed: s.seed.unwrap_or(0),
            bks,
            n_color: s.n_color,
            threads: s.threads,
            out: s.out,
        };
        Ok(Plan { config, sweep, format: s.format.unwrap_or(OutputFormat::Csv) })
    }
}

pub(crate) fn parse_step_list(s: &str) -> std::result::Result<Vec<usize>, std::num::ParseIntError> {
    s.split(',').map(|t| t.trim().parse()).collect()
}

/// Nonempty, nonzero and strictly increasing.
pub fn validate_steps(steps: &[usize]) -> Result<()> {
    if steps.is_empty() {
        return Err(BenchError::config("step list is empty"));
    }
    if steps.contains(&0) {
        return Err(BenchError::config("step counts must be positive"));
    }
    if steps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(BenchError::config("step counts must be strictly increasing"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> Settings {
        Settings { problem: Some(ProblemKind::Mcp), instance: Some("G1".into()), ..Settings::default() }
    }

    #[test]
    fn defaults() {
        let plan = base().resolve().unwrap();
        let c = plan.config;
        assert_eq!(c.solver, SolverSpec::Amfd { eta: 0.1, zeta: 0.0 });
        assert_eq!((c.t_init, c.t_fin), (0.3, 0.0));
        assert_eq!(c.steps, StepSpec::Preset(StepPreset::Short));
        assert_eq!(c.n_replicas, 128);
        assert_eq!(c.bks, Some(-11624.0));
        assert_eq!(plan.format, OutputFormat::Csv);
    }

    #[test]
    fn irrelevant_parameters_rejected() {
        let s = Settings { solver: Some(SolverKind::Nmfa), zeta: Some(1.0), ..base() };
        assert!(s.resolve().unwrap_err().to_string().contains("zeta"));
        let s = Settings { solver: Some(SolverKind::Mfa), alpha: Some(0.5), ..base() };
        assert!(s.resolve().is_err());
        let s = Settings { sigma: Some(0.5), ..base() };
        assert!(s.resolve().is_err());
        let s = Settings { solver: Some(SolverKind::Nmfa), alpha: Some(0.2), sigma: Some(0.0), ..base() };
        assert_eq!(s.resolve().unwrap().config.solver, SolverSpec::Nmfa { alpha: 0.2, sigma: 0.0 });
    }

    #[test]
    fn flags_win_over_file_over_preset() {
        let file = Settings::from_kv("params = paper:G1\neta = 0.3\nt-init = 0.4\n", None).unwrap();
        let flags = Settings { eta: Some(0.7), ..Settings::default() };
        let c = base().overlay(file).overlay(flags).resolve().unwrap().config;
        assert_eq!(c.solver, SolverSpec::Amfd { eta: 0.7, zeta: 5.0 });
        assert_eq!(c.t_init, 0.4);
    }

    #[test]
    fn steps_and_sweeps() {
        let one = Settings { steps: Some(StepChoice::List(vec![50])), ..base() }.resolve().unwrap();
        assert_eq!((one.config.steps, one.sweep), (StepSpec::Fixed(50), None));
        let many = Settings { steps: Some(StepChoice::List(vec![5, 50])), ..base() }.resolve().unwrap();
        assert_eq!(many.sweep, Some(vec![5, 50]));
        for bad in [vec![], vec![0, 5], vec![5, 5], vec![9, 3]] {
            assert!(Settings { steps: Some(StepChoice::List(bad)), ..base() }.resolve().is_err());
        }
        assert_eq!(StepSpec::Preset(StepPreset::Medium).n_step(29), 290);
    }

    #[test]
    fn kv_errors() {
        assert!(Settings::from_kv("steps = 10\npreset = short\n", None).is_err());
        assert!(Settings::from_kv("eta = 1\neta = 2\n", None).is_err());
        assert!(Settings::from_kv("colour = 3\n", None).is_err());
        assert!(Settings::from_kv("eta 0.1\n", None).is_err());
        assert!(Settings::from_kv("seed = -1\n", None).unwrap_err().to_string().contains("line 1"));
    }

    #[test]
    fn kv_paths_are_relative_to_file() {
        let s = Settings::from_kv("instance = data/g.txt # comment\n", Some(Path::new("/cfg"))).unwrap();
        assert_eq!(s.instance, Some(PathBuf::from("/cfg/data/g.txt")));
    }

    #[test]
    fn color_budget_only_for_coloring() {
        assert!(Settings { n_color: Some(3), ..base() }.resolve().is_err());
        let s = Settings { problem: Some(ProblemKind::Gcp), n_color: Some(3), ..base() };
        assert_eq!(s.resolve().unwrap().config.n_color, Some(3));
    }

    #[test]
    fn explicit_bks_overrides_table() {
        let c = Settings { bks: Some(-100.0), ..base() }.resolve().unwrap().config;
        assert_eq!(c.bks, Some(-100.0));
        assert!(Settings { bks: Some(0.0), ..base() }.resolve().is_err());
        let c = Settings { instance: Some("unknown.txt".into()), ..base() }.resolve().unwrap().config;
        assert_eq!(c.bks, None);
    }
}
