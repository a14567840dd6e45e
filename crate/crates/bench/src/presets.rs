//! Best known solutions and published parameter settings for the standard
//! benchmark instances.

use std::path::Path;

use amfd::problems::ProblemKind;

use crate::config::{Settings, SolverKind};
use crate::error::{BenchError, Result};

/// Best known solutions, in minimization sign: negated cut weight and
/// negated set size for max-cut and independent set.
pub const BKS_TABLE: &[(&str, ProblemKind, f64)] = &[
    ("G1", ProblemKind::Mcp, -11624.0),
    ("G35", ProblemKind::Mcp, -7687.0),
    ("G48", ProblemKind::Mcp, -6000.0),
    ("G56", ProblemKind::Mcp, -4017.0),
    ("G63", ProblemKind::Mcp, -27045.0),
    ("G72", ProblemKind::Mcp, -7008.0),
    ("DSJC1000_5", ProblemKind::Misp, -15.0),
    ("p_hat1500-1", ProblemKind::Misp, -12.0),
    ("C2000.9", ProblemKind::Misp, -80.0),
    ("MANN_a81", ProblemKind::Misp, -1100.0),
    ("keller6", ProblemKind::Misp, -59.0),
    ("C4000.5", ProblemKind::Misp, -18.0),
    ("bays29", ProblemKind::Tsp, 2020.0),
    ("dantzig42", ProblemKind::Tsp, 699.0),
    ("eil51", ProblemKind::Tsp, 426.0),
    ("st70", ProblemKind::Tsp, 675.0),
    ("pr76", ProblemKind::Tsp, 108159.0),
    ("rd100", ProblemKind::Tsp, 7910.0),
    ("esc32a", ProblemKind::Qap, 130.0),
    ("ste36a", ProblemKind::Qap, 9526.0),
    ("tai50a", ProblemKind::Qap, 4938796.0),
    ("lipa70a", ProblemKind::Qap, 169755.0),
    ("sko81", ProblemKind::Qap, 90998.0),
    ("wil100", ProblemKind::Qap, 273038.0),
    ("myciel5", ProblemKind::Gcp, 6.0),
    ("queen8_8", ProblemKind::Gcp, 9.0),
    ("jean", ProblemKind::Gcp, 10.0),
    ("huck", ProblemKind::Gcp, 11.0),
    ("david", ProblemKind::Gcp, 11.0),
    ("miles1000", ProblemKind::Gcp, 42.0),
];

/// `(instance, η, ζ, T_init, T_fin)`
pub const AMFD_PARAMS: &[(&str, f64, f64, f64, f64)] = &[
    ("G1", 0.1, 5.0, 0.3, 0.0),
    ("G35", 0.2, 5.0, 0.3, 0.0),
    ("G48", 0.2, 5.0, 0.3, 0.0),
    ("G56", 0.1, 5.0, 0.5, 0.0),
    ("G63", 0.2, 5.0, 0.3, 0.0),
    ("G72", 0.1, 5.0, 0.5, 0.0),
    ("DSJC1000_5", 0.02, 5.0, 0.5, 0.0),
    ("C2000.9", 0.05, 2.0, 0.5, 0.0),
    ("p_hat1500-1", 0.1, 0.0, 0.3, 0.0),
    ("MANN_a81", 0.05, 5.0, 0.3, 0.0),
    ("keller6", 0.01, 10.0, 0.3, 0.0),
    ("C4000.5", 0.005, 5.0, 0.3, 0.0),
    ("bays29", 0.02, 0.0, 0.3, 0.0),
    ("dantzig42", 0.05, 0.0, 0.3, 0.0),
    ("eil51", 0.05, 0.0, 0.3, 0.0),
    ("st70", 0.02, 0.0, 0.3, 0.0),
    ("pr76", 0.02, 0.0, 0.3, 0.0),
    ("rd100", 0.01, 1.0, 0.3, 0.0),
    ("esc32a", 0.05, 1.0, 0.5, 0.0),
    ("ste36a", 0.005, 0.0, 0.3, 0.0),
    ("tai50a", 0.005, 0.0, 0.3, 0.0),
    ("lipa70a", 0.002, 2.0, 0.3, 0.0),
    ("sko81", 0.002, 0.0, 0.5, 0.0),
    ("wil100", 0.002, 2.0, 0.5, 0.0),
    ("david", 0.005, 50.0, 0.3, 0.0),
    ("queen8_8", 0.2, 0.0, 0.5, 0.0),
    ("myciel5", 0.2, 0.0, 0.3, 0.0),
    ("jean", 0.005, 50.0, 0.3, 0.0),
    ("huck", 0.005, 50.0, 0.3, 0.0),
    ("miles1000", 0.02, 5.0, 0.3, 0.0),
];

/// `(instance, α, σ, T_init, T_fin)`
pub const NMFA_PARAMS: &[(&str, f64, f64, f64, f64)] = &[
    ("G35", 0.2, 0.1, 1.0, 0.001),
    ("C2000.9", 0.2, 0.001, 0.01, 0.001),
    ("eil51", 0.3, 0.0001, 0.005, 0.0),
    ("tai50a", 0.2, 0.0001, 0.005, 0.001),
    ("jean", 0.1, 0.0001, 0.005, 0.0001),
];

/// Lookup key: lowercase with `.` read as `_`, so `DSJC1000.5` and
/// `DSJC1000_5` match.
pub fn instance_key(name: &str) -> String {
    name.trim().to_ascii_lowercase().replace('.', "_")
}

const KNOWN_EXTENSIONS: &[&str] = &["txt", "clq", "col", "tsp", "atsp", "dat", "gset", "mtx"];

/// Instance name from a file path, dropping a recognized extension only,
/// since names like `C2000.9` contain dots.
pub fn instance_name(path: &Path) -> String {
    let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    match file.rsplit_once('.') {
        Some((stem, ext)) if KNOWN_EXTENSIONS.contains(&ext.to_ascii_lowercase().as_str()) => stem.to_string(),
        _ => file,
    }
}

pub fn bks_for(kind: ProblemKind, instance: &str) -> Option<f64> {
    let key = instance_key(instance);
    BKS_TABLE.iter().find(|(n, k, _)| *k == kind && instance_key(n) == key).map(|&(_, _, v)| v)
}

/// Settings layer for a preset name of the form `paper:<instance>`.
pub fn preset_settings(solver: SolverKind, name: &str) -> Result<Settings> {
    let instance = name
        .strip_prefix("paper:")
        .ok_or_else(|| BenchError::config(format!("unknown preset {name:?}, expected paper:<instance>")))?;
    let key = instance_key(instance);
    let row =
        |table: &'static [(&'static str, f64, f64, f64, f64)]| table.iter().find(|r| instance_key(r.0) == key).copied();
    let missing = || BenchError::config(format!("no published {solver} parameters for {instance:?}"));
    match solver {
        SolverKind::Amfd => {
            let (_, eta, zeta, t_init, t_fin) = row(AMFD_PARAMS).ok_or_else(missing)?;
            Ok(Settings {
                eta: Some(eta),
                zeta: Some(zeta),
                t_init: Some(t_init),
                t_fin: Some(t_fin),
                ..Settings::default()
            })
        }
        SolverKind::Nmfa => {
            let (_, alpha, sigma, t_init, t_fin) = row(NMFA_PARAMS).ok_or_else(missing)?;
            Ok(Settings {
                alpha: Some(alpha),
                sigma: Some(sigma),
                t_init: Some(t_init),
                t_fin: Some(t_fin),
                ..Settings::default()
            })
        }
        SolverKind::Mfa | SolverKind::Pmfa => Err(missing()),
    }
}
