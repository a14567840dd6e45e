use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    /// Maximum cut.
    Mcp,
    /// Maximum independent set.
    Misp,
    /// Traveling salesman.
    Tsp,
    /// Quadratic assignment.
    Qap,
    /// Graph coloring.
    Gcp,
}

impl ProblemKind {
    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Mcp => "mcp",
            ProblemKind::Misp => "misp",
            ProblemKind::Tsp => "tsp",
            ProblemKind::Qap => "qap",
            ProblemKind::Gcp => "gcp",
        }
    }

    /// Whether the native objective is maximized (reported negated).
    pub fn maximizes(self) -> bool {
        matches!(self, ProblemKind::Mcp | ProblemKind::Misp)
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mcp" | "maxcut" => Ok(ProblemKind::Mcp),
            "misp" | "mis" => Ok(ProblemKind::Misp),
            "tsp" => Ok(ProblemKind::Tsp),
            "qap" => Ok(ProblemKind::Qap),
            "gcp" | "coloring" => Ok(ProblemKind::Gcp),
            _ => Err(Error::InvalidParameter(format!("unknown problem kind {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Witness {
    /// Side (0 or 1) of every vertex.
    Partition(Vec<u8>),
    /// Selected vertices, ascending, 0-based.
    VertexSet(Vec<usize>),
    /// Visiting order starting at the fixed depot city, 0-based; `None` when
    /// the spins do not encode a tour.
    Tour(Option<Vec<usize>>),
    /// City of every factory, 0-based; `None` for non-permutations.
    Assignment(Option<Vec<usize>>),
    Coloring {
        /// Color of each vertex when exactly one is selected.
        colors: Vec<Option<usize>>,
        /// Every used color has its usage flag set.
        flags_consistent: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecodedSolution {
    pub kind: ProblemKind,
    /// Native objective in its natural sign: cut weight, set size, tour
    /// length, assignment cost or color count. `+∞` when the spins do not
    /// encode a tour or permutation.
    pub objective: f64,
    pub feasible: bool,
    pub witness: Witness,
}

impl DecodedSolution {
    /// Objective as a minimization score: negated for max-cut and
    /// independent set, unchanged otherwise.
    pub fn score(&self) -> f64 {
        if self.kind.maximizes() {
            -self.objective
        } else {
            self.objective
        }
    }
}

/// `max{0, 1 − |(bks − sol)/bks|}`.
pub fn accuracy(bks: f64, sol: f64) -> Result<f64> {
    if bks == 0.0 {
        return Err(Error::UndefinedAccuracy);
    }
    Ok((1.0 - ((bks - sol) / bks).abs()).max(0.0))
}
