//! Maximum independent set: `H = −Σ_i s_i + A Σ_{(i,j)∈E} s_i s_j`.

use super::{DecodedSolution, Encoding, ProblemKind, WeightedGraph, Witness};
use crate::error::{Error, Result};
use crate::qubo::{QuboBuilder, QuboModel, SpinVector};

/// Penalty that keeps adjacent pairs out of the minimizer.
pub const DEFAULT_MISP_PENALTY: f64 = 2.0;

pub fn build_misp(g: &WeightedGraph, penalty: f64) -> Result<(QuboModel, Encoding)> {
    g.require_unweighted("independent set")?;
    let mut b = QuboBuilder::new(g.n_vertex());
    for i in 0..g.n_vertex() {
        b.add_linear(i, -1.0);
    }
    for e in g.edges() {
        b.add_pair(e.u, e.v, penalty);
    }
    Ok((b.build()?, Encoding::Vertices { n: g.n_vertex() }))
}

/// Set size as objective; infeasible when two selected vertices are adjacent.
pub fn decode_misp(g: &WeightedGraph, s: &SpinVector) -> Result<DecodedSolution> {
    if s.len() != g.n_vertex() {
        return Err(Error::DimensionMismatch { expected: g.n_vertex(), found: s.len() });
    }
    let set: Vec<usize> = (0..s.len()).filter(|&i| s[i] == 1).collect();
    let feasible = g.edges().iter().all(|e| s[e.u] == 0 || s[e.v] == 0);
    Ok(DecodedSolution {
        kind: ProblemKind::Misp,
        objective: set.len() as f64,
        feasible,
        witness: Witness::VertexSet(set),
    })
}
