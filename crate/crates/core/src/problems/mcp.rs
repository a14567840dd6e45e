//! Maximum cut.
//!
//! `H = −½ Σ_{i>j} E_ij [1 − (2s_i − 1)(2s_j − 1)]` expands to
//! `Q_ij = 2E_ij`, `h_i = −Σ_j E_ij`, `C = 0`, so `H = −cut(s)`.

use super::{DecodedSolution, Encoding, ProblemKind, WeightedGraph, Witness};
use crate::error::{Error, Result};
use crate::qubo::{QuboBuilder, QuboModel, SpinVector};

pub fn build_mcp(g: &WeightedGraph) -> Result<(QuboModel, Encoding)> {
    let mut b = QuboBuilder::new(g.n_vertex());
    for e in g.edges() {
        b.add_pair(e.u, e.v, 2.0 * e.w);
        b.add_linear(e.u, -e.w);
        b.add_linear(e.v, -e.w);
    }
    Ok((b.build()?, Encoding::Vertices { n: g.n_vertex() }))
}

/// Cut weight of the partition; always feasible.
pub fn decode_mcp(g: &WeightedGraph, s: &SpinVector) -> Result<DecodedSolution> {
    if s.len() != g.n_vertex() {
        return Err(Error::DimensionMismatch { expected: g.n_vertex(), found: s.len() });
    }
    let cut = g.edges().iter().filter(|e| s[e.u] != s[e.v]).map(|e| e.w).sum();
    Ok(DecodedSolution {
        kind: ProblemKind::Mcp,
        objective: cut,
        feasible: true,
        witness: Witness::Partition(s.to_vec()),
    })
}
