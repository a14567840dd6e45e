//! Graph coloring with `N_vertex·N_color` assignment spins and one usage
//! flag per color:
//! `H = Σ_k y_k + A Σ_k (1−y_k) Σ_i s_ik + B Σ_i (1 − Σ_k s_ik)² + C Σ_k Σ_E s_ik s_jk`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::tsp::check_encoding;
use super::{DecodedSolution, Encoding, ProblemKind, Site, WeightedGraph, Witness};
use crate::error::{Error, Result};
use crate::qubo::{QuboBuilder, QuboModel, SpinVector};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GcpPenalties {
    /// Using a color without raising its flag.
    pub a: f64,
    /// One color per vertex.
    pub b: f64,
    /// Adjacent vertices sharing a color.
    pub c: f64,
}

impl Default for GcpPenalties {
    fn default() -> Self {
        Self { a: 2.0, b: 2.0, c: 2.0 }
    }
}

/// Max degree plus one.
pub fn default_color_budget(g: &WeightedGraph) -> usize {
    g.max_degree() + 1
}

pub fn build_gcp(g: &WeightedGraph, n_color: Option<usize>) -> Result<(QuboModel, Encoding)> {
    build_gcp_with(g, n_color, GcpPenalties::default())
}

pub fn build_gcp_with(g: &WeightedGraph, n_color: Option<usize>, pen: GcpPenalties) -> Result<(QuboModel, Encoding)> {
    g.require_unweighted("graph coloring")?;
    let nc = n_color.unwrap_or_else(|| default_color_budget(g));
    if nc == 0 {
        return Err(Error::InvalidParameter("color budget must be at least 1".into()));
    }
    let nv = g.n_vertex();
    let enc = Encoding::Coloring { n_vertex: nv, n_color: nc };
    let s = |i, k| nv_index(nc, i, k);
    let y = |k| nv * nc + k;
    let mut b = QuboBuilder::new(enc.n_spin());

    for k in 0..nc {
        b.add_linear(y(k), 1.0);
        for i in 0..nv {
            b.add_linear(s(i, k), pen.a);
            b.add_pair(y(k), s(i, k), -pen.a);
        }
    }
    let mut vars = Vec::with_capacity(nc);
    for i in 0..nv {
        vars.clear();
        vars.extend((0..nc).map(|k| s(i, k)));
        b.add_one_hot_penalty(&vars, pen.b);
    }
    for e in g.edges() {
        for k in 0..nc {
            b.add_pair(s(e.u, k), s(e.v, k), pen.c);
        }
    }
    Ok((b.build()?, enc))
}

#[inline]
fn nv_index(nc: usize, i: usize, k: usize) -> usize {
    i * nc + k
}

pub fn decode_gcp(g: &WeightedGraph, s: &SpinVector, enc: &Encoding) -> Result<DecodedSolution> {
    let Encoding::Coloring { n_vertex, n_color } = *enc else {
        return Err(Error::InvalidParameter(format!("{enc:?} is not a coloring layout")));
    };
    if n_vertex != g.n_vertex() {
        return Err(Error::DimensionMismatch { expected: g.n_vertex(), found: n_vertex });
    }
    check_encoding(*enc, enc, s)?;

    let mut used = BTreeSet::new();
    let colors: Vec<Option<usize>> = (0..n_vertex)
        .map(|i| {
            let picked: Vec<usize> = (0..n_color).filter(|&k| s[nv_index(n_color, i, k)] == 1).collect();
            used.extend(picked.iter().copied());
            (picked.len() == 1).then(|| picked[0])
        })
        .collect();
    let proper = g.edges().iter().all(|e| match (colors[e.u], colors[e.v]) {
        (Some(a), Some(b)) => a != b,
        _ => true,
    });
    let feasible = colors.iter().all(Option::is_some) && proper;
    let flags_consistent = used.iter().all(|&k| s[enc.index(Site::ColorUsed(k)).expect("color in range")] == 1);
    Ok(DecodedSolution {
        kind: ProblemKind::Gcp,
        objective: used.len() as f64,
        feasible,
        witness: Witness::Coloring { colors, flags_consistent },
    })
}

/// Spin vector for a full coloring, raising exactly the flags of used colors.
pub fn encode_coloring(enc: &Encoding, colors: &[usize]) -> Result<SpinVector> {
    let Encoding::Coloring { n_vertex, n_color } = *enc else {
        return Err(Error::InvalidParameter(format!("{enc:?} is not a coloring layout")));
    };
    if colors.len() != n_vertex {
        return Err(Error::DimensionMismatch { expected: n_vertex, found: colors.len() });
    }
    let mut s = vec![0u8; enc.n_spin()];
    for (i, &k) in colors.iter().enumerate() {
        if k >= n_color {
            return Err(Error::InvalidParameter(format!("color {k} exceeds budget {n_color}")));
        }
        s[nv_index(n_color, i, k)] = 1;
        s[n_vertex * n_color + k] = 1;
    }
    SpinVector::new(s)
}
