//! Traveling salesman on `(N−1)²` spins `s_{city, position}`; the last city
//! is the fixed start and end of every tour.

use serde::{Deserialize, Serialize};

use super::{DecodedSolution, Encoding, ProblemKind, Witness};
use crate::error::{Error, Result};
use crate::qubo::{QuboBuilder, QuboModel, SpinVector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TspInstance {
    n_city: usize,
    /// Row-major `n_city × n_city` travel costs, possibly asymmetric.
    d: Vec<f64>,
}

impl TspInstance {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n < 3 {
            return Err(Error::InvalidInstance(format!("TSP needs at least 3 cities, got {n}")));
        }
        let mut d = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInstance(format!(
                    "distance row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            d.extend(row);
        }
        Self::from_flat(n, d)
    }

    pub fn from_flat(n_city: usize, d: Vec<f64>) -> Result<Self> {
        if n_city < 3 {
            return Err(Error::InvalidInstance(format!("TSP needs at least 3 cities, got {n_city}")));
        }
        if d.len() != n_city * n_city {
            return Err(Error::DimensionMismatch { expected: n_city * n_city, found: d.len() });
        }
        for (idx, &v) in d.iter().enumerate() {
            let (i, j) = (idx / n_city, idx % n_city);
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidInstance(format!("bad distance {v} at ({i}, {j})")));
            }
            if i == j && v != 0.0 {
                return Err(Error::InvalidInstance(format!("nonzero self-distance at city {i}")));
            }
        }
        Ok(Self { n_city, d })
    }

    pub fn n_city(&self) -> usize {
        self.n_city
    }

    #[inline]
    pub fn d(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n_city + j]
    }

    /// Largest average outgoing distance over all cities.
    pub fn penalty_weight(&self) -> f64 {
        let n = self.n_city;
        (0..n)
            .map(|i| (0..n).filter(|&j| j != i).map(|j| self.d(i, j)).sum::<f64>() / (n - 1) as f64)
            .fold(0.0, f64::max)
    }

    /// Length of the closed tour visiting `order` in sequence.
    pub fn tour_length(&self, order: &[usize]) -> f64 {
        let n = order.len();
        (0..n).map(|k| self.d(order[k], order[(k + 1) % n])).sum()
    }

    pub fn encoding(&self) -> Encoding {
        let m = self.n_city - 1;
        Encoding::Grid { rows: m, cols: m }
    }
}

pub fn build_tsp(inst: &TspInstance) -> Result<(QuboModel, Encoding)> {
    build_tsp_with_penalty(inst, inst.penalty_weight())
}

/// Same as [`build_tsp`] with an explicit `A = B`.
pub fn build_tsp_with_penalty(inst: &TspInstance, penalty: f64) -> Result<(QuboModel, Encoding)> {
    let depot = inst.n_city - 1;
    let m = depot;
    let enc = inst.encoding();
    let mut b = QuboBuilder::new(enc.n_spin());

    for k in 0..m - 1 {
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    b.add_pair(enc.cell(i, k), enc.cell(j, k + 1), inst.d(i, j));
                }
            }
        }
    }
    for i in 0..m {
        b.add_linear(enc.cell(i, 0), inst.d(depot, i));
        b.add_linear(enc.cell(i, m - 1), inst.d(i, depot));
    }

    let mut vars = Vec::with_capacity(m);
    for k in 0..m {
        vars.clear();
        vars.extend((0..m).map(|i| enc.cell(i, k)));
        b.add_one_hot_penalty(&vars, penalty);
    }
    for i in 0..m {
        vars.clear();
        vars.extend((0..m).map(|k| enc.cell(i, k)));
        b.add_one_hot_penalty(&vars, penalty);
    }
    Ok((b.build()?, enc))
}

/// Reads the permutation matrix; `None` unless every row and column has
/// exactly one selected cell. Entry `k` is the row selected in column `k`.
pub(crate) fn read_permutation(s: &[u8], m: usize) -> Option<Vec<usize>> {
    let mut col_of_row = vec![usize::MAX; m];
    let mut row_of_col = vec![usize::MAX; m];
    for r in 0..m {
        for c in 0..m {
            if s[r * m + c] == 1 {
                if col_of_row[r] != usize::MAX || row_of_col[c] != usize::MAX {
                    return None;
                }
                col_of_row[r] = c;
                row_of_col[c] = r;
            }
        }
    }
    row_of_col.iter().all(|&r| r != usize::MAX).then_some(row_of_col)
}

pub(crate) fn check_encoding(expected: Encoding, enc: &Encoding, s: &SpinVector) -> Result<()> {
    if *enc != expected {
        return Err(Error::InvalidParameter(format!("encoding {enc:?} does not match instance layout {expected:?}")));
    }
    if s.len() != expected.n_spin() {
        return Err(Error::DimensionMismatch { expected: expected.n_spin(), found: s.len() });
    }
    Ok(())
}

pub fn decode_tsp(inst: &TspInstance, s: &SpinVector, enc: &Encoding) -> Result<DecodedSolution> {
    check_encoding(inst.encoding(), enc, s)?;
    let depot = inst.n_city - 1;
    let tour = read_permutation(s, depot).map(|by_pos| {
        let mut order = Vec::with_capacity(inst.n_city);
        order.push(depot);
        order.extend(by_pos);
        order
    });
    let (objective, feasible) = match &tour {
        Some(order) => (inst.tour_length(order), true),
        None => (f64::INFINITY, false),
    };
    Ok(DecodedSolution { kind: ProblemKind::Tsp, objective, feasible, witness: Witness::Tour(tour) })
}

/// Spin vector visiting `order` (a permutation of the non-depot cities).
pub fn encode_tour(inst: &TspInstance, order: &[usize]) -> Result<SpinVector> {
    let m = inst.n_city - 1;
    if order.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: order.len() });
    }
    let enc = inst.encoding();
    let mut s = vec![0u8; enc.n_spin()];
    for (k, &city) in order.iter().enumerate() {
        if city >= m {
            return Err(Error::InvalidParameter(format!("city {city} is not a free city")));
        }
        s[enc.cell(city, k)] = 1;
    }
    let s = SpinVector::new(s)?;
    if read_permutation(&s, m).is_none() {
        return Err(Error::InvalidParameter("tour repeats a city".into()));
    }
    Ok(s)
}
