//! QUBO models over binary spins `s ∈ {0,1}^N`.
//!
//! The energy of an assignment is `h·s + ½ sᵀQs + C` where `Q` is symmetric
//! with a zero diagonal, so every unordered pair `{i, j}` contributes
//! `Q[i][j]·s_i·s_j` exactly once. The constant `C` is carried for reporting
//! only and never enters the solver dynamics.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Binary assignment, every entry exactly 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct SpinVector(Vec<u8>);

impl SpinVector {
    pub fn new(spins: Vec<u8>) -> Result<Self> {
        if let Some((index, &value)) = spins.iter().enumerate().find(|(_, &v)| v > 1) {
            return Err(Error::InvalidSpin { index, value });
        }
        Ok(Self(spins))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        Self(bits.into_iter().map(u8::from).collect())
    }

    /// Spins indexed by the low bits of `mask` (bit `i` is spin `i`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self((0..n).map(|i| ((mask >> i) & 1) as u8).collect())
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&s| s == 1).count()
    }

    pub fn into_inner(self) -> Vec<u8> {
        self.0
    }
}

impl Deref for SpinVector {
    type Target = [u8];
    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl TryFrom<Vec<u8>> for SpinVector {
    type Error = Error;
    fn try_from(v: Vec<u8>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<SpinVector> for Vec<u8> {
    fn from(s: SpinVector) -> Self {
        s.0
    }
}

/// Mean-field spin expectations, every entry in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MfVector(Vec<f64>);

impl MfVector {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        for (index, &value) in x.iter().enumerate() {
            // NaN fails both comparisons.
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::OutOfUnitInterval { index, value });
            }
        }
        Ok(Self(x))
    }

    pub fn uniform(n: usize, value: f64) -> Result<Self> {
        Self::new(vec![value; n])
    }

    /// Clamps each entry into `[0, 1]`. NaN entries become 0.5.
    pub fn clamped(mut x: Vec<f64>) -> Self {
        for v in &mut x {
            *v = if v.is_nan() { 0.5 } else { v.clamp(0.0, 1.0) };
        }
        Self(x)
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for MfVector {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl From<&SpinVector> for MfVector {
    fn from(s: &SpinVector) -> Self {
        Self(s.iter().map(|&b| f64::from(b)).collect())
    }
}

/// Rounds each mf-spin at 0.5; ties go to 1.
pub fn round_to_binary(x: &[f64]) -> SpinVector {
    SpinVector(x.iter().map(|&v| u8::from(v >= 0.5)).collect())
}

/// Compressed-row copy of the nonzero interactions. Column indices are
/// ascending within each row, so row sums accumulate in the same order as a
/// dense row scan.
#[derive(Debug, Clone, PartialEq)]
struct SparseRows {
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<f64>,
}

impl SparseRows {
    fn from_dense(n: usize, q: &[f64]) -> Self {
        let mut row_ptr = Vec::with_capacity(n + 1);
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        row_ptr.push(0);
        for row in q.chunks_exact(n.max(1)).take(n) {
            for (j, &v) in row.iter().enumerate() {
                if v != 0.0 {
                    cols.push(j);
                    vals.push(v);
                }
            }
            row_ptr.push(cols.len());
        }
        Self { row_ptr, cols, vals }
    }

    #[inline]
    fn row_dot(&self, i: usize, x: &[f64]) -> f64 {
        let (lo, hi) = (self.row_ptr[i], self.row_ptr[i + 1]);
        self.cols[lo..hi].iter().zip(&self.vals[lo..hi]).map(|(&j, &v)| v * x[j]).sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuboModel {
    n: usize,
    /// Dense row-major `n × n`.
    q: Vec<f64>,
    h: Vec<f64>,
    c: f64,
    sparse: SparseRows,
}

impl QuboModel {
    /// Builds a model from a full dense row-major matrix. The matrix must be
    /// exactly symmetric with a zero diagonal.
    pub fn new(q: Vec<f64>, h: Vec<f64>, c: f64) -> Result<Self> {
        let n = h.len();
        if q.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: q.len() });
        }
        if let Some(i) = q.iter().chain(&h).position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        if !c.is_finite() {
            return Err(Error::NonFinite(q.len() + n));
        }
        for i in 0..n {
            if q[i * n + i] != 0.0 {
                return Err(Error::NonZeroDiagonal(i));
            }
            for j in (i + 1)..n {
                if q[i * n + j] != q[j * n + i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        let sparse = SparseRows::from_dense(n, &q);
        Ok(Self { n, q, h, c, sparse })
    }

    /// Builds a model from the strict upper triangle of `upper`, mirroring it
    /// into the lower triangle. Nonzero diagonal or lower-triangle entries are
    /// rejected.
    pub fn from_upper_triangular(upper: &[Vec<f64>], h: Vec<f64>, c: f64) -> Result<Self> {
        let n = h.len();
        if upper.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: upper.len() });
        }
        let mut q = vec![0.0; n * n];
        for (i, row) in upper.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                if i == j && v != 0.0 {
                    return Err(Error::NonZeroDiagonal(i));
                }
                if j < i && v != 0.0 {
                    return Err(Error::NotSymmetric { i, j });
                }
                if j > i {
                    q[i * n + j] = v;
                    q[j * n + i] = v;
                }
            }
        }
        Self::new(q, h, c)
    }

    pub fn n_spin(&self) -> usize {
        self.n
    }

    pub fn q(&self, i: usize, j: usize) -> f64 {
        self.q[i * self.n + j]
    }

    pub fn q_row(&self, i: usize) -> &[f64] {
        &self.q[i * self.n..(i + 1) * self.n]
    }

    pub fn q_dense(&self) -> &[f64] {
        &self.q
    }

    pub fn h(&self) -> &[f64] {
        &self.h
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Number of stored nonzero interaction entries (both triangles).
    pub fn nnz(&self) -> usize {
        self.sparse.vals.len()
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: len });
        }
        Ok(())
    }

    /// `h·s + ½ sᵀQs + C`.
    pub fn energy(&self, s: &SpinVector) -> Result<f64> {
        self.check_dim(s.len())?;
        let x: Vec<f64> = s.iter().map(|&b| f64::from(b)).collect();
        Ok(self.quadratic_form(&x) + self.c)
    }

    /// `h·x + ½ xᵀQx` without the constant; the mf-energy for real `x`.
    pub(crate) fn quadratic_form(&self, x: &[f64]) -> f64 {
        (0..self.n).filter(|&i| x[i] != 0.0).map(|i| x[i] * (self.h[i] + 0.5 * self.sparse.row_dot(i, x))).sum()
    }

    /// `Φ = h + Qx`.
    pub fn mean_field(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(x.len())?;
        let mut phi = vec![0.0; self.n];
        self.mean_field_into(x, &mut phi);
        Ok(phi)
    }

    /// Unchecked `Φ = h + Qx` into a caller-owned buffer.
    #[inline]
    pub(crate) fn mean_field_into(&self, x: &[f64], phi: &mut [f64]) {
        for (i, out) in phi.iter_mut().enumerate() {
            *out = self.h[i] + self.sparse.row_dot(i, x);
        }
    }

    /// `Φ_i = h_i + Σ_j Q_ij x_j` for a single spin.
    #[inline]
    pub(crate) fn mean_field_at(&self, i: usize, x: &[f64]) -> f64 {
        self.h[i] + self.sparse.row_dot(i, x)
    }

    /// The normalization denominator `sqrt((1/N) Σ_i (h_i² + Σ_j Q_ij²))`.
    pub fn norm_scale(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        let h2: f64 = self.h.iter().map(|v| v * v).sum();
        let q2: f64 = self.sparse.vals.iter().map(|v| v * v).sum();
        ((h2 + q2) / self.n as f64).sqrt()
    }

    /// Returns a copy with `Q` and `h` divided by [`norm_scale`](Self::norm_scale).
    /// `C` is unchanged.
    pub fn normalize(&self) -> Result<QuboModel> {
        let d = self.norm_scale();
        if d == 0.0 {
            return Err(Error::DegenerateModel);
        }
        let q: Vec<f64> = self.q.iter().map(|v| v / d).collect();
        let h: Vec<f64> = self.h.iter().map(|v| v / d).collect();
        let sparse = SparseRows {
            row_ptr: self.sparse.row_ptr.clone(),
            cols: self.sparse.cols.clone(),
            vals: self.sparse.vals.iter().map(|v| v / d).collect(),
        };
        Ok(QuboModel { n: self.n, q, h, c: self.c, sparse })
    }
}

/// Accumulates linear, pairwise and constant terms of an expanded QUBO
/// expression. Pair terms are added to both `Q[i][j]` and `Q[j][i]`.
#[derive(Debug, Clone)]
pub struct QuboBuilder {
    n: usize,
    q: Vec<f64>,
    h: Vec<f64>,
    c: f64,
}

impl QuboBuilder {
    pub fn new(n: usize) -> Self {
        Self { n, q: vec![0.0; n * n], h: vec![0.0; n], c: 0.0 }
    }

    pub fn n_spin(&self) -> usize {
        self.n
    }

    /// Adds `w·s_i·s_j` to the energy. For `i == j` the term is linear
    /// (`s_i² = s_i`) and folds into the bias.
    pub fn add_pair(&mut self, i: usize, j: usize, w: f64) -> &mut Self {
        if i == j {
            self.h[i] += w;
        } else {
            self.q[i * self.n + j] += w;
            self.q[j * self.n + i] += w;
        }
        self
    }

    pub fn add_linear(&mut self, i: usize, w: f64) -> &mut Self {
        self.h[i] += w;
        self
    }

    pub fn add_constant(&mut self, w: f64) -> &mut Self {
        self.c += w;
        self
    }

    /// Adds `weight·(1 − Σ_{i∈vars} s_i)²` expanded into QUBO form.
    pub fn add_one_hot_penalty(&mut self, vars: &[usize], weight: f64) -> &mut Self {
        self.c += weight;
        for (a, &i) in vars.iter().enumerate() {
            self.h[i] -= weight;
            for &j in &vars[a + 1..] {
                self.add_pair(i, j, 2.0 * weight);
            }
        }
        self
    }

    pub fn build(self) -> Result<QuboModel> {
        QuboModel::new(self.q, self.h, self.c)
    }
}
