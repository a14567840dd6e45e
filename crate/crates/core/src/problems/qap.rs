//! Quadratic assignment on `N²` spins `s_{factory, city}`.

use serde::{Deserialize, Serialize};

use super::tsp::{check_encoding, read_permutation};
use super::{DecodedSolution, Encoding, ProblemKind, Witness};
use crate::error::{Error, Result};
use crate::qubo::{QuboBuilder, QuboModel, SpinVector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QapInstance {
    n: usize,
    /// Row-major flow between factories.
    f: Vec<f64>,
    /// Row-major distance between cities.
    d: Vec<f64>,
}

fn check_square(name: &str, n: usize, m: &[f64]) -> Result<()> {
    if m.len() != n * n {
        return Err(Error::DimensionMismatch { expected: n * n, found: m.len() });
    }
    for (idx, &v) in m.iter().enumerate() {
        if !v.is_finite() {
            return Err(Error::InvalidInstance(format!("{name} entry {idx} is not finite")));
        }
    }
    for i in 0..n {
        if m[i * n + i] != 0.0 {
            return Err(Error::InvalidInstance(format!("{name} diagonal nonzero at {i}")));
        }
    }
    Ok(())
}

impl QapInstance {
    pub fn new(n: usize, f: Vec<f64>, d: Vec<f64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInstance(format!("QAP needs at least 2 facilities, got {n}")));
        }
        check_square("flow", n, &f)?;
        check_square("distance", n, &d)?;
        Ok(Self { n, f, d })
    }

    pub fn from_rows(f: Vec<Vec<f64>>, d: Vec<Vec<f64>>) -> Result<Self> {
        let n = f.len();
        if d.len() != n || f.iter().chain(&d).any(|r| r.len() != n) {
            return Err(Error::InvalidInstance("flow and distance must be square and equal-sized".into()));
        }
        Self::new(n, f.concat(), d.concat())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn flow(&self, i: usize, k: usize) -> f64 {
        self.f[i * self.n + k]
    }

    #[inline]
    pub fn dist(&self, j: usize, l: usize) -> f64 {
        self.d[j * self.n + l]
    }

    /// `max_{i,j} Σ_k F_ik · Σ_l D_jl / (N−1)`.
    pub fn penalty_weight(&self) -> f64 {
        let n = self.n;
        let rf: Vec<f64> = (0..n).map(|i| (0..n).map(|k| self.flow(i, k)).sum()).collect();
        let rd: Vec<f64> = (0..n).map(|j| (0..n).map(|l| self.dist(j, l)).sum()).collect();
        let mut best = f64::NEG_INFINITY;
        for &a in &rf {
            for &b in &rd {
                best = best.max(a * b / (n - 1) as f64);
            }
        }
        best
    }

    /// `Σ_{i,k} F_ik D_{π(i)π(k)}` where `perm[i]` is the city of factory `i`.
    pub fn cost(&self, perm: &[usize]) -> f64 {
        let n = self.n;
        let mut total = 0.0;
        for i in 0..n {
            for k in 0..n {
                total += self.flow(i, k) * self.dist(perm[i], perm[k]);
            }
        }
        total
    }

    pub fn encoding(&self) -> Encoding {
        Encoding::Grid { rows: self.n, cols: self.n }
    }
}

pub fn build_qap(inst: &QapInstance) -> Result<(QuboModel, Encoding)> {
    build_qap_with_penalty(inst, inst.penalty_weight())
}

/// Same as [`build_qap`] with an explicit `A = B`.
pub fn build_qap_with_penalty(inst: &QapInstance, penalty: f64) -> Result<(QuboModel, Encoding)> {
    let n = inst.n;
    let enc = inst.encoding();
    let mut b = QuboBuilder::new(enc.n_spin());

    // Unordered spin pairs collect both orderings of the double sum.
    for i in 0..n {
        for j in 0..n {
            let a = enc.cell(i, j);
            for k in 0..n {
                let fik = inst.flow(i, k);
                let fki = inst.flow(k, i);
                if fik == 0.0 && fki == 0.0 {
                    continue;
                }
                for l in 0..n {
                    let c = enc.cell(k, l);
                    if c < a {
                        continue;
                    }
                    let w = if c == a { fik * inst.dist(j, l) } else { fik * inst.dist(j, l) + fki * inst.dist(l, j) };
                    if w != 0.0 {
                        b.add_pair(a, c, w);
                    }
                }
            }
        }
    }

    let mut vars = Vec::with_capacity(n);
    for i in 0..n {
        vars.clear();
        vars.extend((0..n).map(|j| enc.cell(i, j)));
        b.add_one_hot_penalty(&vars, penalty);
    }
    for j in 0..n {
        vars.clear();
        vars.extend((0..n).map(|i| enc.cell(i, j)));
        b.add_one_hot_penalty(&vars, penalty);
    }
    Ok((b.build()?, enc))
}

pub fn decode_qap(inst: &QapInstance, s: &SpinVector, enc: &Encoding) -> Result<DecodedSolution> {
    check_encoding(inst.encoding(), enc, s)?;
    // Column-major read gives the factory of each city; invert it.
    let perm = read_permutation(s, inst.n).map(|factory_of_city| {
        let mut city_of = vec![0; inst.n];
        for (city, &fac) in factory_of_city.iter().enumerate() {
            city_of[fac] = city;
        }
        city_of
    });
    let (objective, feasible) = match &perm {
        Some(p) => (inst.cost(p), true),
        None => (f64::INFINITY, false),
    };
    Ok(DecodedSolution { kind: ProblemKind::Qap, objective, feasible, witness: Witness::Assignment(perm) })
}

/// Spin vector placing factory `i` in city `perm[i]`.
pub fn encode_assignment(inst: &QapInstance, perm: &[usize]) -> Result<SpinVector> {
    let n = inst.n;
    if perm.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: perm.len() });
    }
    let enc = inst.encoding();
    let mut s = vec![0u8; enc.n_spin()];
    for (i, &j) in perm.iter().enumerate() {
        if j >= n {
            return Err(Error::InvalidParameter(format!("city {j} out of range")));
        }
        s[enc.cell(i, j)] = 1;
    }
    if read_permutation(&s, n).is_none() {
        return Err(Error::InvalidParameter("assignment is not a permutation".into()));
    }
    SpinVector::new(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair() -> QapInstance {
        QapInstance::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]], vec![vec![0.0, 3.0], vec![3.0, 0.0]]).unwrap()
    }

    #[test]
    fn two_facility_examples() {
        let inst = pair();
        let (m, enc) = build_qap(&inst).unwrap();
        for perm in [[0, 1], [1, 0]] {
            let s = encode_assignment(&inst, &perm).unwrap();
            assert_eq!(m.energy(&s).unwrap(), 6.0);
            let d = decode_qap(&inst, &s, &enc).unwrap();
            assert_eq!((d.objective, d.feasible), (6.0, true));
        }
        let a = inst.penalty_weight();
        assert_eq!(a, 3.0);
        assert_eq!(m.energy(&SpinVector::zeros(4)).unwrap(), 2.0 * a * 2.0);
    }

    #[test]
    fn non_permutation_is_infeasible() {
        let inst = pair();
        let enc = inst.encoding();
        let d = decode_qap(&inst, &SpinVector::new(vec![1, 0, 1, 0]).unwrap(), &enc).unwrap();
        assert!(!d.feasible);
        assert_eq!(d.witness, Witness::Assignment(None));
    }

    #[test]
    fn asymmetric_assignment_direction() {
        let f = vec![vec![0.0, 5.0, 0.0], vec![0.0, 0.0, 1.0], vec![2.0, 0.0, 0.0]];
        let d = vec![vec![0.0, 1.0, 7.0], vec![4.0, 0.0, 2.0], vec![3.0, 6.0, 0.0]];
        let inst = QapInstance::from_rows(f, d).unwrap();
        let (m, enc) = build_qap(&inst).unwrap();
        let perm = [2, 0, 1];
        let s = encode_assignment(&inst, &perm).unwrap();
        let dec = decode_qap(&inst, &s, &enc).unwrap();
        assert_eq!(dec.witness, Witness::Assignment(Some(perm.to_vec())));
        assert_eq!(dec.objective, 5.0 * 3.0 + 1.0 * 1.0 + 2.0 * 2.0);
        assert!((m.energy(&s).unwrap() - dec.objective).abs() < 1e-9);
    }

    #[test]
    fn rejects_nonzero_diagonal() {
        assert!(QapInstance::new(2, vec![1.0, 0.0, 0.0, 0.0], vec![0.0; 4]).is_err());
        assert!(QapInstance::new(1, vec![0.0], vec![0.0]).is_err());
    }
}
