#![allow(dead_code)]

use amfd::QuboModel;
use proptest::prelude::*;
use rand::Rng;

/// Dense random model with entries uniform in `[-scale, scale]`.
pub fn random_model<R: Rng>(rng: &mut R, n: usize, scale: f64) -> QuboModel {
    let mut q = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let w = rng.random_range(-scale..=scale);
            q[i * n + j] = w;
            q[j * n + i] = w;
        }
    }
    let h = (0..n).map(|_| rng.random_range(-scale..=scale)).collect();
    let c = rng.random_range(-scale..=scale);
    QuboModel::new(q, h, c).unwrap()
}

pub fn interior_point<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(0.02..0.98)).collect()
}

/// Largest absolute row sum of Q.
pub fn row_norm(model: &QuboModel) -> f64 {
    (0..model.n_spin()).map(|i| model.q_row(i).iter().map(|v| v.abs()).sum::<f64>()).fold(0.0, f64::max)
}

/// Proptest strategy for a model with `1..=max_n` spins.
pub fn model_strategy(max_n: usize) -> impl Strategy<Value = QuboModel> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (proptest::collection::vec(-3.0f64..3.0, pairs), proptest::collection::vec(-3.0f64..3.0, n), -3.0f64..3.0)
            .prop_map(move |(upper, h, c)| {
                let mut rows = vec![vec![0.0; n]; n];
                let mut k = 0;
                for (i, row) in rows.iter_mut().enumerate() {
                    for v in row.iter_mut().skip(i + 1) {
                        *v = upper[k];
                        k += 1;
                    }
                }
                QuboModel::from_upper_triangular(&rows, h, c).unwrap()
            })
    })
}
