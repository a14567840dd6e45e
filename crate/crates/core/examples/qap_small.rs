//! Quadratic assignment on a small random instance, checked against the
//! optimum over all permutations.

use amfd::problems::{build_qap, decode_qap, QapInstance, Witness};
use amfd::solvers::{amfd_solve, linear_schedule, AmfdParams, StepPreset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rng.random_range(0..10) as f64;
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    m
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn main() -> amfd::Result<()> {
    let n = 7;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let inst = QapInstance::from_rows(random_matrix(&mut rng, n), random_matrix(&mut rng, n))?;
    let (model, enc) = build_qap(&inst)?;

    let params = AmfdParams {
        eta: 0.05,
        zeta: 1.0,
        schedule: linear_schedule(0.5, 0.0, StepPreset::Medium.n_step(model.n_spin()))?,
        seed: 2,
        n_replicas: 128,
    };
    let out = amfd_solve(&model, &params)?;
    let best = out
        .per_replica
        .iter()
        .filter_map(|r| decode_qap(&inst, &r.spins, &enc).ok())
        .filter(|d| d.feasible)
        .min_by(|a, b| a.objective.total_cmp(&b.objective));
    if let Some(d) = best {
        if let Witness::Assignment(Some(p)) = &d.witness {
            println!("amfd   cost {} assignment {p:?}", d.objective);
        }
    }

    let opt = permutations(n).into_iter().map(|p| inst.cost(&p)).fold(f64::INFINITY, f64::min);
    println!("exact  cost {opt}");
    Ok(())
}
