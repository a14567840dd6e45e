//! Traveling salesman on random cities in the unit square: build the QUBO,
//! anneal, decode the tour and compare with a 2-opt tour.
//!
//! cargo run --release --example tsp_random_cities -- [cities] [seed]

use amfd::problems::{build_tsp, decode_tsp, TspInstance, Witness};
use amfd::solvers::{amfd_solve, linear_schedule, AmfdParams, StepPreset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn two_opt(inst: &TspInstance, mut tour: Vec<usize>) -> Vec<usize> {
    let n = tour.len();
    loop {
        let mut improved = false;
        for i in 0..n - 1 {
            for j in (i + 2)..n {
                let (a, b, c, e) = (tour[i], tour[i + 1], tour[j], tour[(j + 1) % n]);
                if a == e {
                    continue;
                }
                if inst.d(a, c) + inst.d(b, e) < inst.d(a, b) + inst.d(c, e) - 1e-9 {
                    tour[i + 1..=j].reverse();
                    improved = true;
                }
            }
        }
        if !improved {
            return tour;
        }
    }
}

fn main() -> amfd::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let seed: u64 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<(f64, f64)> = (0..n).map(|_| (rng.random(), rng.random())).collect();
    let rows =
        pts.iter().map(|a| pts.iter().map(|b| ((a.0 - b.0).hypot(a.1 - b.1) * 1000.0).round()).collect()).collect();
    let inst = TspInstance::new(rows)?;
    let (model, enc) = build_tsp(&inst)?;
    println!("{n} cities, {} spins", model.n_spin());

    let params = AmfdParams {
        eta: 0.05,
        zeta: 0.0,
        schedule: linear_schedule(0.3, 0.0, StepPreset::Medium.n_step(model.n_spin()))?,
        seed,
        n_replicas: 128,
    };
    let out = amfd_solve(&model, &params)?;
    // The lowest energy need not be a tour, so take the shortest decoded one.
    let best = out
        .per_replica
        .iter()
        .map(|r| decode_tsp(&inst, &r.spins, &enc))
        .collect::<amfd::Result<Vec<_>>>()?
        .into_iter()
        .filter(|d| d.feasible)
        .min_by(|a, b| a.objective.total_cmp(&b.objective));
    match best {
        Some(sol) => {
            if let Witness::Tour(Some(t)) = &sol.witness {
                println!("amfd   length {} tour {t:?}", sol.objective);
            }
        }
        None => println!("amfd   no replica ended on a tour"),
    }

    let tour = two_opt(&inst, (0..n).collect());
    println!("2-opt  length {}", inst.tour_length(&tour));
    Ok(())
}
