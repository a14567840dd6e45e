//! Max-cut on a random sparse graph of Gset-like size, comparing AMFD
//! against best-of-restarts greedy local search.
//!
//! cargo run --release --example maxcut_random_graph -- [n] [density] [seed]

use std::time::Instant;

use amfd::problems::{build_mcp, decode_mcp, WeightedGraph};
use amfd::solvers::{amfd_solve, linear_schedule, AmfdParams, StepPreset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arg<T: std::str::FromStr>(k: usize, default: T) -> T {
    std::env::args().nth(k).and_then(|s| s.parse().ok()).unwrap_or(default)
}

/// Flip single vertices while any flip improves the cut.
fn local_search(adj: &[Vec<usize>], side: &mut [bool]) -> usize {
    loop {
        let mut improved = false;
        for v in 0..side.len() {
            let same = adj[v].iter().filter(|&&u| side[u] == side[v]).count();
            if 2 * same > adj[v].len() {
                side[v] = !side[v];
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    (0..side.len()).map(|v| adj[v].iter().filter(|&&u| u > v && side[u] != side[v]).count()).sum()
}

fn main() -> amfd::Result<()> {
    let n: usize = arg(1, 800);
    let density: f64 = arg(2, 0.06);
    let seed: u64 = arg(3, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(density) {
                pairs.push((u, v));
            }
        }
    }
    let g = WeightedGraph::unweighted(n, pairs)?;
    let (model, _) = build_mcp(&g)?;
    println!("{} vertices, {} edges", g.n_vertex(), g.n_edge());

    let start = Instant::now();
    let params = AmfdParams {
        eta: 0.1,
        zeta: 5.0,
        schedule: linear_schedule(0.3, 0.0, StepPreset::Short.n_step(n))?,
        seed,
        n_replicas: 128,
    };
    let out = amfd_solve(&model, &params)?;
    let cut = decode_mcp(&g, &out.best_spins)?.objective;
    println!("amfd          cut {cut} in {:.2?}", start.elapsed());

    let start = Instant::now();
    let adj = g.adjacency();
    let best = (0..128)
        .map(|_| {
            let mut side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
            local_search(&adj, &mut side)
        })
        .max()
        .unwrap();
    println!("local search  cut {best} in {:.2?}", start.elapsed());
    Ok(())
}
