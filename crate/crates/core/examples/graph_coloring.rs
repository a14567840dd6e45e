//! Color Mycielski graphs, whose chromatic number grows by one per level
//! while they stay triangle-free.

use amfd::problems::{build_gcp, decode_gcp, WeightedGraph};
use amfd::solvers::{amfd_solve, linear_schedule, AmfdParams, StepPreset};

fn mycielski(k: usize) -> WeightedGraph {
    let mut n = 2;
    let mut edges = vec![(0, 1)];
    for _ in 2..k {
        let mut next = edges.clone();
        for &(u, v) in &edges {
            next.push((u, n + v));
            next.push((v, n + u));
        }
        next.extend((0..n).map(|u| (n + u, 2 * n)));
        edges = next;
        n = 2 * n + 1;
    }
    WeightedGraph::unweighted(n, edges).unwrap()
}

fn main() -> amfd::Result<()> {
    for k in 3..=6 {
        let g = mycielski(k);
        let (model, enc) = build_gcp(&g, None)?;
        let params = AmfdParams {
            eta: 0.2,
            zeta: 0.0,
            schedule: linear_schedule(0.3, 0.0, StepPreset::Short.n_step(model.n_spin()))?,
            seed: 0,
            n_replicas: 128,
        };
        let out = amfd_solve(&model, &params)?;
        let best = out
            .per_replica
            .iter()
            .map(|r| decode_gcp(&g, &r.spins, &enc))
            .collect::<amfd::Result<Vec<_>>>()?
            .into_iter()
            .filter(|d| d.feasible)
            .map(|d| d.objective)
            .fold(f64::INFINITY, f64::min);
        println!("M{k}: {} vertices, {} spins, {best} colors (chromatic number {k})", g.n_vertex(), model.n_spin());
    }
    Ok(())
}
