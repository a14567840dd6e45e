//! Sweep the step budget on a random max-cut instance and print the
//! energy-against-steps table for AMFD and noisy MFA.

use std::fmt::Write as _;

use amfd::problems::ProblemKind;
use amfd_bench::{sweep_nstep, RunConfig, SolverSpec};

fn main() -> amfd_bench::Result<()> {
    let n = 300;
    let mut text = String::new();
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if state % 100 < 4 {
                edges.push((u, v));
            }
        }
    }
    writeln!(text, "{n} {}", edges.len()).unwrap();
    for (u, v) in &edges {
        writeln!(text, "{u} {v} 1").unwrap();
    }
    let path = std::env::temp_dir().join("sweep_maxcut.txt");
    std::fs::write(&path, text).map_err(|e| amfd_bench::BenchError::Io { path: path.clone(), source: e })?;

    let steps = [n / 4, n, 10 * n];
    for solver in [SolverSpec::Amfd { eta: 0.1, zeta: 5.0 }, SolverSpec::Nmfa { alpha: 0.3, sigma: 0.3 }] {
        let base = RunConfig::new(ProblemKind::Mcp, &path, solver.kind())?;
        let (t_init, t_fin) = match solver {
            SolverSpec::Amfd { .. } => (0.3, 0.0),
            _ => (2.0, 0.01),
        };
        let config = RunConfig { solver, t_init, t_fin, n_replicas: 32, ..base };
        for r in sweep_nstep(&config, &steps)? {
            println!(
                "{:<5} n_step {:>5}  best {:>7}  mean {:>9.1}",
                solver.kind(),
                r.n_step,
                r.best_energy,
                r.mean_energy
            );
        }
    }
    Ok(())
}
