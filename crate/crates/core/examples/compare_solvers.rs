//! Best energy against step budget for AMFD and the mean-field annealing
//! baselines on one random max-cut instance.

use amfd::problems::{build_mcp, WeightedGraph};
use amfd::solvers::{amfd_solve, linear_schedule, mfa_solve, pmfa_solve, AmfdParams, MfaParams, SerialMfaParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> amfd::Result<()> {
    let n = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let pairs: Vec<_> =
        (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).filter(|_| rng.random_bool(0.05)).collect();
    let g = WeightedGraph::unweighted(n, pairs)?;
    let (model, _) = build_mcp(&g)?;
    let replicas = 32;

    println!("{:>8} {:>10} {:>10} {:>10} {:>10}", "n_step", "amfd", "pmfa", "nmfa", "mfa");
    for n_step in [n / 4, n, 10 * n, 100 * n] {
        let amfd = amfd_solve(
            &model,
            &AmfdParams {
                eta: 0.1,
                zeta: 5.0,
                schedule: linear_schedule(0.3, 0.0, n_step)?,
                seed: 1,
                n_replicas: replicas,
            },
        )?;
        let mf = |sigma| MfaParams {
            schedule: linear_schedule(2.0, 0.01, n_step).unwrap(),
            seed: 1,
            alpha: 0.3,
            sigma,
            n_replicas: replicas,
        };
        let pmfa = pmfa_solve(&model, &mf(0.0))?;
        let nmfa = pmfa_solve(&model, &mf(0.3))?;
        // Serial MFA updates one spin per step.
        let serial = SerialMfaParams { schedule: linear_schedule(2.0, 0.01, n_step)?, seed: 1, n_replicas: replicas };
        let mfa = mfa_solve(&model, &serial)?;
        println!(
            "{n_step:>8} {:>10} {:>10} {:>10} {:>10}",
            amfd.best_energy, pmfa.best_energy, nmfa.best_energy, mfa.best_energy
        );
    }
    Ok(())
}
