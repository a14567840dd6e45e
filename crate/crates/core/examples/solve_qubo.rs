//! Build a small QUBO by hand, solve it with AMFD and check the answer
//! against exhaustive search.

use amfd::solvers::{amfd_solve, linear_schedule, AmfdParams};
use amfd::{QuboBuilder, SpinVector};

fn main() -> amfd::Result<()> {
    // Pick exactly two of five items, preferring the cheap ones, where
    // items 1 and 3 clash.
    let costs = [3.0, -1.0, 2.0, -2.0, 0.5];
    let mut b = QuboBuilder::new(costs.len());
    for (i, &c) in costs.iter().enumerate() {
        b.add_linear(i, c);
    }
    b.add_pair(1, 3, 4.0);
    // (Σ s_i − 2)² expanded.
    let w = 5.0;
    b.add_constant(4.0 * w);
    for i in 0..5 {
        b.add_linear(i, -3.0 * w);
        for j in (i + 1)..5 {
            b.add_pair(i, j, 2.0 * w);
        }
    }
    let model = b.build()?;

    let params = AmfdParams { eta: 0.1, zeta: 1.0, schedule: linear_schedule(0.3, 0.0, 200)?, seed: 1, n_replicas: 16 };
    let out = amfd_solve(&model, &params)?;
    println!("amfd:  {:?} energy {}", &out.best_spins[..], out.best_energy);

    let (best, spins) = (0..1u64 << 5)
        .map(|m| SpinVector::from_mask(5, m))
        .map(|s| (model.energy(&s).unwrap(), s))
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .unwrap();
    println!("exact: {:?} energy {best}", &spins[..]);
    Ok(())
}
