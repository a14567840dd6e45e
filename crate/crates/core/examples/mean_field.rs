//! The mean-field view of a QUBO: KL divergence to the Boltzmann
//! distribution, its gradient, and the self-consistent fixed point.

use amfd::mf::{kl_exact_bruteforce, kl_gradient, self_consistent_value};
use amfd::{MfVector, QuboModel};

fn main() -> amfd::Result<()> {
    let model = QuboModel::new(vec![0.0, 1.5, -0.5, 1.5, 0.0, 1.0, -0.5, 1.0, 0.0], vec![-1.0, 0.5, 0.2], 0.0)?;
    let t = 1.5;

    let mut x = vec![0.3, 0.6, 0.5];
    for sweep in 0..=60 {
        if sweep % 15 == 0 {
            let kl = kl_exact_bruteforce(&model, &MfVector::new(x.clone())?, t)?;
            let g = kl_gradient(&model, &x, t)?;
            let gmax = g.iter().fold(0.0f64, |a, v| a.max(v.abs()));
            println!(
                "sweep {sweep:>2}  x = [{:.4}, {:.4}, {:.4}]  KL closed {:.6}  enumerated {:.6}  |grad| {gmax:.2e}",
                x[0],
                x[1],
                x[2],
                kl.kl_total().unwrap_or(f64::NAN),
                kl.kl_enumerated.unwrap_or(f64::NAN),
            );
        }
        let target = self_consistent_value(&model.mean_field(&x)?, t);
        for (xi, ti) in x.iter_mut().zip(target.iter()) {
            *xi = 0.5 * *xi + 0.5 * ti;
        }
    }
    Ok(())
}
