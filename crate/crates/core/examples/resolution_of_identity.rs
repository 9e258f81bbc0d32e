//! Berezin integration with the measure weight μ reproduces the identity.

use qboson::berezin::integrate_full;
use qboson::coherent::{antihol_state, hol_state, measure_weight};
use qboson::fock::{decode_index, fock_dim};
use qboson::QContext;

fn main() -> qboson::Result<()> {
    let ctx = QContext::single(4)?;
    let mu = measure_weight(&ctx);
    println!("μ = {mu}");
    println!("∫ μ = {:.12}", integrate_full(&mu).re);

    for k in 2..=5 {
        for m in 1..=3 {
            let ctx = QContext::new(k, m)?;
            let mu = measure_weight(&ctx);
            let dim = fock_dim(&ctx)?;
            let mut worst: f64 = 0.0;
            for r in 0..dim {
                let bra = hol_state(&ctx, &decode_index(&ctx, r))?.antiwick_mul(&mu)?;
                for c in 0..dim {
                    let ket = antihol_state(&ctx, &decode_index(&ctx, c))?;
                    let v = integrate_full(&bra.antiwick_mul(&ket)?);
                    let delta = if r == c { 1.0 } else { 0.0 };
                    worst = worst.max((v - delta).norm());
                }
            }
            println!("k={k} m={m}: max |∫ ⟨n|θ) μ (θ|n'⟩ - δ| = {worst:.1e}");
        }
    }
    Ok(())
}
