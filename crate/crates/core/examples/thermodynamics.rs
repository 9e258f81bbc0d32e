//! Partition function, mean energy and specific heat of one q-boson.

use qboson::fock::boltzmann_number;
use qboson::thermo::{
    bose_mean_energy, mean_energy_single, partition_single, partition_single_prime,
    specific_heat_single,
};
use qboson::trace_engine::symbolic_trace;
use qboson::QContext;

fn main() -> qboson::Result<()> {
    let eps = 1.0;
    for k in [2, 3, 5, 10] {
        let ctx = QContext::single(k)?;
        let beta = 0.7;
        let z = partition_single(&ctx, eps, beta);
        let z_trace = symbolic_trace(&boltzmann_number(&ctx, beta, &[eps])?)?;
        println!(
            "k={k:>2}: Z={z:.10} (trace {:.10}), Z'={:.6}",
            z_trace.re,
            partition_single_prime(&ctx, eps, beta)
        );
    }

    println!("\n{:>6} {:>10} {:>10} {:>10} {:>10}", "T", "E k=2", "E k=5", "E Bose", "C k=5");
    for t in [0.1, 0.5, 1.0, 2.0, 5.0, 20.0] {
        let beta = 1.0 / t;
        let c2 = QContext::single(2)?;
        let c5 = QContext::single(5)?;
        println!(
            "{t:>6} {:>10.5} {:>10.5} {:>10.5} {:>10.5}",
            mean_energy_single(&c2, eps, beta),
            mean_energy_single(&c5, eps, beta),
            bose_mean_energy(eps, beta),
            specific_heat_single(&c5, eps, beta),
        );
    }
    println!("finite k saturates at (k-1)ε/2; the Bose energy keeps growing like T");
    Ok(())
}
