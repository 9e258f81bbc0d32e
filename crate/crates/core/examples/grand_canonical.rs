//! Grand canonical ensemble: occupation numbers between Fermi-Dirac and Bose.

use qboson::fock::{fock_dim, FockOp};
use qboson::thermo::{bose_occupation, fermi_dirac_occupation, grand_partition, mean_occupation};
use qboson::QContext;

fn main() -> qboson::Result<()> {
    let (mu, beta) = (1.0, 2.0);
    println!("{:>5} {:>8} {:>8} {:>8} {:>8} {:>8}", "eps", "FD", "k=2", "k=4", "k=50", "Bose");
    for eps in [0.0, 0.5, 1.0, 1.25, 1.5, 2.0, 3.0] {
        let x = beta * (eps - mu);
        let n = |k| mean_occupation(&QContext::single(k).unwrap(), eps, mu, beta);
        let bose = if x > 0.0 {
            format!("{:8.4}", bose_occupation(x))
        } else {
            format!("{:>8}", "-")
        };
        println!(
            "{eps:>5} {:8.4} {:8.4} {:8.4} {:8.4} {bose}",
            fermi_dirac_occupation(x),
            n(2),
            n(4),
            n(50)
        );
    }

    // the product formula against a brute-force trace over k^m states
    let levels = [0.3, 1.1, 2.0];
    let ctx = QContext::new(3, levels.len())?;
    let weight = FockOp::diagonal_from_fn(&ctx, |occ| {
        let e: f64 = occ.iter().zip(&levels).map(|(&n, l)| n as f64 * (l - mu)).sum();
        (-beta * e).exp().into()
    })?;
    println!(
        "\nZ product {:.12}, matrix trace {:.12} over {} states",
        grand_partition(&ctx, &levels, mu, beta),
        weight.matrix_trace().re,
        fock_dim(&ctx)?
    );
    Ok(())
}
