//! Matrix representation of two q-boson modes and the defining relations.

use qboson::fock::{annihilation, creation, number_op, q_power_of_number};
use qboson::QContext;

fn main() -> qboson::Result<()> {
    let ctx = QContext::new(3, 2)?;
    let q = ctx.q();
    let a1 = annihilation(&ctx, 1)?;
    let ad1 = creation(&ctx, 1)?;
    let a2 = annihilation(&ctx, 2)?;

    println!("a_1 on C^{} (mode 1 varies fastest):", a1.dim());
    for row in a1.matrix().rows() {
        let cells: Vec<String> = row.iter().map(|z| format!("{:5.3}", z.re)).collect();
        println!("  {}", cells.join(" "));
    }

    let lhs = &(&a1 * &ad1) - &(&ad1 * &a1).scale(q);
    let rhs = q_power_of_number(&ctx, 1, -1)?;
    println!("max |a a† - q a† a - q^-N| = {:.2e}", lhs.max_abs_diff(&rhs)?);

    let n1 = number_op(&ctx, 1)?;
    let comm = n1.commutator(&a1)?;
    println!("[N_1, a_1] == -a_1 exactly: {}", comm.add(&a1)?.is_exact_zero());

    println!("a_1^3 == 0 exactly: {}", a1.pow(3).is_exact_zero());
    println!("[a_1, a_2] == 0: {}", a1.commutator(&a2)?.is_exact_zero());
    Ok(())
}
