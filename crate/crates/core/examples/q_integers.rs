//! q-integers and q-factorials at the root of unity q = e^{iπ/k}.
//!
//! Run with `cargo run --example q_integers -- 5`.

use qboson::qnum::{q_factorial, q_int, QContext};

fn main() -> qboson::Result<()> {
    let k: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("k must be an integer"))
        .unwrap_or(5);
    let ctx = QContext::single(k)?;
    println!("k = {k}, q = {:.6}", ctx.q());
    println!("{:>3} {:>14} {:>14}", "n", "[n]_q", "[n]_q!");
    for n in 0..=k {
        let fact = q_factorial(&ctx, n)
            .map(|f| format!("{f:14.10}"))
            .unwrap_or_else(|_| format!("{:>14}", "-"));
        println!("{n:>3} {:14.10} {fact}", q_int(&ctx, n));
    }
    // [n]_q vanishes at n = k, which is what truncates the Fock space
    let top = q_factorial(&ctx, k - 1)?;
    for n in 0..k {
        let lhs = q_factorial(&ctx, n)? * q_factorial(&ctx, k - 1 - n)?;
        assert!((lhs - top).abs() < 1e-12);
    }
    println!("[n]! [k-1-n]! = [k-1]! = {top:.10} for every n < k");
    Ok(())
}
