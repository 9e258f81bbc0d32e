//! Parsing operator expressions and evaluating them on the Fock space.

use qboson::expr::parse_op;
use qboson::trace_engine::symbolic_trace;
use qboson::QContext;

fn main() -> qboson::Result<()> {
    let ctx = QContext::new(4, 2)?;
    for src in [
        "ad(1)*a(1)",
        "a(1)*ad(1) - 0.5*ad(1)*a(1)",
        "(1+2i)*N(1)^2 + ad(2)*a(1)",
        "(a(1) + ad(2))^3",
    ] {
        let e = parse_op(src)?;
        let op = e.eval(&ctx)?;
        println!("{src}\n    parsed {e}\n    trace {:.8}, diagonal {}", symbolic_trace(&op)?, op.is_diagonal());
    }
    for bad in ["a(1)^-1", "a(1) +", "ad(3)"] {
        match parse_op(bad).and_then(|e| e.eval(&ctx)) {
            Ok(_) => println!("{bad}: accepted"),
            Err(err) => println!("{bad}: {err}"),
        }
    }
    Ok(())
}
