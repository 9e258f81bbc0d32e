//! Tr A = ∫ :μ (θ|A|θ): for random polynomial operators.

use qboson::expr::{parse_op, random_polynomial};
use qboson::trace_engine::symbolic_trace;
use qboson::QContext;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qboson::Result<()> {
    let ctx = QContext::new(3, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let e = random_polynomial(&mut rng, ctx.modes(), 3, 3);
        let op = e.eval(&ctx)?;
        let sym = symbolic_trace(&op)?;
        let mat = op.matrix_trace();
        println!("{e}");
        println!("    symbolic {sym:.10}   matrix {mat:.10}");
    }
    // the integrand is assembled without commutation factors, so α drops out
    let op = parse_op("(1+0.5i)*a(1)*ad(1)*N(2) + 0.25*ad(2)^2*a(2)^2")?;
    for alpha in [1.0, 2.0, -1.0] {
        let c = ctx.with_alpha(alpha)?;
        println!("alpha {alpha:>4}: {:.12}", symbolic_trace(&op.eval(&c)?)?);
    }
    Ok(())
}
