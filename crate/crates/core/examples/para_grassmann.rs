//! The para-Grassmann algebra: reordering factors, nilpotency, conjugation.

use num_complex::Complex64;
use qboson::{PGElement, QContext};

fn main() -> qboson::Result<()> {
    let ctx = QContext::new(3, 2)?.with_alpha(2.0)?;
    let t1 = PGElement::theta(&ctx, 1)?;
    let tb1 = PGElement::theta_bar(&ctx, 1)?;
    let t2 = PGElement::theta(&ctx, 2)?;

    // moving θ̄ past θ costs a factor 1/α
    println!("θ̄₁ θ₁        = {}", tb1.mul(&t1)?);
    println!(":θ̄₁ θ₁:      = {}", tb1.antiwick_mul(&t1)?);
    println!("θ₁³          = {}", t1.pow(3));
    println!("θ₁ θ₂ - θ₂ θ₁ = {}", t1.mul(&t2)?.sub(&t2.mul(&t1)?)?);

    let f = PGElement::monomial(&ctx, &[2, 0], &[1, 1], Complex64::new(0.5, -1.0))?
        .add(&PGElement::one(&ctx))?;
    println!("f  = {f}");
    println!("f* = {}", f.conjugate());

    let g = t2.add(&tb1.scale(Complex64::new(0.0, 1.0)))?;
    let lhs = f.mul(&g)?.conjugate();
    let rhs = g.conjugate().mul(&f.conjugate())?;
    println!("|(fg)* - g* f*| = {:.1e}", lhs.max_abs_diff(&rhs)?);

    println!("json: {}", f.to_json());
    Ok(())
}
