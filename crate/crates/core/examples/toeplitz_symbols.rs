//! Anti-Wick quantization: symbols θ^a θ̄^b become a^a (a†)^b.

use num_complex::Complex64;
use qboson::coherent::toeplitz;
use qboson::fock::{annihilation, creation};
use qboson::{PGElement, QContext};

fn main() -> qboson::Result<()> {
    let ctx = QContext::single(4)?;
    let a = annihilation(&ctx, 1)?;
    let ad = creation(&ctx, 1)?;
    for p in 0..4 {
        for r in 0..4 {
            let sym = PGElement::monomial(&ctx, &[p], &[r], Complex64::new(1.0, 0.0))?;
            let op = toeplitz(&sym)?;
            let expected = a.pow(p as u32).compose(&ad.pow(r as u32))?;
            print!("{:8.1e}", op.max_abs_diff(&expected)?);
        }
        println!();
    }
    println!("(row p, column r: max |T[θ^p θ̄^r] - a^p a†^r|)");

    let sym = PGElement::theta(&ctx, 1)?.antiwick_mul(&PGElement::theta_bar(&ctx, 1)?)?;
    let t = toeplitz(&sym)?;
    println!("T[θθ̄] diagonal: {:?}", t.diagonal().iter().map(|z| z.re).collect::<Vec<_>>());
    Ok(())
}
