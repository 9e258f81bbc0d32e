//! Coherent-state projections, the measure weight and anti-Wick (Toeplitz)
//! quantization.
//!
//! Coherent states are never stored as module vectors. Only their
//! projections onto the Fock basis enter a computation:
//!
//! ```text
//! ⟨n|θ) = θ^n / sqrt([n]_q!)        (θ|n⟩ = θ̄^n / sqrt([n]_q!)
//! ```
//!
//! Every integrand is assembled with [`PGElement::antiwick_mul`], so the
//! results never depend on `α`.

use num_complex::Complex64;

use crate::berezin::integrate_full;
use crate::error::{Error, Result};
use crate::fock::{decode_index, fock_dim, FockOp};
use crate::pg_algebra::PGElement;
use crate::qnum::{q_factorial, q_factorial_table, QContext};

/// `1 / sqrt([n]_q!)`, the coefficient of `θ^n` in `⟨n|θ)`.
pub fn coherent_coeff(ctx: &QContext, n: usize) -> Result<f64> {
    Ok(1.0 / q_factorial(ctx, n)?.sqrt())
}

/// `⟨n⃗|θ) = ∏_i θ_i^{n_i} / sqrt([n_i]_q!)`.
pub fn hol_state(ctx: &QContext, occupation: &[usize]) -> Result<PGElement> {
    let c = occupation
        .iter()
        .map(|&n| coherent_coeff(ctx, n))
        .product::<Result<f64>>()?;
    PGElement::monomial(ctx, occupation, &vec![0; occupation.len()], Complex64::new(c, 0.0))
}

/// `(θ|n⃗⟩ = ∏_i θ̄_i^{n_i} / sqrt([n_i]_q!)`.
pub fn antihol_state(ctx: &QContext, occupation: &[usize]) -> Result<PGElement> {
    Ok(hol_state(ctx, occupation)?.conjugate())
}

/// The measure weight `μ = ∏_i Σ_p θ_i^p θ̄_i^p / [p]_q!`.
pub fn measure_weight(ctx: &QContext) -> PGElement {
    let single = QContext::single(ctx.k()).expect("valid k");
    let facts = q_factorial_table(&single);
    let mut mu = PGElement::one(ctx);
    for mode in 1..=ctx.modes() {
        let mut factor = PGElement::zero(ctx);
        for (p, fact) in facts.iter().enumerate() {
            let mut hol = vec![0; ctx.modes()];
            hol[mode - 1] = p;
            let term = PGElement::monomial(ctx, &hol, &hol, Complex64::new(1.0 / fact, 0.0))
                .expect("exponents below k");
            factor = factor.add(&term).expect("same context");
        }
        mu = mu.antiwick_mul(&factor).expect("same context");
    }
    mu
}

/// Coherent matrix element `(θ|A|θ)` reassembled in anti-Wick order.
///
/// The coefficient of `θ^{n⃗'} θ̄^{n⃗}` is `⟨n⃗|A|n⃗'⟩ / sqrt([n⃗]! [n⃗']!)`.
pub fn coherent_matrix_element(a: &FockOp) -> Result<PGElement> {
    let ctx = *a.ctx();
    let dim = fock_dim(&ctx)?;
    if a.dim() != dim {
        return Err(Error::DimensionMismatch {
            left: dim,
            right: a.dim(),
        });
    }
    let facts = q_factorial_table(&ctx);
    let occ: Vec<Vec<usize>> = (0..dim).map(|i| decode_index(&ctx, i)).collect();
    let norms: Vec<f64> = occ
        .iter()
        .map(|o| o.iter().map(|&n| facts[n]).product::<f64>().sqrt())
        .collect();
    let mut terms = Vec::new();
    for (row, (occ_row, norm_row)) in occ.iter().zip(&norms).enumerate() {
        for (col, (occ_col, norm_col)) in occ.iter().zip(&norms).enumerate() {
            let v = a.entry(row, col);
            if v != Complex64::new(0.0, 0.0) {
                terms.push((occ_col.clone(), occ_row.clone(), v / (norm_row * norm_col)));
            }
        }
    }
    PGElement::from_terms(&ctx, terms)
}

/// Anti-Wick (Toeplitz) operator of the symbol `phi`:
/// `⟨n⃗|T_φ|n⃗'⟩ = ∫ :⟨n⃗|θ) μ φ (θ|n⃗'⟩:`.
pub fn toeplitz(phi: &PGElement) -> Result<FockOp> {
    let ctx = *phi.ctx();
    let dim = fock_dim(&ctx)?;
    let mu_phi = measure_weight(&ctx).antiwick_mul(phi)?;
    let occ: Vec<Vec<usize>> = (0..dim).map(|i| decode_index(&ctx, i)).collect();
    let bras = occ
        .iter()
        .map(|o| antihol_state(&ctx, o))
        .collect::<Result<Vec<_>>>()?;
    let mut out = FockOp::zeros(&ctx)?.into_matrix();
    for (row, occ_row) in occ.iter().enumerate() {
        let left = hol_state(&ctx, occ_row)?.antiwick_mul(&mu_phi)?;
        if left.is_zero() {
            continue;
        }
        for (col, bra) in bras.iter().enumerate() {
            out[(row, col)] = integrate_full(&left.antiwick_mul(bra)?);
        }
    }
    FockOp::from_matrix(&ctx, out)
}

/// `(f, g) = ∫ :f* μ g:`.
pub fn sesquilinear(f: &PGElement, g: &PGElement) -> Result<Complex64> {
    let mu = measure_weight(f.ctx());
    let integrand = f.conjugate().antiwick_mul(&mu)?.antiwick_mul(g)?;
    Ok(integrate_full(&integrand))
}
