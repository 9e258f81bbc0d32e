//! Coherent-state trace formula
//!
//! `Tr A = ∫ dθ :μ(θ, θ̄) (θ|A|θ): dθ̄`
//!
//! evaluated through the measure weight, the coherent matrix element and the
//! Berezin integral, and never by summing the matrix diagonal.

use num_complex::Complex64;

use crate::berezin::integrate_full;
use crate::coherent::{coherent_matrix_element, measure_weight};
use crate::error::Result;
use crate::fock::FockOp;

pub fn symbolic_trace(a: &FockOp) -> Result<Complex64> {
    let mu = measure_weight(a.ctx());
    let element = coherent_matrix_element(a)?;
    Ok(integrate_full(&mu.antiwick_mul(&element)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{annihilation, boltzmann_number, creation, number_op};
    use crate::qnum::QContext;

    #[test]
    fn identity_trace() {
        let ctx = QContext::new(3, 2).unwrap();
        let t = symbolic_trace(&FockOp::identity(&ctx).unwrap()).unwrap();
        assert!((t - 9.0).norm() < 1e-12);
    }

    #[test]
    fn boltzmann_trace_is_geometric_sum() {
        for k in 2..=6 {
            let ctx = QContext::single(k).unwrap();
            let x: f64 = 0.45;
            let rho = boltzmann_number(&ctx, x, &[1.0]).unwrap();
            let expected = (1.0 - (-(k as f64) * x).exp()) / (1.0 - (-x).exp());
            assert!((symbolic_trace(&rho).unwrap() - expected).norm() < 1e-12);
        }
    }

    #[test]
    fn polynomial_operator_trace() {
        let ctx = QContext::new(4, 2).unwrap();
        let a1 = annihilation(&ctx, 1).unwrap();
        let ad1 = creation(&ctx, 1).unwrap();
        let ad2 = creation(&ctx, 2).unwrap();
        let n2 = number_op(&ctx, 2).unwrap();
        let op = (&(&a1 * &ad1) + &(&n2 * &n2).scale(Complex64::new(0.3, -0.7)))
            .add(&(&ad2 * &a1))
            .unwrap();
        let t = symbolic_trace(&op).unwrap();
        assert!((t - op.matrix_trace()).norm() < 1e-10);
    }
}
