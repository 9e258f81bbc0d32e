//! Generalized Berezin integration over para-Grassmann variables.
//!
//! On anti-Wick monomials of one mode
//!
//! ```text
//! ∫ dθ θ^n θ̄^{n'}      = 𝒩 δ_{n,k-1} θ̄^{n'}
//! ∫ θ^n θ̄^{n'} dθ̄      = 𝒩 δ_{n',k-1} θ^n
//! ∫ dθ θ^n θ̄^{n'} dθ̄   = 𝒩² δ_{n,k-1} δ_{n',k-1}
//! ```
//!
//! with `𝒩 = sqrt([k-1]_q!)`. Elements are always stored in anti-Wick order,
//! so no reordering (and no factor of `α`) happens inside an integral.

use num_complex::Complex64;

use crate::error::Result;
use crate::pg_algebra::PGElement;
use crate::qnum::{q_factorial, QContext};

/// `𝒩 = sqrt([k-1]_q!)`.
pub fn norm_const(ctx: &QContext) -> f64 {
    q_factorial(ctx, ctx.k() - 1)
        .expect("k-1 is always in range")
        .sqrt()
}

fn integrate_with<F>(f: &PGElement, mode: usize, weight: f64, keep: F) -> Result<PGElement>
where
    F: Fn(u32, u32) -> Option<(u32, u32)>,
{
    let ctx = *f.ctx();
    ctx.check_mode(mode)?;
    let mut out = std::collections::BTreeMap::new();
    for (key, c) in f.terms() {
        if let Some((hol, antihol)) = keep(key.hol_exp(mode), key.antihol_exp(mode)) {
            let mut reduced = key.clone();
            reduced.set_hol(mode, hol);
            reduced.set_antihol(mode, antihol);
            *out.entry(reduced).or_insert(Complex64::new(0.0, 0.0)) += c * weight;
        }
    }
    Ok(PGElement::from_raw(&ctx, out))
}

/// `∫ dθ_i f`: keeps terms with `θ_i^{k-1}`, removing that factor.
pub fn integrate_theta(f: &PGElement, mode: usize) -> Result<PGElement> {
    let top = f.ctx().k() as u32 - 1;
    integrate_with(f, mode, norm_const(f.ctx()), |n, nb| {
        (n == top).then_some((0, nb))
    })
}

/// `∫ f dθ̄_i`: keeps terms with `θ̄_i^{k-1}`, removing that factor.
pub fn integrate_theta_bar(f: &PGElement, mode: usize) -> Result<PGElement> {
    let top = f.ctx().k() as u32 - 1;
    integrate_with(f, mode, norm_const(f.ctx()), |n, nb| {
        (nb == top).then_some((n, 0))
    })
}

/// `∫ dθ_i f dθ̄_i` over one mode; other modes are untouched.
pub fn integrate_pair(f: &PGElement, mode: usize) -> Result<PGElement> {
    let top = f.ctx().k() as u32 - 1;
    let weight = q_factorial(f.ctx(), f.ctx().k() - 1)?;
    integrate_with(f, mode, weight, |n, nb| {
        (n == top && nb == top).then_some((0, 0))
    })
}

/// Full iterated integral: the coefficient of the top monomial times `𝒩^{2m}`.
pub fn integrate_full(f: &PGElement) -> Complex64 {
    let ctx = f.ctx();
    let top = ctx.k() - 1;
    let tops = vec![top; ctx.modes()];
    let weight = q_factorial(ctx, top)
        .expect("k-1 is always in range")
        .powi(ctx.modes() as i32);
    f.coeff(&tops, &tops) * weight
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherent::measure_weight;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn norm_const_examples() {
        assert!((norm_const(&QContext::single(2).unwrap()) - 1.0).abs() < 1e-15);
        assert!((norm_const(&QContext::single(3).unwrap()) - 1.0).abs() < 1e-15);
        // oracle: product of sin(nπ/4)/sin(π/4) for n = 1, 2, 3
        let prod: f64 = (1..4)
            .map(|n| (n as f64 * PI / 4.0).sin() / (PI / 4.0).sin())
            .product();
        let n4 = norm_const(&QContext::single(4).unwrap());
        assert!((n4 - prod.sqrt()).abs() < 1e-14);
        assert!((n4 - 2f64.powf(0.25)).abs() < 1e-14);
    }

    #[test]
    fn pair_integral_examples() {
        for k in 2..=5 {
            let ctx = QContext::single(k).unwrap();
            let top = PGElement::monomial(&ctx, &[k - 1], &[k - 1], c(1.0)).unwrap();
            let fact = q_factorial(&ctx, k - 1).unwrap();
            let r = integrate_pair(&top, 1).unwrap();
            assert!(r.equal_within_tol(&PGElement::scalar(&ctx, c(fact))));
            for n in 0..k - 1 {
                for nb in 0..k {
                    let f = PGElement::monomial(&ctx, &[n], &[nb], c(1.0)).unwrap();
                    assert!(integrate_pair(&f, 1).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn pair_integral_is_local_to_mode() {
        let k = 4;
        let ctx = QContext::new(k, 2).unwrap();
        let f = PGElement::monomial(&ctx, &[k - 1, 1], &[k - 1, 0], c(1.0)).unwrap();
        let fact = q_factorial(&ctx, k - 1).unwrap();
        let expected = PGElement::monomial(&ctx, &[0, 1], &[0, 0], c(fact)).unwrap();
        assert!(integrate_pair(&f, 1).unwrap().equal_within_tol(&expected));
        assert!(integrate_pair(&f, 2).unwrap().is_zero());
        assert!(integrate_pair(&f, 3).is_err());
    }

    #[test]
    fn single_sided_integrals_compose() {
        let k = 3;
        let ctx = QContext::single(k).unwrap();
        let f = PGElement::monomial(&ctx, &[2], &[1], c(1.0)).unwrap();
        let t = integrate_theta(&f, 1).unwrap();
        assert!(t.equal_within_tol(&PGElement::theta_bar(&ctx, 1).unwrap()));
        assert!(integrate_theta_bar(&f, 1).unwrap().is_zero());

        let top = PGElement::monomial(&ctx, &[2], &[2], c(1.0)).unwrap();
        let both = integrate_theta_bar(&integrate_theta(&top, 1).unwrap(), 1).unwrap();
        assert!(both.equal_within_tol(&integrate_pair(&top, 1).unwrap()));
    }

    #[test]
    fn full_integral_examples() {
        for k in 2..=5 {
            let ctx = QContext::single(k).unwrap();
            assert_eq!(integrate_full(&PGElement::one(&ctx)), c(0.0));
            let mu = measure_weight(&ctx);
            assert!((integrate_full(&mu) - 1.0).norm() < 1e-12);

            let ctx2 = QContext::new(k, 2).unwrap();
            let top = vec![k - 1; 2];
            let coef = Complex64::new(0.3, -1.1);
            let f = PGElement::monomial(&ctx2, &top, &top, coef).unwrap();
            let fact = q_factorial(&ctx2, k - 1).unwrap();
            assert!((integrate_full(&f) - coef * fact * fact).norm() < 1e-12);
        }
    }

    #[test]
    fn full_integral_equals_folded_pairs_in_any_order() {
        let k = 3;
        let ctx = QContext::new(k, 3).unwrap();
        let mu = measure_weight(&ctx);
        let f = mu
            .antiwick_mul(&PGElement::monomial(&ctx, &[0, 1, 0], &[0, 1, 0], c(2.0)).unwrap())
            .unwrap()
            .add(&mu)
            .unwrap();
        let full = integrate_full(&f);
        for order in [[1, 2, 3], [3, 2, 1], [2, 3, 1]] {
            let mut g = f.clone();
            for i in order {
                g = integrate_pair(&g, i).unwrap();
            }
            let unit = PGElement::unit_key(&ctx);
            assert!((g.coeff_of(&unit) - full).norm() < 1e-12);
            assert_eq!(g.len(), 1);
        }
    }
}
