//! Property suites comparing the symbolic machinery against the matrix oracle.
//!
//! Each suite returns one [`Check`] per property; the CLI prints them as
//! `PASS`/`FAIL` lines.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::berezin::integrate_full;
use crate::coherent::{antihol_state, hol_state, measure_weight, toeplitz};
use crate::error::Result;
use crate::expr::{random_polynomial, OpExpr};
use crate::fock::{
    annihilation, creation, decode_index, fock_dim, number_op, q_power_of_number, FockOp,
};
use crate::pg_algebra::PGElement;
use crate::qnum::{q_int, QContext};
use crate::trace_engine::symbolic_trace;

/// Tolerance for operator identities.
pub const OPERATOR_TOL: f64 = 1e-10;
/// Tolerance for the *-algebra and associativity checks.
pub const ALGEBRA_TOL: f64 = 1e-12;
/// Relative tolerance of the trace comparison, `|Δ| < tol (1 + |Tr A|)`.
pub const TRACE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn within(name: impl Into<String>, err: f64, tol: f64) -> Check {
        Check {
            name: name.into(),
            passed: err <= tol,
            detail: format!("max error {err:.3e} (tol {tol:.0e})"),
        }
    }

    fn exact(name: impl Into<String>, ok: bool) -> Check {
        Check {
            name: name.into(),
            passed: ok,
            detail: if ok { "exact".into() } else { "not exact".into() },
        }
    }
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// Random element with `n_terms` monomials, coefficients in `[-1,1]²`.
pub fn random_element<R: Rng>(rng: &mut R, ctx: &QContext, n_terms: usize) -> PGElement {
    let (k, m) = (ctx.k(), ctx.modes());
    let terms = (0..n_terms).map(|_| {
        let hol = (0..m).map(|_| rng.gen_range(0..k)).collect();
        let antihol = (0..m).map(|_| rng.gen_range(0..k)).collect();
        let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        (hol, antihol, c)
    });
    PGElement::from_terms(ctx, terms).expect("exponents below k")
}

/// Operator identities of the m-mode q-boson algebra, entrywise.
pub fn fock_checks(ctx: &QContext) -> Result<Vec<Check>> {
    let q = ctx.q();
    let m = ctx.modes();
    let mut err_q = 0.0f64;
    let mut err_conj = 0.0f64;
    let mut err_number = 0.0f64;
    let mut err_simple = 0.0f64;
    let mut err_cross = 0.0f64;
    let mut nilpotent = true;

    let ops: Vec<(FockOp, FockOp, FockOp)> = (1..=m)
        .map(|i| Ok((annihilation(ctx, i)?, creation(ctx, i)?, number_op(ctx, i)?)))
        .collect::<Result<_>>()?;

    for (i, (a, ad, n)) in ops.iter().enumerate() {
        let mode = i + 1;
        let aad = a.compose(ad)?;
        let ada = ad.compose(a)?;
        let q_minus_n = q_power_of_number(ctx, mode, -1)?;
        let q_plus_n = q_power_of_number(ctx, mode, 1)?;

        let lhs = aad.sub(&ada.scale(q))?;
        err_q = err_q.max(lhs.max_abs_diff(&q_minus_n)?);
        let lhs = aad.sub(&ada.scale(q.inv()))?;
        err_conj = err_conj.max(lhs.max_abs_diff(&q_plus_n)?);

        let number_rel = q_plus_n.sub(&q_minus_n)?.scale((q - q.inv()).inv());
        err_number = err_number.max(ada.max_abs_diff(&number_rel)?);

        err_simple = err_simple.max(n.commutator(a)?.max_abs_diff(&a.scale(-Complex64::from(1.0)))?);
        err_simple = err_simple.max(n.commutator(ad)?.max_abs_diff(ad)?);

        let k = ctx.k() as u32;
        nilpotent &= a.pow(k).is_exact_zero() && ad.pow(k).is_exact_zero();

        for (j, (b, bd, _)) in ops.iter().enumerate() {
            if i == j {
                continue;
            }
            for (x, y) in [(a, b), (ad, bd), (a, bd)] {
                let c = x.commutator(y)?;
                err_cross = err_cross.max(c.max_abs_diff(&FockOp::zeros(ctx)?)?);
            }
        }
    }

    Ok(vec![
        Check::within("q-commutator a a† - q a† a = q^-N", err_q, OPERATOR_TOL),
        Check::within("conjugate relation a a† - q^-1 a† a = q^N", err_conj, OPERATOR_TOL),
        Check::within("number relation a† a = [N]_q", err_number, OPERATOR_TOL),
        Check::within("[N, a] = -a and [N, a†] = a†", err_simple, OPERATOR_TOL),
        Check::within("different modes commute", err_cross, OPERATOR_TOL),
        Check::exact("nilpotency a^k = (a†)^k = 0", nilpotent),
    ])
}

/// Product, conjugation and commutation properties of `PG_{k,α}^m`.
pub fn pg_checks(ctx: &QContext, seed: u64, samples: usize) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unit = ctx.with_alpha(1.0)?;
    let mut err_assoc = 0.0f64;
    let mut err_assoc_aw = 0.0f64;
    let mut err_star = 0.0f64;
    let mut involution = true;
    let mut reduces = true;
    for _ in 0..samples {
        let f = random_element(&mut rng, ctx, 4);
        let g = random_element(&mut rng, ctx, 4);
        let h = random_element(&mut rng, ctx, 4);
        err_assoc = err_assoc.max(f.mul(&g)?.mul(&h)?.max_abs_diff(&f.mul(&g.mul(&h)?)?)?);
        err_assoc_aw = err_assoc_aw.max(
            f.antiwick_mul(&g)?
                .antiwick_mul(&h)?
                .max_abs_diff(&f.antiwick_mul(&g.antiwick_mul(&h)?)?)?,
        );
        let lhs = f.mul(&g)?.conjugate();
        let rhs = g.conjugate().mul(&f.conjugate())?;
        err_star = err_star.max(lhs.max_abs_diff(&rhs)?);
        involution &= f.conjugate().conjugate() == f;

        let f1 = PGElement::from_terms(&unit, f.terms().map(|(key, c)| {
            (
                key.hol().iter().map(|&x| x as usize).collect(),
                key.antihol().iter().map(|&x| x as usize).collect(),
                *c,
            )
        }))?;
        let g1 = PGElement::from_terms(&unit, g.terms().map(|(key, c)| {
            (
                key.hol().iter().map(|&x| x as usize).collect(),
                key.antihol().iter().map(|&x| x as usize).collect(),
                *c,
            )
        }))?;
        reduces &= f1.mul(&g1)? == f1.antiwick_mul(&g1)?;
    }

    let mut cross = true;
    for i in 1..=ctx.modes() {
        for j in 1..=ctx.modes() {
            if i == j {
                continue;
            }
            let ti = PGElement::theta(ctx, i)?;
            let tj = PGElement::theta(ctx, j)?;
            let tbj = PGElement::theta_bar(ctx, j)?;
            cross &= ti.mul(&tj)? == tj.mul(&ti)?;
            cross &= ti.mul(&tbj)? == tbj.mul(&ti)?;
        }
    }

    Ok(vec![
        Check::within("associativity of the algebra product", err_assoc, ALGEBRA_TOL),
        Check::within("associativity of the anti-Wick product", err_assoc_aw, ALGEBRA_TOL),
        Check::within("*-algebra (fg)* = g* f*", err_star, ALGEBRA_TOL),
        Check::exact("conjugation is an involution", involution),
        Check::exact("product equals anti-Wick product at alpha = 1", reduces),
        Check::exact("variables of different modes commute", cross),
    ])
}

/// Fock and para-Grassmann suites together.
pub fn algebra_suite(ctx: &QContext, seed: u64) -> Result<Vec<Check>> {
    let mut checks = fock_checks(ctx)?;
    checks.extend(pg_checks(ctx, seed, 100)?);
    Ok(checks)
}

/// `max |⟨n⃗|T_1|n⃗'⟩ - δ|` for the resolution of unity.
pub fn identity_error(ctx: &QContext) -> Result<f64> {
    let t = toeplitz(&PGElement::one(ctx))?;
    t.max_abs_diff(&FockOp::identity(ctx)?)
}

/// `max |∫ ⟨n⃗|θ) μ (θ|n⃗'⟩ - δ_{n⃗n⃗'}|` over all pairs of basis states.
pub fn orthonormality_error(ctx: &QContext) -> Result<f64> {
    let dim = fock_dim(ctx)?;
    let mu = measure_weight(ctx);
    let occ: Vec<Vec<usize>> = (0..dim).map(|i| decode_index(ctx, i)).collect();
    let mut worst = 0.0f64;
    for (r, o) in occ.iter().enumerate() {
        let left = hol_state(ctx, o)?.antiwick_mul(&mu)?;
        for (c, o2) in occ.iter().enumerate() {
            let v = integrate_full(&left.antiwick_mul(&antihol_state(ctx, o2)?)?);
            let target = if r == c { 1.0 } else { 0.0 };
            worst = worst.max((v - target).norm());
        }
    }
    Ok(worst)
}

/// Toeplitz quantization of `θ_i`, `θ̄_i` against `a_i`, `a_i†`.
pub fn symbol_error(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for i in 1..=ctx.modes() {
        let t = toeplitz(&PGElement::theta(ctx, i)?)?;
        worst = worst.max(t.max_abs_diff(&annihilation(ctx, i)?)?);
        let t = toeplitz(&PGElement::theta_bar(ctx, i)?)?;
        worst = worst.max(t.max_abs_diff(&creation(ctx, i)?)?);
    }
    Ok(worst)
}

pub fn identity_suite(ctx: &QContext) -> Result<Vec<Check>> {
    Ok(vec![
        Check::within("resolution of unity T_1 = I", identity_error(ctx)?, OPERATOR_TOL),
        Check::within(
            "orthonormality of coherent projections",
            orthonormality_error(ctx)?,
            OPERATOR_TOL,
        ),
        Check::within("T_theta = a, T_thetabar = a†", symbol_error(ctx)?, OPERATOR_TOL),
    ])
}

/// One symbolic-versus-matrix trace comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceTrial {
    pub expr: OpExpr,
    pub symbolic: Complex64,
    pub matrix: Complex64,
}

impl TraceTrial {
    pub fn scaled_error(&self) -> f64 {
        (self.symbolic - self.matrix).norm() / (1.0 + self.matrix.norm())
    }
}

pub fn trace_trial(ctx: &QContext, expr: &OpExpr) -> Result<TraceTrial> {
    let op = expr.eval(ctx)?;
    Ok(TraceTrial {
        expr: expr.clone(),
        symbolic: symbolic_trace(&op)?,
        matrix: op.matrix_trace(),
    })
}

/// `trials` seeded random polynomials of degree at most 3.
pub fn random_trace_trials(ctx: &QContext, trials: usize, seed: u64) -> Result<Vec<TraceTrial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let e = random_polynomial(&mut rng, ctx.modes(), 4, 3);
            trace_trial(ctx, &e)
        })
        .collect()
}

pub fn trace_suite(
    ctx: &QContext,
    trials: usize,
    seed: u64,
    op: Option<&OpExpr>,
) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    if let Some(e) = op {
        let t = trace_trial(ctx, e)?;
        checks.push(Check::within(
            format!("trace of {e} (symbolic {} vs matrix {})", t.symbolic, t.matrix),
            t.scaled_error(),
            TRACE_TOL,
        ));
    }
    if trials > 0 {
        let worst = random_trace_trials(ctx, trials, seed)?
            .iter()
            .map(TraceTrial::scaled_error)
            .fold(0.0, f64::max);
        checks.push(Check::within(
            format!("symbolic trace = matrix trace on {trials} random operators"),
            worst,
            TRACE_TOL,
        ));
    }
    Ok(checks)
}

/// `sqrt([n]_q)` table, used by examples that print matrix elements.
pub fn sqrt_q_ints(ctx: &QContext) -> Vec<f64> {
    (0..=ctx.k()).map(|n| q_int(ctx, n).sqrt()).collect()
}
