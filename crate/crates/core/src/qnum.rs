//! q-deformed integers at the root of unity `q = exp(iπ/k)`.
//!
//! Every q-number used by the crate is real here: `[n]_q = sin(nπ/k) / sin(π/k)`.
//! Multiples of `k` are mapped to an exact zero so that nilpotency never
//! leaves floating-point residue behind.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default tolerance for scalar comparisons.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Default upper bound on the Fock-space dimension `k^m`.
pub const DEFAULT_FOCK_LIMIT: usize = 4096;

/// Global parameters shared by every object in a computation.
///
/// `k` is the nilpotency order, `m` the number of modes and `alpha` the real
/// commutation coefficient in `θθ̄ = α θ̄θ`. A context is immutable once built;
/// the `with_*` methods return modified copies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QContext {
    k: usize,
    m: usize,
    alpha: f64,
    tol: f64,
    fock_limit: usize,
}

impl QContext {
    pub fn new(k: usize, m: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidContext(format!("k must be >= 2, got {k}")));
        }
        if m < 1 {
            return Err(Error::InvalidContext("m must be >= 1".into()));
        }
        Ok(QContext {
            k,
            m,
            alpha: 1.0,
            tol: DEFAULT_TOL,
            fock_limit: DEFAULT_FOCK_LIMIT,
        })
    }

    /// Single-mode context.
    pub fn single(k: usize) -> Result<Self> {
        Self::new(k, 1)
    }

    pub fn with_alpha(mut self, alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha == 0.0 {
            return Err(Error::InvalidContext(format!(
                "alpha must be real, finite and nonzero, got {alpha}"
            )));
        }
        self.alpha = alpha;
        Ok(self)
    }

    pub fn with_tol(mut self, tol: f64) -> Result<Self> {
        if tol.is_nan() || tol <= 0.0 || tol.is_infinite() {
            return Err(Error::InvalidContext(format!("tol must be > 0, got {tol}")));
        }
        self.tol = tol;
        Ok(self)
    }

    pub fn with_modes(mut self, m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidContext("m must be >= 1".into()));
        }
        self.m = m;
        Ok(self)
    }

    pub fn with_fock_limit(mut self, limit: usize) -> Self {
        self.fock_limit = limit;
        self
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn modes(&self) -> usize {
        self.m
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn fock_limit(&self) -> usize {
        self.fock_limit
    }

    /// The deformation parameter `q = exp(iπ/k)`.
    pub fn q(&self) -> Complex64 {
        Complex64::from_polar(1.0, PI / self.k as f64)
    }

    /// `k^m`, or `None` on overflow.
    pub fn fock_dim_checked(&self) -> Option<usize> {
        let mut dim = 1usize;
        for _ in 0..self.m {
            dim = dim.checked_mul(self.k)?;
        }
        Some(dim)
    }

    pub(crate) fn check_mode(&self, mode: usize) -> Result<()> {
        if mode == 0 || mode > self.m {
            return Err(Error::ModeOutOfRange {
                mode,
                modes: self.m,
            });
        }
        Ok(())
    }

    /// Two contexts describe the same algebra (tolerance may differ).
    pub fn compatible(&self, other: &QContext) -> bool {
        self.k == other.k && self.m == other.m && self.alpha == other.alpha
    }
}

/// `[n]_q = sin(nπ/k) / sin(π/k)`, exactly zero when `k | n`.
pub fn q_int(ctx: &QContext, n: usize) -> f64 {
    let k = ctx.k();
    if n.is_multiple_of(k) {
        return 0.0;
    }
    let step = PI / k as f64;
    (n as f64 * step).sin() / step.sin()
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`, defined for `0 <= n <= k-1`.
pub fn q_factorial(ctx: &QContext, n: usize) -> Result<f64> {
    if n >= ctx.k() {
        return Err(Error::Domain(format!(
            "q-factorial of {n} requested, only 0..={} is defined",
            ctx.k() - 1
        )));
    }
    Ok((1..=n).map(|j| q_int(ctx, j)).product())
}

/// All factorials `[0]_q! .. [k-1]_q!`.
pub(crate) fn q_factorial_table(ctx: &QContext) -> Vec<f64> {
    let mut table = Vec::with_capacity(ctx.k());
    let mut acc = 1.0;
    table.push(acc);
    for n in 1..ctx.k() {
        acc *= q_int(ctx, n);
        table.push(acc);
    }
    table
}

/// Truncated q-exponential `Σ_{p<k} x^p / [p]_q!`.
pub fn q_exp_scalar(ctx: &QContext, x: Complex64) -> Complex64 {
    let facts = q_factorial_table(ctx);
    let mut power = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for fact in facts {
        sum += power / fact;
        power *= x;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn ctx(k: usize) -> QContext {
        QContext::single(k).unwrap()
    }

    // Independent route: (q^n - q^-n) / (q - q^-1) in complex arithmetic.
    fn q_int_oracle(k: usize, n: usize) -> f64 {
        let q = Complex64::from_polar(1.0, PI / k as f64);
        let v = (q.powu(n as u32) - q.powu(n as u32).inv()) / (q - q.inv());
        assert!(v.im.abs() < 1e-12);
        v.re
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(&ctx(3), 0), 0.0);
        assert_abs_diff_eq!(q_int(&ctx(3), 2), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(q_int(&ctx(4), 2), q_int_oracle(4, 2), epsilon = 1e-14);
        assert_abs_diff_eq!(q_int(&ctx(4), 2), std::f64::consts::SQRT_2, epsilon = 1e-14);
        assert_eq!(q_int(&ctx(5), 5), 0.0);
        assert_eq!(q_int(&ctx(5), 10), 0.0);
    }

    #[test]
    fn q_int_matches_complex_definition() {
        for k in 2..=12 {
            for n in 0..=k {
                assert_abs_diff_eq!(q_int(&ctx(k), n), q_int_oracle(k, n), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(q_factorial(&ctx(3), 0).unwrap(), 1.0);
        assert_abs_diff_eq!(q_factorial(&ctx(3), 2).unwrap(), 1.0, epsilon = 1e-15);
        let oracle = q_int_oracle(4, 1) * q_int_oracle(4, 2);
        assert_abs_diff_eq!(q_factorial(&ctx(4), 2).unwrap(), oracle, epsilon = 1e-14);
        assert_abs_diff_eq!(oracle, 2f64.sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn factorial_rejects_out_of_range() {
        assert!(matches!(q_factorial(&ctx(3), 3), Err(Error::Domain(_))));
    }

    #[test]
    fn q_exp_examples() {
        for k in 2..8 {
            let one = q_exp_scalar(&ctx(k), Complex64::new(0.0, 0.0));
            assert_eq!(one, Complex64::new(1.0, 0.0));
        }
        assert_abs_diff_eq!(q_exp_scalar(&ctx(2), 1.0.into()).re, 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(q_exp_scalar(&ctx(3), 1.0.into()).re, 3.0, epsilon = 1e-14);
    }

    #[test]
    fn recurrence_and_symmetry() {
        for k in 2..=10 {
            let c = ctx(k);
            let q = c.q();
            for n in 0..k {
                let lhs = Complex64::new(q_int(&c, n + 1), 0.0);
                let rhs = q * q_int(&c, n) + q.powi(-(n as i32));
                assert!((lhs - rhs).norm() < c.tol(), "k={k} n={n}");
            }
            for n in 0..=k {
                assert_abs_diff_eq!(q_int(&c, n), q_int(&c, k - n), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn factorial_reflection() {
        for k in 2..=10 {
            let c = ctx(k);
            let top = q_factorial(&c, k - 1).unwrap();
            for n in 0..k {
                let prod = q_factorial(&c, n).unwrap() * q_factorial(&c, k - 1 - n).unwrap();
                assert_abs_diff_eq!(prod, top, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn classical_limit() {
        let c = ctx(1_000_000);
        for n in 0..=5 {
            assert!((q_int(&c, n) - n as f64).abs() < 1e-4);
        }
        let mut prev = f64::INFINITY;
        for k in [10, 100, 1000, 10_000, 100_000] {
            let gap = (q_int(&ctx(k), 5) - 5.0).abs();
            assert!(gap < prev);
            prev = gap;
        }
    }

    #[test]
    fn unit_phase() {
        for k in 2..10 {
            let c = ctx(k);
            assert!((c.q().norm() - 1.0).abs() < c.tol());
            assert!((c.q().powu(2 * k as u32) - 1.0).norm() < c.tol());
        }
    }

    #[test]
    fn context_validation() {
        assert!(QContext::new(1, 1).is_err());
        assert!(QContext::new(3, 0).is_err());
        assert!(ctx(3).with_alpha(0.0).is_err());
        assert!(ctx(3).with_tol(-1.0).is_err());
        assert!(ctx(3).with_alpha(-1.0).is_ok());
    }
}
