//! Dense matrix representation of `m` independent q-boson modes.
//!
//! The Fock space is `C^k ⊗ ... ⊗ C^k` (`m` factors). A basis index encodes
//! the occupation tuple `(n_1, ..., n_m)` in mixed radix with mode 1 varying
//! fastest: `index = n_1 + n_2 k + ... + n_m k^(m-1)`. The same convention is
//! used by [`crate::coherent`] and [`crate::trace_engine`].

use std::ops::{Add, Mul, Sub};

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qnum::{q_int, QContext};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// A linear operator on the `k^m`-dimensional Fock space.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOp {
    ctx: QContext,
    matrix: Array2<Complex64>,
}

/// Checked `k^m` against the context's dimension guard.
pub fn fock_dim(ctx: &QContext) -> Result<usize> {
    let limit = ctx.fock_limit();
    match ctx.fock_dim_checked() {
        Some(dim) if dim <= limit => Ok(dim),
        Some(dim) => Err(Error::FockTooLarge { dim, limit }),
        None => Err(Error::FockTooLarge {
            dim: usize::MAX,
            limit,
        }),
    }
}

/// Occupation tuple of a basis index (mode 1 first).
pub fn decode_index(ctx: &QContext, mut index: usize) -> Vec<usize> {
    let k = ctx.k();
    (0..ctx.modes())
        .map(|_| {
            let d = index % k;
            index /= k;
            d
        })
        .collect()
}

/// Basis index of an occupation tuple (mode 1 first).
pub fn encode_index(ctx: &QContext, occupation: &[usize]) -> usize {
    occupation
        .iter()
        .rev()
        .fold(0, |acc, &n| acc * ctx.k() + n)
}

impl FockOp {
    pub fn zeros(ctx: &QContext) -> Result<Self> {
        let dim = fock_dim(ctx)?;
        Ok(FockOp {
            ctx: *ctx,
            matrix: Array2::zeros((dim, dim)),
        })
    }

    pub fn identity(ctx: &QContext) -> Result<Self> {
        let dim = fock_dim(ctx)?;
        Ok(FockOp {
            ctx: *ctx,
            matrix: Array2::eye(dim),
        })
    }

    /// Wraps an existing matrix; its shape must be `k^m x k^m`.
    pub fn from_matrix(ctx: &QContext, matrix: Array2<Complex64>) -> Result<Self> {
        let dim = fock_dim(ctx)?;
        let (rows, cols) = matrix.dim();
        if rows != dim || cols != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: rows.max(cols),
            });
        }
        Ok(FockOp { ctx: *ctx, matrix })
    }

    /// Diagonal operator whose entry at each basis state is `f(occupations)`.
    pub fn diagonal_from_fn<F>(ctx: &QContext, f: F) -> Result<Self>
    where
        F: Fn(&[usize]) -> Complex64,
    {
        let mut op = Self::zeros(ctx)?;
        for idx in 0..op.dim() {
            op.matrix[(idx, idx)] = f(&decode_index(ctx, idx));
        }
        Ok(op)
    }

    /// Embeds a `k x k` single-mode matrix on `mode` (1-based), identity elsewhere.
    pub fn embed(ctx: &QContext, mode: usize, single: &Array2<Complex64>) -> Result<Self> {
        ctx.check_mode(mode)?;
        let k = ctx.k();
        if single.dim() != (k, k) {
            return Err(Error::DimensionMismatch {
                left: k,
                right: single.nrows(),
            });
        }
        let mut op = Self::zeros(ctx)?;
        let stride = k.pow(mode as u32 - 1);
        for col in 0..op.dim() {
            let digit = (col / stride) % k;
            let base = col - digit * stride;
            for r in 0..k {
                let v = single[(r, digit)];
                if v != ZERO {
                    op.matrix[(base + r * stride, col)] = v;
                }
            }
        }
        Ok(op)
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Array2<Complex64> {
        self.matrix
    }

    /// `⟨row|A|col⟩`.
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    fn check_compatible(&self, other: &FockOp) -> Result<()> {
        if !self.ctx.compatible(&other.ctx) {
            return Err(Error::ContextMismatch);
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &FockOp) -> Result<FockOp> {
        self.check_compatible(other)?;
        Ok(FockOp {
            ctx: self.ctx,
            matrix: self.matrix.dot(&other.matrix),
        })
    }

    pub fn add(&self, other: &FockOp) -> Result<FockOp> {
        self.check_compatible(other)?;
        Ok(FockOp {
            ctx: self.ctx,
            matrix: &self.matrix + &other.matrix,
        })
    }

    pub fn sub(&self, other: &FockOp) -> Result<FockOp> {
        self.check_compatible(other)?;
        Ok(FockOp {
            ctx: self.ctx,
            matrix: &self.matrix - &other.matrix,
        })
    }

    pub fn scale(&self, c: Complex64) -> FockOp {
        FockOp {
            ctx: self.ctx,
            matrix: self.matrix.mapv(|v| v * c),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> FockOp {
        FockOp {
            ctx: self.ctx,
            matrix: self.matrix.t().mapv(|v| v.conj()),
        }
    }

    /// `self^n`, with `self^0` the identity.
    pub fn pow(&self, n: u32) -> FockOp {
        let mut result = Array2::eye(self.dim());
        let mut base = self.matrix.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.dot(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.dot(&base);
            }
        }
        FockOp {
            ctx: self.ctx,
            matrix: result,
        }
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &FockOp) -> Result<FockOp> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    /// Largest off-diagonal magnitude.
    pub fn off_diagonal_norm(&self) -> f64 {
        self.matrix
            .indexed_iter()
            .filter(|((r, c), _)| r != c)
            .map(|(_, v)| v.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_diagonal(&self) -> bool {
        self.off_diagonal_norm() <= self.ctx.tol()
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        self.matrix.diag().to_vec()
    }

    /// Applies `f` to each diagonal entry of a diagonal operator.
    pub fn func_of_diagonal<F>(&self, f: F) -> Result<FockOp>
    where
        F: Fn(Complex64) -> Complex64,
    {
        let off = self.off_diagonal_norm();
        if off > self.ctx.tol() {
            return Err(Error::NotDiagonal(off));
        }
        let mut matrix = Array2::zeros(self.matrix.dim());
        for (i, v) in self.matrix.diag().iter().enumerate() {
            matrix[(i, i)] = f(*v);
        }
        Ok(FockOp {
            ctx: self.ctx,
            matrix,
        })
    }

    /// `Σ_n ⟨n|A|n⟩` in the canonical basis.
    pub fn matrix_trace(&self) -> Complex64 {
        self.matrix.diag().sum()
    }

    /// Entrywise `max |A - B|`.
    pub fn max_abs_diff(&self, other: &FockOp) -> Result<f64> {
        self.check_compatible(other)?;
        Ok(self
            .matrix
            .iter()
            .zip(other.matrix.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn approx_eq(&self, other: &FockOp, tol: f64) -> bool {
        self.max_abs_diff(other).map(|d| d <= tol).unwrap_or(false)
    }

    /// Every entry is exactly zero.
    pub fn is_exact_zero(&self) -> bool {
        self.matrix.iter().all(|v| *v == ZERO)
    }
}

impl Add for &FockOp {
    type Output = FockOp;

    fn add(self, rhs: &FockOp) -> FockOp {
        FockOp::add(self, rhs).expect("incompatible operators")
    }
}

impl Sub for &FockOp {
    type Output = FockOp;

    fn sub(self, rhs: &FockOp) -> FockOp {
        FockOp::sub(self, rhs).expect("incompatible operators")
    }
}

impl Mul for &FockOp {
    type Output = FockOp;

    fn mul(self, rhs: &FockOp) -> FockOp {
        self.compose(rhs).expect("incompatible operators")
    }
}

fn single_annihilation(ctx: &QContext) -> Array2<Complex64> {
    let k = ctx.k();
    let mut a = Array2::zeros((k, k));
    for n in 1..k {
        a[(n - 1, n)] = Complex64::new(q_int(ctx, n).sqrt(), 0.0);
    }
    a
}

/// `a_i`: `a|n⟩ = sqrt([n]_q) |n-1⟩` on mode `i` (1-based).
pub fn annihilation(ctx: &QContext, mode: usize) -> Result<FockOp> {
    FockOp::embed(ctx, mode, &single_annihilation(ctx))
}

/// `a_i†`, built as the adjoint of [`annihilation`].
pub fn creation(ctx: &QContext, mode: usize) -> Result<FockOp> {
    Ok(annihilation(ctx, mode)?.adjoint())
}

/// `N_i|n⟩ = n_i|n⟩`.
pub fn number_op(ctx: &QContext, mode: usize) -> Result<FockOp> {
    ctx.check_mode(mode)?;
    FockOp::diagonal_from_fn(ctx, |occ| Complex64::new(occ[mode - 1] as f64, 0.0))
}

/// Total number operator `Σ_i N_i`.
pub fn total_number_op(ctx: &QContext) -> Result<FockOp> {
    FockOp::diagonal_from_fn(ctx, |occ| {
        Complex64::new(occ.iter().sum::<usize>() as f64, 0.0)
    })
}

/// `q^(s N_i)` for integer `s`, as a diagonal matrix.
pub fn q_power_of_number(ctx: &QContext, mode: usize, s: i32) -> Result<FockOp> {
    ctx.check_mode(mode)?;
    let q = ctx.q();
    FockOp::diagonal_from_fn(ctx, |occ| q.powi(s * occ[mode - 1] as i32))
}

/// `exp(-β Σ_i ε_i N_i)` for a Hamiltonian diagonal in the number basis.
pub fn boltzmann_number(ctx: &QContext, beta: f64, energies: &[f64]) -> Result<FockOp> {
    if energies.len() != ctx.modes() {
        return Err(Error::ArityMismatch {
            got: energies.len(),
            expected: ctx.modes(),
        });
    }
    let mut h = FockOp::zeros(ctx)?;
    for (i, e) in energies.iter().enumerate() {
        h = h.add(&number_op(ctx, i + 1)?.scale(Complex64::new(*e, 0.0)))?;
    }
    h.func_of_diagonal(|x| (-beta * x).exp())
}
