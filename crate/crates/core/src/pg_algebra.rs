//! The para-Grassmann algebra `PG_{k,α}^m`.
//!
//! Elements are stored as sparse maps from anti-Wick monomials
//! `θ_m^{n_m}···θ_1^{n_1} θ̄_m^{n'_m}···θ̄_1^{n'_1}` to complex coefficients.
//! The relations are
//!
//! * `θ_i^k = θ̄_i^k = 0`,
//! * `θ_i θ̄_i = α θ̄_i θ_i` with real `α`,
//! * variables of different modes commute.
//!
//! Every element is kept in this canonical form, so two elements are equal
//! exactly when their coefficient maps agree.
//!
//! Two products are provided. [`PGElement::mul`] is the algebra product: moving
//! `θ̄_i^b` to the right of `θ_i^c` costs a factor `α^{-bc}` (the relation
//! `θ̄θ = α^{-1} θθ̄` applied `bc` times). [`PGElement::antiwick_mul`] is the
//! concatenation used under the `:...:` prescription: exponents add per mode
//! and no commutation factor is ever produced.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::qnum::QContext;

/// Exponents of an anti-Wick monomial.
///
/// The first `m` entries are the `θ` exponents for modes `1..=m`, the last
/// `m` entries the `θ̄` exponents in the same mode order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    fn unit(m: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, 2 * m),
        }
    }

    fn modes(&self) -> usize {
        self.exps.len() / 2
    }

    /// `θ` exponents, mode 1 first.
    pub fn hol(&self) -> &[u32] {
        &self.exps[..self.modes()]
    }

    /// `θ̄` exponents, mode 1 first.
    pub fn antihol(&self) -> &[u32] {
        &self.exps[self.modes()..]
    }

    pub fn hol_exp(&self, mode: usize) -> u32 {
        self.exps[mode - 1]
    }

    pub fn antihol_exp(&self, mode: usize) -> u32 {
        self.exps[self.modes() + mode - 1]
    }

    pub(crate) fn set_hol(&mut self, mode: usize, e: u32) {
        self.exps[mode - 1] = e;
    }

    pub(crate) fn set_antihol(&mut self, mode: usize, e: u32) {
        let m = self.modes();
        self.exps[m + mode - 1] = e;
    }

    /// Exponent-wise sum, `None` when any exponent reaches `k`.
    fn concat(&self, other: &Monomial, k: u32) -> Option<Monomial> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            let s = a + b;
            if s >= k {
                return None;
            }
            exps.push(s);
        }
        Some(Monomial { exps })
    }

    /// Holomorphic and antiholomorphic degrees swapped.
    fn swapped(&self) -> Monomial {
        let m = self.modes();
        let mut exps = SmallVec::with_capacity(2 * m);
        exps.extend_from_slice(&self.exps[m..]);
        exps.extend_from_slice(&self.exps[..m]);
        Monomial { exps }
    }

    /// `Σ_i n'_i(self) · n_i(other)`: the number of `θ̄_i θ_i` swaps needed
    /// to bring `self · other` into anti-Wick order.
    fn crossing_count(&self, other: &Monomial) -> i64 {
        self.antihol()
            .iter()
            .zip(other.hol())
            .map(|(&b, &c)| b as i64 * c as i64)
            .sum()
    }
}

/// An element of `PG_{k,α}^m` in canonical anti-Wick form.
#[derive(Debug, Clone, PartialEq)]
pub struct PGElement {
    ctx: QContext,
    terms: BTreeMap<Monomial, Complex64>,
}

impl PGElement {
    pub fn zero(ctx: &QContext) -> Self {
        PGElement {
            ctx: *ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(ctx: &QContext, c: Complex64) -> Self {
        let mut e = Self::zero(ctx);
        e.accumulate(Monomial::unit(ctx.modes()), c);
        e
    }

    pub fn one(ctx: &QContext) -> Self {
        Self::scalar(ctx, Complex64::new(1.0, 0.0))
    }

    /// `c · θ^{hol} θ̄^{antihol}`; both tuples are indexed by mode, mode 1 first.
    pub fn monomial(ctx: &QContext, hol: &[usize], antihol: &[usize], c: Complex64) -> Result<Self> {
        let m = ctx.modes();
        for tuple in [hol, antihol] {
            if tuple.len() != m {
                return Err(Error::ArityMismatch {
                    got: tuple.len(),
                    expected: m,
                });
            }
        }
        let k = ctx.k();
        let mut key = Monomial::unit(m);
        for (i, (&n, &nb)) in hol.iter().zip(antihol).enumerate() {
            for e in [n, nb] {
                if e >= k {
                    return Err(Error::ExponentOutOfRange { exponent: e, k });
                }
            }
            key.set_hol(i + 1, n as u32);
            key.set_antihol(i + 1, nb as u32);
        }
        let mut e = Self::zero(ctx);
        e.accumulate(key, c);
        Ok(e)
    }

    /// `θ_i^n` (zero element when `n >= k`).
    pub fn theta_pow(ctx: &QContext, mode: usize, n: usize) -> Result<Self> {
        ctx.check_mode(mode)?;
        if n >= ctx.k() {
            return Ok(Self::zero(ctx));
        }
        let mut key = Monomial::unit(ctx.modes());
        key.set_hol(mode, n as u32);
        let mut e = Self::zero(ctx);
        e.accumulate(key, Complex64::new(1.0, 0.0));
        Ok(e)
    }

    /// `θ̄_i^n` (zero element when `n >= k`).
    pub fn theta_bar_pow(ctx: &QContext, mode: usize, n: usize) -> Result<Self> {
        ctx.check_mode(mode)?;
        if n >= ctx.k() {
            return Ok(Self::zero(ctx));
        }
        let mut key = Monomial::unit(ctx.modes());
        key.set_antihol(mode, n as u32);
        let mut e = Self::zero(ctx);
        e.accumulate(key, Complex64::new(1.0, 0.0));
        Ok(e)
    }

    pub fn theta(ctx: &QContext, mode: usize) -> Result<Self> {
        Self::theta_pow(ctx, mode, 1)
    }

    pub fn theta_bar(ctx: &QContext, mode: usize) -> Result<Self> {
        Self::theta_bar_pow(ctx, mode, 1)
    }

    /// Builds an element from raw terms, summing duplicates.
    pub fn from_terms<I>(ctx: &QContext, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<usize>, Complex64)>,
    {
        let mut acc = Self::zero(ctx);
        for (hol, antihol, c) in terms {
            let t = Self::monomial(ctx, &hol, &antihol, c)?;
            for (key, v) in t.terms {
                acc.accumulate(key, v);
            }
        }
        Ok(acc)
    }

    pub(crate) fn from_raw(ctx: &QContext, terms: BTreeMap<Monomial, Complex64>) -> Self {
        let mut e = PGElement { ctx: *ctx, terms };
        e.terms.retain(|_, v| *v != Complex64::new(0.0, 0.0));
        e
    }

    /// Key of the constant monomial.
    pub fn unit_key(ctx: &QContext) -> Monomial {
        Monomial::unit(ctx.modes())
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Complex64)> {
        self.terms.iter()
    }

    /// Coefficient of `θ^{hol} θ̄^{antihol}` (zero when absent or out of range).
    pub fn coeff(&self, hol: &[usize], antihol: &[usize]) -> Complex64 {
        let m = self.ctx.modes();
        if hol.len() != m || antihol.len() != m {
            return Complex64::new(0.0, 0.0);
        }
        let mut key = Monomial::unit(m);
        for i in 0..m {
            key.set_hol(i + 1, hol[i] as u32);
            key.set_antihol(i + 1, antihol[i] as u32);
        }
        self.coeff_of(&key)
    }

    pub fn coeff_of(&self, key: &Monomial) -> Complex64 {
        self.terms
            .get(key)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    fn accumulate(&mut self, key: Monomial, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = *o.get() + c;
                if sum == Complex64::new(0.0, 0.0) {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_ctx(&self, other: &PGElement) -> Result<()> {
        if self.ctx.compatible(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &PGElement) -> Result<PGElement> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.accumulate(key.clone(), *c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PGElement) -> Result<PGElement> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> PGElement {
        let terms = self
            .terms
            .iter()
            .map(|(key, v)| (key.clone(), v * c))
            .collect();
        PGElement::from_raw(&self.ctx, terms)
    }

    /// Algebra product of `PG_{k,α}^m`.
    pub fn mul(&self, other: &PGElement) -> Result<PGElement> {
        self.check_ctx(other)?;
        let k = self.ctx.k() as u32;
        let alpha = self.ctx.alpha();
        let mut out = PGElement::zero(&self.ctx);
        for (kf, cf) in &self.terms {
            for (kg, cg) in &other.terms {
                if let Some(key) = kf.concat(kg, k) {
                    let swaps = kf.crossing_count(kg);
                    let mut c = cf * cg;
                    if swaps != 0 && alpha != 1.0 {
                        c *= alpha.powi(-(swaps as i32));
                    }
                    out.accumulate(key, c);
                }
            }
        }
        Ok(out)
    }

    /// Product under the anti-normal order prescription: exponents add
    /// with no commutation factors.
    pub fn antiwick_mul(&self, other: &PGElement) -> Result<PGElement> {
        self.check_ctx(other)?;
        let k = self.ctx.k() as u32;
        let mut out = PGElement::zero(&self.ctx);
        for (kf, cf) in &self.terms {
            for (kg, cg) in &other.terms {
                if let Some(key) = kf.concat(kg, k) {
                    out.accumulate(key, cf * cg);
                }
            }
        }
        Ok(out)
    }

    /// `self^n` under the algebra product.
    pub fn pow(&self, n: u32) -> PGElement {
        let mut out = PGElement::one(&self.ctx);
        for _ in 0..n {
            out = out.mul(self).expect("same context");
        }
        out
    }

    /// Conjugation: `(c θ^n θ̄^{n'})* = c̄ θ^{n'} θ̄^n`.
    pub fn conjugate(&self) -> PGElement {
        let terms = self
            .terms
            .iter()
            .map(|(key, v)| (key.swapped(), v.conj()))
            .collect();
        PGElement {
            ctx: self.ctx,
            terms,
        }
    }

    /// Keeps only terms with no `θ̄` (holomorphic part).
    pub fn holomorphic_part(&self) -> PGElement {
        let terms = self
            .terms
            .iter()
            .filter(|(key, _)| key.antihol().iter().all(|&e| e == 0))
            .map(|(key, v)| (key.clone(), *v))
            .collect();
        PGElement {
            ctx: self.ctx,
            terms,
        }
    }

    /// Largest coefficient difference over the union of supports.
    pub fn max_abs_diff(&self, other: &PGElement) -> Result<f64> {
        self.check_ctx(other)?;
        let mut worst: f64 = 0.0;
        for (key, c) in &self.terms {
            worst = worst.max((c - other.coeff_of(key)).norm());
        }
        for (key, c) in &other.terms {
            if !self.terms.contains_key(key) {
                worst = worst.max(c.norm());
            }
        }
        Ok(worst)
    }

    /// Equality of coefficient maps within the context tolerance.
    pub fn equal_within_tol(&self, other: &PGElement) -> bool {
        self.max_abs_diff(other)
            .map(|d| d <= self.ctx.tol())
            .unwrap_or(false)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PgJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<PGElement> {
        let doc: PgJson = serde_json::from_str(text).map_err(|e| Error::Io(e.to_string()))?;
        let ctx = QContext::new(doc.k, doc.m)?.with_alpha(doc.alpha)?;
        PGElement::from_terms(
            &ctx,
            doc.terms
                .into_iter()
                .map(|t| (t.hol, t.antihol, Complex64::new(t.re, t.im))),
        )
    }
}

/// JSON shape of a [`PGElement`]: the context and a list of terms.
#[derive(Debug, Serialize, Deserialize)]
pub struct PgJson {
    pub k: usize,
    pub m: usize,
    pub alpha: f64,
    pub terms: Vec<PgJsonTerm>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PgJsonTerm {
    pub hol: Vec<usize>,
    pub antihol: Vec<usize>,
    pub re: f64,
    pub im: f64,
}

impl From<&PGElement> for PgJson {
    fn from(e: &PGElement) -> Self {
        PgJson {
            k: e.ctx.k(),
            m: e.ctx.modes(),
            alpha: e.ctx.alpha(),
            terms: e
                .terms
                .iter()
                .map(|(key, c)| PgJsonTerm {
                    hol: key.hol().iter().map(|&x| x as usize).collect(),
                    antihol: key.antihol().iter().map(|&x| x as usize).collect(),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    /// `t2^1 t1^2 tb2^0 tb1^1`: decreasing mode index, `θ` before `θ̄`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.modes();
        let mut first = true;
        for (prefix, exps) in [("t", self.hol()), ("tb", self.antihol())] {
            for i in (1..=m).rev() {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{prefix}{i}^{}", exps[i - 1])?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for PGElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (key, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let sign = if c.im < 0.0 { '-' } else { '+' };
            write!(f, "({}{}{}i)·{}", c.re, sign, c.im.abs(), key)?;
        }
        Ok(())
    }
}
