//! Thermodynamics of non-interacting q-bosons.
//!
//! For `H = ε N` each mode has the evenly spaced, truncated spectrum
//! `0, ε, ..., (k-1)ε`, which gives
//!
//! ```text
//! Z₁   = (1 - e^{-kβε}) / (1 - e^{-βε})
//! E̅₁   = ε (1/(e^{βε} - 1) - k/(e^{kβε} - 1))
//! C    = ¼(βε)² (1/sinh²(βε/2) - k²/sinh²(kβε/2))
//! n_j  = 1/(e^{x} - 1) - k/(e^{kx} - 1),    x = β(ε_j - μ)
//! ```
//!
//! `βε → 0` and `ε_j → μ` are removable singularities; below
//! [`SERIES_THRESHOLD`] the closed forms switch to their Taylor expansions.
//! The `k → ∞` (Bose) curves are separate closed forms.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qnum::{q_int, QContext};

/// Below this `|x|` the closed forms are replaced by their series.
pub const SERIES_THRESHOLD: f64 = 1e-6;

/// `Σ_{n<k} e^{-nx}`.
pub fn geometric_sum(k: usize, x: f64) -> f64 {
    let kf = k as f64;
    if x.abs() < SERIES_THRESHOLD {
        kf - x * kf * (kf - 1.0) / 2.0 + x * x * (kf - 1.0) * kf * (2.0 * kf - 1.0) / 12.0
    } else {
        (-kf * x).exp_m1() / (-x).exp_m1()
    }
}

/// `1/(e^x - 1) - k/(e^{kx} - 1)`, the mean level index at `βε = x`.
pub fn occupation_factor(k: usize, x: f64) -> f64 {
    let kf = k as f64;
    if x.abs() < SERIES_THRESHOLD {
        (kf - 1.0) / 2.0 - x * (kf * kf - 1.0) / 12.0
            + x.powi(3) * (kf.powi(4) - 1.0) / 720.0
    } else {
        1.0 / x.exp_m1() - kf / (kf * x).exp_m1()
    }
}

/// `y² / sinh²(y)`.
fn y2_over_sinh2(y: f64) -> f64 {
    if y.abs() < 1e-4 {
        let y2 = y * y;
        1.0 - y2 / 3.0 + 2.0 * y2 * y2 / 15.0
    } else {
        let s = y.sinh();
        (y / s) * (y / s)
    }
}

/// Canonical partition function of one q-boson with `H = εN`.
pub fn partition_single(ctx: &QContext, eps: f64, beta: f64) -> f64 {
    geometric_sum(ctx.k(), beta * eps)
}

/// Mean energy `-∂_β log Z₁`.
pub fn mean_energy_single(ctx: &QContext, eps: f64, beta: f64) -> f64 {
    eps * occupation_factor(ctx.k(), beta * eps)
}

/// Specific heat `-β² ∂_β E̅₁` (in units of `k_B`).
pub fn specific_heat_single(ctx: &QContext, eps: f64, beta: f64) -> f64 {
    let x = beta * eps;
    y2_over_sinh2(x / 2.0) - y2_over_sinh2(ctx.k() as f64 * x / 2.0)
}

/// The spectrum `[n]_q ε` of `H' = ε a†a`.
pub fn prime_spectrum(ctx: &QContext, eps: f64) -> Vec<f64> {
    (0..ctx.k()).map(|n| q_int(ctx, n) * eps).collect()
}

/// `Z'₁ = Σ_n exp(-βε[n]_q)`.
pub fn partition_single_prime(ctx: &QContext, eps: f64, beta: f64) -> f64 {
    spectrum_partition(&prime_spectrum(ctx, eps), beta)
}

/// `Σ_n e^{-β E_n}` for an arbitrary finite spectrum.
pub fn spectrum_partition(levels: &[f64], beta: f64) -> f64 {
    levels.iter().map(|e| (-beta * e).exp()).sum()
}

/// Boltzmann weights normalised against the lowest level.
fn spectrum_moments(levels: &[f64], beta: f64) -> (f64, f64) {
    let ground = levels.iter().copied().fold(f64::INFINITY, f64::min);
    let weights: Vec<f64> = levels
        .iter()
        .map(|e| (-beta * (e - ground)).exp())
        .collect();
    let z: f64 = weights.iter().sum();
    let mean = levels.iter().zip(&weights).map(|(e, w)| e * w).sum::<f64>() / z;
    let var = levels
        .iter()
        .zip(&weights)
        .map(|(e, w)| (e - mean).powi(2) * w)
        .sum::<f64>()
        / z;
    (mean, var)
}

/// `⟨E⟩` for an arbitrary finite spectrum.
pub fn spectrum_mean_energy(levels: &[f64], beta: f64) -> f64 {
    spectrum_moments(levels, beta).0
}

/// `β² (⟨E²⟩ - ⟨E⟩²)` for an arbitrary finite spectrum.
pub fn spectrum_specific_heat(levels: &[f64], beta: f64) -> f64 {
    beta * beta * spectrum_moments(levels, beta).1
}

/// Grand partition function `∏_j Σ_{n<k} e^{-β(ε_j-μ)n}`.
pub fn grand_partition(ctx: &QContext, levels: &[f64], mu: f64, beta: f64) -> f64 {
    levels
        .iter()
        .map(|e| geometric_sum(ctx.k(), beta * (e - mu)))
        .product()
}

/// Mean occupation of a level `ε_j`; equals `(k-1)/2` at `ε_j = μ`.
pub fn mean_occupation(ctx: &QContext, eps_j: f64, mu: f64, beta: f64) -> f64 {
    occupation_factor(ctx.k(), beta * (eps_j - mu))
}

/// `k → ∞` mean energy `ε/(e^{βε} - 1)`.
pub fn bose_mean_energy(eps: f64, beta: f64) -> f64 {
    eps / (beta * eps).exp_m1()
}

/// `k → ∞` specific heat `(βε/2)² / sinh²(βε/2)`.
pub fn bose_specific_heat(eps: f64, beta: f64) -> f64 {
    y2_over_sinh2(beta * eps / 2.0)
}

/// Bose-Einstein occupation `1/(e^x - 1)`; finite only for `x > 0`.
pub fn bose_occupation(x: f64) -> f64 {
    1.0 / x.exp_m1()
}

/// Fermi-Dirac occupation `1/(e^x + 1)`.
pub fn fermi_dirac_occupation(x: f64) -> f64 {
    if x > 0.0 {
        let e = (-x).exp();
        e / (1.0 + e)
    } else {
        1.0 / (x.exp() + 1.0)
    }
}

/// Nilpotency order labelling a curve; `Bose` is the `k → ∞` limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotency {
    Finite(usize),
    Bose,
}

impl std::fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Nilpotency::Finite(k) => write!(f, "{k}"),
            Nilpotency::Bose => f.write_str("inf"),
        }
    }
}

impl Serialize for Nilpotency {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Nilpotency::Finite(k) => s.serialize_u64(*k as u64),
            Nilpotency::Bose => s.serialize_str("inf"),
        }
    }
}

/// One sample of a thermodynamic curve.
///
/// `level` is set for occupation curves, whose abscissa is the level energy
/// rather than the temperature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermoPoint {
    pub beta: f64,
    pub value: f64,
    pub k: Nilpotency,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<f64>,
}

impl ThermoPoint {
    /// Temperature `1/β` (infinite at `β = 0`).
    pub fn temperature(&self) -> f64 {
        1.0 / self.beta
    }

    /// The curve's abscissa: the level energy for occupation curves,
    /// the temperature otherwise.
    pub fn abscissa(&self) -> f64 {
        self.level.unwrap_or_else(|| self.temperature())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    MeanEnergy,
    SpecificHeat,
    /// Mean occupation as a function of the level energy at fixed `β`, `μ`.
    Occupation,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveParams {
    pub ks: Vec<usize>,
    pub include_bose: bool,
    /// Level spacing for mean-energy and specific-heat curves.
    pub eps: f64,
    /// Chemical potential for occupation curves.
    pub mu: f64,
    /// Inverse temperature for occupation curves.
    pub beta: f64,
}

impl Default for CurveParams {
    fn default() -> Self {
        CurveParams {
            ks: vec![2, 3, 4, 5, 10],
            include_bose: true,
            eps: 1.0,
            mu: 1.0,
            beta: 10.0,
        }
    }
}

/// One sampled curve for a fixed nilpotency order.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub k: Nilpotency,
    pub points: Vec<ThermoPoint>,
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::Domain("empty grid".into()));
    }
    if grid.iter().any(|x| !x.is_finite()) {
        return Err(Error::Domain("grid values must be finite".into()));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("grid must be strictly increasing".into()));
    }
    Ok(())
}

/// Samples `kind` on `grid` for every requested `k`, plus the Bose limit.
///
/// The grid holds temperatures for [`CurveKind::MeanEnergy`] and
/// [`CurveKind::SpecificHeat`], and level energies for
/// [`CurveKind::Occupation`]. Bose occupation points with `ε ≤ μ` are
/// omitted since the Bose distribution diverges there.
pub fn emit_curve(kind: CurveKind, params: &CurveParams, grid: &[f64]) -> Result<Vec<Curve>> {
    check_grid(grid)?;
    match kind {
        CurveKind::MeanEnergy | CurveKind::SpecificHeat => {
            if grid[0] <= 0.0 {
                return Err(Error::Domain("temperatures must be positive".into()));
            }
        }
        CurveKind::Occupation => {
            if params.beta.is_nan() || params.beta <= 0.0 {
                return Err(Error::Domain("beta must be positive".into()));
            }
        }
    }
    let mut labels: Vec<Nilpotency> = params.ks.iter().map(|&k| Nilpotency::Finite(k)).collect();
    if params.include_bose {
        labels.push(Nilpotency::Bose);
    }
    labels
        .into_iter()
        .map(|label| {
            let ctx = match label {
                Nilpotency::Finite(k) => Some(QContext::single(k)?),
                Nilpotency::Bose => None,
            };
            let points = grid
                .iter()
                .filter_map(|&x| sample(kind, params, ctx.as_ref(), label, x))
                .collect();
            Ok(Curve { k: label, points })
        })
        .collect()
}

fn sample(
    kind: CurveKind,
    params: &CurveParams,
    ctx: Option<&QContext>,
    label: Nilpotency,
    x: f64,
) -> Option<ThermoPoint> {
    let (beta, level, value) = match kind {
        CurveKind::MeanEnergy => {
            let beta = 1.0 / x;
            let v = match ctx {
                Some(c) => mean_energy_single(c, params.eps, beta),
                None => bose_mean_energy(params.eps, beta),
            };
            (beta, None, v)
        }
        CurveKind::SpecificHeat => {
            let beta = 1.0 / x;
            let v = match ctx {
                Some(c) => specific_heat_single(c, params.eps, beta),
                None => bose_specific_heat(params.eps, beta),
            };
            (beta, None, v)
        }
        CurveKind::Occupation => {
            let v = match ctx {
                Some(c) => mean_occupation(c, x, params.mu, params.beta),
                None if x > params.mu => bose_occupation(params.beta * (x - params.mu)),
                None => return None,
            };
            (params.beta, Some(x), v)
        }
    };
    value.is_finite().then_some(ThermoPoint {
        beta,
        value,
        k: label,
        level,
    })
}

/// `n` evenly spaced points from `start` to `end` inclusive.
pub fn linspace(start: f64, end: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![start],
        _ => (0..n)
            .map(|i| start + (end - start) * i as f64 / (n - 1) as f64)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(k: usize) -> QContext {
        QContext::single(k).unwrap()
    }

    fn log_z(k: usize, eps: f64, beta: f64) -> f64 {
        // brute-force spectrum sum, independent of the closed form
        (0..k).map(|n| (-beta * eps * n as f64).exp()).sum::<f64>().ln()
    }

    #[test]
    fn partition_examples() {
        for k in 2..=10 {
            assert_eq!(partition_single(&ctx(k), 1.0, 0.0), k as f64);
        }
        for x in [0.1, 0.5, 2.0, 7.0] {
            assert!((partition_single(&ctx(2), 1.0, x) - (1.0 + (-x).exp())).abs() < 1e-14);
        }
        for k in [3, 5, 10] {
            for x in [1e-8, 1e-7, 3e-6, 0.3, 4.0] {
                let brute: f64 = (0..k).map(|n| (-x * n as f64).exp()).sum();
                assert!((partition_single(&ctx(k), 1.0, x) - brute).abs() < 1e-12 * brute);
            }
        }
    }

    #[test]
    fn mean_energy_limits() {
        assert!((mean_energy_single(&ctx(3), 1.0, 0.0) - 1.0).abs() < 1e-15);
        assert!((mean_energy_single(&ctx(3), 1.0, 1e-9) - 1.0).abs() < 1e-8);
        for k in [2, 3, 7] {
            assert!(mean_energy_single(&ctx(k), 1.0, 1e3).abs() < 1e-300);
        }
    }

    #[test]
    fn mean_energy_matches_log_derivative() {
        for k in [2, 3, 5, 10] {
            for beta in [0.05, 0.3, 1.0, 2.5, 8.0] {
                let eps = 1.3;
                let h = 1e-5 * beta;
                let fd = -(log_z(k, eps, beta + h) - log_z(k, eps, beta - h)) / (2.0 * h);
                let e = mean_energy_single(&ctx(k), eps, beta);
                assert!((e - fd).abs() <= 1e-6 * e.abs(), "k={k} beta={beta}");
            }
        }
    }

    #[test]
    fn specific_heat_limits_and_derivative() {
        for k in [2, 3, 5, 10] {
            let c = ctx(k);
            assert!(specific_heat_single(&c, 1.0, 500.0) < 1e-100);
            // high temperature: C → (k²-1)(βε)²/12 → 0, checked against -β² ∂E/∂β
            let beta = 1e-3;
            let h = 1e-3 * beta;
            let fd = -beta * beta
                * (mean_energy_single(&c, 1.0, beta + h) - mean_energy_single(&c, 1.0, beta - h))
                / (2.0 * h);
            let cv = specific_heat_single(&c, 1.0, beta);
            assert!((cv - fd).abs() <= 1e-5 * cv);
            assert!(cv < 1e-4);
        }
    }

    #[test]
    fn prime_partition() {
        assert_eq!(partition_single_prime(&ctx(4), 1.0, 0.0), 4.0);
        for x in [0.2, 1.0, 3.0] {
            let z = partition_single_prime(&ctx(3), 1.0, x);
            assert!((z - (1.0 + 2.0 * (-x).exp())).abs() < 1e-14);
            let z2 = partition_single_prime(&ctx(2), 1.0, x);
            assert!((z2 - partition_single(&ctx(2), 1.0, x)).abs() < 1e-14);
        }
    }

    #[test]
    fn spectrum_helpers_reproduce_closed_forms() {
        for k in [2, 4, 6] {
            let levels: Vec<f64> = (0..k).map(|n| n as f64 * 0.7).collect();
            for beta in [0.1, 1.0, 5.0] {
                let e = spectrum_mean_energy(&levels, beta);
                assert!((e - mean_energy_single(&ctx(k), 0.7, beta)).abs() < 1e-12);
                let cv = spectrum_specific_heat(&levels, beta);
                assert!((cv - specific_heat_single(&ctx(k), 0.7, beta)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn grand_partition_limits() {
        assert!((grand_partition(&ctx(3), &[0.5], 0.5, 2.0) - 3.0).abs() < 1e-15);
        let z = grand_partition(&ctx(4), &[0.1, 0.7, 1.9], -1e3, 1.0);
        assert!((z - 1.0).abs() < 1e-15);
    }

    #[test]
    fn occupation_examples() {
        assert!((mean_occupation(&ctx(4), 1.0, 1.0, 3.0) - 1.5).abs() < 1e-15);
        for i in 0..10 {
            let x = -4.5 + i as f64;
            let n = mean_occupation(&ctx(2), x, 0.0, 1.0);
            assert!((n - 1.0 / (x.exp() + 1.0)).abs() < 1e-12);
        }
        let x = 50.0;
        let n = mean_occupation(&ctx(5), x, 0.0, 1.0);
        assert!((n / (-x).exp() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn occupation_is_continuous_at_mu() {
        for k in [2, 3, 5, 10] {
            let half = (k as f64 - 1.0) / 2.0;
            for d in [1e-7, -1e-7] {
                assert!((mean_occupation(&ctx(k), 1.0 + d, 1.0, 1.0) - half).abs() < 1e-5);
            }
            // both branches agree with the other branch's formula at the switch
            let kf = k as f64;
            let series = |x: f64| (kf - 1.0) / 2.0 - x * (kf * kf - 1.0) / 12.0;
            let closed = |x: f64| 1.0 / x.exp_m1() - kf / (kf * x).exp_m1();
            for x in [0.99e-6, 1.01e-6] {
                assert!((occupation_factor(k, x) - series(x)).abs() < 1e-9);
                assert!((occupation_factor(k, x) - closed(x)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn curve_validation() {
        let p = CurveParams::default();
        assert!(emit_curve(CurveKind::MeanEnergy, &p, &[]).is_err());
        assert!(emit_curve(CurveKind::MeanEnergy, &p, &[1.0, 0.5]).is_err());
        assert!(emit_curve(CurveKind::SpecificHeat, &p, &[0.0, 1.0]).is_err());
        let curves = emit_curve(CurveKind::Occupation, &p, &linspace(0.0, 2.0, 21)).unwrap();
        assert_eq!(curves.len(), 6);
        let bose = curves.last().unwrap();
        assert_eq!(bose.k, Nilpotency::Bose);
        assert_eq!(bose.points.len(), 10);
    }

    #[test]
    fn thermo_point_json() {
        let p = ThermoPoint {
            beta: 2.0,
            value: 0.5,
            k: Nilpotency::Bose,
            level: None,
        };
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"beta":2.0,"value":0.5,"k":"inf"}"#);
    }
}
