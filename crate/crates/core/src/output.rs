//! CSV and JSON emission of thermodynamic samples.

use std::io::Write;

use crate::error::{Error, Result};
use crate::thermo::ThermoPoint;

/// Formats `x` like C's `%.12g`: 12 significant digits, trailing zeros
/// removed, exponent notation outside `[1e-4, 1e12)`.
pub fn format_sig(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Writes points as CSV.
///
/// Columns are `eps,beta,value,k` when the points carry a level energy and
/// `T,beta,value,k` otherwise.
pub fn write_csv<W: Write>(out: W, points: &[ThermoPoint]) -> Result<()> {
    let by_level = points.iter().any(|p| p.level.is_some());
    let mut w = csv::Writer::from_writer(out);
    let first = if by_level { "eps" } else { "T" };
    let csv_err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record([first, "beta", "value", "k"]).map_err(csv_err)?;
    for p in points {
        let x = if by_level {
            p.level.unwrap_or(f64::NAN)
        } else {
            p.temperature()
        };
        w.write_record([
            format_sig(x),
            format_sig(p.beta),
            format_sig(p.value),
            p.k.to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes points as a single JSON array.
///
/// Non-finite values such as `beta = inf` have no JSON representation and
/// are rejected.
pub fn write_json<W: Write>(mut out: W, points: &[ThermoPoint]) -> Result<()> {
    if let Some(p) = points
        .iter()
        .find(|p| !p.beta.is_finite() || !p.value.is_finite())
    {
        return Err(Error::Domain(format!(
            "cannot encode non-finite sample (beta {}, value {}) as JSON",
            p.beta, p.value
        )));
    }
    let rounded: Vec<ThermoPoint> = points
        .iter()
        .map(|p| ThermoPoint {
            beta: round_sig(p.beta),
            value: round_sig(p.value),
            level: p.level.map(round_sig),
            ..*p
        })
        .collect();
    serde_json::to_writer(&mut out, &rounded).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn round_sig(x: f64) -> f64 {
    format_sig(x).parse().unwrap_or(x)
}

pub fn write_points<W: Write>(out: W, points: &[ThermoPoint], format: Format) -> Result<()> {
    match format {
        Format::Csv => write_csv(out, points),
        Format::Json => write_json(out, points),
    }
}
