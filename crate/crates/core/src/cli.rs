//! The `qboson` command line.
//!
//! Exit codes: 0 on success, 1 when a verification property fails, 2 on
//! usage, parse or domain errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::expr::parse_op;
use crate::output::{format_sig, write_csv, write_points, Format};
use crate::qnum::QContext;
use crate::thermo::{
    emit_curve, grand_partition, linspace, mean_energy_single, mean_occupation,
    partition_single, partition_single_prime, prime_spectrum, specific_heat_single,
    spectrum_mean_energy, spectrum_specific_heat, CurveKind, CurveParams, Nilpotency,
    ThermoPoint,
};
use crate::verify::{algebra_suite, all_passed, identity_suite, trace_suite, Check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qboson", version, about = "q-boson coherent states and para-Grassmann calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check operator identities against the Fock-space matrices.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Thermodynamics of non-interacting q-bosons.
    #[command(subcommand)]
    Thermo(ThermoCmd),
    /// Write the CSV data behind the mean energy, specific heat and occupation plots.
    Figures(FiguresArgs),
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// Commutation relations, nilpotency and para-Grassmann algebra properties.
    Algebra {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Resolution of unity and orthonormality of coherent projections.
    Identity {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
        alpha: f64,
    },
    /// Berezin trace formula against the matrix trace.
    Trace {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
        alpha: f64,
        /// Operator expression, e.g. "ad(1)*a(1) + 0.5*N(2)^2".
        #[arg(long)]
        op: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Observable {
    Z,
    Energy,
    Cv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum ThermoCmd {
    /// One oscillator, H = eps N (or eps a†a with --prime).
    Single(SingleArgs),
    /// Independent levels with chemical potential.
    Grand {
        #[arg(long)]
        k: usize,
        /// File with one level energy per line.
        #[arg(long)]
        levels: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        mu: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        /// Print the mean occupation of each level instead of Z.
        #[arg(long)]
        occupation: bool,
    },
}

#[derive(Debug, Args)]
struct SingleArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, allow_negative_numbers = true)]
    eps: f64,
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["t_min", "t_max", "points"])]
    beta: Option<f64>,
    #[arg(long, requires_all = ["t_max", "points"])]
    t_min: Option<f64>,
    #[arg(long, requires_all = ["t_min", "points"])]
    t_max: Option<f64>,
    #[arg(long, requires_all = ["t_min", "t_max"])]
    points: Option<usize>,
    #[arg(long, value_enum, default_value_t = Observable::Z)]
    observable: Observable,
    /// Use the spectrum [n]_q eps of eps a†a.
    #[arg(long)]
    prime: bool,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FiguresArgs {
    /// 1: mean energy, 2: specific heat, 3: occupation numbers.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    which: u8,
    #[arg(long)]
    out: PathBuf,
}

/// Runs the CLI on `std::env::args_os()`-style arguments.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI, writing results to `out` and diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Verify(v) => verify(v, out),
        Command::Thermo(ThermoCmd::Single(a)) => thermo_single(a, out),
        Command::Thermo(ThermoCmd::Grand {
            k,
            levels,
            mu,
            beta,
            occupation,
        }) => thermo_grand(k, &levels, mu, beta, occupation, out),
        Command::Figures(a) => figures(a.which, &a.out, out),
    }
}

fn report(checks: &[Check], out: &mut dyn Write) -> Result<i32> {
    for c in checks {
        writeln!(out, "{c}")?;
    }
    Ok(if all_passed(checks) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn verify(cmd: VerifyCmd, out: &mut dyn Write) -> Result<i32> {
    let checks = match cmd {
        VerifyCmd::Algebra { k, m, alpha, seed } => {
            algebra_suite(&QContext::new(k, m)?.with_alpha(alpha)?, seed)?
        }
        VerifyCmd::Identity { k, m, alpha } => {
            identity_suite(&QContext::new(k, m)?.with_alpha(alpha)?)?
        }
        VerifyCmd::Trace {
            k,
            m,
            trials,
            seed,
            alpha,
            op,
        } => {
            let ctx = QContext::new(k, m)?.with_alpha(alpha)?;
            let expr = op.as_deref().map(parse_op).transpose()?;
            trace_suite(&ctx, trials, seed, expr.as_ref())?
        }
    };
    report(&checks, out)
}

fn open_out<'a>(path: Option<&Path>, out: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(out),
    })
}

fn thermo_single(a: SingleArgs, out: &mut dyn Write) -> Result<i32> {
    let ctx = QContext::single(a.k)?;
    if !a.eps.is_finite() {
        return Err(Error::Domain("eps must be finite".into()));
    }
    let betas: Vec<f64> = match (a.beta, a.t_min, a.t_max, a.points) {
        (Some(b), ..) => {
            if !(b >= 0.0 && b.is_finite()) {
                return Err(Error::Domain(format!("beta must be finite and >= 0, got {b}")));
            }
            vec![b]
        }
        (None, Some(lo), Some(hi), Some(n)) => {
            if !(lo > 0.0 && hi > lo && hi.is_finite()) || n == 0 {
                return Err(Error::Domain(
                    "need 0 < t-min < t-max and at least one point".into(),
                ));
            }
            linspace(lo, hi, n).into_iter().map(|t| 1.0 / t).collect()
        }
        _ => {
            return Err(Error::Domain(
                "give either --beta or all of --t-min, --t-max, --points".into(),
            ))
        }
    };
    let spectrum = prime_spectrum(&ctx, a.eps);
    let points: Vec<ThermoPoint> = betas
        .into_iter()
        .map(|beta| {
            let value = match (a.observable, a.prime) {
                (Observable::Z, false) => partition_single(&ctx, a.eps, beta),
                (Observable::Z, true) => partition_single_prime(&ctx, a.eps, beta),
                (Observable::Energy, false) => mean_energy_single(&ctx, a.eps, beta),
                (Observable::Energy, true) => spectrum_mean_energy(&spectrum, beta),
                (Observable::Cv, false) => specific_heat_single(&ctx, a.eps, beta),
                (Observable::Cv, true) => spectrum_specific_heat(&spectrum, beta),
            };
            ThermoPoint {
                beta,
                value,
                k: Nilpotency::Finite(a.k),
                level: None,
            }
        })
        .collect();
    let format = match a.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    let mut sink = open_out(a.out.as_deref(), out)?;
    write_points(&mut sink, &points, format)?;
    sink.flush()?;
    Ok(EXIT_OK)
}

/// Reads one real number per line; blank lines are skipped.
pub fn read_levels(path: &Path) -> Result<Vec<f64>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut levels = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let v: f64 = t.parse().map_err(|_| Error::Syntax {
            line: i + 1,
            column: 1,
            message: format!("expected a real number, found '{t}'"),
        })?;
        if !v.is_finite() {
            return Err(Error::Domain(format!("level on line {} is not finite", i + 1)));
        }
        levels.push(v);
    }
    if levels.is_empty() {
        return Err(Error::Domain(format!("{} contains no levels", path.display())));
    }
    Ok(levels)
}

fn thermo_grand(
    k: usize,
    path: &Path,
    mu: f64,
    beta: f64,
    occupation: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let levels = read_levels(path)?;
    let ctx = QContext::new(k, levels.len())?;
    if !(beta.is_finite() && beta >= 0.0) || !mu.is_finite() {
        return Err(Error::Domain("beta must be finite and >= 0, mu finite".into()));
    }
    if occupation {
        let points: Vec<ThermoPoint> = levels
            .iter()
            .map(|&e| ThermoPoint {
                beta,
                value: mean_occupation(&ctx, e, mu, beta),
                k: Nilpotency::Finite(k),
                level: Some(e),
            })
            .collect();
        write_csv(out, &points)?;
    } else {
        writeln!(out, "beta,mu,value,k")?;
        writeln!(
            out,
            "{},{},{},{k}",
            format_sig(beta),
            format_sig(mu),
            format_sig(grand_partition(&ctx, &levels, mu, beta))
        )?;
    }
    Ok(EXIT_OK)
}

/// Temperature grid of the mean-energy and specific-heat figures.
pub fn figure_temperatures() -> Vec<f64> {
    linspace(0.05, 10.0, 200)
}

/// Level-energy grid of the occupation figure (`μ = 1`, `T = 0.1`).
pub fn figure_levels() -> Vec<f64> {
    linspace(0.0, 3.0, 301)
}

/// File name used by `figures --which n`.
pub fn figure_file(which: u8) -> &'static str {
    match which {
        1 => "fig1_mean_energy.csv",
        2 => "fig2_specific_heat.csv",
        _ => "fig3_occupation.csv",
    }
}

fn figures(which: u8, dir: &Path, out: &mut dyn Write) -> Result<i32> {
    let params = CurveParams::default();
    let (kind, grid) = match which {
        1 => (CurveKind::MeanEnergy, figure_temperatures()),
        2 => (CurveKind::SpecificHeat, figure_temperatures()),
        _ => (CurveKind::Occupation, figure_levels()),
    };
    let points: Vec<ThermoPoint> = emit_curve(kind, &params, &grid)?
        .into_iter()
        .flat_map(|c| c.points)
        .collect();
    std::fs::create_dir_all(dir)?;
    let path = dir.join(figure_file(which));
    let mut file = BufWriter::new(File::create(&path)?);
    write_csv(&mut file, &points)?;
    file.flush()?;
    writeln!(out, "{}", path.display())?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("qboson").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn partition_at_infinite_temperature() {
        let (code, out, _) = run_capture(&["thermo", "single", "--k", "3", "--eps", "1", "--beta", "0"]);
        assert_eq!(code, 0);
        assert_eq!(out, "T,beta,value,k\ninf,0,3,3\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_capture(&["thermo", "single", "--k", "3"]).0, 2);
        assert_eq!(run_capture(&["bogus"]).0, 2);
        let (code, _, err) = run_capture(&["verify", "trace", "--k", "3", "--m", "1", "--trials", "0", "--op", "a(1)^-1"]);
        assert_eq!(code, 2);
        assert!(err.contains("column 6"), "{err}");
        assert_eq!(run_capture(&["verify", "algebra", "--k", "1", "--m", "1", "--alpha", "1"]).0, 2);
        assert_eq!(
            run_capture(&["thermo", "single", "--k", "3", "--eps", "1", "--beta", "1", "--t-min", "1"]).0,
            2
        );
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }

    #[test]
    fn negative_parameters_parse() {
        let (code, out, _) = run_capture(&["verify", "algebra", "--k", "2", "--m", "1", "--alpha", "-1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.lines().all(|l| l.starts_with("PASS")));
    }
}
