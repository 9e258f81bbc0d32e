//! Writes the mean energy, specific heat and occupation curves as CSV.
//!
//! `cargo run --example figures -- out_dir` (defaults to `figures/`).

use std::fs::File;
use std::path::PathBuf;

use qboson::cli::{figure_file, figure_levels, figure_temperatures};
use qboson::output::write_csv;
use qboson::thermo::{emit_curve, CurveKind, CurveParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;
    let params = CurveParams::default();
    let jobs = [
        (1, CurveKind::MeanEnergy, figure_temperatures()),
        (2, CurveKind::SpecificHeat, figure_temperatures()),
        (3, CurveKind::Occupation, figure_levels()),
    ];
    for (n, kind, grid) in jobs {
        let curves = emit_curve(kind, &params, &grid)?;
        for c in &curves {
            let peak = c.points.iter().map(|p| p.value).fold(f64::MIN, f64::max);
            println!("fig {n}, k = {:>3}: {} points, max {peak:.4}", c.k, c.points.len());
        }
        let points: Vec<_> = curves.into_iter().flat_map(|c| c.points).collect();
        let path = dir.join(figure_file(n));
        write_csv(File::create(&path)?, &points)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
