//! Runs the `qboson` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

fn qboson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qboson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn partition_function_at_beta_zero() {
    let o = qboson(&["thermo", "single", "--k", "3", "--eps", "1", "--beta", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(&headers, vec!["T", "beta", "value", "k"]);
    let row = rdr.records().next().unwrap().unwrap();
    assert_eq!(&row[2], "3");
}

#[test]
fn verify_trace_passes() {
    let o = qboson(&["verify", "trace", "--k", "3", "--m", "2", "--trials", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("PASS"), "{out}");
}

#[test]
fn verify_suites_pass_for_several_alphas() {
    for alpha in ["1", "2", "-1"] {
        let o = qboson(&["verify", "algebra", "--k", "4", "--m", "2", "--alpha", alpha, "--seed", "3"]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 12);
        let o = qboson(&["verify", "identity", "--k", "4", "--m", "2", "--alpha", alpha]);
        assert_eq!(o.status.code(), Some(0));
    }
}

#[test]
fn verify_output_is_seed_deterministic() {
    let run = |seed: &str| {
        stdout(&qboson(&["verify", "trace", "--k", "4", "--m", "2", "--trials", "20", "--seed", seed]))
    };
    assert_eq!(run("5"), run("5"));
}

#[test]
fn grand_occupation_at_chemical_potential() {
    let dir = tempfile::tempdir().unwrap();
    let levels = dir.path().join("levels.txt");
    std::fs::write(&levels, "1.25\n2.0\n\n0.5\n").unwrap();
    let o = qboson(&[
        "thermo", "grand", "--k", "4", "--levels", levels.to_str().unwrap(),
        "--mu", "1.25", "--beta", "10", "--occupation",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<_> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(&rows[0][0], "1.25");
    assert_eq!(&rows[0][2], "1.5");

    let o = qboson(&[
        "thermo", "grand", "--k", "3", "--levels", levels.to_str().unwrap(),
        "--mu", "-1", "--beta", "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "beta,mu,value,k\n0,-1,27,3\n");
}

#[test]
fn json_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cv.json");
    let o = qboson(&[
        "thermo", "single", "--k", "5", "--eps", "1", "--t-min", "0.1", "--t-max", "4",
        "--points", "40", "--observable", "cv", "--format", "json", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 40);
    assert!(arr.iter().all(|p| p["k"] == 5 && p["value"].as_f64().unwrap() >= 0.0));
}

#[test]
fn prime_spectrum_partition() {
    let o = qboson(&["thermo", "single", "--k", "3", "--eps", "1", "--beta", "1", "--prime"]);
    let text = stdout(&o);
    let value: f64 = text.lines().nth(1).unwrap().split(',').nth(2).unwrap().parse().unwrap();
    // spectrum 0, 1, 1 at k = 3
    assert!((value - (1.0 + 2.0 * (-1.0f64).exp())).abs() < 1e-11);
}

fn read_figure(dir: &Path, which: &str, file: &str) -> Vec<(f64, f64, String)> {
    let o = qboson(&["figures", "--which", which, "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_path(dir.join(file)).unwrap();
    rdr.records()
        .map(|r| {
            let r = r.unwrap();
            (r[0].parse().unwrap(), r[2].parse().unwrap(), r[3].to_string())
        })
        .collect()
}

#[test]
fn figures_have_expected_shapes() {
    let dir = tempfile::tempdir().unwrap();
    let energy = read_figure(dir.path(), "1", "fig1_mean_energy.csv");
    let labels: std::collections::BTreeSet<_> = energy.iter().map(|r| r.2.clone()).collect();
    for l in ["2", "3", "4", "5", "10", "inf"] {
        assert!(labels.contains(l), "{l}");
    }
    for (t, e, k) in &energy {
        if let Ok(k) = k.parse::<f64>() {
            assert!(*e < (k - 1.0) / 2.0 && *t > 0.0);
        }
    }
    let cv = read_figure(dir.path(), "2", "fig2_specific_heat.csv");
    assert!(cv.iter().all(|r| r.1 >= 0.0));
    let occ = read_figure(dir.path(), "3", "fig3_occupation.csv");
    for label in ["2", "10", "inf"] {
        let v: Vec<f64> = occ.iter().filter(|r| r.2 == label).map(|r| r.1).collect();
        assert!(v.windows(2).all(|w| w[1] < w[0]), "{label}");
    }
}

#[test]
fn usage_errors_exit_with_2() {
    let cases: [&[&str]; 6] = [
        &["verify", "trace", "--k", "3", "--m", "1", "--trials", "1", "--op", "a(1)^-1"],
        &["verify", "trace", "--k", "3", "--m", "1", "--trials", "0", "--op", "ad(2)"],
        &["thermo", "single", "--k", "3", "--eps", "1"],
        &["figures", "--which", "4", "--out", "x"],
        &["thermo", "grand", "--k", "3", "--levels", "/nonexistent/levels", "--mu", "0", "--beta", "1"],
        &["verify", "algebra", "--k", "9", "--m", "5", "--alpha", "1"],
    ];
    for args in cases {
        let o = qboson(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
