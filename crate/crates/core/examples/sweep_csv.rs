//! # Two-parameter sweep to CSV
//!
//! Writes `θ`, entropy and mutual information on a grid of polar angles in
//! the x = 0 plane. The CSV goes to stdout, ready for plotting; rows with
//! `independent = 1` trace the line `μ + ν = π/2`.
//!
//! ```text
//! cargo run --example sweep_csv > grid.csv
//! ```

use std::f64::consts::{FRAC_PI_2, PI};
use std::io;

use bellcrosstalk::information::DEFAULT_THETA_TOL;
use bellcrosstalk::sweep::{run_sweep, write_csv, AngleName, GridAxis, SweepSpec};
use bellcrosstalk::BellLabel;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let axis = |name, steps| GridAxis {
        name,
        start: 0.0,
        stop: PI,
        steps,
    };
    let spec = SweepSpec {
        base: [0.0, FRAC_PI_2, 0.0, FRAC_PI_2],
        label: BellLabel::default(),
        axes: vec![axis(AngleName::Mu, 37), axis(AngleName::Nu, 37)],
        tol: DEFAULT_THETA_TOL,
    };
    let records = run_sweep(&spec)?;
    write_csv(&records, io::stdout().lock())?;
    let hits = records.iter().filter(|r| r.independent).count();
    eprintln!("{} rows, {hits} independent", records.len());
    Ok(())
}
