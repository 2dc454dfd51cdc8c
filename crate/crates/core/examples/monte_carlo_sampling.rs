//! # Sampling joint outcomes
//!
//! Draws outcome pairs from the exact distribution with a seeded
//! xoshiro256++ stream and compares the empirical crosstalk with the exact
//! one. The same seed always gives the same counts.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_4};

use bellcrosstalk::information::DEFAULT_THETA_TOL;
use bellcrosstalk::{
    crosstalk_report, empirical_report, joint_distribution_closed, sample, BellLabel,
    ObservablePair,
};

fn main() -> bellcrosstalk::Result<()> {
    let pair = ObservablePair::from_angles(FRAC_PI_4, 0.0, FRAC_PI_3, 0.0)?;
    let label = BellLabel::default();
    let exact = joint_distribution_closed(&pair, label)?;
    println!("exact {exact}");

    for n in [100, 10_000, 1_000_000] {
        let counts = sample(&exact, n, 2024)?;
        let report = empirical_report(&counts, DEFAULT_THETA_TOL)?;
        println!(
            "n={n:>8}  counts {:?}  θ̂={:.6}  Î={:.6}",
            counts.counts, report.theta, report.mutual_info
        );
    }
    let r = crosstalk_report(&pair, label, DEFAULT_THETA_TOL)?;
    println!("exact          θ={:.6}  I={:.6}", r.theta, r.mutual_info);
    Ok(())
}
