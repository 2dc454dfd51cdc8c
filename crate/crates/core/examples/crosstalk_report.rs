//! # Crosstalk between two measurements
//!
//! On a Bell state the joint distribution is `(θ, ½−θ, ½−θ, θ)`. Its
//! mutual information `2 ln 2 − E(θ)` measures how much one outcome tells
//! about the other; divided by `ln 2` it becomes a degree of dependence in
//! `[0, 1]`. The outcomes are independent exactly when `θ = ¼`.
//!
//! The example scans the relative angle between two observables in the
//! x = 0 plane and prints the report at a few points.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use bellcrosstalk::information::DEFAULT_THETA_TOL;
use bellcrosstalk::{crosstalk_report, BellLabel, ObservablePair};

fn main() -> bellcrosstalk::Result<()> {
    let label = BellLabel::default();
    println!(
        "{:>8} {:>10} {:>10} {:>10}  independent",
        "ν", "θ", "I (nats)", "degree"
    );
    for step in 0..=8 {
        let nu = step as f64 * FRAC_PI_4 / 2.0;
        let pair = ObservablePair::from_angles(FRAC_PI_4, FRAC_PI_2, nu, FRAC_PI_2)?;
        let r = crosstalk_report(&pair, label, DEFAULT_THETA_TOL)?;
        println!(
            "{nu:>8.4} {:>10.6} {:>10.6} {:>10.6}  {}",
            r.theta, r.mutual_info, r.degree, r.independent
        );
    }

    let pair = ObservablePair::from_angles(FRAC_PI_4, 0.0, 0.0, 0.0)?;
    println!("\nHadamard against σ3 on {}:", BellLabel::from_bits(1, 1)?);
    println!(
        "{}",
        crosstalk_report(&pair, BellLabel::from_bits(1, 1)?, DEFAULT_THETA_TOL)?
    );
    Ok(())
}
