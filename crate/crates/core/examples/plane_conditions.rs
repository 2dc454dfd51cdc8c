//! # Exact independence conditions in the coordinate planes
//!
//! When both observables lie in the same coordinate plane, the condition
//! `θ = ¼` reduces to a statement about a sum or a difference of two
//! angles. This example prints the condition for every plane and Bell
//! label, solves it for a partner angle, and confirms each solution against
//! the probability formula.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

use bellcrosstalk::independence::{check_consistency, format_pi, PlaneCondition, Tolerances};
use bellcrosstalk::observables::CoordinatePlane;
use bellcrosstalk::{BellLabel, ObservablePair};

fn main() -> bellcrosstalk::Result<()> {
    let tol = Tolerances::default();
    for plane in CoordinatePlane::ALL {
        println!("plane {plane}");
        for label in BellLabel::ALL {
            let condition = PlaneCondition::for_label(plane, label);
            let anchor = FRAC_PI_3;
            let partners = condition.partners(anchor);
            let shown: Vec<String> = partners.iter().map(|&x| format_pi(x)).collect();
            println!(
                "  {label}: {condition}   anchor π/3 → {{{}}}",
                shown.join(", ")
            );

            for partner in partners {
                let pair = match plane {
                    CoordinatePlane::X => {
                        ObservablePair::from_angles(anchor, FRAC_PI_2, partner, FRAC_PI_2)?
                    }
                    CoordinatePlane::Y => ObservablePair::from_angles(anchor, 0.0, partner, 0.0)?,
                    CoordinatePlane::Z => {
                        ObservablePair::from_angles(FRAC_PI_2, anchor, FRAC_PI_2, partner)?
                    }
                };
                let check = check_consistency(plane, &pair, label, &tol)?;
                assert!(check.predicate && check.theta_independent);
            }
        }
    }
    println!("\nevery listed solution has θ = ¼");
    Ok(())
}
