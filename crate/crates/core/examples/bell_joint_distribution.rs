//! # Joint outcome probabilities on the four Bell states
//!
//! Two observables `A(μ, η)` and `B(ν, ζ)` measure the two halves of a Bell
//! state `ψ(s, t)`. The four outcome probabilities can be obtained three
//! ways: projecting the state onto the product eigenbasis (Born rule), from
//! a four-term amplitude formula, and from closed forms in the half-sums
//! `(μ ± ν)/2` and `(η ± ζ)/2`. This example prints all three for every
//! label and shows that they agree and that the marginals are always ½.
//!
//! ```text
//! cargo run --example bell_joint_distribution
//! ```

use std::f64::consts::PI;

use bellcrosstalk::bipartite::{self, BellLabel, ObservablePair};

fn main() -> bellcrosstalk::Result<()> {
    let pair = ObservablePair::from_angles(PI / 3.0, PI / 4.0, PI / 5.0, PI / 6.0)?;
    let [mu, eta, nu, zeta] = pair.angles();
    println!("A(μ={mu:.4}, η={eta:.4})  B(ν={nu:.4}, ζ={zeta:.4})\n");

    for label in BellLabel::ALL {
        let brute = bipartite::joint_distribution_bruteforce(&pair, &bipartite::bell_state(label))?;
        let amplitude = bipartite::joint_distribution_amplitude(&pair, label);
        let closed = bipartite::joint_distribution_closed(&pair, label)?;

        println!("{label}");
        for (name, d) in [
            ("born rule", brute),
            ("amplitude", amplitude),
            ("closed", closed),
        ] {
            let [p00, p01, p10, p11] = d.probabilities();
            println!("  {name:<10} {p00:.12} {p01:.12} {p10:.12} {p11:.12}");
        }
        let m = closed.marginals();
        println!(
            "  marginals  A=({:.3}, {:.3}) B=({:.3}, {:.3})  routes differ by {:.1e}\n",
            m.first[0],
            m.first[1],
            m.second[0],
            m.second[1],
            brute
                .max_abs_diff(&amplitude)
                .max(brute.max_abs_diff(&closed))
        );
    }
    Ok(())
}
