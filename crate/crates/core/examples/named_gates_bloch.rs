//! # Observables as points on the Bloch sphere
//!
//! `A(μ, η)` is the spin component along the unit vector with polar angle
//! `μ` and azimuth `η`. The Pauli matrices and the Hadamard gate are the
//! special directions below. The example also lists the eigenvectors and
//! which coordinate planes each direction lies in.

use std::f64::consts::FRAC_PI_3;

use bellcrosstalk::observables::{named_gate, NamedGate, Observable, DEFAULT_PLANE_TOL};
use bellcrosstalk::qmath::Mat2;
use bellcrosstalk::Bit;

fn show(m: &Mat2) -> String {
    let e = m.entries();
    let fmt = |z: bellcrosstalk::qmath::C64| format!("{:+.3}{:+.3}i", z.re, z.im);
    format!(
        "[[{}, {}], [{}, {}]]",
        fmt(e[0][0]),
        fmt(e[0][1]),
        fmt(e[1][0]),
        fmt(e[1][1])
    )
}

fn describe(name: &str, obs: &Observable) {
    let d = obs.direction();
    println!("{name}: μ={:.4} η={:.4}", obs.mu(), obs.eta());
    println!("  matrix    {}", show(&obs.matrix()));
    println!("  direction ({:+.3}, {:+.3}, {:+.3})", d.x, d.y, d.z);
    println!("  planes    {}", obs.classify_plane(DEFAULT_PLANE_TOL));
    for k in [Bit::ZERO, Bit::ONE] {
        let u = obs.eigenvector(k);
        let residual =
            (obs.matrix().apply(&u) - u.scale(bellcrosstalk::eigenvalue(k).into())).norm();
        println!(
            "  λ={:+} eigenvector residual {residual:.1e}",
            bellcrosstalk::eigenvalue(k)
        );
    }
}

fn main() -> bellcrosstalk::Result<()> {
    for gate in NamedGate::ALL {
        let obs = named_gate(gate);
        describe(&format!("{gate:?}"), &obs);
        println!(
            "  equals the gate to {:.1e}\n",
            obs.matrix().max_abs_diff(&gate.matrix())
        );
    }
    describe("generic", &Observable::new(1.0, FRAC_PI_3)?);
    Ok(())
}
