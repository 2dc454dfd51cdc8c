//! Joint measurement statistics for pairs of qubit observables on Bell
//! states, the crosstalk between the two measurements, and the exact angle
//! conditions under which that crosstalk vanishes.
//!
//! Observables `A(μ, η)` and `B(ν, ζ)` are single-qubit operators with
//! spectrum {1, −1}, named by their Bloch-sphere angles. Lifted to the two
//! halves of a two-qubit system as `A ⊗ I` and `I ⊗ B` they commute, so the
//! probability `p_{k,ℓ}` of the outcome pair `(λ_k, λ_ℓ)` is well defined.
//!
//! ```
//! use bellcrosstalk::{crosstalk_report, BellLabel, ObservablePair};
//! use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
//!
//! // both directions in the x = 0 plane with μ + ν = π/2
//! let pair = ObservablePair::from_angles(FRAC_PI_4, FRAC_PI_2, FRAC_PI_4, FRAC_PI_2)?;
//! let report = crosstalk_report(&pair, BellLabel::default(), 1e-9)?;
//! assert!(report.independent);
//! # Ok::<(), bellcrosstalk::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod bipartite;
pub mod cli;
pub mod error;
pub mod independence;
pub mod information;
pub mod observables;
pub mod qmath;
pub mod sampler;
pub mod sweep;
pub mod verify;
pub mod z2;

pub use bipartite::{
    bell_state, commutator_norm, joint_distribution_amplitude, joint_distribution_bruteforce,
    joint_distribution_closed, marginals, outcome_frame, BellLabel, JointDistribution, Marginals,
    ObservablePair, OutcomeFrame,
};
pub use error::{Error, Result};
pub use independence::{
    check_consistency, condition_x_plane, condition_y_plane, condition_z_plane, solve_independence,
    IndependenceRoot, PlaneCondition,
};
pub use information::{
    crosstalk_report, degree_of_dependence, entropy_theta, is_informationally_independent,
    mutual_information, CrosstalkReport,
};
pub use observables::{
    eigenvalue, named_gate, BlochDirection, CoordinatePlane, NamedGate, Observable, PlaneClass,
};
pub use sampler::{empirical_report, sample, SampleCounts};
pub use z2::Bit;
