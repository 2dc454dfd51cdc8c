//! Crosstalk between the two binary measurement experiments.
//!
//! All quantities are in nats. On a Bell state the joint distribution has
//! the shape `(θ, ½−θ, ½−θ, θ)` with uniform marginals, so its entropy is
//!
//! ```text
//! E(θ) = −2θ ln θ − 2(½−θ) ln(½−θ)
//! ```
//!
//! and the mutual information is `2 ln 2 − E(θ)`. The experiments are
//! informationally independent exactly when `θ = ¼`.

use std::f64::consts::LN_2;
use std::fmt;

use crate::bipartite::{self, BellLabel, JointDistribution, ObservablePair};
use crate::error::{Error, Result};

/// Default tolerance on `|θ − ¼|` for the independence verdict.
pub const DEFAULT_THETA_TOL: f64 = 1e-9;

const THETA_SLACK: f64 = 1e-12;

/// `x ln x` with `0 ln 0 = 0`.
fn x_ln_x(x: f64) -> f64 {
    if x > 0.0 {
        x * x.ln()
    } else {
        0.0
    }
}

/// `E(θ)` for `θ ∈ [0, ½]`.
pub fn entropy_theta(theta: f64) -> Result<f64> {
    if !theta.is_finite() || !(-THETA_SLACK..=0.5 + THETA_SLACK).contains(&theta) {
        return Err(Error::ThetaOutOfDomain(theta));
    }
    let theta = theta.clamp(0.0, 0.5);
    Ok(-2.0 * x_ln_x(theta) - 2.0 * x_ln_x(0.5 - theta))
}

/// Shannon entropy of the four-outcome joint experiment.
pub fn joint_entropy(dist: &JointDistribution) -> f64 {
    -dist.probabilities().iter().map(|&p| x_ln_x(p)).sum::<f64>()
}

/// `I = Σ p_{k,ℓ} ln(p_{k,ℓ} / (Pr(A=λ_k) Pr(B=λ_ℓ)))`, skipping empty cells.
pub fn mutual_information(dist: &JointDistribution) -> f64 {
    let m = dist.marginals();
    bipartite::cells()
        .into_iter()
        .map(|(k, l)| {
            let p = dist.get(k, l);
            if p > 0.0 {
                p * (p / (m.first[k.index()] * m.second[l.index()])).ln()
            } else {
                0.0
            }
        })
        .sum()
}

/// Mutual information normalized by its maximum `ln 2`, clamped to `[0, 1]`.
pub fn degree_of_dependence(dist: &JointDistribution) -> f64 {
    (mutual_information(dist) / LN_2).clamp(0.0, 1.0)
}

/// `|p_{0,0} − ¼| ≤ tol`.
pub fn is_informationally_independent(dist: &JointDistribution, tol: f64) -> bool {
    (dist.theta() - 0.25).abs() <= tol
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrosstalkReport {
    /// `p_{0,0}`.
    pub theta: f64,
    /// Joint entropy in nats.
    pub entropy: f64,
    /// Mutual information in nats.
    pub mutual_info: f64,
    /// `mutual_info / ln 2`.
    pub degree: f64,
    pub independent: bool,
    pub tolerance: f64,
}

impl CrosstalkReport {
    pub fn from_distribution(dist: &JointDistribution, tol: f64) -> Result<Self> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::InvalidTolerance(tol));
        }
        Ok(Self {
            theta: dist.theta(),
            entropy: joint_entropy(dist),
            mutual_info: mutual_information(dist),
            degree: degree_of_dependence(dist),
            independent: is_informationally_independent(dist, tol),
            tolerance: tol,
        })
    }
}

impl fmt::Display for CrosstalkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theta        {}", self.theta)?;
        writeln!(f, "entropy      {} nats", self.entropy)?;
        writeln!(f, "mutual_info  {} nats", self.mutual_info)?;
        writeln!(f, "degree       {}", self.degree)?;
        write!(
            f,
            "independent  {} (|theta - 1/4| <= {:e})",
            self.independent, self.tolerance
        )
    }
}

/// Closed-form distribution for `pair` on `ψ_{s,t}` and its crosstalk.
pub fn crosstalk_report(
    pair: &ObservablePair,
    label: BellLabel,
    tol: f64,
) -> Result<CrosstalkReport> {
    let dist = bipartite::joint_distribution_closed(pair, label)?;
    CrosstalkReport::from_distribution(&dist, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::observables::{named_gate, NamedGate};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn dist(p: [f64; 4]) -> JointDistribution {
        JointDistribution::new(p).unwrap()
    }

    #[test]
    fn entropy_endpoints() {
        assert!((entropy_theta(0.25).unwrap() - 4f64.ln()).abs() <= 1e-14);
        assert!((entropy_theta(0.5).unwrap() - LN_2).abs() <= 1e-14);
        assert!((entropy_theta(0.0).unwrap() - LN_2).abs() <= 1e-14);
        assert!(matches!(
            entropy_theta(0.6),
            Err(Error::ThetaOutOfDomain(_))
        ));
        assert!(entropy_theta(-0.01).is_err());
        assert!(entropy_theta(f64::NAN).is_err());
        assert!(entropy_theta(0.5 + 1e-13).is_ok());
    }

    #[test]
    fn mutual_information_examples() {
        assert_eq!(mutual_information(&JointDistribution::uniform()), 0.0);
        assert!((mutual_information(&dist([0.5, 0.0, 0.0, 0.5])) - LN_2).abs() <= 1e-14);

        // θ = ½cos²(π/24); value from the direct Shannon sum in float64
        let theta = 0.5 * (PI / 24.0).cos().powi(2);
        let d = JointDistribution::from_theta(theta).unwrap();
        let i = mutual_information(&d);
        assert!((i - 0.6068748586049126).abs() <= 1e-12);
        assert!((i - (2.0 * LN_2 - entropy_theta(theta).unwrap())).abs() <= 1e-12);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree_of_dependence(&JointDistribution::uniform()), 0.0);
        assert!((degree_of_dependence(&dist([0.5, 0.0, 0.0, 0.5])) - 1.0).abs() <= 1e-14);
        assert!((degree_of_dependence(&dist([0.0, 0.5, 0.5, 0.0])) - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn independence_verdicts() {
        assert!(is_informationally_independent(
            &JointDistribution::uniform(),
            1e-9
        ));
        assert!(!is_informationally_independent(
            &dist([0.5, 0.0, 0.0, 0.5]),
            1e-9
        ));
        let pair = ObservablePair::from_angles(FRAC_PI_4, FRAC_PI_2, FRAC_PI_4, FRAC_PI_2).unwrap();
        let d = bipartite::joint_distribution_closed(&pair, BellLabel::default()).unwrap();
        assert!(is_informationally_independent(&d, 1e-9));
    }

    #[test]
    fn report_examples() {
        let pair = ObservablePair::from_angles(FRAC_PI_2, FRAC_PI_2, 0.0, FRAC_PI_2).unwrap();
        let r = crosstalk_report(&pair, BellLabel::default(), 1e-9).unwrap();
        assert!(r.independent);
        assert!(r.degree <= 1e-12);

        let zz = ObservablePair::new(named_gate(NamedGate::Sigma3), named_gate(NamedGate::Sigma3));
        let r = crosstalk_report(&zz, BellLabel::default(), 1e-9).unwrap();
        assert_eq!(r.theta, 0.5);
        assert!((r.degree - 1.0).abs() <= 1e-14);
        assert!(!r.independent);

        // H and σ3 on the singlet: θ = ½sin²(π/8), cross-checked by Born rule
        let hz = ObservablePair::new(
            named_gate(NamedGate::Hadamard),
            named_gate(NamedGate::Sigma3),
        );
        let singlet = BellLabel::from_bits(1, 1).unwrap();
        let r = crosstalk_report(&hz, singlet, 1e-9).unwrap();
        assert!((r.theta - 0.07322330470336312).abs() <= 1e-15);
        let brute =
            bipartite::joint_distribution_bruteforce(&hz, &bipartite::bell_state(singlet)).unwrap();
        assert!((brute.theta() - r.theta).abs() <= 1e-15);
        assert!(!r.independent);

        assert!(matches!(
            crosstalk_report(&hz, singlet, 0.0),
            Err(Error::InvalidTolerance(_))
        ));
    }

    #[test]
    fn entropy_is_concave_with_peak_at_quarter() {
        let n = 1000;
        let h = 0.5 / n as f64;
        let e: Vec<f64> = (1..n)
            .map(|i| entropy_theta(i as f64 * h).unwrap())
            .collect();
        for w in e.windows(3) {
            assert!(w[0] - 2.0 * w[1] + w[2] <= 0.0);
        }
        let step = 1e-7;
        let slope = (entropy_theta(0.25 + step).unwrap() - entropy_theta(0.25 - step).unwrap())
            / (2.0 * step);
        assert!(slope.abs() < 1e-6);
        let max = e.iter().cloned().fold(f64::MIN, f64::max);
        assert!(max <= 2.0 * LN_2 + 1e-15);
    }

    #[test]
    fn bell_shaped_information_matches_entropy_deficit() {
        for i in 0..=500 {
            let theta = i as f64 / 1000.0;
            let d = JointDistribution::from_theta(theta).unwrap();
            let expected = 2.0 * LN_2 - entropy_theta(theta).unwrap();
            assert!(
                (mutual_information(&d) - expected).abs() <= 1e-12,
                "θ={theta}"
            );
            assert!((joint_entropy(&d) - entropy_theta(theta).unwrap()).abs() <= 1e-12);
        }
    }

    #[test]
    fn degree_grows_with_distance_from_quarter() {
        let n = 1000;
        let mut previous = degree_of_dependence(&JointDistribution::from_theta(0.25).unwrap());
        assert_eq!(previous, 0.0);
        for i in 1..n {
            let delta = 0.25 * i as f64 / n as f64;
            let up = degree_of_dependence(&JointDistribution::from_theta(0.25 + delta).unwrap());
            let down = degree_of_dependence(&JointDistribution::from_theta(0.25 - delta).unwrap());
            assert!(up > previous && down > previous, "i={i}");
            assert!((up - down).abs() <= 1e-12);
            previous = up;
        }
    }
}
