//! Randomized self-check of the three probability routes and the
//! structural properties of Bell-state distributions.

use std::f64::consts::{PI, TAU};
use std::fmt;

use crate::bipartite::{self, BellLabel, JointDistribution, ObservablePair};
use crate::error::{Error, Result};
use crate::sampler::UniformStream;
use crate::z2::Bit;

pub const DEFAULT_SAMPLES: usize = 10_000;
pub const DEFAULT_TOL: f64 = 1e-12;

/// Draws `(μ, η, ν, ζ, s, t)` uniformly: `μ, ν ∈ [0, π)`, `η, ζ ∈ [0, 2π)`.
pub fn random_case(stream: &mut UniformStream) -> (ObservablePair, BellLabel) {
    let mu = stream.next_in(0.0, PI);
    let eta = stream.next_in(0.0, TAU);
    let nu = stream.next_in(0.0, PI);
    let zeta = stream.next_in(0.0, TAU);
    let label = BellLabel::new(Bit::from(stream.next_bit()), Bit::from(stream.next_bit()));
    let pair =
        ObservablePair::from_angles(mu, eta, nu, zeta).expect("angles drawn inside the chart");
    (pair, label)
}

/// Worst value of one checked quantity over all draws.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub worst: f64,
    pub worst_case: Option<(ObservablePair, BellLabel)>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            worst: 0.0,
            worst_case: None,
        }
    }

    fn record(&mut self, value: f64, case: (ObservablePair, BellLabel)) {
        // NaN must register as a failure
        if value.is_nan() || value > self.worst {
            self.worst = if value.is_nan() { f64::INFINITY } else { value };
            self.worst_case = Some(case);
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.worst <= self.tol)
    }

    pub fn max_discrepancy(&self) -> f64 {
        self.checks.iter().map(|c| c.worst).fold(0.0, f64::max)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "samples {}  seed {}  tol {:e}",
            self.samples, self.seed, self.tol
        )?;
        for c in &self.checks {
            let status = if c.worst <= self.tol { "ok" } else { "FAIL" };
            writeln!(f, "  {:<28} worst {:<12.3e} {status}", c.name, c.worst)?;
            if c.worst > self.tol {
                if let Some((pair, label)) = c.worst_case {
                    let [mu, eta, nu, zeta] = pair.angles();
                    writeln!(
                        f,
                        "      worst case: mu={mu} eta={eta} nu={nu} zeta={zeta} s={} t={}",
                        label.s, label.t
                    )?;
                }
            }
        }
        write!(
            f,
            "max discrepancy {:.3e}: {}",
            self.max_discrepancy(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

fn sum_error(d: &JointDistribution) -> f64 {
    (d.probabilities().iter().sum::<f64>() - 1.0).abs()
}

fn klein_error(d: &JointDistribution) -> f64 {
    let [p00, p01, p10, p11] = d.probabilities();
    (p00 - p11).abs().max((p01 - p10).abs())
}

fn marginal_error(d: &JointDistribution) -> f64 {
    let m = d.marginals();
    [m.first[0], m.first[1], m.second[0], m.second[1]]
        .iter()
        .map(|x| (x - 0.5).abs())
        .fold(0.0, f64::max)
}

/// Draws `samples` random cases from `seed` and records the worst
/// discrepancy of each property.
pub fn verify(samples: usize, seed: u64, tol: f64) -> Result<VerifyReport> {
    if samples == 0 {
        return Err(Error::Usage("need at least one sample".into()));
    }
    if tol.is_nan() || tol < 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    let mut methods = CheckResult::new("three-method agreement");
    let mut variants = CheckResult::new("closed-form variants");
    let mut sums = CheckResult::new("sum to one");
    let mut klein = CheckResult::new("klein symmetry");
    let mut marginals = CheckResult::new("uniform marginals");
    let mut commutator = CheckResult::new("lifted commutator");
    let mut frame = CheckResult::new("frame orthonormality");

    let mut stream = UniformStream::new(seed);
    for _ in 0..samples {
        let case = random_case(&mut stream);
        let (pair, label) = case;
        let forms = bipartite::closed_form_variants(&pair, label);
        variants.record(forms.disagreement(), case);

        let brute = bipartite::joint_distribution_bruteforce(&pair, &bipartite::bell_state(label))?;
        let amplitude = bipartite::joint_distribution_amplitude(&pair, label);
        let closed = bipartite::joint_distribution_closed(&pair, label)?;
        let gap = brute
            .max_abs_diff(&amplitude)
            .max(brute.max_abs_diff(&closed))
            .max(amplitude.max_abs_diff(&closed));
        methods.record(gap, case);

        for d in [&brute, &amplitude, &closed] {
            sums.record(sum_error(d), case);
            klein.record(klein_error(d), case);
            marginals.record(marginal_error(d), case);
        }
        commutator.record(bipartite::commutator_norm(&pair), case);
        frame.record(bipartite::outcome_frame(&pair).gram_deviation(), case);
    }

    Ok(VerifyReport {
        samples,
        seed,
        tol,
        checks: vec![methods, variants, sums, klein, marginals, commutator, frame],
    })
}
