//! Two-qubit joint measurements of `A ⊗ I` and `I ⊗ B`.
//!
//! The joint distribution `p_{k,ℓ}` of outcomes `(λ_k, λ_ℓ)` is available
//! three ways, which tests hold against each other:
//!
//! - [`joint_distribution_bruteforce`]: Born rule on the explicit product
//!   eigenframe, valid for any unit state;
//! - [`joint_distribution_amplitude`]: the four-term Kronecker-delta
//!   amplitude for a Bell state, squared;
//! - [`joint_distribution_closed`]: closed forms in `μ ± ν` and `η ± ζ`
//!   for a Bell state.
//!
//! Cells are always ordered `(0,0), (0,1), (1,0), (1,1)`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use crate::error::{Error, Result};
use crate::observables::Observable;
use crate::qmath::{self, Mat2, Mat4, Vec4, Vector, C64, ZERO};
use crate::z2::Bit;

/// Slack allowed on each probability before it is clamped into `[0, 1]`.
pub const PROBABILITY_SLACK: f64 = 1e-12;

/// How far `‖ψ‖` may stray from 1 for the Born-rule route.
pub const NORMALIZATION_TOL: f64 = 1e-10;

/// Largest tolerated disagreement between the two closed-form variants.
pub const CLOSED_FORM_CONSISTENCY_TOL: f64 = 1e-10;

/// Label `(s, t)` of the Bell state `ψ_{s,t} = (|0t⟩ + (−1)^s |1(t+1)⟩)/√2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BellLabel {
    pub s: Bit,
    pub t: Bit,
}

impl BellLabel {
    pub const ALL: [BellLabel; 4] = [
        BellLabel {
            s: Bit::ZERO,
            t: Bit::ZERO,
        },
        BellLabel {
            s: Bit::ZERO,
            t: Bit::ONE,
        },
        BellLabel {
            s: Bit::ONE,
            t: Bit::ZERO,
        },
        BellLabel {
            s: Bit::ONE,
            t: Bit::ONE,
        },
    ];

    pub fn new(s: Bit, t: Bit) -> Self {
        Self { s, t }
    }

    pub fn from_bits(s: u8, t: u8) -> Result<Self> {
        Ok(Self {
            s: Bit::new(s)?,
            t: Bit::new(t)?,
        })
    }
}

impl fmt::Display for BellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ψ({},{})", self.s, self.t)
    }
}

pub fn bell_state(label: BellLabel) -> Vec4 {
    let mut c = [ZERO; 4];
    c[label.t.index()] = C64::new(FRAC_1_SQRT_2, 0.0);
    c[2 + (label.t + Bit::ONE).index()] = C64::new(label.s.sign() * FRAC_1_SQRT_2, 0.0);
    Vector::new(c)
}

/// `A ⊗ I`.
pub fn lift_first(a: &Mat2) -> Mat4 {
    qmath::tensor_mat(a, &Mat2::identity())
}

/// `I ⊗ B`.
pub fn lift_second(b: &Mat2) -> Mat4 {
    qmath::tensor_mat(&Mat2::identity(), b)
}

/// Observable `a = A(μ, η)` on the first qubit and `b = B(ν, ζ)` on the second.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservablePair {
    pub a: Observable,
    pub b: Observable,
}

impl ObservablePair {
    pub fn new(a: Observable, b: Observable) -> Self {
        Self { a, b }
    }

    /// `(μ, η, ν, ζ)` in radians.
    pub fn from_angles(mu: f64, eta: f64, nu: f64, zeta: f64) -> Result<Self> {
        Ok(Self {
            a: Observable::new(mu, eta)?,
            b: Observable::new(nu, zeta)?,
        })
    }

    pub fn swapped(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
        }
    }

    /// `(μ, η, ν, ζ)`.
    pub fn angles(&self) -> [f64; 4] {
        [self.a.mu(), self.a.eta(), self.b.mu(), self.b.eta()]
    }
}

/// Flat index of cell `(k, ℓ)`.
pub fn cell_index(k: Bit, l: Bit) -> usize {
    2 * k.index() + l.index()
}

/// All cells `(k, ℓ)` in storage order.
pub fn cells() -> [(Bit, Bit); 4] {
    [
        (Bit::ZERO, Bit::ZERO),
        (Bit::ZERO, Bit::ONE),
        (Bit::ONE, Bit::ZERO),
        (Bit::ONE, Bit::ONE),
    ]
}

/// Probabilities `p_{k,ℓ}` of the joint outcomes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointDistribution([f64; 4]);

impl JointDistribution {
    /// Validates and clamps four cell probabilities. Each must lie within
    /// [`PROBABILITY_SLACK`] of `[0, 1]` and together they must sum to 1
    /// within the same slack.
    pub fn new(p: [f64; 4]) -> Result<Self> {
        for (index, &value) in p.iter().enumerate() {
            if !value.is_finite()
                || !(-PROBABILITY_SLACK..=1.0 + PROBABILITY_SLACK).contains(&value)
            {
                return Err(Error::InvalidProbability { index, value });
            }
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > PROBABILITY_SLACK {
            return Err(Error::NotNormalizedDistribution(sum));
        }
        Ok(Self(p.map(|x| x.clamp(0.0, 1.0))))
    }

    /// For values produced by an exact derivation; only rounding is clamped.
    fn from_computed(p: [f64; 4]) -> Self {
        debug_assert!(
            (p.iter().sum::<f64>() - 1.0).abs() <= PROBABILITY_SLACK,
            "computed distribution does not sum to 1: {p:?}"
        );
        Self(p.map(|x| x.clamp(0.0, 1.0)))
    }

    /// The Bell-state form `(θ, ½−θ, ½−θ, θ)`.
    pub fn from_theta(theta: f64) -> Result<Self> {
        Self::new([theta, 0.5 - theta, 0.5 - theta, theta])
    }

    pub fn uniform() -> Self {
        Self([0.25; 4])
    }

    pub fn get(&self, k: Bit, l: Bit) -> f64 {
        self.0[cell_index(k, l)]
    }

    pub fn probabilities(&self) -> [f64; 4] {
        self.0
    }

    /// `θ = p_{0,0}`.
    pub fn theta(&self) -> f64 {
        self.0[0]
    }

    pub fn marginals(&self) -> Marginals {
        marginals(self)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `p_{0,0} = p_{1,1}` and `p_{0,1} = p_{1,0}`, i.e. invariance under
    /// `(k, ℓ) ↦ (k+1, ℓ+1)`.
    pub fn has_klein_symmetry(&self, tol: f64) -> bool {
        (self.0[0] - self.0[3]).abs() <= tol && (self.0[1] - self.0[2]).abs() <= tol
    }

    /// `Pr(A = λ_k) = Pr(B = λ_ℓ)` for every `k, ℓ`.
    pub fn has_equal_marginals(&self, tol: f64) -> bool {
        let m = self.marginals();
        let all = [m.first[0], m.first[1], m.second[0], m.second[1]];
        all.iter().all(|x| (x - all[0]).abs() <= tol)
    }
}

impl fmt::Display for JointDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p00, p01, p10, p11] = self.0;
        write!(f, "(p00={p00}, p01={p01}, p10={p10}, p11={p11})")
    }
}

/// Outcome probabilities of each observable on its own.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Marginals {
    /// `Pr(A = λ_k) = p_{k,0} + p_{k,1}`.
    pub first: [f64; 2],
    /// `Pr(B = λ_ℓ) = p_{0,ℓ} + p_{1,ℓ}`.
    pub second: [f64; 2],
}

pub fn marginals(dist: &JointDistribution) -> Marginals {
    let [p00, p01, p10, p11] = dist.0;
    Marginals {
        first: [p00 + p01, p10 + p11],
        second: [p00 + p10, p01 + p11],
    }
}

/// Orthonormal product eigenframe `|u^{(k)}_{μ,η} u^{(ℓ)}_{ν,ζ}⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutcomeFrame([Vec4; 4]);

impl OutcomeFrame {
    pub fn get(&self, k: Bit, l: Bit) -> &Vec4 {
        &self.0[cell_index(k, l)]
    }

    pub fn members(&self) -> &[Vec4; 4] {
        &self.0
    }

    /// Largest entry of `|G − I|` where `G` is the Gram matrix.
    pub fn gram_deviation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, u) in self.0.iter().enumerate() {
            for (j, v) in self.0.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((qmath::inner(u, v) - expected).norm());
            }
        }
        worst
    }
}

pub fn outcome_frame(pair: &ObservablePair) -> OutcomeFrame {
    OutcomeFrame(
        cells().map(|(k, l)| qmath::tensor_vec(&pair.a.eigenvector(k), &pair.b.eigenvector(l))),
    )
}

/// Born rule `p_{k,ℓ} = |⟨u^{(k)} u^{(ℓ)} | ψ⟩|²` for any unit state.
///
/// The result is divided by `‖ψ‖²` so it sums to 1 even when `ψ` is only
/// normalized to [`NORMALIZATION_TOL`].
pub fn joint_distribution_bruteforce(
    pair: &ObservablePair,
    psi: &Vec4,
) -> Result<JointDistribution> {
    if !psi.is_finite() {
        return Err(Error::NonFinite("state vector"));
    }
    let norm = psi.norm();
    if (norm - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::NotNormalized(norm));
    }
    let frame = outcome_frame(pair);
    let norm_sqr = norm * norm;
    Ok(JointDistribution::from_computed(
        frame.0.map(|u| qmath::inner(&u, psi).norm_sqr() / norm_sqr),
    ))
}

/// Bell-state probabilities from the four-term amplitude
///
/// ```text
/// p_{k,ℓ} = ½ | (−1)^{k+ℓ} e^{−i(η+ζ)} tr_k(μ/2) tr_ℓ(ν/2)       δ_{0,t}
///             + (−1)^k     e^{−iη}     tr_k(μ/2) tr_{ℓ+1}(ν/2)   δ_{1,t}
///             + (−1)^{s+ℓ} e^{−iζ}     tr_{k+1}(μ/2) tr_ℓ(ν/2)   δ_{0,t+1}
///             + (−1)^s                 tr_{k+1}(μ/2) tr_{ℓ+1}(ν/2) δ_{1,t+1} |²
/// ```
///
/// with `tr_0 = cos`, `tr_1 = sin`.
pub fn joint_distribution_amplitude(pair: &ObservablePair, label: BellLabel) -> JointDistribution {
    let [mu, eta, nu, zeta] = pair.angles();
    let (hm, hn) = (mu / 2.0, nu / 2.0);
    let BellLabel { s, t } = label;
    let one = Bit::ONE;
    let phase = |angle: f64| C64::from_polar(1.0, -angle);

    JointDistribution::from_computed(cells().map(|(k, l)| {
        let amplitude = phase(eta + zeta)
            * ((k + l).sign() * k.trig(hm) * l.trig(hn) * t.delta(Bit::ZERO))
            + phase(eta) * (k.sign() * k.trig(hm) * (l + one).trig(hn) * t.delta(Bit::ONE))
            + phase(zeta)
                * ((s + l).sign() * (k + one).trig(hm) * l.trig(hn) * (t + one).delta(Bit::ZERO))
            + C64::new(
                s.sign() * (k + one).trig(hm) * (l + one).trig(hn) * (t + one).delta(Bit::ONE),
                0.0,
            );
        0.5 * amplitude.norm_sqr()
    }))
}

/// `P(α, β) = cos α cos β sin α sin β`.
pub fn trig_product(alpha: f64, beta: f64) -> f64 {
    let (sa, ca) = alpha.sin_cos();
    let (sb, cb) = beta.sin_cos();
    ca * cb * sa * sb
}

/// Both closed-form variants for the diagonal `p_{0,0} = p_{1,1}` and the
/// off-diagonal `p_{0,1} = p_{1,0}` of a Bell-state distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForms {
    pub diagonal: f64,
    pub off_diagonal: f64,
    /// Same quantities written in `μ + (−1)^{s+1} ν`.
    pub alt_diagonal: f64,
    pub alt_off_diagonal: f64,
}

impl ClosedForms {
    pub fn disagreement(&self) -> f64 {
        (self.diagonal - self.alt_diagonal)
            .abs()
            .max((self.off_diagonal - self.alt_off_diagonal).abs())
    }
}

/// Evaluates, with `a± = (μ ± ν)/2` signed by `s`, `b = (η + (−1)^t ζ)/2`
/// and `P = P(μ/2, ν/2)`:
///
/// ```text
/// p00 = ½ tr_t²(a_s)     + 2(−1)^{s+t}   tr_t²(b) P  = ½ tr_t²(a_{s+1})     + 2(−1)^{s+t+1} tr_{t+1}²(b) P
/// p01 = ½ tr_{t+1}²(a_s) + 2(−1)^{s+t+1} tr_t²(b) P  = ½ tr_{t+1}²(a_{s+1}) + 2(−1)^{s+t}   tr_{t+1}²(b) P
/// ```
pub fn closed_form_variants(pair: &ObservablePair, label: BellLabel) -> ClosedForms {
    let [mu, eta, nu, zeta] = pair.angles();
    let BellLabel { s, t } = label;
    let t1 = t + Bit::ONE;
    let polar = (mu + s.sign() * nu) / 2.0;
    let polar_alt = (mu + (s + Bit::ONE).sign() * nu) / 2.0;
    let azimuth = (eta + t.sign() * zeta) / 2.0;
    let p = trig_product(mu / 2.0, nu / 2.0);
    let sq = |b: Bit, x: f64| b.trig(x).powi(2);
    let st = (s + t).sign();

    ClosedForms {
        diagonal: 0.5 * sq(t, polar) + 2.0 * st * sq(t, azimuth) * p,
        off_diagonal: 0.5 * sq(t1, polar) - 2.0 * st * sq(t, azimuth) * p,
        alt_diagonal: 0.5 * sq(t, polar_alt) - 2.0 * st * sq(t1, azimuth) * p,
        alt_off_diagonal: 0.5 * sq(t1, polar_alt) + 2.0 * st * sq(t1, azimuth) * p,
    }
}

/// Bell-state distribution from the closed forms. Both variants are
/// evaluated; a gap above [`CLOSED_FORM_CONSISTENCY_TOL`] is an error.
pub fn joint_distribution_closed(
    pair: &ObservablePair,
    label: BellLabel,
) -> Result<JointDistribution> {
    let forms = closed_form_variants(pair, label);
    let gap = forms.disagreement();
    if gap.is_nan() || gap > CLOSED_FORM_CONSISTENCY_TOL {
        return Err(Error::ClosedFormMismatch(gap));
    }
    let (d, o) = (forms.diagonal, forms.off_diagonal);
    Ok(JointDistribution::from_computed([d, o, o, d]))
}

/// Frobenius norm of `[A ⊗ I, I ⊗ B]`.
pub fn commutator_norm(pair: &ObservablePair) -> f64 {
    let a = lift_first(&pair.a.matrix());
    let b = lift_second(&pair.b.matrix());
    a.commutator(&b).frobenius_norm()
}
