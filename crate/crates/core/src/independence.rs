//! When are the two measurements informationally independent?
//!
//! For a generic pair this is the equation `θ(μ, η, ν, ζ) = ¼`, solved here
//! numerically along one-parameter paths. When both Bloch directions lie in
//! the same coordinate plane the equation collapses to a condition on a sum
//! or an absolute difference of two angles:
//!
//! | plane | chart           | Bell label   | condition                       |
//! |-------|-----------------|--------------|---------------------------------|
//! | x = 0 | η = ζ = π/2     | s = 0        | μ + ν ∈ {π/2, 3π/2}             |
//! |       |                 | s = 1        | \|μ − ν\| = π/2                 |
//! | y = 0 | η = ζ = 0       | t = s + 1    | μ + ν ∈ {π/2, 3π/2}             |
//! |       |                 | t = s        | \|μ − ν\| = π/2                 |
//! | z = 0 | μ = ν = π/2     | t = 0        | η + ζ ∈ {π/2, 3π/2, 5π/2, 7π/2} |
//! |       |                 | t = 1        | \|η − ζ\| ∈ {π/2, 3π/2}         |

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;

use crate::bipartite::{self, BellLabel, ObservablePair};
use crate::error::{Error, Result};
use crate::information::{self, DEFAULT_THETA_TOL};
use crate::observables::{CoordinatePlane, Observable, DEFAULT_PLANE_TOL};
use crate::z2::Bit;

/// Default tolerance, in radians, for membership in a target set.
pub const DEFAULT_ANGLE_TOL: f64 = 1e-9;

/// Every root reported by [`solve_independence`] has `|θ − ¼|` below this.
pub const ROOT_THETA_TOL: f64 = 1e-10;

const DOMAIN_SLACK: f64 = 1e-12;
const MAX_BISECTIONS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditionKind {
    Sum,
    AbsDiff,
}

/// Closed-form independence condition for one plane and Bell label.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneCondition {
    pub plane: CoordinatePlane,
    pub label: BellLabel,
    pub kind: ConditionKind,
    /// Values the sum or absolute difference must hit, in radians.
    pub targets: Vec<f64>,
}

impl PlaneCondition {
    pub fn for_label(plane: CoordinatePlane, label: BellLabel) -> Self {
        use ConditionKind::*;
        let h = FRAC_PI_2;
        let (kind, targets) = match plane {
            CoordinatePlane::X if label.s == Bit::ZERO => (Sum, vec![h, 3.0 * h]),
            CoordinatePlane::X => (AbsDiff, vec![h]),
            CoordinatePlane::Y if label.t == label.s + Bit::ONE => (Sum, vec![h, 3.0 * h]),
            CoordinatePlane::Y => (AbsDiff, vec![h]),
            CoordinatePlane::Z if label.t == Bit::ZERO => (Sum, vec![h, 3.0 * h, 5.0 * h, 7.0 * h]),
            CoordinatePlane::Z => (AbsDiff, vec![h, 3.0 * h]),
        };
        Self {
            plane,
            label,
            kind,
            targets,
        }
    }

    /// Names of the two angles the condition constrains.
    pub fn angle_names(&self) -> (&'static str, &'static str) {
        match self.plane {
            CoordinatePlane::X | CoordinatePlane::Y => ("μ", "ν"),
            CoordinatePlane::Z => ("η", "ζ"),
        }
    }

    /// The two constrained angles of `pair`: polar for x/y, azimuthal for z.
    pub fn angles_of(&self, pair: &ObservablePair) -> (f64, f64) {
        match self.plane {
            CoordinatePlane::X | CoordinatePlane::Y => (pair.a.mu(), pair.b.mu()),
            CoordinatePlane::Z => (pair.a.eta(), pair.b.eta()),
        }
    }

    pub fn expression(&self, first: f64, second: f64) -> f64 {
        match self.kind {
            ConditionKind::Sum => first + second,
            ConditionKind::AbsDiff => (first - second).abs(),
        }
    }

    pub fn holds(&self, first: f64, second: f64, angle_tol: f64) -> bool {
        let value = self.expression(first, second);
        self.targets.iter().any(|t| (value - t).abs() <= angle_tol)
    }

    /// Distance from the condition's expression to the nearest target.
    pub fn residual(&self, first: f64, second: f64) -> f64 {
        let value = self.expression(first, second);
        self.targets
            .iter()
            .map(|t| (value - t).abs())
            .fold(f64::INFINITY, f64::min)
    }

    /// Every partner angle in its domain that satisfies the condition with
    /// `anchor` as the first angle. Sorted ascending.
    pub fn partners(&self, anchor: f64) -> Vec<f64> {
        let (lo, hi_inclusive, hi) = match self.plane {
            CoordinatePlane::X | CoordinatePlane::Y => (0.0, true, PI),
            CoordinatePlane::Z => (0.0, false, TAU),
        };
        let mut out: Vec<f64> = self
            .targets
            .iter()
            .flat_map(|&t| match self.kind {
                ConditionKind::Sum => vec![t - anchor],
                ConditionKind::AbsDiff => vec![anchor - t, anchor + t],
            })
            .filter(|&x| {
                x >= lo - DOMAIN_SLACK
                    && if hi_inclusive {
                        x <= hi + DOMAIN_SLACK
                    } else {
                        x < hi - DOMAIN_SLACK
                    }
            })
            .map(|x| x.clamp(lo, hi))
            .collect();
        out.sort_by(f64::total_cmp);
        out.dedup_by(|a, b| (*a - *b).abs() <= DOMAIN_SLACK);
        out
    }
}

impl fmt::Display for PlaneCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.angle_names();
        let lhs = match self.kind {
            ConditionKind::Sum => format!("{a}+{b}"),
            ConditionKind::AbsDiff => format!("|{a}−{b}|"),
        };
        let targets: Vec<String> = self.targets.iter().map(|&t| format_pi(t)).collect();
        write!(f, "{lhs} ∈ {{{}}}", targets.join(", "))
    }
}

/// Renders multiples of π/12 symbolically (`0`, `π/2`, `3π/2`, ...) and
/// anything else as a plain decimal.
pub fn format_pi(x: f64) -> String {
    let twelfths = x / PI * 12.0;
    let n = twelfths.round();
    if (twelfths - n).abs() > 1e-9 {
        return format!("{x}");
    }
    let n = n as i64;
    if n == 0 {
        return "0".to_string();
    }
    let g = gcd(n.unsigned_abs(), 12) as i64;
    let (num, den) = (n / g, 12 / g);
    let sign = if num < 0 { "−" } else { "" };
    let coeff = match num.abs() {
        1 => String::new(),
        k => k.to_string(),
    };
    if den == 1 {
        format!("{sign}{coeff}π")
    } else {
        format!("{sign}{coeff}π/{den}")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_polar(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite("polar angle"));
    }
    if !(-DOMAIN_SLACK..=PI + DOMAIN_SLACK).contains(&x) {
        return Err(Error::PolarOutOfDomain(x));
    }
    Ok(x.clamp(0.0, PI))
}

fn check_azimuth(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite("azimuthal angle"));
    }
    if !(0.0..TAU).contains(&x) {
        return Err(Error::AzimuthOutOfDomain(x));
    }
    Ok(x)
}

/// Independence of `A(μ, π/2)` and `B(ν, π/2)` on `ψ_{s,t}` (any `t`).
pub fn condition_x_plane(mu: f64, nu: f64, s: Bit) -> Result<bool> {
    let (mu, nu) = (check_polar(mu)?, check_polar(nu)?);
    let label = BellLabel::new(s, Bit::ZERO);
    Ok(PlaneCondition::for_label(CoordinatePlane::X, label).holds(mu, nu, DEFAULT_ANGLE_TOL))
}

/// Independence of `A(μ, 0)` and `B(ν, 0)` on `ψ_{s,t}`.
pub fn condition_y_plane(mu: f64, nu: f64, s: Bit, t: Bit) -> Result<bool> {
    let (mu, nu) = (check_polar(mu)?, check_polar(nu)?);
    let label = BellLabel::new(s, t);
    Ok(PlaneCondition::for_label(CoordinatePlane::Y, label).holds(mu, nu, DEFAULT_ANGLE_TOL))
}

/// Independence of `A(π/2, η)` and `B(π/2, ζ)` on `ψ_{s,t}` (any `s`).
pub fn condition_z_plane(eta: f64, zeta: f64, t: Bit) -> Result<bool> {
    let (eta, zeta) = (check_azimuth(eta)?, check_azimuth(zeta)?);
    let label = BellLabel::new(Bit::ZERO, t);
    Ok(PlaneCondition::for_label(CoordinatePlane::Z, label).holds(eta, zeta, DEFAULT_ANGLE_TOL))
}

/// Tolerances used when comparing plane predicates with the θ criterion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Radians, for target-set membership.
    pub angle: f64,
    /// On `|θ − ¼|`.
    pub theta: f64,
    /// On a vanishing Bloch coordinate or chart angle.
    pub plane: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            angle: DEFAULT_ANGLE_TOL,
            theta: DEFAULT_THETA_TOL,
            plane: DEFAULT_PLANE_TOL,
        }
    }
}

fn is_pole(obs: &Observable, tol: f64) -> bool {
    obs.mu() <= tol || obs.mu() >= PI - tol
}

fn azimuth_near(obs: &Observable, target: f64, tol: f64) -> bool {
    let d = (obs.eta() - target).rem_euclid(TAU);
    d <= tol || TAU - d <= tol
}

/// Whether `obs` sits on the chart the plane's closed form assumes: the
/// x = 0 half-circle at `η = π/2`, the y = 0 half-circle at `η = 0`, or the
/// equator. At the poles the azimuth does not matter.
pub fn in_plane_chart(plane: CoordinatePlane, obs: &Observable, tol: f64) -> bool {
    match plane {
        CoordinatePlane::X => is_pole(obs, tol) || azimuth_near(obs, FRAC_PI_2, tol),
        CoordinatePlane::Y => is_pole(obs, tol) || azimuth_near(obs, 0.0, tol),
        CoordinatePlane::Z => obs.classify_plane(tol).z_zero,
    }
}

/// Evaluates the closed-form plane predicate for `pair`, which must lie on
/// the plane's chart.
pub fn plane_predicate(
    plane: CoordinatePlane,
    pair: &ObservablePair,
    label: BellLabel,
    tol: &Tolerances,
) -> Result<bool> {
    for obs in [&pair.a, &pair.b] {
        if !obs.classify_plane(tol.plane).contains(plane) || !in_plane_chart(plane, obs, tol.plane)
        {
            return Err(Error::PlaneMismatch(plane.name()));
        }
    }
    let condition = PlaneCondition::for_label(plane, label);
    let (first, second) = condition.angles_of(pair);
    Ok(condition.holds(first, second, tol.angle))
}

/// Outcome of comparing the plane predicate with the θ = ¼ criterion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConsistencyCheck {
    pub predicate: bool,
    pub theta: f64,
    pub theta_independent: bool,
}

impl ConsistencyCheck {
    pub fn agrees(&self) -> bool {
        self.predicate == self.theta_independent
    }
}

/// Runs the plane predicate and the closed-form θ criterion side by side.
pub fn check_consistency(
    plane: CoordinatePlane,
    pair: &ObservablePair,
    label: BellLabel,
    tol: &Tolerances,
) -> Result<ConsistencyCheck> {
    let predicate = plane_predicate(plane, pair, label, tol)?;
    let dist = bipartite::joint_distribution_closed(pair, label)?;
    Ok(ConsistencyCheck {
        predicate,
        theta: dist.theta(),
        theta_independent: information::is_informationally_independent(&dist, tol.theta),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndependenceRoot {
    /// Path parameter at the root.
    pub sweep_parameter: f64,
    pub theta_at_root: f64,
    /// Width of the final bracket; 0 when a grid point hit ¼ directly.
    pub bracket_width: f64,
}

/// Locates the parameters in `[start, end]` where the path's closed-form θ
/// equals ¼.
///
/// The range is sampled at `grid` evenly spaced points, both ends included.
/// Every sign change of `θ − ¼` between neighbours is bisected until
/// `|θ − ¼| ≤` [`ROOT_THETA_TOL`]. A zero where `θ − ¼` touches without
/// changing sign is found only if a grid point lands on it.
pub fn solve_independence<F>(
    path: F,
    (start, end): (f64, f64),
    label: BellLabel,
    grid: usize,
) -> Result<Vec<IndependenceRoot>>
where
    F: Fn(f64) -> Result<ObservablePair>,
{
    if grid < 2 {
        return Err(Error::Usage(format!(
            "grid must have at least 2 points, got {grid}"
        )));
    }
    if !(start.is_finite() && end.is_finite() && start < end) {
        return Err(Error::Usage(format!(
            "invalid parameter range [{start}, {end}]"
        )));
    }
    let theta = |x: f64| -> Result<f64> {
        Ok(bipartite::joint_distribution_closed(&path(x)?, label)?.theta())
    };
    let xs: Vec<f64> = (0..grid)
        .map(|i| start + (end - start) * i as f64 / (grid - 1) as f64)
        .collect();
    let gaps = xs
        .iter()
        .map(|&x| theta(x).map(|th| th - 0.25))
        .collect::<Result<Vec<f64>>>()?;

    let mut roots = Vec::new();
    for i in 0..grid {
        if gaps[i].abs() <= ROOT_THETA_TOL {
            roots.push(IndependenceRoot {
                sweep_parameter: xs[i],
                theta_at_root: gaps[i] + 0.25,
                bracket_width: 0.0,
            });
            continue;
        }
        if i + 1 < grid
            && gaps[i + 1].abs() > ROOT_THETA_TOL
            && gaps[i].signum() != gaps[i + 1].signum()
        {
            if let Some(root) = bisect(&theta, xs[i], xs[i + 1], gaps[i])? {
                roots.push(root);
            }
        }
    }
    Ok(roots)
}

fn bisect<F>(theta: &F, mut lo: f64, mut hi: f64, gap_lo: f64) -> Result<Option<IndependenceRoot>>
where
    F: Fn(f64) -> Result<f64>,
{
    let lo_sign = gap_lo.signum();
    let mut mid = 0.5 * (lo + hi);
    let mut gap = theta(mid)? - 0.25;
    for _ in 0..MAX_BISECTIONS {
        if gap == 0.0 || hi - lo <= 4.0 * f64::EPSILON * mid.abs().max(1.0) {
            break;
        }
        if gap.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
        mid = 0.5 * (lo + hi);
        gap = theta(mid)? - 0.25;
    }
    // a jump rather than a crossing never gets close to ¼
    if gap.abs() > ROOT_THETA_TOL {
        return Ok(None);
    }
    Ok(Some(IndependenceRoot {
        sweep_parameter: mid,
        theta_at_root: gap + 0.25,
        bracket_width: hi - lo,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::observables::{named_gate, NamedGate};
    use std::f64::consts::FRAC_PI_4;

    fn bit(b: u8) -> Bit {
        Bit::new(b).unwrap()
    }

    #[test]
    fn x_plane_examples() {
        assert!(condition_x_plane(FRAC_PI_4, FRAC_PI_4, bit(0)).unwrap());
        assert!(condition_x_plane(PI, FRAC_PI_2, bit(0)).unwrap());
        assert!(!condition_x_plane(FRAC_PI_2, FRAC_PI_2, bit(1)).unwrap());
        assert!(condition_x_plane(FRAC_PI_2, 0.0, bit(1)).unwrap());
        assert!(condition_x_plane(-0.5, 0.0, bit(0)).is_err());
        assert!(condition_x_plane(0.0, 4.0, bit(0)).is_err());
    }

    #[test]
    fn y_plane_examples() {
        assert!(condition_y_plane(FRAC_PI_4, FRAC_PI_4, bit(0), bit(1)).unwrap());
        assert!(condition_y_plane(FRAC_PI_2, 0.0, bit(1), bit(1)).unwrap());
        assert!(!condition_y_plane(FRAC_PI_4, FRAC_PI_4, bit(0), bit(0)).unwrap());
    }

    #[test]
    fn z_plane_examples() {
        assert!(condition_z_plane(0.0, FRAC_PI_2, bit(0)).unwrap());
        assert!(condition_z_plane(3.0 * FRAC_PI_2, 0.0, bit(1)).unwrap());
        assert!(!condition_z_plane(PI, PI, bit(0)).unwrap());
        assert!(matches!(
            condition_z_plane(TAU, 0.0, bit(0)),
            Err(Error::AzimuthOutOfDomain(_))
        ));
        assert!(condition_z_plane(-0.1, 0.0, bit(0)).is_err());
    }

    #[test]
    fn condition_text() {
        let label = |s, t| BellLabel::from_bits(s, t).unwrap();
        assert_eq!(
            PlaneCondition::for_label(CoordinatePlane::X, label(0, 0)).to_string(),
            "μ+ν ∈ {π/2, 3π/2}"
        );
        assert_eq!(
            PlaneCondition::for_label(CoordinatePlane::Z, label(0, 1)).to_string(),
            "|η−ζ| ∈ {π/2, 3π/2}"
        );
        assert_eq!(
            PlaneCondition::for_label(CoordinatePlane::Z, label(1, 0)).to_string(),
            "η+ζ ∈ {π/2, 3π/2, 5π/2, 7π/2}"
        );
        assert_eq!(
            PlaneCondition::for_label(CoordinatePlane::Y, label(1, 1)).to_string(),
            "|μ−ν| ∈ {π/2}"
        );
    }

    #[test]
    fn pi_formatting() {
        assert_eq!(format_pi(0.0), "0");
        assert_eq!(format_pi(PI), "π");
        assert_eq!(format_pi(FRAC_PI_2), "π/2");
        assert_eq!(format_pi(3.0 * FRAC_PI_4), "3π/4");
        assert_eq!(format_pi(-FRAC_PI_2), "−π/2");
        assert_eq!(format_pi(2.0 * PI), "2π");
        assert_eq!(format_pi(1.0), "1");
    }

    #[test]
    fn partner_solutions() {
        let label = BellLabel::from_bits(1, 1).unwrap();
        let c = PlaneCondition::for_label(CoordinatePlane::Y, label);
        assert_eq!(c.partners(FRAC_PI_2), vec![0.0, PI]);

        let c = PlaneCondition::for_label(CoordinatePlane::X, BellLabel::default());
        let p = c.partners(FRAC_PI_4);
        assert_eq!(p.len(), 1);
        assert!((p[0] - FRAC_PI_4).abs() < 1e-15);
        let p = c.partners(PI);
        assert_eq!(p.len(), 1);
        assert!((p[0] - FRAC_PI_2).abs() < 1e-15);

        // z = 0, t = 0, η = 0: ζ ∈ {π/2, 3π/2}
        let c = PlaneCondition::for_label(CoordinatePlane::Z, BellLabel::default());
        let p = c.partners(0.0);
        assert_eq!(p.len(), 2);
        assert!((p[0] - FRAC_PI_2).abs() < 1e-15 && (p[1] - 3.0 * FRAC_PI_2).abs() < 1e-15);
        for zeta in p {
            assert!(c.holds(0.0, zeta, DEFAULT_ANGLE_TOL));
        }
    }

    #[test]
    fn consistency_examples() {
        let tol = Tolerances::default();
        let singlet = BellLabel::from_bits(1, 1).unwrap();
        let xz = ObservablePair::new(named_gate(NamedGate::Sigma1), named_gate(NamedGate::Sigma3));
        let check = check_consistency(CoordinatePlane::Y, &xz, singlet, &tol).unwrap();
        assert!(check.predicate && check.theta_independent);

        let diag = ObservablePair::from_angles(FRAC_PI_2, FRAC_PI_4, FRAC_PI_2, FRAC_PI_4).unwrap();
        let check =
            check_consistency(CoordinatePlane::Z, &diag, BellLabel::default(), &tol).unwrap();
        assert!(check.predicate && check.theta_independent);

        assert!(matches!(
            check_consistency(CoordinatePlane::X, &xz, singlet, &tol),
            Err(Error::PlaneMismatch(_))
        ));
        // y = 0 at η = π is the reflected chart, not the one the closed form uses
        let reflected = ObservablePair::from_angles(1.0, PI, 1.0, 0.0).unwrap();
        assert!(check_consistency(CoordinatePlane::Y, &reflected, singlet, &tol).is_err());
    }

    fn x_plane_path(mu: f64) -> impl Fn(f64) -> Result<ObservablePair> {
        move |nu| ObservablePair::from_angles(mu, FRAC_PI_2, nu, FRAC_PI_2)
    }

    #[test]
    fn solver_examples() {
        let roots = solve_independence(
            x_plane_path(FRAC_PI_4),
            (0.0, PI),
            BellLabel::default(),
            181,
        )
        .unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].sweep_parameter - FRAC_PI_4).abs() <= 1e-8);

        let label = BellLabel::from_bits(1, 0).unwrap();
        let roots = solve_independence(x_plane_path(0.0), (0.0, PI), label, 50).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].sweep_parameter - FRAC_PI_2).abs() <= 1e-8);
        assert!((roots[0].theta_at_root - 0.25).abs() <= ROOT_THETA_TOL);

        let zz = ObservablePair::new(named_gate(NamedGate::Sigma3), named_gate(NamedGate::Sigma3));
        let roots = solve_independence(|_| Ok(zz), (0.0, 1.0), BellLabel::default(), 10).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn solver_reports_grid_hits_once() {
        // ν = π/4 is exactly grid point 1 of 5 on [0, π]
        let roots = solve_independence(x_plane_path(FRAC_PI_4), (0.0, PI), BellLabel::default(), 5)
            .unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].bracket_width, 0.0);
    }

    #[test]
    fn solver_rejects_bad_grids() {
        assert!(solve_independence(x_plane_path(0.0), (0.0, PI), BellLabel::default(), 1).is_err());
        assert!(
            solve_independence(x_plane_path(0.0), (1.0, 0.0), BellLabel::default(), 10).is_err()
        );
        // path leaving the chart propagates the domain error
        assert!(
            solve_independence(x_plane_path(0.0), (0.0, 4.0), BellLabel::default(), 10).is_err()
        );
    }
}
