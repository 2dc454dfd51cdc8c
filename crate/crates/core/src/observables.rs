//! Single-qubit observables with spectrum {1, −1}.
//!
//! Every such operator is `x σ1 + y σ2 + z σ3` for a unit vector `(x, y, z)`,
//! and is named here by the polar/azimuthal angles of that vector:
//!
//! ```text
//! A(μ, η) = [ cos μ          e^{−iη} sin μ ]
//!           [ e^{iη} sin μ   −cos μ        ]
//! ```
//!
//! with `μ ∈ [0, π]` and `η ∈ [0, 2π)`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qmath::{self, Mat2, Matrix, Vec2, Vector, C64};
use crate::z2::Bit;

/// Default tolerance for deciding that a Bloch coordinate vanishes.
pub const DEFAULT_PLANE_TOL: f64 = 1e-9;

/// Polar angles this close outside `[0, π]` are clamped instead of rejected.
const POLAR_SLACK: f64 = 1e-12;

/// Point `(μ, η)` on the Bloch sphere naming the observable `A(μ, η)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observable {
    mu: f64,
    eta: f64,
}

impl Observable {
    /// Builds an observable from radians. `eta` is reduced modulo 2π; `mu`
    /// outside `[0, π]` is rejected.
    pub fn new(mu: f64, eta: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::NonFinite("polar angle"));
        }
        if !eta.is_finite() {
            return Err(Error::NonFinite("azimuthal angle"));
        }
        if !(-POLAR_SLACK..=PI + POLAR_SLACK).contains(&mu) {
            return Err(Error::PolarOutOfDomain(mu));
        }
        let mut eta = eta.rem_euclid(TAU);
        // rem_euclid can round up to exactly TAU for tiny negative inputs
        if eta >= TAU {
            eta = 0.0;
        }
        Ok(Self {
            mu: mu.clamp(0.0, PI),
            eta,
        })
    }

    pub fn from_degrees(mu: f64, eta: f64) -> Result<Self> {
        Self::new(mu.to_radians(), eta.to_radians())
    }

    pub fn named(gate: NamedGate) -> Self {
        let (mu, eta) = gate.angles();
        Self { mu, eta }
    }

    /// Polar angle μ.
    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Azimuthal angle η.
    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn matrix(&self) -> Mat2 {
        let (s, c) = self.mu.sin_cos();
        let phase = C64::from_polar(1.0, -self.eta);
        Matrix::new([
            [C64::new(c, 0.0), phase * s],
            [phase.conj() * s, C64::new(-c, 0.0)],
        ])
    }

    /// Unit eigenvector for eigenvalue `λ_k`:
    /// `(−1)^k e^{−iη} tr_k(μ/2) |0⟩ + tr_{k+1}(μ/2) |1⟩`.
    ///
    /// At the poles the azimuth survives only as a global phase.
    pub fn eigenvector(&self, k: Bit) -> Vec2 {
        let half = self.mu / 2.0;
        let phase = C64::from_polar(1.0, -self.eta);
        Vector::new([
            phase * (k.sign() * k.trig(half)),
            C64::new((k + Bit::ONE).trig(half), 0.0),
        ])
    }

    pub fn direction(&self) -> BlochDirection {
        let (sm, cm) = self.mu.sin_cos();
        let (se, ce) = self.eta.sin_cos();
        BlochDirection {
            x: sm * ce,
            y: sm * se,
            z: cm,
        }
    }

    pub fn classify_plane(&self, tol: f64) -> PlaneClass {
        PlaneClass::of(self.direction(), tol)
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A(μ={}, η={})", self.mu, self.eta)
    }
}

/// Eigenvalue `λ_k`: `λ_0 = 1`, `λ_1 = −1`.
pub fn eigenvalue(k: Bit) -> f64 {
    k.sign()
}

/// Unit vector `(x, y, z)` of an observable in the space of traceless
/// self-adjoint operators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochDirection {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochDirection {
    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// `x σ1 + y σ2 + z σ3`.
    pub fn operator(&self) -> Mat2 {
        let r = |v: f64| C64::new(v, 0.0);
        qmath::sigma1().scale(r(self.x))
            + qmath::sigma2().scale(r(self.y))
            + qmath::sigma3().scale(r(self.z))
    }
}

/// One of the three coordinate planes of the Bloch sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoordinatePlane {
    /// `x = 0`; contains σ2 and σ3.
    X,
    /// `y = 0`; contains σ1, σ3 and the Hadamard gate.
    Y,
    /// `z = 0`; contains σ1 and σ2.
    Z,
}

impl CoordinatePlane {
    pub const ALL: [CoordinatePlane; 3] =
        [CoordinatePlane::X, CoordinatePlane::Y, CoordinatePlane::Z];

    pub fn name(self) -> &'static str {
        match self {
            CoordinatePlane::X => "x=0",
            CoordinatePlane::Y => "y=0",
            CoordinatePlane::Z => "z=0",
        }
    }
}

impl fmt::Display for CoordinatePlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoordinatePlane {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x0" | "x=0" | "x" => Ok(CoordinatePlane::X),
            "y0" | "y=0" | "y" => Ok(CoordinatePlane::Y),
            "z0" | "z=0" | "z" => Ok(CoordinatePlane::Z),
            other => Err(Error::Usage(format!(
                "unknown plane '{other}', expected one of x0, y0, z0"
            ))),
        }
    }
}

/// Which coordinate planes contain a Bloch direction. Several may match
/// (σ3 lies in both `x = 0` and `y = 0`); none matching means generic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneClass {
    pub x_zero: bool,
    pub y_zero: bool,
    pub z_zero: bool,
    pub tol: f64,
}

impl PlaneClass {
    pub fn of(d: BlochDirection, tol: f64) -> Self {
        Self {
            x_zero: d.x.abs() <= tol,
            y_zero: d.y.abs() <= tol,
            z_zero: d.z.abs() <= tol,
            tol,
        }
    }

    pub fn contains(&self, plane: CoordinatePlane) -> bool {
        match plane {
            CoordinatePlane::X => self.x_zero,
            CoordinatePlane::Y => self.y_zero,
            CoordinatePlane::Z => self.z_zero,
        }
    }

    pub fn is_generic(&self) -> bool {
        !(self.x_zero || self.y_zero || self.z_zero)
    }

    pub fn planes(&self) -> impl Iterator<Item = CoordinatePlane> + '_ {
        CoordinatePlane::ALL
            .into_iter()
            .filter(|p| self.contains(*p))
    }
}

impl fmt::Display for PlaneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_generic() {
            return f.write_str("generic");
        }
        let names: Vec<_> = self.planes().map(CoordinatePlane::name).collect();
        f.write_str(&names.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGate {
    Sigma1,
    Sigma2,
    Sigma3,
    Hadamard,
}

impl NamedGate {
    pub const ALL: [NamedGate; 4] = [
        NamedGate::Sigma1,
        NamedGate::Sigma2,
        NamedGate::Sigma3,
        NamedGate::Hadamard,
    ];

    /// Canonical `(μ, η)` chart coordinates.
    pub fn angles(self) -> (f64, f64) {
        match self {
            NamedGate::Sigma1 => (FRAC_PI_2, 0.0),
            NamedGate::Sigma2 => (FRAC_PI_2, FRAC_PI_2),
            NamedGate::Sigma3 => (0.0, 0.0),
            NamedGate::Hadamard => (FRAC_PI_4, 0.0),
        }
    }

    pub fn matrix(self) -> Mat2 {
        match self {
            NamedGate::Sigma1 => qmath::sigma1(),
            NamedGate::Sigma2 => qmath::sigma2(),
            NamedGate::Sigma3 => qmath::sigma3(),
            NamedGate::Hadamard => qmath::hadamard(),
        }
    }
}

pub fn named_gate(gate: NamedGate) -> Observable {
    Observable::named(gate)
}
