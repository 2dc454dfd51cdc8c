//! Parameter sweeps over one or two of `(μ, η, ν, ζ)` and their CSV form.
//!
//! CSV layout: header
//! `mu,eta,nu,zeta,s,t,p00,p01,p10,p11,entropy,mutual_info,degree,independent`,
//! one row per grid point, comma separated, LF terminated, UTF-8 without BOM.
//! Angles are radians, entropy and mutual information are nats, and every
//! float is printed like C's `%.17g`.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::bipartite::{self, BellLabel, ObservablePair};
use crate::error::{Error, Result};
use crate::information::CrosstalkReport;

pub const CSV_HEADER: &str =
    "mu,eta,nu,zeta,s,t,p00,p01,p10,p11,entropy,mutual_info,degree,independent";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AngleName {
    Mu,
    Eta,
    Nu,
    Zeta,
}

impl AngleName {
    pub fn index(self) -> usize {
        match self {
            AngleName::Mu => 0,
            AngleName::Eta => 1,
            AngleName::Nu => 2,
            AngleName::Zeta => 3,
        }
    }
}

impl FromStr for AngleName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mu" | "μ" => Ok(AngleName::Mu),
            "eta" | "η" => Ok(AngleName::Eta),
            "nu" | "ν" => Ok(AngleName::Nu),
            "zeta" | "ζ" => Ok(AngleName::Zeta),
            other => Err(Error::Usage(format!(
                "unknown angle '{other}', expected mu, eta, nu or zeta"
            ))),
        }
    }
}

impl fmt::Display for AngleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AngleName::Mu => "mu",
            AngleName::Eta => "eta",
            AngleName::Nu => "nu",
            AngleName::Zeta => "zeta",
        })
    }
}

/// Parses a plain number or a rational multiple of π such as `pi`, `π/2`,
/// `3pi/4`, `-3*pi/2` or `2π`.
pub fn parse_angle(text: &str) -> Result<f64> {
    let bad = || Error::Usage(format!("cannot parse angle '{text}'"));
    let s = text.trim();
    if let Ok(x) = s.parse::<f64>() {
        return if x.is_finite() { Ok(x) } else { Err(bad()) };
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, s.strip_prefix('+').unwrap_or(s)),
    };
    let at = body
        .find("pi")
        .map(|i| (i, 2))
        .or_else(|| body.find('π').map(|i| (i, 'π'.len_utf8())));
    let (i, len) = at.ok_or_else(bad)?;
    let coeff = body[..i].trim().trim_end_matches('*').trim();
    let coeff = if coeff.is_empty() {
        1.0
    } else {
        coeff.parse::<f64>().map_err(|_| bad())?
    };
    let rest = body[i + len..].trim();
    let divisor = match rest.strip_prefix('/') {
        Some(d) => d.trim().parse::<f64>().map_err(|_| bad())?,
        None if rest.is_empty() => 1.0,
        None => return Err(bad()),
    };
    if divisor == 0.0 {
        return Err(bad());
    }
    Ok(sign * coeff * std::f64::consts::PI / divisor)
}

/// One varied angle: `steps` evenly spaced values from `start` to `stop`,
/// both ends included; a single step means just `start`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub name: AngleName,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl GridAxis {
    /// Parses `name=start:stop:steps`. With `degrees` the endpoints are
    /// converted to radians.
    pub fn parse(spec: &str, degrees: bool) -> Result<Self> {
        let bad = || Error::Usage(format!("expected name=start:stop:steps, got '{spec}'"));
        let (name, range) = spec.split_once('=').ok_or_else(bad)?;
        let parts: Vec<&str> = range.split(':').collect();
        let [start, stop, steps] = parts.as_slice() else {
            return Err(bad());
        };
        let convert = |x: f64| if degrees { x.to_radians() } else { x };
        let steps: usize = steps.trim().parse().map_err(|_| bad())?;
        if steps == 0 {
            return Err(Error::Usage(format!("'{spec}': steps must be at least 1")));
        }
        Ok(Self {
            name: name.trim().parse()?,
            start: convert(parse_angle(start)?),
            stop: convert(parse_angle(stop)?),
            steps,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.start];
        }
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| self.start + (self.stop - self.start) * i as f64 / last)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    /// Fixed `(μ, η, ν, ζ)`; varied entries are overwritten per grid point.
    pub base: [f64; 4],
    pub label: BellLabel,
    pub axes: Vec<GridAxis>,
    pub tol: f64,
}

/// One CSV row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub mu: f64,
    pub eta: f64,
    pub nu: f64,
    pub zeta: f64,
    pub label: BellLabel,
    pub p: [f64; 4],
    pub entropy: f64,
    pub mutual_info: f64,
    pub degree: f64,
    pub independent: bool,
}

impl SweepRecord {
    pub fn evaluate(pair: &ObservablePair, label: BellLabel, tol: f64) -> Result<Self> {
        let dist = bipartite::joint_distribution_closed(pair, label)?;
        let report = CrosstalkReport::from_distribution(&dist, tol)?;
        let [mu, eta, nu, zeta] = pair.angles();
        Ok(Self {
            mu,
            eta,
            nu,
            zeta,
            label,
            p: dist.probabilities(),
            entropy: report.entropy,
            mutual_info: report.mutual_info,
            degree: report.degree,
            independent: report.independent,
        })
    }

    pub fn csv_row(&self) -> String {
        let floats = [self.mu, self.eta, self.nu, self.zeta];
        let mut fields: Vec<String> = floats.iter().map(|&x| format_g17(x)).collect();
        fields.push(self.label.s.to_string());
        fields.push(self.label.t.to_string());
        fields.extend(self.p.iter().map(|&x| format_g17(x)));
        fields.extend([self.entropy, self.mutual_info, self.degree].map(format_g17));
        fields.push(if self.independent { "1" } else { "0" }.to_string());
        fields.join(",")
    }
}

/// Evaluates every grid point, first axis varying slowest.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRecord>> {
    match spec.axes.len() {
        1 | 2 => {}
        n => {
            return Err(Error::Usage(format!(
                "a sweep varies one or two angles, got {n}"
            )))
        }
    }
    if spec.axes.len() == 2 && spec.axes[0].name == spec.axes[1].name {
        return Err(Error::Usage(format!(
            "angle '{}' varied twice",
            spec.axes[0].name
        )));
    }

    let outer = spec.axes[0].values();
    let inner = spec
        .axes
        .get(1)
        .map(GridAxis::values)
        .unwrap_or_else(|| vec![f64::NAN]);
    let mut records = Vec::with_capacity(outer.len() * inner.len());
    for &x in &outer {
        for &y in &inner {
            let mut angles = spec.base;
            angles[spec.axes[0].name.index()] = x;
            if let Some(axis) = spec.axes.get(1) {
                angles[axis.name.index()] = y;
            }
            let [mu, eta, nu, zeta] = angles;
            let pair = ObservablePair::from_angles(mu, eta, nu, zeta)?;
            records.push(SweepRecord::evaluate(&pair, spec.label, spec.tol)?);
        }
    }
    Ok(records)
}

pub fn write_csv<W: Write>(records: &[SweepRecord], mut out: W) -> io::Result<()> {
    out.write_all(CSV_HEADER.as_bytes())?;
    out.write_all(b"\n")?;
    for r in records {
        out.write_all(r.csv_row().as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Formats like C's `printf("%.17g", x)`, which round-trips every `f64`.
pub fn format_g17(x: f64) -> String {
    const PRECISION: i32 = 17;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.into();
    }
    let sci = format!("{:.*e}", (PRECISION - 1) as usize, x);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent in {:e} output");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if !(-4..PRECISION).contains(&exponent) {
        let sign = if exponent < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", strip_zeros(mantissa), exponent.abs())
    } else {
        let fixed = format!("{:.*}", (PRECISION - 1 - exponent) as usize, x);
        strip_zeros(&fixed).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
