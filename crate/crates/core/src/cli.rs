//! Command-line front end: `probs`, `sweep`, `verify`, `independence`,
//! `sample`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bipartite::{self, BellLabel, JointDistribution, ObservablePair};
use crate::error::Error;
use crate::independence::{self, PlaneCondition};
use crate::information::{CrosstalkReport, DEFAULT_THETA_TOL};
use crate::observables::CoordinatePlane;
use crate::sampler;
use crate::sweep::{self, format_g17, parse_angle, GridAxis, SweepSpec};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bellcrosstalk",
    version,
    about = "Joint measurement statistics and crosstalk for qubit observable pairs on Bell states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Joint distribution, marginals and crosstalk at one point.
    Probs(ProbsArgs),
    /// Grid sweep over one or two angles, written as CSV.
    Sweep(SweepArgs),
    /// Randomized check of the probability routes and invariants.
    Verify(VerifyArgs),
    /// Closed-form independence conditions for a coordinate plane.
    Independence(IndependenceArgs),
    /// Monte-Carlo sampling of joint outcomes.
    Sample(SampleArgs),
}

#[derive(Debug, Args)]
pub struct AngleArgs {
    /// Polar angle μ of the first observable.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub mu: String,
    /// Azimuthal angle η of the first observable.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub eta: String,
    /// Polar angle ν of the second observable.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub nu: String,
    /// Azimuthal angle ζ of the second observable.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub zeta: String,
    /// Read input angles as degrees (output stays in radians).
    #[arg(long)]
    pub deg: bool,
}

#[derive(Debug, Args)]
pub struct LabelArgs {
    /// Bell label s: sign of the |1(t+1)⟩ term.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub s: u8,
    /// Bell label t: second-qubit bit of the |0t⟩ term.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub t: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Amplitude,
    Brute,
    All,
}

#[derive(Debug, Args)]
pub struct ProbsArgs {
    #[command(flatten)]
    pub angles: AngleArgs,
    #[command(flatten)]
    pub label: LabelArgs,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    pub method: Method,
    /// Tolerance on |θ − 1/4| for the independence verdict.
    #[arg(long, default_value_t = DEFAULT_THETA_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub angles: AngleArgs,
    #[command(flatten)]
    pub label: LabelArgs,
    /// Varied angle as name=start:stop:steps (endpoints inclusive); give once or twice.
    #[arg(long = "vary", required = true)]
    pub vary: Vec<String>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_THETA_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = verify::DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct IndependenceArgs {
    /// Coordinate plane: x0, y0 or z0.
    #[arg(long)]
    pub plane: String,
    #[command(flatten)]
    pub label: LabelArgs,
    /// Anchor polar angle μ (x0, y0); prints the matching ν.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Anchor azimuthal angle η (z0); prints the matching ζ.
    #[arg(long, allow_hyphen_values = true)]
    pub eta: Option<String>,
    #[arg(long)]
    pub deg: bool,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub angles: AngleArgs,
    #[command(flatten)]
    pub label: LabelArgs,
    /// Number of draws.
    #[arg(long, default_value_t = 100_000)]
    pub n: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_THETA_TOL)]
    pub tol: f64,
}

/// Why a command stopped early.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ClosedFormMismatch(_) => Failure::Verification(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    let result = match &cli.command {
        Command::Probs(a) => cmd_probs(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Independence(a) => cmd_independence(a, out),
        Command::Sample(a) => cmd_sample(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            EXIT_USAGE
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            EXIT_FAILURE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn angle(text: &str, deg: bool) -> std::result::Result<f64, Failure> {
    let x = parse_angle(text)?;
    Ok(if deg { x.to_radians() } else { x })
}

fn base_angles(a: &AngleArgs) -> std::result::Result<[f64; 4], Failure> {
    Ok([
        angle(&a.mu, a.deg)?,
        angle(&a.eta, a.deg)?,
        angle(&a.nu, a.deg)?,
        angle(&a.zeta, a.deg)?,
    ])
}

fn pair_of(a: &AngleArgs) -> std::result::Result<ObservablePair, Failure> {
    let [mu, eta, nu, zeta] = base_angles(a)?;
    Ok(ObservablePair::from_angles(mu, eta, nu, zeta)?)
}

fn label_of(l: &LabelArgs) -> std::result::Result<BellLabel, Failure> {
    Ok(BellLabel::from_bits(l.s, l.t)?)
}

fn check_tol(tol: f64) -> std::result::Result<(), Failure> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol).into())
    }
}

fn write_header(
    out: &mut dyn Write,
    pair: &ObservablePair,
    label: BellLabel,
) -> std::io::Result<()> {
    let [mu, eta, nu, zeta] = pair.angles();
    writeln!(out, "A: mu={}  eta={}", format_g17(mu), format_g17(eta))?;
    writeln!(out, "B: nu={}  zeta={}", format_g17(nu), format_g17(zeta))?;
    writeln!(out, "state: {label}  (s={}, t={})", label.s, label.t)
}

fn write_table(out: &mut dyn Write, dist: &JointDistribution) -> std::io::Result<()> {
    let [p00, p01, p10, p11] = dist.probabilities().map(format_g17);
    writeln!(out, "p00 {p00}")?;
    writeln!(out, "p01 {p01}")?;
    writeln!(out, "p10 {p10}")?;
    writeln!(out, "p11 {p11}")?;
    let m = dist.marginals();
    writeln!(
        out,
        "marginals A=({}, {})  B=({}, {})",
        format_g17(m.first[0]),
        format_g17(m.first[1]),
        format_g17(m.second[0]),
        format_g17(m.second[1])
    )
}

fn cmd_probs(a: &ProbsArgs, out: &mut dyn Write) -> CmdResult {
    check_tol(a.tol)?;
    let pair = pair_of(&a.angles)?;
    let label = label_of(&a.label)?;
    let closed = bipartite::joint_distribution_closed(&pair, label)?;
    let amplitude = bipartite::joint_distribution_amplitude(&pair, label);
    let brute = bipartite::joint_distribution_bruteforce(&pair, &bipartite::bell_state(label))?;
    let (shown, name) = match a.method {
        Method::Closed | Method::All => (closed, "closed"),
        Method::Amplitude => (amplitude, "amplitude"),
        Method::Brute => (brute, "brute"),
    };

    write_header(out, &pair, label)?;
    writeln!(out, "method: {name}")?;
    write_table(out, &shown)?;
    let report = CrosstalkReport::from_distribution(&shown, a.tol)?;
    writeln!(out, "{report}")?;
    if a.method == Method::All {
        let gap = brute
            .max_abs_diff(&amplitude)
            .max(brute.max_abs_diff(&closed))
            .max(amplitude.max_abs_diff(&closed));
        writeln!(out, "max discrepancy (brute/amplitude/closed) {gap:.3e}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write) -> CmdResult {
    check_tol(a.tol)?;
    if a.vary.len() > 2 {
        return Err(Failure::Usage(format!(
            "at most two --vary ranges, got {}",
            a.vary.len()
        )));
    }
    let axes = a
        .vary
        .iter()
        .map(|v| GridAxis::parse(v, a.angles.deg))
        .collect::<crate::error::Result<Vec<_>>>()?;
    let spec = SweepSpec {
        base: base_angles(&a.angles)?,
        label: label_of(&a.label)?,
        axes,
        tol: a.tol,
    };
    let records = sweep::run_sweep(&spec)?;
    match &a.out {
        Some(path) => sweep::write_csv(&records, BufWriter::new(File::create(path)?))?,
        None => sweep::write_csv(&records, &mut *out)?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    if a.tol.is_nan() || a.tol < 0.0 {
        return Err(Error::InvalidTolerance(a.tol).into());
    }
    let report = verify::verify(a.samples, a.seed, a.tol)?;
    writeln!(out, "{report}")?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn cmd_independence(a: &IndependenceArgs, out: &mut dyn Write) -> CmdResult {
    let plane: CoordinatePlane = a.plane.parse()?;
    let label = label_of(&a.label)?;
    let condition = PlaneCondition::for_label(plane, label);
    let chart = match plane {
        CoordinatePlane::X => "eta = zeta = π/2",
        CoordinatePlane::Y => "eta = zeta = 0",
        CoordinatePlane::Z => "mu = nu = π/2",
    };
    writeln!(out, "plane {plane} ({chart}), state {label}")?;
    writeln!(out, "independent iff {condition}")?;

    let (anchor, wrong) = match plane {
        CoordinatePlane::X | CoordinatePlane::Y => (&a.mu, a.eta.is_some().then_some("--eta")),
        CoordinatePlane::Z => (&a.eta, a.mu.is_some().then_some("--mu")),
    };
    if let Some(flag) = wrong {
        return Err(Failure::Usage(format!(
            "{flag} is not an anchor for plane {plane}"
        )));
    }
    if let Some(text) = anchor {
        let x = angle(text, a.deg)?;
        let (first, second) = condition.angle_names();
        match plane {
            CoordinatePlane::Z if !(0.0..std::f64::consts::TAU).contains(&x) => {
                return Err(Error::AzimuthOutOfDomain(x).into())
            }
            CoordinatePlane::X | CoordinatePlane::Y
                if !(0.0..=std::f64::consts::PI).contains(&x) =>
            {
                return Err(Error::PolarOutOfDomain(x).into())
            }
            _ => {}
        }
        let partners = condition.partners(x);
        let symbolic: Vec<String> = partners
            .iter()
            .map(|&p| independence::format_pi(p))
            .collect();
        let numeric: Vec<String> = partners.iter().map(|&p| format_g17(p)).collect();
        writeln!(
            out,
            "{first} = {}: {second} ∈ {{{}}}  [{}]",
            independence::format_pi(x),
            symbolic.join(", "),
            numeric.join(", ")
        )?;
    }
    Ok(EXIT_OK)
}

/// `(count − n p) / √(n p (1 − p))`, or 0/∞ when the cell is deterministic.
fn z_score(count: u64, n: u64, p: f64) -> f64 {
    let expected = n as f64 * p;
    let var = expected * (1.0 - p);
    if var > 0.0 {
        (count as f64 - expected) / var.sqrt()
    } else if (count as f64 - expected).abs() < 0.5 {
        0.0
    } else {
        f64::INFINITY
    }
}

fn cmd_sample(a: &SampleArgs, out: &mut dyn Write) -> CmdResult {
    check_tol(a.tol)?;
    let pair = pair_of(&a.angles)?;
    let label = label_of(&a.label)?;
    let exact = bipartite::joint_distribution_closed(&pair, label)?;
    let counts = sampler::sample(&exact, a.n, a.seed)?;
    let empirical = counts.empirical_distribution()?;

    write_header(out, &pair, label)?;
    writeln!(out, "n={} seed={}", counts.n, counts.seed)?;
    writeln!(out, "cell  count  empirical  closed  z")?;
    for (i, (k, l)) in bipartite::cells().iter().enumerate() {
        let p = exact.probabilities()[i];
        writeln!(
            out,
            "p{k}{l}  {}  {}  {}  {:.3}",
            counts.counts[i],
            format_g17(empirical.probabilities()[i]),
            format_g17(p),
            z_score(counts.counts[i], counts.n, p)
        )?;
    }
    writeln!(out, "empirical crosstalk:")?;
    writeln!(out, "{}", sampler::empirical_report(&counts, a.tol)?)?;
    writeln!(out, "closed-form crosstalk:")?;
    writeln!(
        out,
        "{}",
        CrosstalkReport::from_distribution(&exact, a.tol)?
    )?;
    Ok(EXIT_OK)
}
