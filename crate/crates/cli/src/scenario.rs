//! Scenario plumbing shared by the subcommands: which ensemble family to
//! build, which parameter a sweep varies, and the error-to-exit-code map.

use std::fmt;
use std::path::PathBuf;

use clap::Args;
use discrimkit::ensembles;
use discrimkit::types::StateEnsemble;
use discrimkit::DiscrimError;

/// Exit code 2 for anything the user can fix (flags, files, domains), 3 for
/// an optimizer that ran out of iterations. Matches are on the variant, so
/// a message can be as specific as the call site likes.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    NoConvergence(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::NoConvergence(_) => 3,
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "{m}"),
            CliError::NoConvergence(m) => write!(f, "{m}"),
        }
    }
}

impl From<DiscrimError> for CliError {
    fn from(e: DiscrimError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Ensemble selection shared by every computing subcommand. Exactly one
/// source; the parameter flags feed whichever family was picked.
#[derive(Args, Debug, Clone)]
pub struct EnsembleArgs {
    /// JSON ensemble file (states as vectors or matrices, with priors).
    #[arg(long, value_name = "PATH", group = "source")]
    pub ensemble: Option<PathBuf>,

    /// The canonical pure pair cos(t)|0> +/- sin(t)|1>.
    #[arg(long, group = "source")]
    pub two_pure: bool,

    /// Three symmetric qubit states; equatorial unless --latitude is given.
    #[arg(long, group = "source")]
    pub trine: bool,

    /// Four qubit states with uniform pairwise overlap 1/3.
    #[arg(long, group = "source")]
    pub tetrad: bool,

    /// The coherent pair |a>, |-a> (analytic unambiguous overlap demo).
    #[arg(long, group = "source")]
    pub coherent: bool,

    /// Angle in degrees: two-pure separation, or trine latitude shorthand.
    #[arg(long, value_name = "DEG")]
    pub theta: Option<f64>,

    /// Prior of the first state (two-pure family; the rest are equiprobable).
    #[arg(long, value_name = "FLOAT")]
    pub p0: Option<f64>,

    /// Coherent amplitude (real).
    #[arg(long, value_name = "FLOAT")]
    pub alpha: Option<f64>,

    /// Trine latitude in degrees, in (0, 45]; 45 is the equatorial trine.
    #[arg(long, value_name = "DEG")]
    pub latitude: Option<f64>,
}

pub enum Family {
    TwoPure,
    Trine,
    Tetrad,
    Coherent,
    File(StateEnsemble),
}

impl EnsembleArgs {
    /// Resolve the source flags; file ensembles are loaded here so malformed
    /// JSON is reported (with serde's line/column) before any computation.
    pub fn family(&self) -> CliResult<Family> {
        if let Some(path) = &self.ensemble {
            let ens = discrimkit::io::load_ensemble(path)
                .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
            return Ok(Family::File(ens));
        }
        if self.two_pure {
            return Ok(Family::TwoPure);
        }
        if self.trine {
            return Ok(Family::Trine);
        }
        if self.tetrad {
            return Ok(Family::Tetrad);
        }
        if self.coherent {
            return Ok(Family::Coherent);
        }
        Err(CliError::invalid(
            "no ensemble given: use --two-pure, --trine, --tetrad, --coherent, or --ensemble PATH",
        ))
    }

    pub fn knobs(&self) -> Knobs {
        Knobs {
            theta_deg: self.theta,
            p0: self.p0.unwrap_or(0.5),
            alpha: self.alpha,
            // For the trine, --theta is an alias for --latitude; an explicit
            // --latitude wins when both are present.
            latitude_deg: self.latitude.or(if self.trine { self.theta } else { None }),
        }
    }
}

/// The scalar parameters a scenario can depend on, after defaults and the
/// trine --theta alias are applied. A sweep rewrites one field per point.
#[derive(Debug, Clone, Copy)]
pub struct Knobs {
    pub theta_deg: Option<f64>,
    pub p0: f64,
    pub alpha: Option<f64>,
    pub latitude_deg: Option<f64>,
}

impl Knobs {
    pub fn with(mut self, param: Param, value: f64) -> Self {
        match param {
            Param::Theta => self.theta_deg = Some(value),
            Param::P0 => self.p0 = value,
            Param::Alpha => self.alpha = Some(value),
            Param::Latitude => self.latitude_deg = Some(value),
        }
        self
    }

    pub fn theta_deg(&self, context: &str) -> CliResult<f64> {
        self.theta_deg
            .ok_or_else(|| CliError::Invalid(format!("{context} needs --theta DEG or a theta sweep")))
    }

    pub fn alpha(&self, context: &str) -> CliResult<f64> {
        self.alpha
            .ok_or_else(|| CliError::Invalid(format!("{context} needs --alpha FLOAT or an alpha sweep")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    Theta,
    P0,
    Alpha,
    Latitude,
}

impl Param {
    fn parse(s: &str) -> CliResult<Self> {
        match s {
            "theta" => Ok(Param::Theta),
            "p0" => Ok(Param::P0),
            "alpha" => Ok(Param::Alpha),
            "latitude" => Ok(Param::Latitude),
            other => Err(CliError::Invalid(format!(
                "unknown sweep parameter {other:?}: expected theta, p0, alpha, or latitude"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Param::Theta => "theta",
            Param::P0 => "p0",
            Param::Alpha => "alpha",
            Param::Latitude => "latitude",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub param: Param,
    pub start: f64,
    pub stop: f64,
    pub values: Vec<f64>,
}

/// Sweep flags shared by the table-producing subcommands.
#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    /// Vary one parameter: PARAM:START:STOP:STEPS (e.g. theta:0:45:91).
    #[arg(long, value_name = "PARAM:START:STOP:STEPS", conflicts_with = "theta_sweep")]
    pub sweep: Option<String>,

    /// Shorthand for --sweep theta:START:STOP:STEPS.
    #[arg(long, value_name = "START:STOP:STEPS")]
    pub theta_sweep: Option<String>,
}

impl SweepArgs {
    pub fn parse(&self) -> CliResult<Option<SweepSpec>> {
        if let Some(s) = &self.sweep {
            return Ok(Some(parse_sweep(s)?));
        }
        if let Some(s) = &self.theta_sweep {
            return Ok(Some(parse_sweep(&format!("theta:{s}"))?));
        }
        Ok(None)
    }
}

fn parse_sweep(s: &str) -> CliResult<SweepSpec> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 4 {
        return Err(CliError::Invalid(format!(
            "malformed sweep {s:?}: expected PARAM:START:STOP:STEPS"
        )));
    }
    let param = Param::parse(parts[0])?;
    let num = |field: &str, text: &str| -> CliResult<f64> {
        text.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| CliError::Invalid(format!("sweep {field} {text:?} is not a finite number")))
    };
    let start = num("start", parts[1])?;
    let stop = num("stop", parts[2])?;
    let steps: usize = parts[3]
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::Invalid(format!("sweep steps {:?} must be a positive integer", parts[3])))?;
    Ok(SweepSpec { param, start, stop, values: linspace(start, stop, steps) })
}

fn linspace(start: f64, stop: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![start];
    }
    (0..steps)
        .map(|k| start + (stop - start) * k as f64 / (steps - 1) as f64)
        .collect()
}

/// Every (knobs, point) a command should evaluate, in sweep order.
pub fn points(sweep: Option<&SweepSpec>, base: Knobs) -> Vec<Knobs> {
    match sweep {
        None => vec![base],
        Some(s) => s.values.iter().map(|&v| base.with(s.param, v)).collect(),
    }
}

/// Reject a sweep whose bounds leave the parameter's documented domain, so
/// the command fails before emitting any rows. `theta_closed_at_zero` is
/// true where theta = 0 (identical states) is still meaningful, as it is
/// for minimum error.
pub fn check_sweep_domain(sweep: &SweepSpec, theta_closed_at_zero: bool) -> CliResult<()> {
    let (lo, hi, lo_open) = match sweep.param {
        Param::Theta => (0.0, 45.0, !theta_closed_at_zero),
        Param::Latitude => (0.0, 45.0, true),
        Param::P0 => (0.0, 1.0, false),
        Param::Alpha => (0.0, f64::INFINITY, false),
    };
    let bad = |v: f64| v > hi || v < lo || (lo_open && v <= lo);
    if bad(sweep.start) || bad(sweep.stop) {
        let left = if lo_open { "(" } else { "[" };
        let right = if hi.is_finite() { format!("{hi}]") } else { "inf)".into() };
        return Err(CliError::Invalid(format!(
            "sweep bounds {}..{} leave the {} domain {left}{lo}, {right}",
            sweep.start,
            sweep.stop,
            sweep.param.name(),
        )));
    }
    Ok(())
}

pub fn deg_to_rad(deg: f64) -> f64 {
    deg.to_radians()
}

/// Equatorial trine unless a latitude was given (45 degrees maps to the
/// equatorial family member, just in a rotated basis).
pub fn trine_ensemble_at(latitude_deg: Option<f64>) -> CliResult<StateEnsemble> {
    match latitude_deg {
        None => Ok(ensembles::trine_ensemble()?),
        Some(deg) => Ok(ensembles::trine_latitude_ensemble(deg_to_rad(deg))?),
    }
}
