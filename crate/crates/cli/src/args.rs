use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use symplane::{Circle, Method, Vec2};

#[derive(Debug, Parser)]
#[command(name = "symplane", version, about = "Planar symplectic geometry toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit the JSON run report (default).
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,

    /// Emit CSV rows instead of the JSON report.
    #[arg(long, global = true)]
    pub csv: bool,

    /// Also render an SVG plot to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl Cli {
    pub fn output_format(&self) -> OutputFormat {
        if self.csv {
            OutputFormat::Csv
        } else {
            OutputFormat::Json
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the five inner-product identities on random vectors.
    Identities(IdentitiesOpts),
    /// Intersect two lines given by point and direction.
    Intersect(IntersectOpts),
    /// Common tangents of two circles.
    Tangents(TangentsOpts),
    /// Sweep the inverted slider crank over a range of crank angles.
    Crank(CrankOpts),
    /// Integrate the harmonic oscillator in phase space.
    Oscillator(OscillatorOpts),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Identities(_) => "identities",
            Command::Intersect(_) => "intersect",
            Command::Tangents(_) => "tangents",
            Command::Crank(_) => "crank",
            Command::Oscillator(_) => "oscillator",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct IdentitiesOpts {
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Components are drawn uniformly from [-range, range].
    #[arg(long, default_value_t = 10.0)]
    pub range: f64,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct IntersectOpts {
    /// Point on the first line, `x,y`.
    #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true)]
    pub a: Vec2,
    /// Direction of the first line.
    #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true)]
    pub u: Vec2,
    /// Point on the second line.
    #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true)]
    pub b: Vec2,
    /// Direction of the second line.
    #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true)]
    pub v: Vec2,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct TangentsOpts {
    /// First circle, `x,y,r`.
    #[arg(long, value_parser = parse_circle, allow_hyphen_values = true)]
    pub c1: Circle,
    /// Second circle, `x,y,r`.
    #[arg(long, value_parser = parse_circle, allow_hyphen_values = true)]
    pub c2: Circle,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct CrankOpts {
    /// Crank length.
    #[arg(long)]
    pub length: f64,
    /// Fixed slider pivot, `x,y`.
    #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true)]
    pub pivot: Vec2,
    /// Constant crank rate.
    #[arg(long, allow_hyphen_values = true)]
    pub phidot: f64,
    /// First crank angle of the sweep.
    #[arg(long = "from", allow_hyphen_values = true)]
    pub from: f64,
    /// Last crank angle, included.
    #[arg(long = "to", allow_hyphen_values = true)]
    pub to: f64,
    /// Number of evenly spaced angles.
    #[arg(long, default_value_t = 361)]
    pub steps: usize,
    /// Angles and angular rates are given and reported in degrees.
    #[arg(long)]
    #[serde(default)]
    pub degrees: bool,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct OscillatorOpts {
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0)]
    pub stiffness: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub q0: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub p0: f64,
    #[arg(long, default_value_t = 0.01, allow_hyphen_values = true)]
    pub dt: f64,
    /// Number of integration steps.
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Leapfrog)]
    pub method: MethodArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodArg {
    Euler,
    SymplecticEuler,
    Leapfrog,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Euler => Method::ExplicitEuler,
            MethodArg::SymplecticEuler => Method::SymplecticEuler,
            MethodArg::Leapfrog => Method::Leapfrog,
        }
    }
}

fn parse_numbers<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated numbers, got `{s}`"));
    }
    let mut out = [0.0; N];
    for (slot, p) in out.iter_mut().zip(&parts) {
        let v: f64 = p.parse().map_err(|_| format!("`{p}` is not a number"))?;
        if !v.is_finite() {
            return Err(format!("`{p}` is not finite"));
        }
        *slot = v;
    }
    Ok(out)
}

pub fn parse_vec2(s: &str) -> Result<Vec2, String> {
    let [x, y] = parse_numbers::<2>(s)?;
    Ok(Vec2::new(x, y))
}

pub fn parse_circle(s: &str) -> Result<Circle, String> {
    let [x, y, r] = parse_numbers::<3>(s)?;
    Circle::new(Vec2::new(x, y), r).map_err(|e| e.to_string())
}
