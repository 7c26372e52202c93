//! Subcommand drivers. Each `run_*` validates its options, calls into the
//! library and returns a [`RunReport`]: the echoed input, the results and a
//! residual summary (largest violation per invariant family).

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use symplane::identities::IdentityResiduals;
use symplane::rng::Sampler;
use symplane::{
    analytic_oscillator, circle_tangents, crank_sweep, hamiltonian, identity_residuals,
    intersect_lines, jacobi_triangle_residual, simulate, tilde, CrankConfig, Error, Intersection,
    Line, OscillatorParams, PhaseState, SweepEntry, SweepStatus, Tangent, Trajectory,
};

use crate::args::{CrankOpts, IdentitiesOpts, IntersectOpts, OscillatorOpts, TangentsOpts};
use crate::error::CliError;

/// Per-sample bound factor: `|residual| <= IDENTITY_TOL * (1 + |a||b||c||d|)`.
pub const IDENTITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport<I, R> {
    pub subcommand: String,
    pub input: I,
    pub results: R,
    pub residuals: BTreeMap<String, f64>,
    pub wall_time_ms: f64,
}

fn finish<I, R>(
    subcommand: &str,
    input: &I,
    results: R,
    residuals: BTreeMap<String, f64>,
    started: Instant,
) -> RunReport<I, R>
where
    I: Clone,
{
    RunReport {
        subcommand: subcommand.to_string(),
        input: input.clone(),
        results,
        residuals,
        wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentitiesResult {
    pub samples: usize,
    /// Largest residual magnitude per identity.
    pub max_residuals: BTreeMap<String, f64>,
    /// Largest `|residual| / bound` over all samples and identities.
    pub max_scaled: f64,
    pub violations: usize,
}

pub fn run_identities(opts: &IdentitiesOpts) -> Result<RunReport<IdentitiesOpts, IdentitiesResult>, CliError> {
    let started = Instant::now();
    if opts.samples < 1 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    if !(opts.range.is_finite() && opts.range >= 0.0) {
        return Err(CliError::Usage("--range must be finite and non-negative".into()));
    }
    let mut rng = Sampler::new(opts.seed);
    let mut max = [0.0f64; 5];
    let mut max_scaled = 0.0f64;
    let mut violations = 0;
    for _ in 0..opts.samples {
        let [a, b, c, d] = [(); 4].map(|_| rng.vec2(opts.range));
        let mags = identity_residuals(a, b, c, d).magnitudes();
        let bound = IDENTITY_TOL * (1.0 + a.norm() * b.norm() * c.norm() * d.norm());
        for (m, r) in max.iter_mut().zip(mags) {
            *m = m.max(r);
            max_scaled = max_scaled.max(r / bound);
            if r > bound {
                violations += 1;
            }
        }
    }
    let max_residuals: BTreeMap<String, f64> = IdentityResiduals::NAMES
        .iter()
        .map(|n| n.to_string())
        .zip(max)
        .collect();
    let results = IdentitiesResult {
        samples: opts.samples,
        max_residuals: max_residuals.clone(),
        max_scaled,
        violations,
    };
    Ok(finish("identities", opts, results, max_residuals, started))
}

pub fn check_identities(report: &RunReport<IdentitiesOpts, IdentitiesResult>) -> Result<(), CliError> {
    match report.results.violations {
        0 => Ok(()),
        n => Err(CliError::Check(format!(
            "{n} identity residuals exceed the scaled tolerance (worst ratio {:e})",
            report.results.max_scaled
        ))),
    }
}

pub fn run_intersect(opts: &IntersectOpts) -> Result<RunReport<IntersectOpts, Intersection>, CliError> {
    let started = Instant::now();
    let l1 = Line::new(opts.a, opts.u)?;
    let l2 = Line::new(opts.b, opts.v)?;
    let hit = intersect_lines(&l1, &l2)?;
    let offset = opts.b - opts.a;
    let closure = offset + opts.v * hit.mu - opts.u * hit.lambda;
    let mut residuals = BTreeMap::new();
    residuals.insert("loop_closure".into(), closure.norm());
    residuals.insert("second_line".into(), (l2.at(hit.mu) - hit.point).norm());
    residuals.insert("jacobi_triangle".into(), jacobi_triangle_residual(opts.u, opts.v, offset).norm());
    Ok(finish("intersect", opts, hit, residuals, started))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TangentsResult {
    pub count: usize,
    pub tangents: Vec<Tangent>,
}

pub fn run_tangents(opts: &TangentsOpts) -> Result<RunReport<TangentsOpts, TangentsResult>, CliError> {
    let started = Instant::now();
    let (c1, c2) = (&opts.c1, &opts.c2);
    let tangents = circle_tangents(c1, c2)?;
    let mut worst_distance = 0.0f64;
    let mut worst_closure = 0.0f64;
    for t in &tangents {
        worst_distance = worst_distance
            .max((t.distance(c1.center) - c1.radius).abs())
            .max((t.distance(c2.center) - c2.radius).abs());
        let closure = t.touch1 + tilde(t.direction_e) * t.lambda - t.touch2;
        worst_closure = worst_closure.max(closure.norm());
    }
    let mut residuals = BTreeMap::new();
    residuals.insert("tangent_distance".into(), worst_distance);
    residuals.insert("loop_closure".into(), worst_closure);
    let results = TangentsResult { count: tangents.len(), tangents };
    Ok(finish("tangents", opts, results, residuals, started))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrankResult {
    pub angle_unit: String,
    pub singular_count: usize,
    pub near_singular_count: usize,
    pub entries: Vec<SweepEntry>,
}

pub fn crank_config(opts: &CrankOpts) -> Result<CrankConfig, CliError> {
    let rate = if opts.degrees { opts.phidot.to_radians() } else { opts.phidot };
    Ok(CrankConfig::new(opts.length, opts.pivot, rate)?)
}

pub fn run_crank(opts: &CrankOpts) -> Result<RunReport<CrankOpts, CrankResult>, CliError> {
    let started = Instant::now();
    if opts.steps < 2 {
        return Err(CliError::Usage("--steps must be at least 2".into()));
    }
    let cfg = crank_config(opts)?;
    let (from, to) = if opts.degrees {
        (opts.from.to_radians(), opts.to.to_radians())
    } else {
        (opts.from, opts.to)
    };
    let mut entries = crank_sweep(&cfg, from, to, opts.steps)?;

    let mut worst = [0.0f64; 3];
    for st in entries.iter().filter_map(|e| e.state.as_ref()) {
        for (w, r) in worst.iter_mut().zip(st.loop_residuals(&cfg)) {
            *w = w.max(r);
        }
    }
    let mut residuals = BTreeMap::new();
    residuals.insert("position_loop".into(), worst[0]);
    residuals.insert("velocity_loop".into(), worst[1]);
    residuals.insert("acceleration_loop".into(), worst[2]);

    if opts.degrees {
        for e in &mut entries {
            e.phi = e.phi.to_degrees();
            e.psi_unwrapped = e.psi_unwrapped.map(f64::to_degrees);
            if let Some(st) = e.state.as_mut() {
                st.phi = st.phi.to_degrees();
                st.psi = st.psi.to_degrees();
                st.psi_dot = st.psi_dot.to_degrees();
                st.psi_ddot = st.psi_ddot.to_degrees();
            }
        }
    }
    let count = |s: SweepStatus| entries.iter().filter(|e| e.status == s).count();
    let results = CrankResult {
        angle_unit: if opts.degrees { "deg" } else { "rad" }.into(),
        singular_count: count(SweepStatus::Singular),
        near_singular_count: count(SweepStatus::NearSingular),
        entries,
    };
    Ok(finish("crank", opts, results, residuals, started))
}

/// A sweep that ran through a singular position is reported in full, then
/// flagged through the exit status.
pub fn check_crank(report: &RunReport<CrankOpts, CrankResult>) -> Result<(), CliError> {
    let first = report
        .results
        .entries
        .iter()
        .find(|e| e.status == SweepStatus::Singular);
    match first {
        None => Ok(()),
        Some(e) => {
            let unit = &report.results.angle_unit;
            eprintln!(
                "{} of {} sweep positions are singular (first at phi = {} {unit})",
                report.results.singular_count,
                report.results.entries.len(),
                e.phi
            );
            Err(Error::SingularPosition(0.0).into())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OscillatorResult {
    pub energy_initial: f64,
    pub energy_final: f64,
    pub trajectory: Trajectory,
}

pub fn run_oscillator(opts: &OscillatorOpts) -> Result<RunReport<OscillatorOpts, OscillatorResult>, CliError> {
    let started = Instant::now();
    let params = OscillatorParams::new(opts.mass, opts.stiffness)?;
    if !(opts.q0.is_finite() && opts.p0.is_finite()) {
        return Err(Error::NonFinite.into());
    }
    let initial = PhaseState::new(opts.q0, opts.p0, 0.0);
    let trajectory = simulate(&initial, &params, opts.dt, opts.steps, opts.method.into())?;

    let h0 = hamiltonian(&initial, &params);
    let mut drift = 0.0f64;
    let mut q_err = 0.0f64;
    let mut p_err = 0.0f64;
    for s in &trajectory.states {
        drift = drift.max((hamiltonian(s, &params) - h0).abs());
        let exact = analytic_oscillator(s.t, &initial, &params);
        q_err = q_err.max((s.q - exact.q).abs());
        p_err = p_err.max((s.p - exact.p).abs());
    }
    let mut residuals = BTreeMap::new();
    residuals.insert("energy_drift".into(), drift);
    residuals.insert(
        "relative_energy_drift".into(),
        if h0 > 0.0 { drift / h0 } else { drift },
    );
    residuals.insert("q_error_vs_analytic".into(), q_err);
    residuals.insert("p_error_vs_analytic".into(), p_err);

    let results = OscillatorResult {
        energy_initial: h0,
        energy_final: hamiltonian(trajectory.states.last().expect("non-empty"), &params),
        trajectory,
    };
    Ok(finish("oscillator", opts, results, residuals, started))
}
