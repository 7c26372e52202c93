//! The one-dimensional harmonic oscillator in phase space.
//!
//! A state `(q, p)` is carried as a [`Vec2`], so the Hamiltonian vector
//! field `(q̇, ṗ) = -J∇H` is literally `-tilde(∇H)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vec2::Vec2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorParams {
    pub mass: f64,
    pub stiffness: f64,
}

impl OscillatorParams {
    pub fn new(mass: f64, stiffness: f64) -> Result<Self> {
        if !(mass.is_finite() && stiffness.is_finite()) {
            return Err(Error::NonFinite);
        }
        if mass <= 0.0 {
            return Err(Error::InvalidParameter("mass must be positive"));
        }
        if stiffness <= 0.0 {
            return Err(Error::InvalidParameter("stiffness must be positive"));
        }
        Ok(OscillatorParams { mass, stiffness })
    }

    /// Angular frequency `√(k/m)`.
    pub fn omega(&self) -> f64 {
        (self.stiffness / self.mass).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseState {
    pub q: f64,
    pub p: f64,
    pub t: f64,
}

impl PhaseState {
    pub fn new(q: f64, p: f64, t: f64) -> Self {
        PhaseState { q, p, t }
    }

    pub fn point(&self) -> Vec2 {
        Vec2::new(self.q, self.p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ExplicitEuler,
    SymplecticEuler,
    Leapfrog,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::ExplicitEuler, Method::SymplecticEuler, Method::Leapfrog];

    pub fn is_symplectic(self) -> bool {
        !matches!(self, Method::ExplicitEuler)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub params: OscillatorParams,
    pub dt: f64,
    pub integrator: Method,
    pub states: Vec<PhaseState>,
}

/// `H = p²/(2m) + k q²/2`.
pub fn hamiltonian(s: &PhaseState, params: &OscillatorParams) -> f64 {
    0.5 * s.p * s.p / params.mass + 0.5 * params.stiffness * s.q * s.q
}

/// `L = p²/(2m) - k q²/2`, written in phase-space variables.
pub fn lagrangian(s: &PhaseState, params: &OscillatorParams) -> f64 {
    0.5 * s.p * s.p / params.mass - 0.5 * params.stiffness * s.q * s.q
}

/// `∇H = (∂H/∂q, ∂H/∂p) = (k q, p/m)`.
pub fn gradient(s: &PhaseState, params: &OscillatorParams) -> Vec2 {
    Vec2::new(params.stiffness * s.q, s.p / params.mass)
}

/// `(q̇, ṗ) = -J∇H = (p/m, -k q)`.
pub fn hamiltonian_field(s: &PhaseState, params: &OscillatorParams) -> (f64, f64) {
    let f = -gradient(s, params).tilde();
    (f.x, f.y)
}

fn check_dt(dt: f64) -> Result<()> {
    if dt > 0.0 && dt.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidStep("dt must be positive and finite"))
    }
}

/// Advance one fixed step of length `dt`.
pub fn step(s: &PhaseState, params: &OscillatorParams, dt: f64, method: Method) -> Result<PhaseState> {
    check_dt(dt)?;
    let field = |q: f64, p: f64| hamiltonian_field(&PhaseState::new(q, p, s.t), params);
    let (q, p) = match method {
        Method::ExplicitEuler => {
            let (q_dot, p_dot) = field(s.q, s.p);
            (s.q + dt * q_dot, s.p + dt * p_dot)
        }
        Method::SymplecticEuler => {
            let (_, p_dot) = field(s.q, s.p);
            let p = s.p + dt * p_dot;
            let (q_dot, _) = field(s.q, p);
            (s.q + dt * q_dot, p)
        }
        Method::Leapfrog => {
            let half = 0.5 * dt;
            let (_, p_dot) = field(s.q, s.p);
            let p_half = s.p + half * p_dot;
            let (q_dot, _) = field(s.q, p_half);
            let q = s.q + dt * q_dot;
            let (_, p_dot) = field(q, p_half);
            (q, p_half + half * p_dot)
        }
    };
    Ok(PhaseState { q, p, t: s.t + dt })
}

/// `n_steps` fixed steps; the trajectory holds `n_steps + 1` states.
pub fn simulate(
    initial: &PhaseState,
    params: &OscillatorParams,
    dt: f64,
    n_steps: usize,
    method: Method,
) -> Result<Trajectory> {
    check_dt(dt)?;
    if n_steps < 1 {
        return Err(Error::InvalidStep("need at least one step"));
    }
    let mut states = Vec::with_capacity(n_steps + 1);
    let mut s = *initial;
    states.push(s);
    for _ in 0..n_steps {
        s = step(&s, params, dt, method)?;
        states.push(s);
    }
    Ok(Trajectory {
        params: *params,
        dt,
        integrator: method,
        states,
    })
}

/// Exact flow of the linear system, evaluated at absolute time `t`.
pub fn analytic_oscillator(t: f64, initial: &PhaseState, params: &OscillatorParams) -> PhaseState {
    let w = params.omega();
    let mw = params.mass * w;
    let (sn, cs) = (w * (t - initial.t)).sin_cos();
    PhaseState {
        q: initial.q * cs + initial.p / mw * sn,
        p: initial.p * cs - mw * initial.q * sn,
        t,
    }
}

/// `H(s) - H(initial)`: zero exactly on the energy ellipse through `initial`.
pub fn ellipse_residual(s: &PhaseState, initial: &PhaseState, params: &OscillatorParams) -> f64 {
    hamiltonian(s, params) - hamiltonian(initial, params)
}
