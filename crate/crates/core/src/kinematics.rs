//! Polar-vector kinematics and the inverted slider crank.
//!
//! The crank `a = a·e_φ` turns at constant rate φ̇ about the origin; the
//! rocker runs from the crank tip through the fixed slider pivot `c`. The
//! loop closure `a + s·e_ψ - c = 0` and its first two time derivatives are
//! solved in closed form by projecting onto `e_ψ` and `ẽ_ψ`:
//!
//! ```text
//! ṡ = φ̇ a·ẽ_ψ            ψ̇ = -φ̇ (a·e_ψ) / s
//! s̈ = ψ̇ (ψ̇ - φ̇) s        ψ̈ = (φ̇ - 2ψ̇) ṡ / s
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::ATOL;
use crate::vec2::{normalize_angle, Vec2};

/// Below this fraction of the crank length a state is computed but flagged.
pub const NEAR_SINGULAR_RATIO: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarMotion {
    pub r: f64,
    pub r_dot: f64,
    pub r_ddot: f64,
    pub phi: f64,
    pub phi_dot: f64,
    pub phi_ddot: f64,
}

/// Position, velocity and acceleration of `r(t) = r(t)·e_φ(t)`.
pub fn polar_kinematics(m: &PolarMotion) -> (Vec2, Vec2, Vec2) {
    let e = Vec2::unit(m.phi);
    let et = e.tilde();
    let position = e * m.r;
    let velocity = e * m.r_dot + et * (m.phi_dot * m.r);
    let acceleration = e * (m.r_ddot - m.phi_dot * m.phi_dot * m.r)
        + et * (m.phi_ddot * m.r + 2.0 * m.phi_dot * m.r_dot);
    (position, velocity, acceleration)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrankConfig {
    pub crank_length: f64,
    pub pivot_c: Vec2,
    pub phi_dot: f64,
}

impl CrankConfig {
    pub fn new(crank_length: f64, pivot_c: Vec2, phi_dot: f64) -> Result<Self> {
        if !(crank_length.is_finite() && pivot_c.is_finite() && phi_dot.is_finite()) {
            return Err(Error::NonFinite);
        }
        if crank_length <= 0.0 {
            return Err(Error::InvalidParameter("crank length must be positive"));
        }
        Ok(CrankConfig {
            crank_length,
            pivot_c,
            phi_dot,
        })
    }

    /// The crank vector `a` at angle `phi`.
    pub fn crank_tip(&self, phi: f64) -> Vec2 {
        Vec2::unit(phi) * self.crank_length
    }

    fn singular_threshold(&self) -> f64 {
        ATOL * (1.0 + self.pivot_c.norm())
    }

    fn check_s(&self, s: f64) -> Result<()> {
        if s <= self.singular_threshold() {
            Err(Error::SingularPosition(s))
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrankPosition {
    pub phi: f64,
    pub s: f64,
    pub e_psi: Vec2,
    pub psi: f64,
}

/// Full kinematic state at one crank angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrankState {
    pub phi: f64,
    pub s: f64,
    pub psi: f64,
    pub s_dot: f64,
    pub psi_dot: f64,
    pub s_ddot: f64,
    pub psi_ddot: f64,
    pub e_psi: Vec2,
}

impl CrankState {
    /// Norms of the position, velocity and acceleration loop residuals:
    ///
    /// ```text
    /// a + s e_ψ - c
    /// φ̇ ã + ṡ e_ψ + ψ̇ s ẽ_ψ
    /// -φ̇² a + (s̈ - ψ̇² s) e_ψ + (ψ̈ s + 2 ψ̇ ṡ) ẽ_ψ
    /// ```
    pub fn loop_residuals(&self, cfg: &CrankConfig) -> [f64; 3] {
        let a = cfg.crank_tip(self.phi);
        let e = self.e_psi;
        let et = e.tilde();
        let w = cfg.phi_dot;
        let position = a + e * self.s - cfg.pivot_c;
        let velocity = a.tilde() * w + e * self.s_dot + et * (self.psi_dot * self.s);
        let acceleration = -(a * (w * w))
            + e * (self.s_ddot - self.psi_dot * self.psi_dot * self.s)
            + et * (self.psi_ddot * self.s + 2.0 * self.psi_dot * self.s_dot);
        [position.norm(), velocity.norm(), acceleration.norm()]
    }
}

/// Slider length and rocker direction from `s e_ψ = c - a`.
pub fn crank_position(cfg: &CrankConfig, phi: f64) -> Result<CrankPosition> {
    let d = cfg.pivot_c - cfg.crank_tip(phi);
    let s = d.norm();
    cfg.check_s(s)?;
    let e_psi = d / s;
    Ok(CrankPosition {
        phi,
        s,
        e_psi,
        psi: e_psi.angle(),
    })
}

/// `(ṡ, ψ̇)` from projecting the velocity loop onto `e_ψ` and `ẽ_ψ`.
pub fn crank_velocity(cfg: &CrankConfig, pos: &CrankPosition) -> Result<(f64, f64)> {
    cfg.check_s(pos.s)?;
    let a = cfg.crank_tip(pos.phi);
    let s_dot = cfg.phi_dot * a.dot(pos.e_psi.tilde());
    let psi_dot = -cfg.phi_dot * a.dot(pos.e_psi) / pos.s;
    Ok((s_dot, psi_dot))
}

/// `(s̈, ψ̈)` for a constant drive rate (φ̈ = 0).
pub fn crank_acceleration(
    cfg: &CrankConfig,
    pos: &CrankPosition,
    s_dot: f64,
    psi_dot: f64,
) -> Result<(f64, f64)> {
    cfg.check_s(pos.s)?;
    let w = cfg.phi_dot;
    let s_ddot = psi_dot * (psi_dot - w) * pos.s;
    let psi_ddot = (w - 2.0 * psi_dot) * s_dot / pos.s;
    Ok((s_ddot, psi_ddot))
}

pub fn crank_state(cfg: &CrankConfig, phi: f64) -> Result<CrankState> {
    let pos = crank_position(cfg, phi)?;
    let (s_dot, psi_dot) = crank_velocity(cfg, &pos)?;
    let (s_ddot, psi_ddot) = crank_acceleration(cfg, &pos, s_dot, psi_dot)?;
    Ok(CrankState {
        phi,
        s: pos.s,
        psi: pos.psi,
        s_dot,
        psi_dot,
        s_ddot,
        psi_ddot,
        e_psi: pos.e_psi,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepStatus {
    Regular,
    /// Computed, but `s` is below [`NEAR_SINGULAR_RATIO`] times the crank
    /// length and the rates are noise-amplified.
    NearSingular,
    /// `s` vanished; no state.
    Singular,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub index: usize,
    pub phi: f64,
    /// `(φ - φ_start) / φ̇`, absent for a frozen drive.
    pub t: Option<f64>,
    pub status: SweepStatus,
    pub state: Option<CrankState>,
    /// ψ made continuous across the sweep.
    pub psi_unwrapped: Option<f64>,
}

/// Evaluate the crank at `steps` evenly spaced angles including both ends.
pub fn crank_sweep(
    cfg: &CrankConfig,
    phi_start: f64,
    phi_end: f64,
    steps: usize,
) -> Result<Vec<SweepEntry>> {
    if steps < 2 {
        return Err(Error::InvalidParameter("sweep needs at least two steps"));
    }
    if !(phi_start.is_finite() && phi_end.is_finite()) {
        return Err(Error::NonFinite);
    }
    let span = phi_end - phi_start;
    let last = steps - 1;
    let mut prev_psi: Option<(f64, f64)> = None;
    let entries = (0..steps)
        .map(|index| {
            let phi = if index == last {
                phi_end
            } else {
                phi_start + span * (index as f64 / last as f64)
            };
            let t = (cfg.phi_dot != 0.0).then(|| (phi - phi_start) / cfg.phi_dot);
            match crank_state(cfg, phi) {
                Ok(state) => {
                    let unwrapped = match prev_psi {
                        Some((raw, acc)) => acc + normalize_angle(state.psi - raw),
                        None => state.psi,
                    };
                    prev_psi = Some((state.psi, unwrapped));
                    let status = if state.s < NEAR_SINGULAR_RATIO * cfg.crank_length {
                        SweepStatus::NearSingular
                    } else {
                        SweepStatus::Regular
                    };
                    SweepEntry {
                        index,
                        phi,
                        t,
                        status,
                        state: Some(state),
                        psi_unwrapped: Some(unwrapped),
                    }
                }
                Err(_) => SweepEntry {
                    index,
                    phi,
                    t,
                    status: SweepStatus::Singular,
                    state: None,
                    psi_unwrapped: None,
                },
            }
        })
        .collect();
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_6, PI, TAU};

    fn cfg(len: f64, cx: f64, cy: f64, w: f64) -> CrankConfig {
        CrankConfig::new(len, Vec2::new(cx, cy), w).unwrap()
    }

    #[test]
    fn polar_statics() {
        let m = PolarMotion { r: 1.0, r_dot: 0.0, r_ddot: 0.0, phi: 0.0, phi_dot: 0.0, phi_ddot: 0.0 };
        let (p, v, a) = polar_kinematics(&m);
        assert_eq!(p, Vec2::new(1.0, 0.0));
        assert_eq!(v, Vec2::ZERO);
        assert_eq!(a, Vec2::ZERO);
    }

    #[test]
    fn polar_uniform_circular_motion() {
        let m = PolarMotion { r: 1.0, r_dot: 0.0, r_ddot: 0.0, phi: 0.0, phi_dot: 1.0, phi_ddot: 0.0 };
        let (_, v, a) = polar_kinematics(&m);
        assert_eq!(v, Vec2::new(0.0, 1.0));
        assert_eq!(a, Vec2::new(-1.0, 0.0));
    }

    #[test]
    fn polar_matches_finite_differences() {
        let m = PolarMotion { r: 2.0, r_dot: 0.3, r_ddot: 0.1, phi: FRAC_PI_6, phi_dot: 0.5, phi_ddot: -0.2 };
        // r(t), φ(t) as quadratics through the given state at t = 0
        let path = |t: f64| {
            let r = m.r + m.r_dot * t + 0.5 * m.r_ddot * t * t;
            let phi = m.phi + m.phi_dot * t + 0.5 * m.phi_ddot * t * t;
            Vec2::unit(phi) * r
        };
        let h = 1e-5;
        let fd_v = (path(h) - path(-h)) / (2.0 * h);
        let fd_a = (path(h) - path(0.0) * 2.0 + path(-h)) / (h * h);
        let (p, v, a) = polar_kinematics(&m);
        assert!((p - path(0.0)).norm() < 1e-15);
        assert!((v - fd_v).norm() < 1e-6, "{v:?} vs {fd_v:?}");
        assert!((a - fd_a).norm() < 1e-4, "{a:?} vs {fd_a:?}");
    }

    #[test]
    fn position_examples() {
        let c = cfg(1.0, 3.0, 0.0, 1.0);
        let p = crank_position(&c, 0.0).unwrap();
        assert_eq!((p.s, p.e_psi, p.psi), (2.0, Vec2::X, 0.0));
        let p = crank_position(&c, PI).unwrap();
        assert!((p.s - 4.0).abs() < 1e-15);
        assert!((p.e_psi - Vec2::X).norm() < 1e-15);
        assert!(matches!(
            crank_position(&cfg(1.0, 1.0, 0.0, 1.0), 0.0),
            Err(Error::SingularPosition(_))
        ));
    }

    #[test]
    fn velocity_examples() {
        let c = cfg(1.0, 3.0, 0.0, 1.0);
        let p = crank_position(&c, 0.0).unwrap();
        let (s_dot, psi_dot) = crank_velocity(&c, &p).unwrap();
        assert_eq!(s_dot, 0.0);
        assert_eq!(psi_dot, -0.5);

        let frozen = cfg(1.0, 3.0, 0.5, 0.0);
        let p = crank_position(&frozen, 1.0).unwrap();
        assert_eq!(crank_velocity(&frozen, &p).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn acceleration_examples() {
        let c = cfg(1.0, 3.0, 0.0, 1.0);
        let p = crank_position(&c, 0.0).unwrap();
        // s² = 10 - 6 cos φ, so at φ = 0 with φ̇ = 1: s s̈ = 3 - ṡ² = 3
        let (s_ddot, psi_ddot) = crank_acceleration(&c, &p, 0.0, -0.5).unwrap();
        assert_eq!(s_ddot, 1.5);
        assert_eq!(psi_ddot, 0.0);

        let frozen = cfg(1.0, 3.0, 0.5, 0.0);
        let st = crank_state(&frozen, 1.0).unwrap();
        assert_eq!((st.s_ddot, st.psi_ddot), (0.0, 0.0));
    }

    #[test]
    fn acceleration_matches_closed_form_length() {
        // s(φ) = sqrt(10 - 6 cos φ) for a = 1, c = (3, 0)
        let c = cfg(1.0, 3.0, 0.0, 1.3);
        for k in 0..12 {
            let phi = 0.1 + k as f64 * 0.5;
            let st = crank_state(&c, phi).unwrap();
            let w = c.phi_dot;
            let s = (10.0 - 6.0 * phi.cos()).sqrt();
            let s_dot = 3.0 * phi.sin() * w / s;
            let s_ddot = (3.0 * phi.cos() * w * w - s_dot * s_dot) / s;
            assert!((st.s - s).abs() < 1e-14);
            assert!((st.s_dot - s_dot).abs() < 1e-13);
            assert!((st.s_ddot - s_ddot).abs() < 1e-13);
        }
    }

    #[test]
    fn singular_position_propagates() {
        let c = cfg(1.0, 1.0, 0.0, 1.0);
        assert!(matches!(crank_state(&c, 0.0), Err(Error::SingularPosition(_))));
        let bad = CrankPosition { phi: 0.0, s: 0.0, e_psi: Vec2::X, psi: 0.0 };
        assert!(crank_velocity(&c, &bad).is_err());
        assert!(crank_acceleration(&c, &bad, 0.0, 0.0).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(CrankConfig::new(0.0, Vec2::X, 1.0).is_err());
        assert!(CrankConfig::new(-1.0, Vec2::X, 1.0).is_err());
        assert_eq!(CrankConfig::new(1.0, Vec2::new(f64::NAN, 0.0), 1.0), Err(Error::NonFinite));
    }

    #[test]
    fn sweep_two_steps() {
        let c = cfg(1.0, 3.0, 0.0, 1.0);
        let sw = crank_sweep(&c, 0.0, PI, 2).unwrap();
        assert_eq!(sw.len(), 2);
        assert_eq!(sw[0].state.unwrap(), crank_state(&c, 0.0).unwrap());
        assert_eq!(sw[1].state.unwrap(), crank_state(&c, PI).unwrap());
        assert_eq!(sw[1].phi, PI);
        assert_eq!(sw[1].t, Some(PI));
    }

    #[test]
    fn sweep_equal_endpoints() {
        let c = cfg(1.0, 3.0, 0.0, 1.0);
        let sw = crank_sweep(&c, 0.7, 0.7, 2).unwrap();
        assert_eq!(sw[0].state, sw[1].state);
        assert!(crank_sweep(&c, 0.0, 1.0, 1).is_err());
    }

    #[test]
    fn sweep_full_revolution_extremes() {
        let c = cfg(1.0, 3.0, 0.0, 1.0);
        let sw = crank_sweep(&c, 0.0, TAU, 361).unwrap();
        let states: Vec<_> = sw.iter().map(|e| e.state.unwrap()).collect();
        let (imax, max) = states
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.s.total_cmp(&b.1.s))
            .unwrap();
        let (imin, min) = states
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.s.total_cmp(&b.1.s))
            .unwrap();
        assert!((max.s - 4.0).abs() < 1e-12);
        assert_eq!(imax, 180);
        assert!((min.s - 2.0).abs() < 1e-12);
        assert!(imin == 0 || imin == 360);
        for (e, st) in sw.iter().zip(&states) {
            assert_eq!(e.status, SweepStatus::Regular);
            let [p, v, a] = st.loop_residuals(&c);
            assert!(p <= 1e-9 * 4.0 && v <= 1e-9 * 4.0 && a <= 1e-8 * 4.0);
        }
    }

    #[test]
    fn sweep_flags_singular_entries() {
        // pivot on the crank circle: s vanishes at φ = 0
        let c = cfg(1.0, 1.0, 0.0, 1.0);
        let sw = crank_sweep(&c, -PI / 2.0, PI / 2.0, 3).unwrap();
        assert_eq!(sw.len(), 3);
        assert_eq!(sw[1].status, SweepStatus::Singular);
        assert!(sw[1].state.is_none());
        assert_eq!(sw[0].status, SweepStatus::Regular);
        assert_eq!(sw[2].status, SweepStatus::Regular);
    }

    #[test]
    fn sweep_flags_near_singular() {
        let c = cfg(1.0, 1.0 + 1e-8, 0.0, 1.0);
        let sw = crank_sweep(&c, 0.0, 0.0, 2).unwrap();
        assert_eq!(sw[0].status, SweepStatus::NearSingular);
        assert!(sw[0].state.is_some());
    }

    #[test]
    fn unwrapped_psi_is_continuous() {
        // pivot inside the crank circle: ψ turns a full revolution
        let c = cfg(2.0, 0.5, 0.0, 1.0);
        let sw = crank_sweep(&c, 0.0, 2.0 * TAU, 721).unwrap();
        let psi: Vec<f64> = sw.iter().map(|e| e.psi_unwrapped.unwrap()).collect();
        for w in psi.windows(2) {
            assert!((w[1] - w[0]).abs() < 0.1);
        }
        assert!(((psi[720] - psi[0]).abs() - 2.0 * TAU).abs() < 1e-9);
    }

    #[test]
    fn frozen_drive_has_no_time() {
        let c = cfg(1.0, 3.0, 0.0, 0.0);
        let sw = crank_sweep(&c, 0.0, 1.0, 3).unwrap();
        assert!(sw.iter().all(|e| e.t.is_none()));
    }
}
