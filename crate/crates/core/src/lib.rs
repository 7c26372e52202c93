//! Planar symplectic geometry.
//!
//! Everything here is built from four operations on [`Vec2`]: addition,
//! scaling, the dot product and the tilde operator `J` (counterclockwise
//! quarter turn). Their combination, the symplectic inner product
//! `symp(a, b) = tilde(a)·b`, is the signed parallelogram area and drives
//! every construction in the crate:
//!
//! - [`vec2`]: the vector algebra, polar form and similarity transforms.
//! - [`identities`]: Jacobi, Grassmann, Lagrange and Binet-Cauchy identities
//!   as computable residuals.
//! - [`geometry`]: collinearity, simple and cross ratios, line intersection,
//!   circle tangents.
//! - [`kinematics`]: polar-vector derivatives and the inverted slider crank.
//! - [`dynamics`]: the harmonic oscillator as the Hamiltonian field `-J∇H`
//!   with fixed-step integrators.

pub mod dynamics;
pub mod error;
pub mod geometry;
pub mod identities;
pub mod kinematics;
pub mod rng;
pub mod tolerance;
pub mod vec2;

pub use dynamics::{
    analytic_oscillator, ellipse_residual, hamiltonian, hamiltonian_field, simulate, step,
    Method, OscillatorParams, PhaseState, Trajectory,
};
pub use error::{Error, Result};
pub use geometry::{
    circle_tangents, collinearity_residual, cross_ratio, intersect_lines, is_collinear,
    jacobi_triangle_residual, point_circle_tangents, project_point_onto_line, simple_ratio,
    Circle, Intersection, Line, Tangent, TangentKind,
};
pub use identities::{identity_residuals, IdentityResiduals};
pub use kinematics::{
    crank_acceleration, crank_position, crank_state, crank_sweep, crank_velocity,
    polar_kinematics, CrankConfig, CrankPosition, CrankState, PolarMotion, SweepEntry,
    SweepStatus,
};
pub use tolerance::Tolerance;
pub use vec2::{directed_angle, dot, norm, symp, tilde, Polar, Vec2};
