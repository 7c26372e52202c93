//! The five identities of the symplectic inner product, each evaluated as
//! left-hand side minus right-hand side. All residuals vanish in exact
//! arithmetic; in floating point they measure rounding error.

use serde::{Deserialize, Serialize};

use crate::vec2::{dot, symp, tilde, Vec2};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityResiduals {
    /// `ã(b̃c) + b̃(c̃a) + c̃(ãb)`
    pub jacobi: Vec2,
    /// `ã(b̃c) + b(c·a) - c(a·b)`
    pub grassmann_full: Vec2,
    /// `(ãb)² + (a·b)² - a²b²`
    pub lagrange: f64,
    /// `ã(b̃a) + b(a·a) - a(b·a)`
    pub grassmann_reduced: Vec2,
    /// `(ãb)(c̃d) - [(a·c)(b·d) - (a·d)(b·c)]`
    pub binet_cauchy: f64,
}

impl IdentityResiduals {
    /// Magnitudes in declaration order.
    pub fn magnitudes(&self) -> [f64; 5] {
        [
            self.jacobi.norm(),
            self.grassmann_full.norm(),
            self.lagrange.abs(),
            self.grassmann_reduced.norm(),
            self.binet_cauchy.abs(),
        ]
    }

    pub const NAMES: [&'static str; 5] = [
        "jacobi",
        "grassmann_full",
        "lagrange",
        "grassmann_reduced",
        "binet_cauchy",
    ];
}

pub fn identity_residuals(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> IdentityResiduals {
    let jacobi = tilde(a) * symp(b, c) + tilde(b) * symp(c, a) + tilde(c) * symp(a, b);
    let grassmann_full = tilde(a) * symp(b, c) + b * dot(c, a) - c * dot(a, b);
    let ab = symp(a, b);
    let lagrange = ab * ab + dot(a, b) * dot(a, b) - a.norm_squared() * b.norm_squared();
    let grassmann_reduced = tilde(a) * symp(b, a) + b * dot(a, a) - a * dot(b, a);
    let binet_cauchy = symp(a, b) * symp(c, d) - (dot(a, c) * dot(b, d) - dot(a, d) * dot(b, c));
    IdentityResiduals {
        jacobi,
        grassmann_full,
        lagrange,
        grassmann_reduced,
        binet_cauchy,
    }
}
