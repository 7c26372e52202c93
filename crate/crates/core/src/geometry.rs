//! Closed-form constructions expressed through directed areas: collinearity,
//! simple and cross ratios, line intersection, perpendicular projection and
//! common tangents of two circles.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::ATOL;
use crate::vec2::{symp, tilde, Vec2};

/// Infinite line through `point` along `direction`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub point: Vec2,
    pub direction: Vec2,
}

impl Line {
    pub fn new(point: Vec2, direction: Vec2) -> Result<Self> {
        if !point.is_finite() || !direction.is_finite() {
            return Err(Error::NonFinite);
        }
        if direction.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(Line { point, direction })
    }

    pub fn at(&self, t: f64) -> Vec2 {
        self.point + self.direction * t
    }

    /// Unsigned distance from `p` to the line.
    pub fn distance(&self, p: Vec2) -> f64 {
        symp(self.direction, p - self.point).abs() / self.direction.norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Vec2,
    pub radius: f64,
}

impl Circle {
    /// A zero radius is allowed and encodes a point.
    pub fn new(center: Vec2, radius: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::NonFinite);
        }
        if !(radius >= 0.0 && radius.is_finite()) {
            return Err(Error::InvalidRadius(radius));
        }
        Ok(Circle { center, radius })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Intersection {
    pub point: Vec2,
    pub lambda: f64,
    pub mu: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TangentKind {
    Outer,
    Inner,
}

impl TangentKind {
    /// Sign of `R₂` in the loop closure `R₁e + λẽ ± R₂e - a = 0`.
    fn sign(self) -> f64 {
        match self {
            TangentKind::Outer => -1.0,
            TangentKind::Inner => 1.0,
        }
    }
}

/// A common tangent of two circles. The tangent line runs through
/// `touch1` along `tilde(direction_e)`; `direction_e` is the unit normal
/// pointing from the first center to its touch point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tangent {
    pub touch1: Vec2,
    pub touch2: Vec2,
    pub direction_e: Vec2,
    pub kind: TangentKind,
    pub lambda: f64,
}

impl Tangent {
    pub fn line(&self) -> Line {
        Line {
            point: self.touch1,
            direction: tilde(self.direction_e),
        }
    }

    /// Distance from `p` to the tangent line.
    pub fn distance(&self, p: Vec2) -> f64 {
        (p - self.touch1).dot(self.direction_e).abs() / self.direction_e.norm()
    }
}

/// `ãb + b̃c + c̃a`: twice the signed area of triangle ABC.
pub fn collinearity_residual(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    symp(a, b) + symp(b, c) + symp(c, a)
}

/// Thresholded collinearity test, invariant under uniform scaling of the
/// input.
pub fn is_collinear(a: Vec2, b: Vec2, c: Vec2, tol: f64) -> bool {
    let (na, nb, nc) = (a.norm(), b.norm(), c.norm());
    let scale = 1f64.max(na * nb).max(nb * nc).max(nc * na);
    collinearity_residual(a, b, c).abs() <= tol * scale
}

/// `ãb / b̃c`. For collinear endpoints this is the signed ratio AB/BC. B
/// need not be collinear with A and C; the value does not depend on the
/// scaling of `b`.
pub fn simple_ratio(a: Vec2, b: Vec2, c: Vec2) -> Result<f64> {
    let den = symp(b, c);
    if den.abs() <= ATOL {
        return Err(Error::DegenerateDenominator(den));
    }
    Ok(symp(a, b) / den)
}

/// `(ãc)(b̃d) / ((b̃c)(ãd))`.
pub fn cross_ratio(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> Result<f64> {
    let bc = symp(b, c);
    if bc.abs() <= ATOL {
        return Err(Error::DegenerateDenominator(bc));
    }
    let ad = symp(a, d);
    if ad.abs() <= ATOL {
        return Err(Error::DegenerateDenominator(ad));
    }
    Ok(symp(a, c) * symp(b, d) / (bc * ad))
}

/// Solve the triangle loop closure `a + μv - λu = 0` with
/// `a = l2.point - l1.point` for the two scaling factors.
pub fn intersect_lines(l1: &Line, l2: &Line) -> Result<Intersection> {
    let (u, v) = (l1.direction, l2.direction);
    let a = l2.point - l1.point;
    let uv = symp(u, v);
    if uv.abs() <= ATOL * u.norm() * v.norm() {
        return Err(Error::ParallelLines(uv));
    }
    let lambda = -symp(v, a) / uv;
    let mu = symp(a, u) / uv;
    Ok(Intersection {
        point: l1.point + u * lambda,
        lambda,
        mu,
    })
}

/// `(ũv)a + (ṽa)u + (ãu)v`, the triangle equation in Jacobi form. Zero for
/// every input in exact arithmetic.
pub fn jacobi_triangle_residual(u: Vec2, v: Vec2, a: Vec2) -> Vec2 {
    a * symp(u, v) + u * symp(v, a) + v * symp(a, u)
}

/// Foot of the perpendicular from `p` onto `line`: the intersection of
/// `line` with the line through `p` along `tilde(direction)`.
pub fn project_point_onto_line(p: Vec2, line: &Line) -> Result<Vec2> {
    if line.direction.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let normal = Line {
        point: p,
        direction: tilde(line.direction),
    };
    Ok(intersect_lines(line, &normal)?.point)
}

/// Common tangents of two circles, ordered outer(+λ), outer(-λ),
/// inner(+λ), inner(-λ) with branches whose radicand is negative left out.
///
/// With `a` the center offset and `K = R₁ ± R₂`, each branch solves
/// `K e + λẽ = a` as `λ = ±√(a² - K²)`, `e = (K a - λ ã) / a²`.
/// The first touch point is `c₁ + R₁e`; walking `λẽ` along the tangent
/// reaches the second, which is `c₂ + R₂e` for outer tangents and `c₂ - R₂e`
/// for inner ones. A zero radicand yields λ = 0 twice.
pub fn circle_tangents(c1: &Circle, c2: &Circle) -> Result<Vec<Tangent>> {
    let a = c2.center - c1.center;
    let a2 = a.norm_squared();
    if a2.sqrt() <= ATOL {
        return Err(Error::CoincidentCenters);
    }
    let mut out = Vec::with_capacity(4);
    for kind in [TangentKind::Outer, TangentKind::Inner] {
        let sigma = kind.sign();
        let k = c1.radius + sigma * c2.radius;
        let radicand = a2 - k * k;
        if radicand < 0.0 {
            continue;
        }
        let root = radicand.sqrt();
        for lambda in [root, -root] {
            let e = (a * k - tilde(a) * lambda) / a2;
            out.push(Tangent {
                touch1: c1.center + e * c1.radius,
                touch2: c2.center - e * (sigma * c2.radius),
                direction_e: e,
                kind,
                lambda,
            });
        }
    }
    Ok(out)
}

/// The tangents from `p` to `circle`: two when `p` lies outside, none when
/// inside, and the single tangent twice (λ = 0) when `p` is on the circle.
/// `touch1` lies on the circle and `touch2` is `p`.
pub fn point_circle_tangents(p: Vec2, circle: &Circle) -> Vec<Tangent> {
    let point = Circle { center: p, radius: 0.0 };
    match circle_tangents(circle, &point) {
        Ok(all) => all
            .into_iter()
            .filter(|t| t.kind == TangentKind::Outer)
            .collect(),
        Err(_) => Vec::new(),
    }
}
