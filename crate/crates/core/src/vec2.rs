//! The planar vector algebra: tilde operator, dot and symplectic inner
//! products, polar form and similarity transforms.
//!
//! Sign convention: `tilde(a) = J a = (-a.y, a.x)` with
//! `J = [[0, -1], [1, 0]]`, a counterclockwise quarter turn. With it,
//! `symp(a, b) = tilde(a)·b = a.x b.y - a.y b.x` and the compatibility
//! relation reads `dot(a, b) = symp(a, tilde(b))`.

use std::f64::consts::{PI, TAU};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl From<[f64; 2]> for Vec2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Vec2 { x, y }
    }
}

impl From<Vec2> for [f64; 2] {
    fn from(v: Vec2) -> Self {
        [v.x, v.y]
    }
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };
    pub const X: Vec2 = Vec2 { x: 1.0, y: 0.0 };
    pub const Y: Vec2 = Vec2 { x: 0.0, y: 1.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Checked constructor for values coming from outside the crate.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Vec2 { x, y })
        } else {
            Err(Error::NonFinite)
        }
    }

    /// Unit vector `e_α = (cos α, sin α)`.
    #[inline]
    pub fn unit(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Vec2 { x: c, y: s }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn is_zero(self) -> bool {
        self.x == 0.0 && self.y == 0.0
    }

    /// `J a`: swap the components and negate the new first one.
    #[inline]
    pub fn tilde(self) -> Self {
        Vec2 { x: -self.y, y: self.x }
    }

    #[inline]
    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// Signed area of the parallelogram spanned by `self` and `other`,
    /// positive when `other` lies counterclockwise from `self`.
    #[inline]
    pub fn symp(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// `a / a²`, the element with `a · a⁻¹ = 1`.
    pub fn inverse(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self / self.norm_squared())
    }

    pub fn normalized(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self / self.norm())
    }

    /// Polar angle `atan2(y, x)`; `(0, 0)` yields `0`.
    #[inline]
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn to_polar(self) -> Result<Polar> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Polar {
            magnitude: self.norm(),
            angle: self.angle(),
        })
    }

    /// Directed angle from `self` to `other` in `(-π, π]`.
    pub fn directed_angle(self, other: Self) -> Result<f64> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.symp(other).atan2(self.dot(other)))
    }

    /// `c a + d ã`, equal to the complex product `(x + iy)(c + id)`.
    #[inline]
    pub fn similarity(self, c: f64, d: f64) -> Self {
        Vec2 {
            x: c * self.x - d * self.y,
            y: c * self.y + d * self.x,
        }
    }

    /// `(c a - d ã) / (c² + d²)`, the inverse of [`Vec2::similarity`].
    pub fn similarity_div(self, c: f64, d: f64) -> Result<Self> {
        let scale = c * c + d * d;
        if scale == 0.0 {
            return Err(Error::DegenerateScale);
        }
        Ok(Vec2 {
            x: (c * self.x + d * self.y) / scale,
            y: (c * self.y - d * self.x) / scale,
        })
    }

    /// `a cos φ + ã sin φ`.
    pub fn rotate(self, phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        self.similarity(c, s)
    }
}

#[inline]
pub fn tilde(a: Vec2) -> Vec2 {
    a.tilde()
}

#[inline]
pub fn dot(a: Vec2, b: Vec2) -> f64 {
    a.dot(b)
}

#[inline]
pub fn symp(a: Vec2, b: Vec2) -> f64 {
    a.symp(b)
}

#[inline]
pub fn norm(a: Vec2) -> f64 {
    a.norm()
}

pub fn directed_angle(a: Vec2, b: Vec2) -> Result<f64> {
    a.directed_angle(b)
}

/// Map an angle into `(-π, π]`.
pub fn normalize_angle(angle: f64) -> f64 {
    if angle > -PI && angle <= PI {
        return angle;
    }
    let wrapped = (angle + PI).rem_euclid(TAU) - PI;
    if wrapped <= -PI {
        wrapped + TAU
    } else {
        wrapped
    }
}

/// Polar notation `a = m e_α`. The magnitude may be negative on input;
/// [`Vec2::to_polar`] always produces a non-negative one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Polar {
    pub magnitude: f64,
    pub angle: f64,
}

impl Polar {
    pub fn new(magnitude: f64, angle: f64) -> Self {
        Polar {
            magnitude,
            angle: normalize_angle(angle),
        }
    }

    pub fn to_vec2(self) -> Vec2 {
        Vec2::unit(self.angle) * self.magnitude
    }
}

impl From<Polar> for Vec2 {
    fn from(p: Polar) -> Self {
        p.to_vec2()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign for Vec2 {
    fn add_assign(&mut self, rhs: Vec2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl SubAssign for Vec2 {
    fn sub_assign(&mut self, rhs: Vec2) {
        self.x -= rhs.x;
        self.y -= rhs.y;
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, rhs: Vec2) -> Vec2 {
        rhs * self
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn div(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x / rhs, self.y / rhs)
    }
}
