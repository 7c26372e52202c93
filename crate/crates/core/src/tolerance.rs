//! The single comparison policy used across the crate:
//! `|lhs - rhs| <= atol + rtol * scale`.

/// Absolute tolerance used for degeneracy thresholds.
pub const ATOL: f64 = 1e-12;
/// Relative tolerance for approximate comparisons.
pub const RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub atol: f64,
    pub rtol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { atol: ATOL, rtol: RTOL }
    }
}

impl Tolerance {
    pub const fn new(atol: f64, rtol: f64) -> Self {
        Tolerance { atol, rtol }
    }

    /// Compare with an explicit scale.
    pub fn close_scaled(&self, lhs: f64, rhs: f64, scale: f64) -> bool {
        (lhs - rhs).abs() <= self.atol + self.rtol * scale.abs()
    }

    /// Compare using the larger operand magnitude as scale.
    pub fn close(&self, lhs: f64, rhs: f64) -> bool {
        self.close_scaled(lhs, rhs, lhs.abs().max(rhs.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_policy() {
        let tol = Tolerance::default();
        assert!(tol.close(1.0, 1.0 + 5e-10));
        assert!(!tol.close(1.0, 1.0 + 5e-9));
        assert!(tol.close(0.0, 5e-13));
        assert!(!tol.close(0.0, 5e-12));
        assert!(tol.close_scaled(1e6, 1e6 + 1e-4, 1e6));
    }
}
