//! Mixed absolute/relative comparison used by every floating check.

use serde::{Deserialize, Serialize};

pub const DEFAULT_ATOL: f64 = 1e-14;
pub const DEFAULT_RTOL: f64 = 1e-12;

/// `|x - y| <= atol + rtol * max(|x|, |y|)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub atol: f64,
    pub rtol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            atol: DEFAULT_ATOL,
            rtol: DEFAULT_RTOL,
        }
    }
}

impl Tolerance {
    pub const fn new(atol: f64, rtol: f64) -> Self {
        Tolerance { atol, rtol }
    }

    pub fn close(&self, x: f64, y: f64) -> bool {
        (x - y).abs() <= self.atol + self.rtol * x.abs().max(y.abs())
    }

    pub fn close_all(&self, xs: &[f64], ys: &[f64]) -> bool {
        xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| self.close(*x, *y))
    }

    /// Deviation normalized so that `excess <= 1` iff `close`.
    pub fn excess(&self, x: f64, y: f64) -> f64 {
        (x - y).abs() / (self.atol + self.rtol * x.abs().max(y.abs()))
    }
}

/// Largest componentwise absolute difference.
pub fn max_abs_diff(xs: &[f64], ys: &[f64]) -> f64 {
    xs.iter()
        .zip(ys)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// `|x - y| / max(1, |x|, |y|)`, the scale used for O(1) quantities.
pub fn scaled_diff(x: f64, y: f64) -> f64 {
    (x - y).abs() / 1f64.max(x.abs()).max(y.abs())
}
