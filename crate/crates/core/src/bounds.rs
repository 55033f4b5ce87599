//! Box constraints and hard clamping.
//!
//! Positions that leave the search box are clamped component-wise back onto
//! it after every update. This is the only boundary policy implemented.

use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Per-dimension lower and upper limits with `lower[j] < upper[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                got: upper.len(),
            });
        }
        for (j, (&lo, &hi)) in lower.iter().zip(&upper).enumerate() {
            if !lo.is_finite() || !hi.is_finite() || lo >= hi {
                return Err(Error::InvalidParameter(format!(
                    "bounds component {j}: need finite lower < upper, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// Same `[lo, hi]` limits in every dimension.
    pub fn uniform(dimension: usize, lo: f64, hi: f64) -> Result<Self> {
        Self::new(vec![lo; dimension], vec![hi; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Clip every component into its `[lower, upper]` interval. Components
    /// already inside are returned unchanged, so the operation is idempotent.
    pub fn clamp(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got: x.len(),
            });
        }
        Ok(x.iter()
            .zip(self.lower.iter().zip(&self.upper))
            .map(|(&v, (&lo, &hi))| v.clamp(lo, hi))
            .collect())
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(&v, (&lo, &hi))| v >= lo && v <= hi)
    }

    /// Uniform sample of one position inside the box.
    pub fn sample(&self, rng: &mut RngStream) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(&lo, &hi)| rng.uniform(lo, hi).expect("bounds are validated"))
            .collect()
    }
}
