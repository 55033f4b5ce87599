//! Objective function abstraction.

use crate::bounds::Bounds;
use crate::error::{Error, Result};

/// A minimization problem over a box domain.
pub trait Objective: Sync {
    fn dimension(&self) -> usize;
    fn bounds(&self) -> &Bounds;
    fn evaluate(&self, x: &[f64]) -> Result<f64>;
}

/// Objective defined by a closure, for custom problems and tests.
pub struct FnObjective<F: Fn(&[f64]) -> f64 + Sync> {
    bounds: Bounds,
    f: F,
}

impl<F: Fn(&[f64]) -> f64 + Sync> FnObjective<F> {
    pub fn new(bounds: Bounds, f: F) -> Self {
        Self { bounds, f }
    }
}

impl<F: Fn(&[f64]) -> f64 + Sync> Objective for FnObjective<F> {
    fn dimension(&self) -> usize {
        self.bounds.dimension()
    }

    fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got: x.len(),
            });
        }
        for (index, &value) in x.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteInput { index, value });
            }
        }
        Ok((self.f)(x))
    }
}
