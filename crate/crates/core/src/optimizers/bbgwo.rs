//! Bare bones grey wolf search: the randomized three-leader move is
//! replaced by a single normal draw per dimension whose mean and standard
//! deviation match the move exactly.

use super::engine;
use super::{Optimizer, OptimizerId, RunConfig, RunResult};
use crate::distmath::update_moments;
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::population::Leaders;
use crate::rng::RngStream;

/// One position update: per dimension, a normal draw with the move's mean
/// `(p1 + p2 + p3) / 3` and standard deviation
/// `a * sqrt(sum_k [(x - p_k)^2 + p_k^2 / 3] / 27)`. A zero deviation
/// (for instance `a == 0`) yields exactly the mean.
pub fn bbgwo_step(
    position: &[f64],
    leaders: &Leaders,
    a: f64,
    rng: &mut RngStream,
) -> Result<Vec<f64>> {
    if a < 0.0 || !a.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "step radius must be a nonnegative finite number, got {a}"
        )));
    }
    let d = position.len();
    for leader in leaders.as_array() {
        if leader.position.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: leader.position.len(),
            });
        }
    }
    let [alpha, beta, delta] = leaders.as_array();
    let mut next = Vec::with_capacity(d);
    for j in 0..d {
        let (mu, sigma) = update_moments(
            a,
            position[j],
            alpha.position[j],
            beta.position[j],
            delta.position[j],
        );
        next.push(rng.normal(mu, sigma)?);
    }
    Ok(next)
}

pub struct BareBonesGreyWolf;

impl Optimizer for BareBonesGreyWolf {
    fn id(&self) -> OptimizerId {
        OptimizerId::Bbgwo
    }

    fn run(&self, objective: &dyn Objective, config: &RunConfig) -> Result<RunResult> {
        engine::run_with_leaders(objective, config, bbgwo_step)
    }
}
