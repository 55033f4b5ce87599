//! Grey wolf search.

use super::engine;
use super::{Optimizer, OptimizerId, RunConfig, RunResult};
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::population::Leaders;
use crate::rng::RngStream;

/// One position update. For each dimension `j` and each leader `k` this
/// draws fresh `A ~ U[-a, a]` and `C ~ U[0, 2]` and averages
/// `p_kj + A |C p_kj - x_j|` over the three leaders.
pub fn gwo_step(
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
    let mut next = Vec::with_capacity(d);
    for j in 0..d {
        let mut acc = 0.0;
        for leader in leaders.as_array() {
            let p = leader.position[j];
            let amp = rng.uniform(-a, a)?;
            let swing = rng.uniform(0.0, 2.0)?;
            acc += p + amp * (swing * p - position[j]).abs();
        }
        next.push(acc / 3.0);
    }
    Ok(next)
}

pub struct GreyWolf;

impl Optimizer for GreyWolf {
    fn id(&self) -> OptimizerId {
        OptimizerId::Gwo
    }

    fn run(&self, objective: &dyn Objective, config: &RunConfig) -> Result<RunResult> {
        engine::run_with_leaders(objective, config, gwo_step)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::population::AgentState;

    fn leaders(p1: Vec<f64>, p2: Vec<f64>, p3: Vec<f64>) -> Leaders {
        Leaders {
            alpha: AgentState::new(p1, 1.0),
            beta: AgentState::new(p2, 2.0),
            delta: AgentState::new(p3, 3.0),
        }
    }

    #[test]
    fn zero_radius_returns_leader_mean() {
        let mut rng = RngStream::new(1);
        let l = leaders(vec![1.0, -2.0], vec![2.0, 0.0], vec![3.0, 5.0]);
        let next = gwo_step(&[10.0, 10.0], &l, 0.0, &mut rng).unwrap();
        assert_eq!(next, vec![2.0, 1.0]);
    }

    #[test]
    fn all_zero_stays_zero() {
        let mut rng = RngStream::new(2);
        let l = leaders(vec![0.0; 3], vec![0.0; 3], vec![0.0; 3]);
        let next = gwo_step(&[0.0; 3], &l, 1.7, &mut rng).unwrap();
        assert_eq!(next, vec![0.0; 3]);
    }

    #[test]
    fn sample_moments_match_two_for_centered_case() {
        // leaders at the origin, x = 3, a = 2: mean 0 and variance 4
        let mut rng = RngStream::new(5);
        let l = leaders(vec![0.0], vec![0.0], vec![0.0]);
        let n = 100_000usize;
        let mut draws = Vec::with_capacity(n);
        for _ in 0..n {
            draws.push(gwo_step(&[3.0], &l, 2.0, &mut rng).unwrap()[0]);
        }
        let nf = n as f64;
        let mean = draws.iter().sum::<f64>() / nf;
        let var = draws.iter().map(|d| (d - mean) * (d - mean)).sum::<f64>() / nf;
        let m4 = draws.iter().map(|d| (d - mean).powi(4)).sum::<f64>() / nf;
        let se_mean = (var / nf).sqrt();
        let se_var = ((m4 - var * var) / nf).sqrt();
        assert!(mean.abs() < 3.0 * se_mean, "mean {mean}");
        assert!((var - 4.0).abs() < 3.0 * se_var, "var {var}");
    }

    #[test]
    fn negative_radius_is_rejected() {
        let mut rng = RngStream::new(1);
        let l = leaders(vec![0.0], vec![0.0], vec![0.0]);
        assert!(gwo_step(&[0.0], &l, -0.5, &mut rng).is_err());
    }

    #[test]
    fn leader_shape_mismatch_is_rejected() {
        let mut rng = RngStream::new(1);
        let l = leaders(vec![0.0], vec![0.0, 1.0], vec![0.0]);
        assert!(matches!(
            gwo_step(&[0.0], &l, 1.0, &mut rng),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
