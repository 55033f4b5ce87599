//! Shared iteration loop for the leader-guided optimizers.

use super::{step_parameter, RunConfig, RunResult};
use crate::error::Result;
use crate::objective::Objective;
use crate::population::{Leaders, Population};
use crate::rng::RngStream;

/// Run the common loop with a pluggable per-agent step. All agents of one
/// iteration are updated against the same frozen leader triple; leaders are
/// refreshed only after the whole sweep.
pub(super) fn run_with_leaders<F>(
    objective: &dyn Objective,
    config: &RunConfig,
    step: F,
) -> Result<RunResult>
where
    F: Fn(&[f64], &Leaders, f64, &mut RngStream) -> Result<Vec<f64>>,
{
    config.validate()?;
    let mut rng = RngStream::new(config.seed);
    let mut pop = Population::init(objective, config.population_size, &mut rng)?;
    pop.refresh_leaders(false)?;
    let bounds = objective.bounds();

    let mut best = pop.leaders.as_ref().unwrap().alpha.clone();
    let mut trace = Vec::with_capacity(config.max_iterations + 1);
    trace.push(best.fitness);

    for t in 0..config.max_iterations {
        let a = step_parameter(t, config.max_iterations)?;
        let leaders = pop.leaders.clone().unwrap();
        for agent in &mut pop.agents {
            let proposal = step(&agent.position, &leaders, a, &mut rng)?;
            agent.position = bounds.clamp(&proposal)?;
            agent.fitness = objective.evaluate(&agent.position)?;
        }
        pop.refresh_leaders(!config.strict_leaders)?;
        let alpha = &pop.leaders.as_ref().unwrap().alpha;
        if alpha.fitness < best.fitness {
            best = alpha.clone();
        }
        trace.push(best.fitness);
    }

    Ok(RunResult {
        best_position: best.position,
        best_fitness: best.fitness,
        fitness_trace: trace,
        evaluations_used: (config.population_size * (config.max_iterations + 1)) as u64,
    })
}
