//! Bare bones particle swarm: velocity-free updates drawn from a normal
//! centred between each agent's best known position and the swarm best.

use super::{Optimizer, OptimizerId, RunConfig, RunResult};
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::population::{AgentState, Population};
use crate::rng::RngStream;

/// Per-agent best positions plus the swarm best.
#[derive(Debug, Clone, PartialEq)]
pub struct BbpsoMemory {
    pub personal: Vec<AgentState>,
    pub global: AgentState,
}

fn best_of(agents: &[AgentState]) -> AgentState {
    let mut best = &agents[0];
    for agent in &agents[1..] {
        if agent.fitness < best.fitness {
            best = agent;
        }
    }
    best.clone()
}

impl BbpsoMemory {
    /// Seed the memory from an evaluated population.
    pub fn new(agents: &[AgentState]) -> Result<Self> {
        if agents.is_empty() {
            return Err(Error::PopulationTooSmall(0));
        }
        let personal = agents.to_vec();
        let global = best_of(&personal);
        Ok(Self { personal, global })
    }

    /// Fold freshly evaluated positions into the per-agent bests, then
    /// refresh the swarm best.
    pub fn observe(&mut self, agents: &[AgentState]) {
        for (slot, agent) in self.personal.iter_mut().zip(agents) {
            if agent.fitness < slot.fitness {
                *slot = agent.clone();
            }
        }
        self.global = best_of(&self.personal);
    }
}

/// One position proposal for agent `agent_index`. Per dimension `j` this
/// draws from a normal with mean `(personal_j + global_j) / 2` and standard
/// deviation `|global_j - personal_j|`; a zero deviation yields the mean.
pub fn bbpso_step(
    agent_index: usize,
    memory: &BbpsoMemory,
    rng: &mut RngStream,
) -> Result<Vec<f64>> {
    let personal = memory.personal.get(agent_index).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "agent index {agent_index} outside population of {}",
            memory.personal.len()
        ))
    })?;
    let mut next = Vec::with_capacity(personal.position.len());
    for (pj, gj) in personal.position.iter().zip(&memory.global.position) {
        let mu = 0.5 * (pj + gj);
        let sigma = (gj - pj).abs();
        next.push(rng.normal(mu, sigma)?);
    }
    Ok(next)
}

pub struct BareBonesPso;

impl Optimizer for BareBonesPso {
    fn id(&self) -> OptimizerId {
        OptimizerId::Bbpso
    }

    fn run(&self, objective: &dyn Objective, config: &RunConfig) -> Result<RunResult> {
        config.validate()?;
        let mut rng = RngStream::new(config.seed);
        let mut pop = Population::init(objective, config.population_size, &mut rng)?;
        let mut memory = BbpsoMemory::new(&pop.agents)?;
        let bounds = objective.bounds();

        let mut trace = Vec::with_capacity(config.max_iterations + 1);
        trace.push(memory.global.fitness);

        for _ in 0..config.max_iterations {
            for i in 0..pop.agents.len() {
                let proposal = bbpso_step(i, &memory, &mut rng)?;
                let position = bounds.clamp(&proposal)?;
                let fitness = objective.evaluate(&position)?;
                pop.agents[i] = AgentState::new(position, fitness);
            }
            memory.observe(&pop.agents);
            trace.push(memory.global.fitness);
        }

        Ok(RunResult {
            best_position: memory.global.position,
            best_fitness: memory.global.fitness,
            fitness_trace: trace,
            evaluations_used: (config.population_size * (config.max_iterations + 1)) as u64,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn memory(personal: Vec<Vec<f64>>, fitness: Vec<f64>) -> BbpsoMemory {
        let agents: Vec<AgentState> = personal
            .into_iter()
            .zip(fitness)
            .map(|(p, f)| AgentState::new(p, f))
            .collect();
        BbpsoMemory::new(&agents).unwrap()
    }

    #[test]
    fn equal_bests_reproduce_the_position_exactly() {
        let m = memory(vec![vec![1.5, -2.0], vec![1.5, -2.0], vec![1.5, -2.0]], vec![1.0, 2.0, 3.0]);
        let mut rng = RngStream::new(8);
        assert_eq!(bbpso_step(1, &m, &mut rng).unwrap(), vec![1.5, -2.0]);
    }

    #[test]
    fn sample_mean_sits_between_the_bests() {
        // personal best 0, swarm best 4: mean 2, deviation 4
        let m = memory(vec![vec![0.0], vec![4.0], vec![9.0]], vec![2.0, 1.0, 3.0]);
        assert_eq!(m.global.position, vec![4.0]);
        let mut rng = RngStream::new(10);
        let n = 100_000usize;
        let mean = (0..n)
            .map(|_| bbpso_step(0, &m, &mut rng).unwrap()[0])
            .sum::<f64>()
            / n as f64;
        // 3 sigma / sqrt(n) = 0.038
        assert!((mean - 2.0).abs() < 0.04, "mean {mean}");
    }

    #[test]
    fn memory_updates_keep_the_best() {
        let mut m = memory(vec![vec![0.0], vec![1.0], vec![2.0]], vec![5.0, 6.0, 7.0]);
        m.observe(&[
            AgentState::new(vec![0.5], 4.0),
            AgentState::new(vec![1.5], 9.0),
            AgentState::new(vec![2.5], 3.0),
        ]);
        assert_eq!(m.personal[0].fitness, 4.0);
        assert_eq!(m.personal[1].fitness, 6.0);
        assert_eq!(m.personal[2].fitness, 3.0);
        assert_eq!(m.global.fitness, 3.0);
        assert!(m.personal.iter().all(|p| m.global.fitness <= p.fitness));
    }

    #[test]
    fn out_of_range_agent_is_rejected() {
        let m = memory(vec![vec![0.0], vec![1.0], vec![2.0]], vec![1.0, 2.0, 3.0]);
        let mut rng = RngStream::new(1);
        assert!(bbpso_step(7, &m, &mut rng).is_err());
    }
}
