//! Candidate solutions and the three-leader bookkeeping used by the
//! wolf-style optimizers.

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::RngStream;

/// A position together with its objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct AgentState {
    pub position: Vec<f64>,
    pub fitness: f64,
}

impl AgentState {
    pub fn new(position: Vec<f64>, fitness: f64) -> Self {
        Self { position, fitness }
    }
}

/// The best, second best and third best known positions, ordered by
/// non-decreasing fitness.
#[derive(Debug, Clone, PartialEq)]
pub struct Leaders {
    pub alpha: AgentState,
    pub beta: AgentState,
    pub delta: AgentState,
}

impl Leaders {
    pub fn as_array(&self) -> [&AgentState; 3] {
        [&self.alpha, &self.beta, &self.delta]
    }
}

/// Pick the three best agents by fitness; ties break toward the lower index.
///
/// When `previous` leaders are supplied they join the candidate pool, so the
/// best known solution can never be lost between iterations. Current agents
/// win exact fitness ties against previous leaders.
pub fn select_leaders(agents: &[AgentState], previous: Option<&Leaders>) -> Result<Leaders> {
    let mut candidates: Vec<&AgentState> = agents.iter().collect();
    if let Some(prev) = previous {
        candidates.extend(prev.as_array());
    }
    if candidates.len() < 3 {
        return Err(Error::PopulationTooSmall(agents.len()));
    }
    // stable sort keeps index order on equal fitness
    candidates.sort_by(|a, b| a.fitness.total_cmp(&b.fitness));
    Ok(Leaders {
        alpha: candidates[0].clone(),
        beta: candidates[1].clone(),
        delta: candidates[2].clone(),
    })
}

/// The swarm: evaluated agents plus the current leader triple.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    pub agents: Vec<AgentState>,
    pub leaders: Option<Leaders>,
}

impl Population {
    /// Initialize `n` agents uniformly inside the objective's bounds and
    /// evaluate them. Leaders are not yet selected.
    pub fn init(objective: &dyn Objective, n: usize, rng: &mut RngStream) -> Result<Self> {
        let mut agents = Vec::with_capacity(n);
        for _ in 0..n {
            let position = objective.bounds().sample(rng);
            let fitness = objective.evaluate(&position)?;
            agents.push(AgentState::new(position, fitness));
        }
        Ok(Self {
            agents,
            leaders: None,
        })
    }

    /// Re-select the leader triple. With `elitist` the previous leaders stay
    /// in the candidate pool.
    pub fn refresh_leaders(&mut self, elitist: bool) -> Result<&Leaders> {
        let previous = if elitist { self.leaders.as_ref() } else { None };
        let next = select_leaders(&self.agents, previous)?;
        self.leaders = Some(next);
        Ok(self.leaders.as_ref().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn agents(fitnesses: &[f64]) -> Vec<AgentState> {
        fitnesses
            .iter()
            .enumerate()
            .map(|(i, &f)| AgentState::new(vec![i as f64], f))
            .collect()
    }

    #[test]
    fn leaders_sorted_by_fitness() {
        let pop = agents(&[3.0, 1.0, 2.0]);
        let l = select_leaders(&pop, None).unwrap();
        assert_eq!(l.alpha.position, vec![1.0]);
        assert_eq!(l.beta.position, vec![2.0]);
        assert_eq!(l.delta.position, vec![0.0]);
    }

    #[test]
    fn ties_break_by_lower_index() {
        let pop = agents(&[1.0, 1.0, 1.0, 5.0]);
        let l = select_leaders(&pop, None).unwrap();
        assert_eq!(l.alpha.position, vec![0.0]);
        assert_eq!(l.beta.position, vec![1.0]);
        assert_eq!(l.delta.position, vec![2.0]);
    }

    #[test]
    fn all_equal_fitness_uses_index_order() {
        let pop = agents(&[2.0, 2.0, 2.0]);
        let l = select_leaders(&pop, None).unwrap();
        assert_eq!(l.alpha.position, vec![0.0]);
        assert_eq!(l.beta.position, vec![1.0]);
        assert_eq!(l.delta.position, vec![2.0]);
    }

    #[test]
    fn too_few_agents_is_an_error() {
        let pop = agents(&[1.0, 2.0]);
        assert!(matches!(
            select_leaders(&pop, None),
            Err(Error::PopulationTooSmall(2))
        ));
    }

    #[test]
    fn previous_leaders_survive_when_better() {
        let prev = Leaders {
            alpha: AgentState::new(vec![-1.0], 0.1),
            beta: AgentState::new(vec![-2.0], 0.2),
            delta: AgentState::new(vec![-3.0], 0.3),
        };
        let pop = agents(&[1.0, 2.0, 3.0]);
        let l = select_leaders(&pop, Some(&prev)).unwrap();
        assert_eq!(l.alpha.fitness, 0.1);
        assert_eq!(l.beta.fitness, 0.2);
        assert_eq!(l.delta.fitness, 0.3);
    }

    #[test]
    fn current_agents_win_exact_ties_against_previous() {
        let prev = Leaders {
            alpha: AgentState::new(vec![-1.0], 1.0),
            beta: AgentState::new(vec![-2.0], 1.0),
            delta: AgentState::new(vec![-3.0], 1.0),
        };
        let pop = agents(&[1.0, 1.0, 1.0]);
        let l = select_leaders(&pop, Some(&prev)).unwrap();
        assert_eq!(l.alpha.position, vec![0.0]);
        assert_eq!(l.beta.position, vec![1.0]);
        assert_eq!(l.delta.position, vec![2.0]);
    }
}
