//! The optimizer family.
//!
//! Three interchangeable population optimizers share one iteration scheme:
//! initialize N agents uniformly in the box, then for T iterations propose a
//! new position for every agent, clamp it, evaluate, and refresh the
//! guidance state. Each variant implements [`Optimizer`] and is looked up at
//! runtime by [`by_name`] or [`by_id`]:
//!
//! * [`GreyWolf`] moves every agent toward a randomized blend of the three
//!   best known positions with a linearly shrinking step radius.
//! * [`BareBonesGreyWolf`] replaces that randomized move by one normal draw
//!   per dimension with the same mean and variance.
//! * [`BareBonesPso`] draws positions from a normal centred between each
//!   agent's own best and the swarm best.
//!
//! A run is strictly sequential so a seed fully determines its trajectory;
//! concurrent runs each own their stream.

pub mod bbgwo;
pub mod bbpso;
pub mod gwo;

mod engine;

pub use crate::population::select_leaders;
pub use bbgwo::{bbgwo_step, BareBonesGreyWolf};
pub use bbpso::{bbpso_step, BareBonesPso, BbpsoMemory};
pub use gwo::{gwo_step, GreyWolf};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::objective::Objective;

pub const DEFAULT_POPULATION_SIZE: usize = 20;
pub const DEFAULT_MAX_ITERATIONS: usize = 500;

/// Names of the registered optimizer variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OptimizerId {
    Gwo,
    Bbgwo,
    Bbpso,
}

impl OptimizerId {
    pub const ALL: [OptimizerId; 3] = [OptimizerId::Gwo, OptimizerId::Bbgwo, OptimizerId::Bbpso];

    pub fn name(self) -> &'static str {
        match self {
            OptimizerId::Gwo => "gwo",
            OptimizerId::Bbgwo => "bbgwo",
            OptimizerId::Bbpso => "bbpso",
        }
    }
}

impl fmt::Display for OptimizerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OptimizerId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gwo" => Ok(OptimizerId::Gwo),
            "bbgwo" => Ok(OptimizerId::Bbgwo),
            "bbpso" => Ok(OptimizerId::Bbpso),
            other => Err(Error::InvalidParameter(format!(
                "unknown optimizer '{other}' (expected gwo, bbgwo or bbpso)"
            ))),
        }
    }
}

/// Settings for a single optimization run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub optimizer: OptimizerId,
    pub population_size: usize,
    pub max_iterations: usize,
    pub seed: u64,
    /// Re-select leaders from the current agents only, so the best known
    /// solution may leave the leader set. Off by default: previous leaders
    /// stay in the candidate pool and the leader fitness never worsens.
    pub strict_leaders: bool,
}

impl RunConfig {
    pub fn new(optimizer: OptimizerId) -> Self {
        Self {
            optimizer,
            population_size: DEFAULT_POPULATION_SIZE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
            seed: 0,
            strict_leaders: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size < 3 {
            return Err(Error::PopulationTooSmall(self.population_size));
        }
        Ok(())
    }
}

/// Outcome of one run: the best solution found plus the best-so-far fitness
/// after initialization and after every iteration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    pub fitness_trace: Vec<f64>,
    pub evaluations_used: u64,
}

/// A registered optimization strategy.
pub trait Optimizer: Send + Sync {
    fn id(&self) -> OptimizerId;
    fn run(&self, objective: &dyn Objective, config: &RunConfig) -> Result<RunResult>;
}

static REGISTRY: [&dyn Optimizer; 3] = [&GreyWolf, &BareBonesGreyWolf, &BareBonesPso];

/// All registered optimizers.
pub fn registry() -> &'static [&'static dyn Optimizer] {
    &REGISTRY
}

pub fn by_id(id: OptimizerId) -> &'static dyn Optimizer {
    REGISTRY
        .iter()
        .copied()
        .find(|o| o.id() == id)
        .expect("every id is registered")
}

pub fn by_name(name: &str) -> Option<&'static dyn Optimizer> {
    name.parse::<OptimizerId>().ok().map(by_id)
}

/// Run the optimizer selected by `config.optimizer` against an objective.
pub fn run(config: &RunConfig, objective: &dyn Objective) -> Result<RunResult> {
    by_id(config.optimizer).run(objective, config)
}

/// Step radius for iteration `t` of `max_iterations`:
/// `a = 2 (1 - t / T)`, decreasing linearly from 2 to 0.
pub fn step_parameter(t: usize, max_iterations: usize) -> Result<f64> {
    if max_iterations == 0 || t > max_iterations {
        return Err(Error::IterationOutOfRange {
            t,
            max: max_iterations,
        });
    }
    Ok(2.0 * (1.0 - t as f64 / max_iterations as f64))
}
