//! Global optimization with the grey wolf family.
//!
//! The crate bundles three seedable population optimizers (grey wolf search,
//! its bare bones variant driven by moment-matched normal draws, and bare
//! bones particle swarm) with the analytic machinery behind the bare bones
//! construction: the exact density of a single leader contribution, the
//! numeric convolution giving the density of the full averaged move, the
//! matching normal moments, and Monte Carlo tooling to compare them. A
//! benchmark catalogue of twelve classical test functions and a multi-trial
//! experiment harness sit on top.
//!
//! All randomness flows through [`RngStream`] (ChaCha8), so every run,
//! sample and table is reproducible from its seed. Positions leaving the
//! search box are hard-clamped back onto it.

pub mod benchmarks;
pub mod bounds;
pub mod distmath;
pub mod error;
pub mod harness;
pub mod objective;
pub mod optimizers;
pub mod population;
pub mod rng;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use objective::{FnObjective, Objective};
pub use population::{AgentState, Leaders, Population};
pub use rng::RngStream;
