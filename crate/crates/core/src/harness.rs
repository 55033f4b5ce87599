//! Multi-trial experiment runner.
//!
//! A cell of the experiment grid is one (benchmark, optimizer) pair run for
//! a number of independent trials. Trial `i` is seeded with
//! `base_seed + i`, so a cell is reproducible and trials can run in
//! parallel without changing any result. A trial counts as a success when
//! its best value lies within the tolerance of the benchmark's reference
//! minimum.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::benchmarks::{self, BenchmarkSpec, F12Params};
use crate::error::{Error, Result};
use crate::optimizers::{self, OptimizerId, RunConfig};

pub const DEFAULT_TRIALS: usize = 30;
pub const DEFAULT_SUCCESS_TOL: f64 = 1e-3;

/// Per-cell settings shared by all trials.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub population_size: usize,
    pub max_iterations: usize,
    pub trials: usize,
    pub base_seed: u64,
    pub success_tol: f64,
    pub strict_leaders: bool,
}

impl Default for TrialConfig {
    fn default() -> Self {
        Self {
            population_size: optimizers::DEFAULT_POPULATION_SIZE,
            max_iterations: optimizers::DEFAULT_MAX_ITERATIONS,
            trials: DEFAULT_TRIALS,
            base_seed: 0,
            success_tol: DEFAULT_SUCCESS_TOL,
            strict_leaders: false,
        }
    }
}

/// Aggregate of one cell: mean, population variance and success count over
/// the per-trial best values, which are kept alongside.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialStats {
    pub function_id: u32,
    pub optimizer: OptimizerId,
    pub trials: usize,
    pub mean_best: f64,
    pub variance_best: f64,
    pub success_count: usize,
    pub best_values: Vec<f64>,
}

impl TrialStats {
    /// Aggregate a finished set of per-trial best values.
    pub fn from_best_values(
        function_id: u32,
        optimizer: OptimizerId,
        best_values: Vec<f64>,
        reference_minimum: f64,
        success_tol: f64,
    ) -> Result<Self> {
        if best_values.is_empty() {
            return Err(Error::EmptySamples);
        }
        let n = best_values.len() as f64;
        let mean = best_values.iter().sum::<f64>() / n;
        let variance = best_values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        let successes = success_count(&best_values, reference_minimum, success_tol);
        Ok(Self {
            function_id,
            optimizer,
            trials: best_values.len(),
            mean_best: mean,
            variance_best: variance,
            success_count: successes,
            best_values,
        })
    }
}

/// Number of values `v` with `v - reference_min < tol`. Values below the
/// reference also count. `tol` must be positive.
pub fn success_count(best_values: &[f64], reference_min: f64, tol: f64) -> usize {
    best_values
        .iter()
        .filter(|&&v| v - reference_min < tol)
        .count()
}

/// Run one cell: `cfg.trials` independent runs of `optimizer` on `bench`,
/// trial `i` seeded with `base_seed + i`. Trials run in parallel.
pub fn run_trials(
    bench: &BenchmarkSpec,
    optimizer: OptimizerId,
    cfg: &TrialConfig,
) -> Result<TrialStats> {
    if cfg.trials == 0 {
        return Err(Error::InvalidParameter("at least one trial is required".into()));
    }
    if !(cfg.success_tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "success tolerance must be positive, got {}",
            cfg.success_tol
        )));
    }
    let results: Result<Vec<f64>> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let run_cfg = RunConfig {
                optimizer,
                population_size: cfg.population_size,
                max_iterations: cfg.max_iterations,
                seed: cfg.base_seed.wrapping_add(i as u64),
                strict_leaders: cfg.strict_leaders,
            };
            optimizers::run(&run_cfg, bench).map(|r| r.best_fitness)
        })
        .collect();
    TrialStats::from_best_values(
        bench.id,
        optimizer,
        results?,
        bench.reference_minimum,
        cfg.success_tol,
    )
}

/// A grid of cells to run: the cross product of functions and optimizers.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentPlan {
    pub functions: Vec<u32>,
    pub optimizers: Vec<OptimizerId>,
    pub config: TrialConfig,
    /// Constants for function 12 when it is part of the plan.
    pub f12: Option<F12Params>,
}

impl Default for ExperimentPlan {
    fn default() -> Self {
        Self {
            functions: (1..=11).collect(),
            optimizers: vec![OptimizerId::Gwo, OptimizerId::Bbgwo],
            config: TrialConfig::default(),
            f12: None,
        }
    }
}

/// Run every cell of the plan, in plan order.
pub fn run_plan(plan: &ExperimentPlan) -> Result<Vec<TrialStats>> {
    let mut stats = Vec::with_capacity(plan.functions.len() * plan.optimizers.len());
    for &fid in &plan.functions {
        let bench = if fid == 12 {
            benchmarks::exp_residuals_with(plan.f12.unwrap_or_default())
        } else {
            benchmarks::by_id(fid)?
        };
        for &opt in &plan.optimizers {
            stats.push(run_trials(&bench, opt, &plan.config)?);
        }
    }
    Ok(stats)
}

/// Cell aggregate in the results table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellStats {
    pub mean: f64,
    pub variance: f64,
    pub success: usize,
}

/// One table row: a function with its reference minimum and one optional
/// cell per optimizer column.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub function_id: u32,
    pub reference_minimum: f64,
    pub cells: Vec<Option<CellStats>>,
}

/// Results laid out as one row per function with per-optimizer columns.
/// Missing cells stay empty in the CSV form.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultsTable {
    pub optimizers: Vec<OptimizerId>,
    pub rows: Vec<TableRow>,
}

impl ResultsTable {
    /// Lay out finished stats under the given optimizer columns. Functions
    /// appear in ascending id order; cells with no stats stay empty.
    pub fn from_stats(optimizers: &[OptimizerId], stats: &[TrialStats]) -> Result<Self> {
        let mut fids: Vec<u32> = stats.iter().map(|s| s.function_id).collect();
        fids.sort_unstable();
        fids.dedup();
        let mut rows = Vec::with_capacity(fids.len());
        for fid in fids {
            let reference_minimum = benchmarks::by_id(fid)?.reference_minimum;
            let mut cells = Vec::with_capacity(optimizers.len());
            for &opt in optimizers {
                let matching: Vec<&TrialStats> = stats
                    .iter()
                    .filter(|s| s.function_id == fid && s.optimizer == opt)
                    .collect();
                if matching.len() > 1 {
                    return Err(Error::Table(format!(
                        "duplicate stats for function {fid} and optimizer {opt}"
                    )));
                }
                cells.push(matching.first().map(|s| CellStats {
                    mean: s.mean_best,
                    variance: s.variance_best,
                    success: s.success_count,
                }));
            }
            rows.push(TableRow {
                function_id: fid,
                reference_minimum,
                cells,
            });
        }
        Ok(Self {
            optimizers: optimizers.to_vec(),
            rows,
        })
    }

    /// Comma-separated form with a header row, for example
    /// `function_id,min,gwo_mean,gwo_var,gwo_success,bbgwo_mean,...`.
    /// Numbers are written with full round-trip precision.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("function_id,min");
        for opt in &self.optimizers {
            out.push_str(&format!(",{opt}_mean,{opt}_var,{opt}_success"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!("{},{}", row.function_id, row.reference_minimum));
            for cell in &row.cells {
                match cell {
                    Some(c) => out.push_str(&format!(",{},{},{}", c.mean, c.variance, c.success)),
                    None => out.push_str(",,,"),
                }
            }
            out.push('\n');
        }
        out
    }

    /// Parse the CSV form back. Exact inverse of [`Self::to_csv`].
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Table("empty input".into()))?;
        let cols: Vec<&str> = header.split(',').collect();
        if cols.len() < 2 || cols[0] != "function_id" || cols[1] != "min" {
            return Err(Error::Table(format!("unexpected header '{header}'")));
        }
        if (cols.len() - 2) % 3 != 0 {
            return Err(Error::Table("optimizer columns must come in triples".into()));
        }
        let mut optimizers = Vec::new();
        for triple in cols[2..].chunks(3) {
            let name = triple[0]
                .strip_suffix("_mean")
                .ok_or_else(|| Error::Table(format!("unexpected column '{}'", triple[0])))?;
            optimizers.push(name.parse::<OptimizerId>()?);
        }
        let mut rows = Vec::new();
        for line in lines {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != cols.len() {
                return Err(Error::Table(format!("ragged row '{line}'")));
            }
            let parse = |s: &str| -> Result<f64> {
                s.parse::<f64>()
                    .map_err(|_| Error::Table(format!("bad number '{s}'")))
            };
            let function_id = fields[0]
                .parse::<u32>()
                .map_err(|_| Error::Table(format!("bad function id '{}'", fields[0])))?;
            let reference_minimum = parse(fields[1])?;
            let mut cells = Vec::new();
            for triple in fields[2..].chunks(3) {
                if triple.iter().all(|f| f.is_empty()) {
                    cells.push(None);
                } else {
                    cells.push(Some(CellStats {
                        mean: parse(triple[0])?,
                        variance: parse(triple[1])?,
                        success: triple[2]
                            .parse::<usize>()
                            .map_err(|_| Error::Table(format!("bad count '{}'", triple[2])))?,
                    }));
                }
            }
            rows.push(TableRow {
                function_id,
                reference_minimum,
                cells,
            });
        }
        Ok(Self { optimizers, rows })
    }
}
