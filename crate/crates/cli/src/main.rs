//! `bbgwo`: batch front end for the grey wolf optimization toolkit.
//!
//! Subcommands: `optimize` (one seeded run, JSON result), `table`
//! (multi-trial experiment grid, CSV + JSON), `verify-dist` (analytic
//! density of the update against Monte Carlo sampling and the normal
//! approximation, CSV + summary), `histogram` (sampled update frequencies
//! next to the normal density, CSV) and `list-benchmarks`.
//!
//! Exit codes: 0 on success, 1 on a validation error, 2 on a runtime or
//! check failure. Every command is fully reproducible from its flags: a
//! repeated invocation writes byte-identical files.

use clap::{Args, Parser, Subcommand};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bbgwo_core::benchmarks::{self, BenchmarkSpec, F12Params};
use bbgwo_core::distmath::{
    build_histogram, compare_to_normal, h_pdf_numeric, ks_samples_vs_grid, ks_samples_vs_normal,
    normal_pdf, sample_gwo_update, update_moments, LeaderUpdateDist, DEFAULT_GRID_POINTS,
    DEFAULT_HISTOGRAM_BINS, DEFAULT_SAMPLE_COUNT,
};
use bbgwo_core::harness::{
    run_plan, ExperimentPlan, ResultsTable, TrialConfig, DEFAULT_SUCCESS_TOL, DEFAULT_TRIALS,
};
use bbgwo_core::optimizers::{
    self, OptimizerId, RunConfig, DEFAULT_MAX_ITERATIONS, DEFAULT_POPULATION_SIZE,
};
use bbgwo_core::RngStream;

#[derive(Parser)]
#[command(name = "bbgwo", version, about = "Grey wolf optimization toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one optimizer on one benchmark function and write the result as JSON.
    Optimize(OptimizeArgs),
    /// Run the multi-trial experiment grid and write the results table.
    Table(TableArgs),
    /// Check the analytic update density against Monte Carlo sampling.
    VerifyDist(VerifyDistArgs),
    /// Sample the update and write binned frequencies next to the normal density.
    Histogram(HistogramArgs),
    /// Print the benchmark catalogue.
    ListBenchmarks(ListArgs),
}

#[derive(Args)]
struct OptimizeArgs {
    /// Optimizer name: gwo, bbgwo or bbpso.
    #[arg(long)]
    optimizer: String,
    /// Benchmark function id (1-12).
    #[arg(long)]
    function: u32,
    /// Population size.
    #[arg(long, default_value_t = DEFAULT_POPULATION_SIZE)]
    n: usize,
    /// Iteration count.
    #[arg(long, default_value_t = DEFAULT_MAX_ITERATIONS)]
    t: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path for the JSON result.
    #[arg(long, default_value = "optimize.json")]
    out: PathBuf,
    /// Re-select leaders from current agents only.
    #[arg(long)]
    strict_leaders: bool,
    /// JSON file with constants {"p": [...], "q": [...]} for function 12.
    #[arg(long)]
    f12_params: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// Comma-separated function ids.
    #[arg(long, value_delimiter = ',', default_values_t = (1u32..=11).collect::<Vec<_>>())]
    functions: Vec<u32>,
    /// Comma-separated optimizer names.
    #[arg(long, value_delimiter = ',', default_values_t = vec!["gwo".to_string(), "bbgwo".to_string()])]
    optimizers: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_POPULATION_SIZE)]
    n: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_ITERATIONS)]
    t: usize,
    /// Success tolerance against the reference minimum.
    #[arg(long, default_value_t = DEFAULT_SUCCESS_TOL)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Append function 12 to the plan.
    #[arg(long)]
    include_12: bool,
    /// JSON file with constants {"p": [...], "q": [...]} for function 12.
    #[arg(long)]
    f12_params: Option<PathBuf>,
    #[arg(long, default_value = "table.csv")]
    out_csv: PathBuf,
    #[arg(long, default_value = "table.json")]
    out_json: PathBuf,
    /// Re-select leaders from current agents only.
    #[arg(long)]
    strict_leaders: bool,
}

#[derive(Args)]
struct VerifyDistArgs {
    /// Step radius.
    #[arg(long, default_value_t = 2.0)]
    a: f64,
    /// Current position component.
    #[arg(long, default_value_t = 1.0)]
    x: f64,
    #[arg(long, default_value_t = 0.5)]
    p1: f64,
    #[arg(long, default_value_t = 1.5)]
    p2: f64,
    #[arg(long, default_value_t = 2.5)]
    p3: f64,
    #[arg(long, default_value_t = DEFAULT_SAMPLE_COUNT)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    grid_points: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "verify_dist.csv")]
    out: PathBuf,
}

#[derive(Args)]
struct HistogramArgs {
    /// Step radius.
    #[arg(long, default_value_t = 2.0)]
    a: f64,
    /// Current position component.
    #[arg(long, default_value_t = 1.0)]
    x: f64,
    #[arg(long, default_value_t = 0.5)]
    p1: f64,
    #[arg(long, default_value_t = 1.5)]
    p2: f64,
    #[arg(long, default_value_t = 2.5)]
    p3: f64,
    #[arg(long, default_value_t = DEFAULT_SAMPLE_COUNT)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_HISTOGRAM_BINS)]
    bins: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "histogram.csv")]
    out: PathBuf,
}

#[derive(Args)]
struct ListArgs {
    /// Output format: csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
}

enum AppError {
    Validation(String),
    Runtime(String),
}

impl From<bbgwo_core::Error> for AppError {
    fn from(e: bbgwo_core::Error) -> Self {
        use bbgwo_core::Error::*;
        match e {
            InvalidRange { .. } | InvalidSigma(_) | DimensionMismatch { .. }
            | UnknownFunction(_) | PopulationTooSmall(_) | IterationOutOfRange { .. }
            | DegenerateDistribution | InvalidParameter(_) | EmptySamples => {
                AppError::Validation(e.to_string())
            }
            NonFiniteInput { .. } | Table(_) => AppError::Runtime(e.to_string()),
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Runtime(e.to_string())
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), AppError> {
    if cond {
        Ok(())
    } else {
        Err(AppError::Validation(msg.into()))
    }
}

fn load_f12(path: Option<&Path>) -> Result<F12Params, AppError> {
    match path {
        None => Ok(F12Params::default()),
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| {
                AppError::Validation(format!("cannot read {}: {e}", path.display()))
            })?;
            serde_json::from_str(&text).map_err(|e| {
                AppError::Validation(format!("cannot parse {}: {e}", path.display()))
            })
        }
    }
}

fn load_benchmark(id: u32, f12: Option<&Path>) -> Result<BenchmarkSpec, AppError> {
    if id == 12 {
        Ok(benchmarks::exp_residuals_with(load_f12(f12)?))
    } else {
        Ok(benchmarks::by_id(id)?)
    }
}

fn parse_optimizers(names: &[String]) -> Result<Vec<OptimizerId>, AppError> {
    names.iter().map(|n| Ok(n.parse::<OptimizerId>()?)).collect()
}

fn cmd_optimize(args: OptimizeArgs) -> Result<(), AppError> {
    let optimizer: OptimizerId = args.optimizer.parse()?;
    ensure(args.t >= 1, "iteration count must be at least 1")?;
    let bench = load_benchmark(args.function, args.f12_params.as_deref())?;
    let config = RunConfig {
        optimizer,
        population_size: args.n,
        max_iterations: args.t,
        seed: args.seed,
        strict_leaders: args.strict_leaders,
    };
    config.validate()?;
    let result = optimizers::run(&config, &bench)?;
    let mut json = serde_json::to_string_pretty(&result)
        .map_err(|e| AppError::Runtime(e.to_string()))?;
    json.push('\n');
    fs::write(&args.out, json)?;
    println!("{}", result.best_fitness);
    Ok(())
}

fn cmd_table(args: TableArgs) -> Result<(), AppError> {
    ensure(args.t >= 1, "iteration count must be at least 1")?;
    ensure(args.trials >= 1, "at least one trial is required")?;
    ensure(args.n >= 3, "population size must be at least 3")?;
    ensure(args.tol > 0.0, "success tolerance must be positive")?;
    let mut functions = args.functions.clone();
    if args.include_12 && !functions.contains(&12) {
        functions.push(12);
    }
    ensure(!functions.is_empty(), "at least one function is required")?;
    for &fid in &functions {
        ensure(
            (1..=12).contains(&fid),
            format!("unknown benchmark function id {fid} (valid ids are 1-12)"),
        )?;
    }
    let optimizers = parse_optimizers(&args.optimizers)?;
    ensure(!optimizers.is_empty(), "at least one optimizer is required")?;
    let f12 = if functions.contains(&12) {
        Some(load_f12(args.f12_params.as_deref())?)
    } else {
        None
    };
    let plan = ExperimentPlan {
        functions,
        optimizers: optimizers.clone(),
        config: TrialConfig {
            population_size: args.n,
            max_iterations: args.t,
            trials: args.trials,
            base_seed: args.seed,
            success_tol: args.tol,
            strict_leaders: args.strict_leaders,
        },
        f12,
    };
    let stats = run_plan(&plan)?;
    let table = ResultsTable::from_stats(&optimizers, &stats)?;
    fs::write(&args.out_csv, table.to_csv())?;
    let mut json = serde_json::to_string_pretty(&stats)
        .map_err(|e| AppError::Runtime(e.to_string()))?;
    json.push('\n');
    fs::write(&args.out_json, json)?;
    println!(
        "wrote {} rows to {} and {}",
        table.rows.len(),
        args.out_csv.display(),
        args.out_json.display()
    );
    Ok(())
}

fn cmd_verify_dist(args: VerifyDistArgs) -> Result<(), AppError> {
    ensure(args.samples >= 1, "sample count must be at least 1")?;
    ensure(args.grid_points >= 256, "grid-points must be at least 256")?;
    ensure(
        args.a.is_finite() && args.a >= 0.0,
        "step radius must be a nonnegative finite number",
    )?;
    let d1 = LeaderUpdateDist::new(args.a, args.x, args.p1)?;
    let d2 = LeaderUpdateDist::new(args.a, args.x, args.p2)?;
    let d3 = LeaderUpdateDist::new(args.a, args.x, args.p3)?;
    for (d, name) in [(&d1, "p1"), (&d2, "p2"), (&d3, "p3")] {
        ensure(
            !d.is_degenerate(),
            format!("degenerate distribution for {name}: support has zero width"),
        )?;
    }

    let h = h_pdf_numeric(&d1, &d2, &d3, args.grid_points)?;
    let mut rng = RngStream::new(args.seed);
    let samples = sample_gwo_update(args.a, args.x, args.p1, args.p2, args.p3, &mut rng, args.samples)?;
    let (mu, sigma) = update_moments(args.a, args.x, args.p1, args.p2, args.p3);

    // empirical density over the grid cells
    let du = h.spacing();
    let first_edge = h.grid()[0] - 0.5 * du;
    let mut counts = vec![0u64; h.len()];
    for &s in &samples {
        let idx = (((s - first_edge) / du).floor().max(0.0) as usize).min(h.len() - 1);
        counts[idx] += 1;
    }
    let scale = 1.0 / (samples.len() as f64 * du);

    let mut csv = String::from("u,analytic_h,normal_pdf,empirical_density\n");
    for (i, (&u, &dens)) in h.grid().iter().zip(h.density()).enumerate() {
        let normal = normal_pdf(u, mu, sigma)?;
        let empirical = counts[i] as f64 * scale;
        writeln!(csv, "{u},{dens},{normal},{empirical}").expect("string write");
    }
    fs::write(&args.out, csv)?;

    let masses = [
        {
            let (lo, hi) = d1.support();
            d1.mass_between(lo, hi)?
        },
        {
            let (lo, hi) = d2.support();
            d2.mass_between(lo, hi)?
        },
        {
            let (lo, hi) = d3.support();
            d3.mass_between(lo, hi)?
        },
    ];
    let h_integral = h.integral();
    let nf = samples.len() as f64;
    let sample_mean = samples.iter().sum::<f64>() / nf;
    let sample_var = samples.iter().map(|s| (s - sample_mean) * (s - sample_mean)).sum::<f64>() / nf;
    let ks_h = ks_samples_vs_grid(&samples, &h)?;
    let ks_normal = ks_samples_vs_normal(&samples, mu, sigma)?;

    println!("integral g1 = {}", masses[0]);
    println!("integral g2 = {}", masses[1]);
    println!("integral g3 = {}", masses[2]);
    println!("integral h = {h_integral}");
    println!("analytic mean = {mu} variance = {}", sigma * sigma);
    println!("sample mean = {sample_mean} variance = {sample_var}");
    println!("ks h vs samples = {ks_h}");
    println!("ks normal vs samples = {ks_normal}");

    for (value, name) in masses
        .iter()
        .zip(["g1", "g2", "g3"])
        .map(|(&m, n)| (m, n))
        .chain(std::iter::once((h_integral, "h")))
    {
        if (value - 1.0).abs() > 0.01 {
            return Err(AppError::Runtime(format!(
                "normalization check failed: integral of {name} = {value}"
            )));
        }
    }
    Ok(())
}

fn cmd_histogram(args: HistogramArgs) -> Result<(), AppError> {
    ensure(args.samples >= 1, "sample count must be at least 1")?;
    ensure(args.bins >= 1, "bin count must be at least 1")?;
    ensure(
        args.a.is_finite() && args.a >= 0.0,
        "step radius must be a nonnegative finite number",
    )?;
    let mut rng = RngStream::new(args.seed);
    let samples = sample_gwo_update(args.a, args.x, args.p1, args.p2, args.p3, &mut rng, args.samples)?;
    let hist = build_histogram(&samples, args.bins)?;
    let (mu, sigma) = update_moments(args.a, args.x, args.p1, args.p2, args.p3);

    let mut csv = String::from("bin_center,count,empirical_density,normal_pdf\n");
    let densities = hist.densities();
    for ((center, count), density) in hist
        .centers()
        .into_iter()
        .zip(hist.counts().iter().copied())
        .zip(densities)
    {
        let normal = if sigma > 0.0 {
            normal_pdf(center, mu, sigma)?
        } else {
            0.0
        };
        writeln!(csv, "{center},{count},{density},{normal}").expect("string write");
    }
    fs::write(&args.out, csv)?;
    if sigma > 0.0 {
        let cmp = compare_to_normal(&hist, mu, sigma)?;
        println!(
            "ks = {} tv = {} over {} samples",
            cmp.ks_distance, cmp.total_variation, cmp.sample_size
        );
    } else {
        println!("degenerate normal approximation (sigma = 0)");
    }
    Ok(())
}

fn cmd_list_benchmarks(args: ListArgs) -> Result<(), AppError> {
    let specs = benchmarks::registry();
    match args.format.as_str() {
        "csv" => {
            println!("id,name,dimension,lower,upper,minimum");
            for s in &specs {
                println!(
                    "{},{},{},{},{},{}",
                    s.id,
                    s.name,
                    s.dimension,
                    s.bounds.lower()[0],
                    s.bounds.upper()[0],
                    s.reference_minimum
                );
            }
            Ok(())
        }
        "json" => {
            let entries: Vec<serde_json::Value> = specs
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "id": s.id,
                        "name": s.name,
                        "dimension": s.dimension,
                        "lower": s.bounds.lower()[0],
                        "upper": s.bounds.upper()[0],
                        "minimum": s.reference_minimum,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&entries).expect("static data"));
            Ok(())
        }
        other => Err(AppError::Validation(format!(
            "unknown format '{other}' (expected csv or json)"
        ))),
    }
}

fn dispatch(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Optimize(args) => cmd_optimize(args),
        Command::Table(args) => cmd_table(args),
        Command::VerifyDist(args) => cmd_verify_dist(args),
        Command::Histogram(args) => cmd_histogram(args),
        Command::ListBenchmarks(args) => cmd_list_benchmarks(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
