//! `submax`: run the solver on JSON instance files and emit machine-readable
//! reports.
//!
//! Exit codes: 0 success, 1 usage, 2 instance validation failure, 3 runtime
//! failure.

mod instance;
mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use submax::{
    brute_force_opt, exact_value, maximize, predicted_oracle_calls, sample_and_repair,
    verify_submodularity, EstimatorConfig, FractionalPoint, RandomStream, RoundingConfig,
    SolverConfig, UpdateRule,
};

use instance::{load_instance, LoadedInstance};
use report::{step_summaries, RunReport};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Runtime(String),
}

impl From<submax::Error> for CliError {
    fn from(e: submax::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "submax", version, about = "Submodular maximization under matroid constraints")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Baseline {
    Smooth,
    DiscreteStep,
}

impl From<Baseline> for UpdateRule {
    fn from(b: Baseline) -> Self {
        match b {
            Baseline::Smooth => UpdateRule::Smooth,
            Baseline::DiscreteStep => UpdateRule::DiscreteStep,
        }
    }
}

#[derive(Parser)]
struct SolveArgs {
    /// Path to a JSON instance document.
    instance: PathBuf,
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Multiplier on the theoretical per-estimate sample count.
    #[arg(long, default_value_t = 1.0)]
    sample_multiplier: f64,
    /// Ceiling on the per-estimate sample count.
    #[arg(long)]
    sample_cap: Option<u64>,
}

#[derive(Parser)]
struct RunArgs {
    #[command(flatten)]
    solve: SolveArgs,
    /// Outer-loop update rule.
    #[arg(long, value_enum, default_value_t = Baseline::Smooth)]
    baseline: Baseline,
    /// Also round the fractional solution to an independent set.
    #[arg(long)]
    round: bool,
    /// Write the full per-step trace as JSON.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Parser)]
struct BenchArgs {
    #[command(flatten)]
    solve: SolveArgs,
    /// Epsilon values to sweep.
    #[arg(long, value_delimiter = ',', default_value = "0.4,0.2,0.1")]
    epsilons: Vec<f64>,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and emit a JSON report.
    Run(RunArgs),
    /// Exhaustively compute the optimal independent set (n <= 20).
    BruteForce {
        instance: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Parse and validate an instance document.
    Validate { instance: PathBuf },
    /// Sweep epsilon on one instance and emit CSV cost/quality rows.
    Bench(BenchArgs),
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            std::process::exit(1);
        }
    };
    let result = match cli.command {
        Command::Run(args) => run_command(args),
        Command::BruteForce { instance, output } => brute_force_command(&instance, output),
        Command::Validate { instance } => validate_command(&instance),
        Command::Bench(args) => bench_command(args),
    };
    match result {
        Ok(()) => {}
        Err(e @ CliError::Validation(_)) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
        Err(e @ CliError::Runtime(_)) => {
            eprintln!("error: {e}");
            std::process::exit(3);
        }
    }
}

fn solver_config(args: &SolveArgs) -> Result<SolverConfig, CliError> {
    let mut estimator = EstimatorConfig::new(args.epsilon)
        .map_err(|e| CliError::Validation(e.to_string()))?
        .with_multiplier(args.sample_multiplier);
    if let Some(cap) = args.sample_cap {
        estimator = estimator.with_cap(cap);
    }
    Ok(SolverConfig::new(args.epsilon, args.seed)
        .map_err(|e| CliError::Validation(e.to_string()))?
        .with_estimator(estimator))
}

fn write_out(output: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_command(args: RunArgs) -> Result<(), CliError> {
    let LoadedInstance { file, function, matroid } = load_instance(&args.solve.instance)?;
    let config = solver_config(&args.solve)?.with_update_rule(args.baseline.into());
    let (y, trace) = maximize(function.as_ref(), matroid.as_ref(), &config)?;

    let n = file.n;
    let (final_value, final_value_exact, final_value_stderr) = final_extension_value(
        function.as_ref(),
        &y,
        n,
        config.seed,
    )?;

    let (rounded_set, rounded_value) = if args.round {
        let set = sample_and_repair(
            function.as_ref(),
            matroid.as_ref(),
            &y,
            &RoundingConfig::new(config.seed),
        )?;
        let value = function.evaluate(&set);
        (Some(set.to_vec()), Some(value))
    } else {
        (None, None)
    };

    let (opt_value, ratio) = if n <= 20 {
        let opt = brute_force_opt(function.as_ref(), matroid.as_ref())?;
        let ratio = if opt.opt_value > 0.0 {
            Some(final_value / opt.opt_value)
        } else {
            None
        };
        (Some(opt.opt_value), ratio)
    } else {
        (None, None)
    };

    let (predicted_value_calls, predicted_independence_calls) =
        predicted_oracle_calls(n, trace.rank, config.epsilon, &trace.bounds, &config.estimator)?;

    let report = RunReport {
        schema_version: instance::SCHEMA_VERSION,
        config: trace.config.clone(),
        bounds: trace.bounds,
        rank: trace.rank,
        samples_per_estimate: trace.samples_per_estimate,
        final_point: trace.final_point.clone(),
        final_value,
        final_value_exact,
        final_value_stderr,
        rounded_set,
        rounded_value,
        opt_value,
        ratio,
        value_calls: trace.value_calls,
        independence_calls: trace.independence_calls,
        predicted_value_calls,
        predicted_independence_calls,
        steps: step_summaries(&trace),
    };

    if let Some(path) = &args.trace {
        let text = serde_json::to_string_pretty(&trace)
            .map_err(|e| CliError::Runtime(e.to_string()))?;
        std::fs::write(path, text + "\n")
            .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))?;
    }
    let text = serde_json::to_string_pretty(&report)
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    write_out(args.output.as_ref(), &(text + "\n"))
}

/// Extension value at the final point: exact for desk-scale `n`, otherwise a
/// seeded 10k-sample estimate with its standard error.
fn final_extension_value(
    f: &dyn submax::SubmodularOracle,
    y: &FractionalPoint,
    n: usize,
    seed: u64,
) -> Result<(f64, bool, Option<f64>), CliError> {
    if n <= 20 {
        return Ok((exact_value(f, y)?, true, None));
    }
    let m = 10_000u64;
    let stream = RandomStream::new(seed).derive(&[6, 0]);
    let mut values = Vec::with_capacity(m as usize);
    for k in 0..m {
        let s = submax::stream::sample_random_set(y, &stream.derive(&[k]));
        values.push(f.evaluate(&s));
    }
    let mean: f64 = values.iter().sum::<f64>() / m as f64;
    let var: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (m - 1) as f64;
    Ok((mean, false, Some((var / m as f64).sqrt())))
}

fn brute_force_command(path: &PathBuf, output: Option<PathBuf>) -> Result<(), CliError> {
    let loaded = load_instance(path)?;
    let opt = brute_force_opt(loaded.function.as_ref(), loaded.matroid.as_ref())?;
    let text = serde_json::to_string_pretty(&opt).map_err(|e| CliError::Runtime(e.to_string()))?;
    write_out(output.as_ref(), &(text + "\n"))
}

fn validate_command(path: &PathBuf) -> Result<(), CliError> {
    let loaded = load_instance(path)?;
    let r = submax::rank(loaded.matroid.as_ref());
    if !verify_submodularity(loaded.function.as_ref()) {
        return Err(CliError::Validation(
            "function failed the submodularity check".into(),
        ));
    }
    println!(
        "ok: n={}, rank={}, function and matroid validated",
        loaded.file.n, r
    );
    Ok(())
}

fn bench_command(args: BenchArgs) -> Result<(), CliError> {
    let LoadedInstance { file, function, matroid } = load_instance(&args.solve.instance)?;
    let n = file.n;
    let opt = if n <= 20 {
        Some(brute_force_opt(function.as_ref(), matroid.as_ref())?.opt_value)
    } else {
        None
    };
    let mut csv = String::from("n,r,epsilon,value_calls,independence_calls,ratio\n");
    for &eps in &args.epsilons {
        let sub = SolveArgs {
            instance: args.solve.instance.clone(),
            epsilon: eps,
            seed: args.solve.seed,
            sample_multiplier: args.solve.sample_multiplier,
            sample_cap: args.solve.sample_cap,
        };
        let config = solver_config(&sub)?;
        let (y, trace) = maximize(function.as_ref(), matroid.as_ref(), &config)?;
        let ratio = match opt {
            Some(o) if o > 0.0 && n <= 20 => format!("{:.6}", exact_value(function.as_ref(), &y)? / o),
            _ => String::new(),
        };
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            n, trace.rank, eps, trace.value_calls, trace.independence_calls, ratio
        ));
    }
    write_out(args.output.as_ref(), &csv)
}
