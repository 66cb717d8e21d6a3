//! `rmi`: solve, verify and generate matroid intersection instances, and run
//! the separation witness search.
//!
//! Exit codes: 0 on success, 1 when a solver disagrees with brute force or a
//! witness fails to re-verify, 2 on usage or schema errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};

use rmi_core::generate::{generate, GeneratorConfig, Mix};
use rmi_core::instance::{emit_instance, parse_instance, Instance};
use rmi_core::session::{self, SolveOptions};
use rmi_core::verify::witness;
use rmi_core::{SolveReport, SolverKind};

#[derive(Parser)]
#[command(
    name = "rmi",
    version,
    about = "Matroid intersection under restricted oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance and print the report as JSON.
    Solve(SolveArgs),
    /// Solve and compare against brute force, for one file or a seeded batch.
    Verify(VerifyArgs),
    /// Search for pairs of instances that one oracle separates and others cannot.
    Witness(WitnessArgs),
    /// Print a seeded random instance.
    Gen(GenArgs),
    /// Print a query-counter table for every compatible solver.
    Stats(StatsArgs),
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_parser = parse_solver)]
    oracle: SolverKind,
    #[arg(long)]
    weighted: bool,
    /// Check the rank-sum search invariants against full access.
    #[arg(long)]
    audit: bool,
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Solver to check; every compatible solver when omitted.
    #[arg(long, value_parser = parse_solver)]
    oracle: Option<SolverKind>,
    #[arg(long)]
    weighted: bool,
    #[arg(long = "in", value_name = "FILE", conflicts_with = "seeds")]
    input: Option<PathBuf>,
    /// Number of generated instances to check.
    #[arg(long, required_unless_present = "input")]
    seeds: Option<u64>,
    #[arg(long, default_value_t = 0)]
    first_seed: u64,
    /// Generated sizes cycle through `1..=max-n`.
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, default_value = "mixed", value_parser = parse_mix)]
    mix: Mix,
    /// Worker threads for a batch; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct WitnessArgs {
    /// Preset to run; all of them when omitted.
    #[arg(long)]
    preset: Option<String>,
    /// Directory to write `witness-<preset>.json` files into.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "mixed", value_parser = parse_mix)]
    mix: Mix,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    weighted: bool,
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
}

fn parse_solver(s: &str) -> Result<SolverKind, String> {
    s.parse()
}

fn parse_mix(s: &str) -> Result<Mix, String> {
    s.parse()
}

/// Errors carrying their exit code.
enum Failure {
    Mismatch(anyhow::Error),
    Usage(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<rmi_core::Error> for Failure {
    fn from(e: rmi_core::Error) -> Self {
        match e {
            rmi_core::Error::Contract(_) => Failure::Mismatch(e.into()),
            _ => Failure::Usage(e.into()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(args) => solve(args),
        Command::Verify(args) => verify(args),
        Command::Witness(args) => run_witness(args),
        Command::Gen(args) => gen(args),
        Command::Stats(args) => stats(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(e)) => {
            eprintln!("rmi: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("rmi: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).map_err(|e| Failure::Usage(anyhow!("{}: {e}", path.display())))
}

fn print_json(report: &SolveReport) -> Outcome {
    let text = serde_json::to_string_pretty(report).context("serializing output")?;
    println!("{text}");
    Ok(())
}

fn solve(args: SolveArgs) -> Outcome {
    let instance = read_instance(&args.input)?;
    let options = SolveOptions {
        weighted: args.weighted,
        audit: args.audit,
    };
    let report = session::solve_instance(&instance, args.oracle, options)?;
    print_json(&report)
}

fn solvers_for(
    instance: &Instance,
    oracle: Option<SolverKind>,
    weighted: bool,
) -> Result<Vec<SolverKind>, Failure> {
    match oracle {
        Some(solver) => {
            session::check_compatibility(instance, solver, weighted)?;
            Ok(vec![solver])
        }
        None => Ok(session::compatible_solvers(instance, weighted)),
    }
}

/// Issues found for one instance, one line each.
fn check(
    instance: &Instance,
    solvers: &[SolverKind],
    weighted: bool,
) -> Result<Vec<String>, rmi_core::Error> {
    let options = SolveOptions {
        weighted,
        audit: false,
    };
    let mut issues = Vec::new();
    for &solver in solvers {
        let v = session::verify_instance(instance, solver, options)?;
        issues.extend(v.issues.into_iter().map(|i| format!("{solver}: {i}")));
    }
    Ok(issues)
}

fn verify(args: VerifyArgs) -> Outcome {
    if let Some(path) = &args.input {
        let instance = read_instance(path)?;
        let solvers = solvers_for(&instance, args.oracle, args.weighted)?;
        let issues = check(&instance, &solvers, args.weighted)?;
        for issue in &issues {
            println!("{issue}");
        }
        return if issues.is_empty() {
            let names: Vec<_> = solvers.iter().map(|s| s.name()).collect();
            println!("ok: {} agree with brute force", names.join(", "));
            Ok(())
        } else {
            Err(Failure::Mismatch(anyhow!("{} mismatches", issues.len())))
        };
    }

    let count = args.seeds.expect("clap requires --seeds without --in");
    if args.max_n == 0 || args.max_n > rmi_core::subset::MAX_GROUND {
        return Err(Failure::Usage(anyhow!("--max-n must lie in 1..=64")));
    }
    if let Some(solver) = args.oracle {
        if args.weighted && !solver.supports_weights() {
            return Err(Failure::Usage(anyhow!(
                "{solver} solves the cardinality problem only"
            )));
        }
    }
    let seeds: Vec<u64> = (args.first_seed..args.first_seed + count).collect();
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
        .max(1);
    let started = Instant::now();
    let results: Vec<(u64, Result<Vec<String>, rmi_core::Error>)> = std::thread::scope(|scope| {
        let chunk = seeds.len().div_ceil(jobs).max(1);
        let handles: Vec<_> = seeds
            .chunks(chunk)
            .map(|part| {
                let args = &args;
                scope.spawn(move || {
                    part.iter()
                        .map(|&seed| {
                            let n = 1 + (seed as usize) % args.max_n;
                            let instance = generate(&GeneratorConfig::new(seed, n, args.mix));
                            let solvers = match args.oracle {
                                Some(s)
                                    if session::check_compatibility(
                                        &instance,
                                        s,
                                        args.weighted,
                                    )
                                    .is_err() =>
                                {
                                    Vec::new()
                                }
                                Some(s) => vec![s],
                                None => session::compatible_solvers(&instance, args.weighted),
                            };
                            (seed, check(&instance, &solvers, args.weighted))
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification worker panicked"))
            .collect()
    });

    let mut failed = 0;
    for (seed, result) in &results {
        match result {
            Ok(issues) if issues.is_empty() => {}
            Ok(issues) => {
                failed += 1;
                for issue in issues {
                    println!("seed {seed}: {issue}");
                }
            }
            Err(e) => {
                failed += 1;
                println!("seed {seed}: {e}");
            }
        }
    }
    println!(
        "{} of {} instances agree with brute force ({:.2?})",
        results.len() - failed,
        results.len(),
        started.elapsed()
    );
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch(anyhow!("{failed} instances disagree")))
    }
}

fn run_witness(args: WitnessArgs) -> Outcome {
    let presets = witness::presets();
    let selected: Vec<_> = match &args.preset {
        Some(name) => {
            let found: Vec<_> = presets.into_iter().filter(|(p, _)| p == name).collect();
            if found.is_empty() {
                let names: Vec<_> = witness::presets().into_iter().map(|(p, _)| p).collect();
                return Err(Failure::Usage(anyhow!(
                    "unknown preset `{name}`; expected one of {}",
                    names.join(", ")
                )));
            }
            found
        }
        None => presets,
    };
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }

    let mut failed = Vec::new();
    for (name, query) in selected {
        let started = Instant::now();
        let Some(found) = witness::find_separation_witness(&query) else {
            println!("{name}: no witness in the search space");
            failed.push(name);
            continue;
        };
        let status = match found.verify() {
            Ok(()) => "verified",
            Err(e) => {
                println!("{name}: re-verification failed: {e}");
                failed.push(name);
                "failed"
            }
        };
        println!(
            "{name}: {} = {} vs {} at {} ({status}, {:.2?})",
            query.target,
            found.values.0,
            found.values.1,
            found.subset,
            started.elapsed()
        );
        let text = serde_json::to_string_pretty(&found.to_json()).context("serializing witness")?;
        match &args.out {
            Some(dir) => {
                let path = dir.join(format!("witness-{name}.json"));
                fs::write(&path, text + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            None => println!("{text}"),
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(anyhow!(
            "failed presets: {}",
            failed.join(", ")
        )))
    }
}

fn gen(args: GenArgs) -> Outcome {
    if args.n == 0 || args.n > rmi_core::subset::MAX_GROUND {
        return Err(Failure::Usage(anyhow!("--n must lie in 1..=64")));
    }
    let text = emit_instance(&generate(&GeneratorConfig::new(
        args.seed, args.n, args.mix,
    )));
    match args.out {
        Some(path) => {
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn stats_row(report: &SolveReport) -> String {
    let q = report.stats.queries;
    let shapes = report.stats.shape_queries.map_or_else(
        || "-".to_string(),
        |s| format!("{}/{}/{}/{}/{}", s.a, s.b, s.c, s.d, s.expands),
    );
    format!(
        "{:<13}{:<12}{:>9}{:>9}{:>9}{:>9}{:>10}{:>6}{:>6}  {}",
        report.solver.name(),
        report.stats.oracle_kind.name(),
        q.sum,
        q.min,
        q.max,
        q.ci,
        q.total(),
        report.stats.augmentations,
        report.stats.n,
        shapes
    )
}

fn stats(args: StatsArgs) -> Outcome {
    let instance = read_instance(&args.input)?;
    let options = SolveOptions {
        weighted: args.weighted,
        audit: false,
    };
    println!(
        "{:<13}{:<12}{:>9}{:>9}{:>9}{:>9}{:>10}{:>6}{:>6}  shapes a/b/c/d/expands",
        "solver", "oracle", "sum", "min", "max", "ci", "total", "aug", "n"
    );
    for solver in session::compatible_solvers(&instance, args.weighted) {
        let report = session::solve_instance(&instance, solver, options)?;
        println!("{}", stats_row(&report));
    }
    Ok(())
}
