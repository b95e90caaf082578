//! `resilient`: command-line front end. Results go to stdout as CSV,
//! diagnostics to stderr. Exit status is 0 on success, 1 on domain errors and
//! 2 on usage or parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use resilient_core::adversary::{exact_removal, greedy_removal, DEFAULT_REMOVAL_CAP};
use resilient_core::analysis::{compute_curvature, g_curve, property_sweep, theorem1_bound, Tally};
use resilient_core::experiments::{
    run_experiment, summarize, write_outputs, ExperimentConfig, ExperimentRemoval,
};
use resilient_core::functions::{load_instance, random_psd_instance, Objective};
use resilient_core::solvers::{
    baseline_greedy, baseline_random, baseline_top_alpha, exact_maxmin, resilient_greedy,
    ProblemInstance, RemovalMethod, SolveOptions, SolveResult, DEFAULT_MAXMIN_CAP,
};
use resilient_core::{Error, MemoizedOracle, Oracle, SetFunction, Subset};

#[derive(Parser, Debug)]
#[command(
    name = "resilient",
    version,
    about = "Resilient monotone submodular maximization"
)]
struct Cli {
    /// Override every enumeration cap (removal sets and max-min evaluations).
    #[arg(long, global = true, value_name = "N")]
    cap: Option<u128>,

    /// Print a CSV header line before the result rows.
    #[arg(long, global = true)]
    header: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Select alpha elements and report the worst-case residual.
    Solve {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
        #[arg(long, value_enum, default_value_t = SolverKind::Resilient)]
        solver: SolverKind,
        /// Seed for the random baseline.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = RemovalKind::Auto)]
        removal: RemovalKind,
    },
    /// Brute-force optimum (same output as `solve --solver exact`).
    Exact {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
    },
    /// Worst-case removal of beta elements from a given subset.
    Attack {
        #[arg(long)]
        instance: PathBuf,
        /// Subset in the form `{0,3,7}`.
        #[arg(long)]
        subset: String,
        #[arg(long)]
        beta: usize,
        #[arg(long, value_enum, default_value_t = AttackMethod::Exact)]
        method: AttackMethod,
    },
    /// Total curvature of the instance: `kappa,argmin,evals`.
    Curvature {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Approximation guarantee: `kappa,beta,bound,branch`.
    Bound {
        #[arg(long)]
        kappa: f64,
        #[arg(long)]
        beta: usize,
    },
    /// g(kappa) at one point, or tabulated on an even grid over [0, 1].
    Gcurve {
        #[arg(long, conflicts_with = "points", required_unless_present = "points")]
        kappa: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Resilient greedy versus the exact optimum on random log-det instances.
    Experiment {
        /// JSON config; mutually exclusive with the grid flags.
        #[arg(long, conflicts_with_all = ["m_values", "alpha", "beta_values", "trials", "d", "seed", "removal"])]
        config: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        m_values: Option<Vec<usize>>,
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        beta_values: Option<Vec<usize>>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum)]
        removal: Option<AttackMethod>,
        /// Row CSV path; the summary goes next to it. Defaults to stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write a random log-det instance in explicit matrix form.
    GenLogdet {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Randomized monotonicity, submodularity and lemma checks.
    Check {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SolverKind {
    Resilient,
    Exact,
    Greedy,
    Top,
    Random,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RemovalKind {
    Auto,
    Exact,
    Greedy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AttackMethod {
    Exact,
    Greedy,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Io(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CliResult {
    let header = |h: &str| {
        if cli.header {
            println!("{h}");
        }
    };
    match &cli.command {
        Command::Solve {
            instance,
            alpha,
            beta,
            solver,
            seed,
            removal,
        } => {
            if seed.is_some() && *solver != SolverKind::Random {
                return Err(Failure::Usage(
                    "--seed is only used by --solver random".into(),
                ));
            }
            let removal = match removal {
                RemovalKind::Auto => RemovalMethod::Auto,
                RemovalKind::Exact => RemovalMethod::Exact,
                RemovalKind::Greedy => RemovalMethod::Greedy,
            };
            let r = solve(
                cli,
                instance,
                *alpha,
                *beta,
                *solver,
                seed.unwrap_or(0),
                removal,
            )?;
            header("solver,selected,residual,evals,kappa,bound");
            println!("{}", r.csv_row());
        }
        Command::Exact {
            instance,
            alpha,
            beta,
        } => {
            let r = solve(
                cli,
                instance,
                *alpha,
                *beta,
                SolverKind::Exact,
                0,
                RemovalMethod::Exact,
            )?;
            header("solver,selected,residual,evals,kappa,bound");
            println!("{}", r.csv_row());
        }
        Command::Attack {
            instance,
            subset,
            beta,
            method,
        } => {
            let oracle = Oracle::new(load_instance(instance)?);
            let a = Subset::parse(subset, oracle.function().ground_size())
                .map_err(|e| Failure::Usage(format!("--subset: {e}")))?;
            let r = match method {
                AttackMethod::Exact => exact_removal(&oracle, &a, *beta, removal_cap(cli))?,
                AttackMethod::Greedy => greedy_removal(&oracle, &a, *beta)?,
            };
            header("removed,residual,exact,evals");
            println!("{}", r.csv_row());
        }
        Command::Curvature { instance } => {
            let oracle = Oracle::new(load_instance(instance)?);
            let r = compute_curvature(&oracle)?;
            header("kappa,argmin,evals");
            println!("{},{},{}", r.kappa, r.argmin_element, r.eval_count_used);
        }
        Command::Bound { kappa, beta } => {
            let r = theorem1_bound(*kappa, *beta).map_err(named("--kappa"))?;
            header("kappa,beta,bound,branch");
            println!("{}", r.csv_row());
        }
        Command::Gcurve { kappa, points } => {
            header("kappa,g");
            if let Some(k) = kappa {
                println!("{k},{}", g_curve(*k).map_err(named("--kappa"))?);
            } else if let Some(n) = points {
                if *n < 2 {
                    return Err(Failure::Usage("--points must be at least 2".into()));
                }
                for i in 0..*n {
                    let k = i as f64 / (*n - 1) as f64;
                    println!("{k},{}", g_curve(k)?);
                }
            }
        }
        Command::Experiment {
            config,
            m_values,
            alpha,
            beta_values,
            trials,
            d,
            seed,
            removal,
            output,
        } => {
            let mut cfg = match config {
                Some(path) => ExperimentConfig::from_json(&read(path)?)?,
                None => ExperimentConfig::default(),
            };
            if let Some(v) = m_values {
                cfg.m_values = v.clone();
            }
            if let Some(v) = alpha {
                cfg.alpha = *v;
            }
            if let Some(v) = beta_values {
                cfg.beta_values = v.clone();
            }
            if let Some(v) = trials {
                cfg.trials = *v;
            }
            if let Some(v) = d {
                cfg.d = *v;
            }
            if let Some(v) = seed {
                cfg.base_seed = *v;
            }
            if let Some(v) = removal {
                cfg.removal_method = match v {
                    AttackMethod::Exact => ExperimentRemoval::Exact,
                    AttackMethod::Greedy => ExperimentRemoval::Greedy,
                };
            }
            if let Some(c) = cli.cap {
                cfg.maxmin_cap = c;
                cfg.removal_cap = c;
            }
            let target = output
                .clone()
                .or_else(|| cfg.output_path.as_ref().map(PathBuf::from));
            let report = run_experiment(&cfg)?;
            let summary = summarize(&report)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            let violations = report.bound_violations().len();
            if violations > 0 {
                eprintln!("warning: {violations} rows fall below their bound");
            }
            eprint!("{}", summary.trend_annotation());
            match target {
                Some(path) => {
                    let sp = write_outputs(&report, &summary, &path)?;
                    eprintln!("wrote {} and {}", path.display(), sp.display());
                }
                None => print!("{}", report.to_csv()),
            }
        }
        Command::GenLogdet { m, d, seed, output } => {
            let f = random_psd_instance(*m, *d, *seed)?;
            let text = Objective::from(f).to_spec().to_json();
            match output {
                Some(path) => fs::write(path, text + "\n").map_err(Error::from)?,
                None => println!("{text}"),
            }
        }
        Command::Check {
            instance,
            samples,
            seed,
        } => {
            let oracle = Oracle::new(load_instance(instance)?);
            let kappa = match compute_curvature(&oracle) {
                Ok(r) => Some(r.kappa),
                Err(e) => {
                    eprintln!("warning: skipping the curvature check: {e}");
                    None
                }
            };
            let report = property_sweep(&oracle, *samples, kappa, *seed)?;
            header("property,checked,violations,worst_slack");
            println!("normalized,1,{},0", u8::from(!report.normalized));
            let line = |name: &str, t: &Tally| {
                println!("{name},{},{},{}", t.checked, t.violations, t.worst_slack)
            };
            line("monotone", &report.monotone);
            line("diminishing_returns", &report.diminishing_returns);
            line("union_submodular", &report.union_submodular);
            if let Some(t) = &report.lemma1 {
                line("curvature_lower_bound", t);
            }
            line("top_singletons", &report.lemma2);
            if !report.passed() {
                return Err(Failure::Domain(
                    "instance violates a required property".into(),
                ));
            }
        }
    }
    Ok(())
}

fn solve(
    cli: &Cli,
    path: &Path,
    alpha: usize,
    beta: usize,
    solver: SolverKind,
    seed: u64,
    removal: RemovalMethod,
) -> Result<SolveResult, Failure> {
    let f = load_instance(path)?;
    let options = SolveOptions {
        removal,
        removal_cap: removal_cap(cli),
        maxmin_cap: cli.cap.unwrap_or(DEFAULT_MAXMIN_CAP),
        with_bound: true,
    };
    let r = if solver == SolverKind::Exact {
        let inst = ProblemInstance::new(MemoizedOracle::new(Oracle::new(f)), alpha, beta)?;
        exact_maxmin(&inst, &options)?
    } else {
        let inst = ProblemInstance::new(Oracle::new(f), alpha, beta)?;
        match solver {
            SolverKind::Resilient => resilient_greedy(&inst, &options)?,
            SolverKind::Greedy => baseline_greedy(&inst, &options)?,
            SolverKind::Top => baseline_top_alpha(&inst, &options)?,
            SolverKind::Random => baseline_random(&inst, seed, &options)?,
            SolverKind::Exact => unreachable!(),
        }
    };
    Ok(r)
}

fn removal_cap(cli: &Cli) -> u128 {
    cli.cap.unwrap_or(DEFAULT_REMOVAL_CAP)
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn named(flag: &'static str) -> impl Fn(Error) -> Failure {
    move |e| Failure::Usage(format!("{flag}: {e}"))
}
