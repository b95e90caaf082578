//! Empirical study: resilient greedy versus the brute-force optimum on random
//! log-det objectives, over a grid of ground-set sizes and removal budgets.
//!
//! Each trial draws its own instance from a seed derived from
//! `(base_seed, m, beta, trial)`, so any sub-grid reproduces exactly the rows
//! of the full grid. Rows are sorted by `(m, beta, trial)` before output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::adversary::{binomial, DEFAULT_REMOVAL_CAP};
use crate::analysis::{compute_curvature, theorem1_bound};
use crate::error::{Error, Result};
use crate::functions::random_psd_instance;
use crate::oracle::{MemoizedOracle, Oracle};
use crate::solvers::{
    exact_maxmin, resilient_greedy, ProblemInstance, RemovalMethod, SolveOptions,
    DEFAULT_MAXMIN_CAP,
};

pub const CSV_HEADER: &str =
    "m,beta,trial,seed,kappa,f_star,f_alg,ratio,bound,evals_alg,evals_exact";
pub const SUMMARY_HEADER: &str = "m,beta,mean_ratio,min_ratio,max_ratio";

/// Curvatures at or below this trigger a warning (the log-det family is
/// expected to sit above it).
pub const KAPPA_WARN: f64 = 0.9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ExperimentRemoval {
    #[default]
    Exact,
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub m_values: Vec<usize>,
    pub alpha: usize,
    pub beta_values: Vec<usize>,
    pub trials: usize,
    pub d: usize,
    pub base_seed: u64,
    pub removal_method: ExperimentRemoval,
    pub output_path: Option<String>,
    pub maxmin_cap: u128,
    pub removal_cap: u128,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            m_values: (8..=15).collect(),
            alpha: 7,
            beta_values: (1..=6).collect(),
            trials: 10,
            d: 20,
            base_seed: 0,
            removal_method: ExperimentRemoval::Exact,
            output_path: None,
            maxmin_cap: DEFAULT_MAXMIN_CAP,
            removal_cap: DEFAULT_REMOVAL_CAP,
        }
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("experiment config: {e}")))
    }

    /// Checks the grid and the enumeration caps; runs before any work.
    pub fn validate(&self) -> Result<()> {
        if self.m_values.is_empty() || self.beta_values.is_empty() {
            return Err(Error::invalid("m_values and beta_values must be non-empty"));
        }
        if self.trials == 0 {
            return Err(Error::invalid("trials must be at least 1"));
        }
        if self.d == 0 {
            return Err(Error::invalid("matrix dimension d must be at least 1"));
        }
        for &m in &self.m_values {
            for &beta in &self.beta_values {
                if !(beta <= self.alpha && self.alpha <= m) {
                    return Err(Error::invalid(format!(
                        "grid cell m={m}, alpha={}, beta={beta} violates 0 <= beta <= alpha <= m",
                        self.alpha
                    )));
                }
                let outer = binomial(m, self.alpha).saturating_mul(binomial(self.alpha, beta));
                if outer > self.maxmin_cap {
                    return Err(Error::Capacity {
                        what: "residual evaluations",
                        required: outer,
                        cap: self.maxmin_cap,
                        hint: "shrink m_values or raise the cap",
                    });
                }
                let inner = binomial(self.alpha, beta);
                if self.removal_method == ExperimentRemoval::Exact && inner > self.removal_cap {
                    return Err(Error::Capacity {
                        what: "removal sets",
                        required: inner,
                        cap: self.removal_cap,
                        hint: "use the greedy removal method",
                    });
                }
            }
        }
        Ok(())
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-trial instance seed: SplitMix64 folded over `base_seed, m, beta, trial`
/// (`h ← mix(h ⊕ x)` for each, starting from `mix(base_seed)`).
pub fn trial_seed(base_seed: u64, m: usize, beta: usize, trial: usize) -> u64 {
    [m as u64, beta as u64, trial as u64]
        .iter()
        .fold(splitmix64(base_seed), |h, &x| splitmix64(h ^ x))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub m: usize,
    pub beta: usize,
    pub trial: usize,
    pub seed: u64,
    pub kappa: f64,
    pub f_star: f64,
    pub f_alg: f64,
    pub ratio: f64,
    pub bound: f64,
    /// Selection-phase evaluations of the resilient greedy.
    pub evals_alg: u64,
    /// Evaluation calls made by the brute-force solver.
    pub evals_exact: u64,
}

impl ExperimentRow {
    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.m,
            self.beta,
            self.trial,
            self.seed,
            self.kappa,
            self.f_star,
            self.f_alg,
            self.ratio,
            self.bound,
            self.evals_alg,
            self.evals_exact
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub rows: Vec<ExperimentRow>,
    pub warnings: Vec<String>,
}

impl ExperimentReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.csv());
            out.push('\n');
        }
        out
    }

    /// Rows whose ratio falls below the guarantee (beyond 1e-9).
    pub fn bound_violations(&self) -> Vec<&ExperimentRow> {
        self.rows
            .iter()
            .filter(|r| r.ratio < r.bound - 1e-9)
            .collect()
    }
}

/// Runs one trial of the grid.
pub fn run_trial(
    config: &ExperimentConfig,
    m: usize,
    beta: usize,
    trial: usize,
) -> Result<ExperimentRow> {
    let seed = trial_seed(config.base_seed, m, beta, trial);
    let f = random_psd_instance(m, config.d, seed)?;
    let removal = match config.removal_method {
        ExperimentRemoval::Exact => RemovalMethod::Exact,
        ExperimentRemoval::Greedy => RemovalMethod::Greedy,
    };
    let options = SolveOptions {
        removal,
        removal_cap: config.removal_cap,
        maxmin_cap: config.maxmin_cap,
        with_bound: false,
    };

    let kappa = compute_curvature(&Oracle::new(f.clone()))?.kappa;
    let bound = theorem1_bound(kappa, beta)?.bound;

    let alg = resilient_greedy(
        &ProblemInstance::new(Oracle::new(f.clone()), config.alpha, beta)?,
        &options,
    )?;

    // The optimum always uses the exact adversary; memoization only saves work.
    let exact_opts = SolveOptions {
        removal: RemovalMethod::Exact,
        ..options
    };
    let memo = MemoizedOracle::new(Oracle::new(f));
    let exact = exact_maxmin(
        &ProblemInstance::new(&memo, config.alpha, beta)?,
        &exact_opts,
    )?;

    let (f_star, f_alg) = (exact.residual_value, alg.residual_value);
    let ratio = if f_star == 0.0 { 1.0 } else { f_alg / f_star };
    Ok(ExperimentRow {
        m,
        beta,
        trial,
        seed,
        kappa,
        f_star,
        f_alg,
        ratio,
        bound,
        evals_alg: alg.selection_evals,
        evals_exact: exact.eval_count,
    })
}

/// Runs the full grid on the rayon pool.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let jobs: Vec<(usize, usize, usize)> = config
        .m_values
        .iter()
        .flat_map(|&m| {
            config
                .beta_values
                .iter()
                .flat_map(move |&b| (0..config.trials).map(move |t| (m, b, t)))
        })
        .collect();
    let mut rows = jobs
        .par_iter()
        .map(|&(m, b, t)| run_trial(config, m, b, t))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.m, r.beta, r.trial));
    let warnings = rows
        .iter()
        .filter(|r| r.kappa <= KAPPA_WARN)
        .map(|r| {
            format!(
                "curvature {} <= {KAPPA_WARN} at m={}, beta={}, trial={}",
                r.kappa, r.m, r.beta, r.trial
            )
        })
        .collect();
    Ok(ExperimentReport {
        config: config.clone(),
        rows,
        warnings,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub m: usize,
    pub beta: usize,
    pub count: usize,
    pub mean_ratio: f64,
    pub min_ratio: f64,
    pub max_ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub cells: Vec<CellSummary>,
    pub grand_mean: f64,
    /// Mean ratio per beta, pooled over every m.
    pub beta_means: Vec<(usize, f64)>,
    /// Pooled mean at the largest beta is no greater than at the smallest.
    pub degrades_with_beta: bool,
}

impl Summary {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(SUMMARY_HEADER);
        out.push('\n');
        for c in &self.cells {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                c.m, c.beta, c.mean_ratio, c.min_ratio, c.max_ratio
            );
        }
        out
    }

    /// One line per beta plus the trend verdict, for humans.
    pub fn trend_annotation(&self) -> String {
        let mut out = String::new();
        for (b, mean) in &self.beta_means {
            let _ = writeln!(out, "beta={b}: mean ratio {mean:.4}");
        }
        let verdict = if self.degrades_with_beta {
            "degrades"
        } else {
            "does not degrade"
        };
        let _ = writeln!(
            out,
            "grand mean {:.4}; ratio {verdict} as beta grows",
            self.grand_mean
        );
        out
    }
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

pub fn summarize(report: &ExperimentReport) -> Result<Summary> {
    if report.rows.is_empty() {
        return Err(Error::invalid("cannot summarize an empty report"));
    }
    let mut cells: BTreeMap<(usize, usize), Vec<f64>> = BTreeMap::new();
    let mut by_beta: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for r in &report.rows {
        cells.entry((r.m, r.beta)).or_default().push(r.ratio);
        by_beta.entry(r.beta).or_default().push(r.ratio);
    }
    let cells = cells
        .into_iter()
        .map(|((m, beta), xs)| CellSummary {
            m,
            beta,
            count: xs.len(),
            mean_ratio: mean(&xs),
            min_ratio: xs.iter().copied().fold(f64::INFINITY, f64::min),
            max_ratio: xs.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        })
        .collect();
    let beta_means: Vec<(usize, f64)> = by_beta.into_iter().map(|(b, xs)| (b, mean(&xs))).collect();
    let first = beta_means.first().expect("non-empty").1;
    let last = beta_means.last().expect("non-empty").1;
    let all: Vec<f64> = report.rows.iter().map(|r| r.ratio).collect();
    Ok(Summary {
        cells,
        grand_mean: mean(&all),
        beta_means,
        degrades_with_beta: last <= first,
    })
}

/// `results.csv` → `results_summary.csv`.
pub fn summary_path(path: &Path) -> PathBuf {
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("experiment");
    path.with_file_name(format!("{stem}_summary.csv"))
}

/// Writes the row CSV to `path` and the summary next to it.
pub fn write_outputs(report: &ExperimentReport, summary: &Summary, path: &Path) -> Result<PathBuf> {
    std::fs::write(path, report.to_csv())?;
    let sp = summary_path(path);
    std::fs::write(&sp, summary.to_csv())?;
    Ok(sp)
}
