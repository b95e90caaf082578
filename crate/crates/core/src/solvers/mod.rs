//! Selection algorithms for the resilient problem
//! `max_{|A| ≤ α} min_{B ⊆ A, |B| ≤ β} f(A ∖ B)`.
//!
//! Every solver returns a [`SolveResult`] that includes the worst-case
//! removal of its selection, so residual values are directly comparable.

mod baselines;
mod chain;
mod exact;
mod greedy;

pub use baselines::{baseline_greedy, baseline_random, baseline_top_alpha};
pub use chain::{check_greedy_chain, ChainReport};
pub use exact::{exact_maxmin, exact_maxmin_all_sizes, DEFAULT_MAXMIN_CAP};
pub use greedy::{plain_greedy, rank_singletons, resilient_greedy};

use crate::adversary::{
    binomial, exact_removal, greedy_removal, RemovalResult, DEFAULT_REMOVAL_CAP,
};
use crate::analysis::{compute_curvature, theorem1_bound};
use crate::error::{Error, Result};
use crate::oracle::ObjectiveOracle;
use crate::subset::Subset;

/// An objective together with the selection budget `α` and removal budget `β`.
#[derive(Debug)]
pub struct ProblemInstance<O> {
    oracle: O,
    alpha: usize,
    beta: usize,
}

impl<O: ObjectiveOracle> ProblemInstance<O> {
    /// Requires `0 ≤ β ≤ α ≤ m`.
    pub fn new(oracle: O, alpha: usize, beta: usize) -> Result<Self> {
        let m = oracle.ground_size();
        if m == 0 {
            return Err(Error::invalid("ground set must be non-empty"));
        }
        if beta > alpha {
            return Err(Error::invalid(format!(
                "beta = {beta} must not exceed alpha = {alpha}"
            )));
        }
        if alpha > m {
            return Err(Error::invalid(format!(
                "alpha = {alpha} must not exceed the ground set size {m}"
            )));
        }
        Ok(Self {
            oracle,
            alpha,
            beta,
        })
    }

    pub fn oracle(&self) -> &O {
        &self.oracle
    }

    pub fn into_oracle(self) -> O {
        self.oracle
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn ground_size(&self) -> usize {
        self.oracle.ground_size()
    }

    /// `m(α−β) + m + (α−β)`: the most evaluations the resilient greedy's
    /// selection phase may spend.
    pub fn selection_budget(&self) -> u64 {
        let m = self.ground_size() as u64;
        let k = (self.alpha - self.beta) as u64;
        m * k + m + k
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RemovalMethod {
    /// Exact when `C(α, β)` fits under the removal cap, greedy otherwise.
    #[default]
    Auto,
    Exact,
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub removal: RemovalMethod,
    pub removal_cap: u128,
    pub maxmin_cap: u128,
    /// Compute curvature and the guarantee bound alongside the selection.
    pub with_bound: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            removal: RemovalMethod::Auto,
            removal_cap: DEFAULT_REMOVAL_CAP,
            maxmin_cap: DEFAULT_MAXMIN_CAP,
            with_bound: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub solver_name: String,
    pub selected: Subset,
    /// Bait phase (top-β singletons) of the resilient greedy; empty for other solvers.
    pub a1: Subset,
    /// Greedy phase of the resilient greedy; equals `selected` for other solvers.
    pub a2: Subset,
    pub worst_removal: RemovalResult,
    pub residual_value: f64,
    /// Evaluations spent choosing `selected`.
    pub selection_evals: u64,
    /// Selection plus removal evaluations (curvature excluded).
    pub eval_count: u64,
    pub curvature: Option<f64>,
    pub bound: Option<f64>,
}

impl SolveResult {
    /// `solver,selected,residual,evals,kappa,bound`; missing values are empty.
    pub fn csv_row(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.solver_name,
            self.selected,
            self.residual_value,
            self.eval_count,
            opt(self.curvature),
            opt(self.bound)
        )
    }
}

pub(crate) fn attack<O: ObjectiveOracle + ?Sized>(
    oracle: &O,
    selected: &Subset,
    beta: usize,
    options: &SolveOptions,
) -> Result<RemovalResult> {
    match options.removal {
        RemovalMethod::Exact => exact_removal(oracle, selected, beta, options.removal_cap),
        RemovalMethod::Greedy => greedy_removal(oracle, selected, beta),
        RemovalMethod::Auto => {
            if binomial(selected.len(), beta.min(selected.len())) <= options.removal_cap {
                exact_removal(oracle, selected, beta, options.removal_cap)
            } else {
                greedy_removal(oracle, selected, beta)
            }
        }
    }
}

/// Attaches the worst removal and (optionally) curvature and bound.
pub(crate) fn finish<O: ObjectiveOracle>(
    instance: &ProblemInstance<O>,
    solver_name: &str,
    selected: Subset,
    phases: (Subset, Subset),
    selection_evals: u64,
    options: &SolveOptions,
) -> Result<SolveResult> {
    let worst_removal = attack(instance.oracle(), &selected, instance.beta(), options)?;
    let (curvature, bound) = if options.with_bound {
        // Curvature is informational; objectives with zero-valued elements simply have none.
        match compute_curvature(instance.oracle()) {
            Ok(c) => (
                Some(c.kappa),
                Some(theorem1_bound(c.kappa, instance.beta())?.bound),
            ),
            Err(_) => (None, None),
        }
    } else {
        (None, None)
    };
    Ok(SolveResult {
        solver_name: solver_name.to_string(),
        residual_value: worst_removal.residual_value,
        eval_count: selection_evals + worst_removal.eval_count_used,
        selected,
        a1: phases.0,
        a2: phases.1,
        worst_removal,
        selection_evals,
        curvature,
        bound,
    })
}
