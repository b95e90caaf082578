use itertools::Itertools;

use super::{exact_maxmin, resilient_greedy, ProblemInstance, SolveOptions};
use crate::analysis::{compute_curvature, greedy_curvature_factor, CHECK_TOL};
use crate::error::Result;
use crate::oracle::ObjectiveOracle;
use crate::subset::Subset;

/// The two links behind the bait-then-greedy guarantee, measured on one instance:
///
/// * `restricted_opt ≥ f_star`: the best `α−β` elements chosen from `V ∖ A1`
///   are worth at least the resilient optimum;
/// * `f(A2) ≥ (1 − e^{−κ})/κ · restricted_opt`: the curvature greedy bound.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport {
    pub kappa: f64,
    pub f_star: f64,
    pub restricted_opt: f64,
    pub f_a2: f64,
    pub greedy_factor: f64,
    pub opt_dominates: bool,
    pub greedy_holds: bool,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.opt_dominates && self.greedy_holds
    }
}

/// Brute force; intended for small instances.
pub fn check_greedy_chain<O: ObjectiveOracle>(
    instance: &ProblemInstance<O>,
) -> Result<ChainReport> {
    let oracle = instance.oracle();
    let m = instance.ground_size();
    let options = SolveOptions {
        with_bound: false,
        ..Default::default()
    };
    let kappa = compute_curvature(oracle)?.kappa;
    let res = resilient_greedy(instance, &options)?;
    let f_star = exact_maxmin(instance, &options)?.residual_value;

    let pool = res.a1.complement();
    let k = instance.alpha() - instance.beta();
    let restricted_opt = pool
        .members()
        .iter()
        .copied()
        .combinations(k)
        .map(|c| oracle.evaluate(&Subset::from_indices(c, m).expect("in range")))
        .fold(f64::NEG_INFINITY, f64::max);
    let f_a2 = oracle.evaluate(&res.a2);
    let greedy_factor = greedy_curvature_factor(kappa);

    Ok(ChainReport {
        kappa,
        f_star,
        restricted_opt,
        f_a2,
        greedy_factor,
        opt_dominates: restricted_opt >= f_star - CHECK_TOL,
        greedy_holds: f_a2 >= greedy_factor * restricted_opt - CHECK_TOL,
    })
}
