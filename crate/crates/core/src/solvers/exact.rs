use itertools::Itertools;

use super::{finish, ProblemInstance, SolveOptions, SolveResult};
use crate::adversary::{binomial, exact_removal, exact_removal_all_sizes};
use crate::error::{Error, Result};
use crate::oracle::ObjectiveOracle;
use crate::subset::Subset;

/// Cap on `C(m, α)·C(α, β)` residual evaluations for the brute-force solver.
pub const DEFAULT_MAXMIN_CAP: u128 = 100_000_000;

/// Brute-force optimum. Enumerates every size-`α` selection (monotonicity
/// makes smaller selections redundant), attacks each with the exact
/// adversary, and keeps the best residual; ties go to the lexicographically
/// smallest selection.
pub fn exact_maxmin<O: ObjectiveOracle>(
    instance: &ProblemInstance<O>,
    options: &SolveOptions,
) -> Result<SolveResult> {
    let m = instance.ground_size();
    let (alpha, beta) = (instance.alpha(), instance.beta());
    let required = binomial(m, alpha).saturating_mul(binomial(alpha, beta));
    check_cap(required, options.maxmin_cap)?;
    run(instance, options, "exact", std::iter::once(alpha))
}

/// Same as [`exact_maxmin`] but over every selection size `0..=α` and every
/// removal size `0..=β`. Exists to confirm the fixed-size shortcut.
pub fn exact_maxmin_all_sizes<O: ObjectiveOracle>(
    instance: &ProblemInstance<O>,
    options: &SolveOptions,
) -> Result<SolveResult> {
    let m = instance.ground_size();
    let required = (0..=instance.alpha())
        .map(|a| {
            let removals: u128 = (0..=instance.beta().min(a)).map(|b| binomial(a, b)).sum();
            binomial(m, a).saturating_mul(removals)
        })
        .fold(0u128, u128::saturating_add);
    check_cap(required, options.maxmin_cap)?;
    run(instance, options, "exact_all_sizes", 0..=instance.alpha())
}

fn check_cap(required: u128, cap: u128) -> Result<()> {
    if required > cap {
        return Err(Error::Capacity {
            what: "residual evaluations",
            required,
            cap,
            hint: "reduce the ground set or use the resilient solver",
        });
    }
    Ok(())
}

fn run<O: ObjectiveOracle>(
    instance: &ProblemInstance<O>,
    options: &SolveOptions,
    name: &str,
    sizes: impl Iterator<Item = usize>,
) -> Result<SolveResult> {
    let oracle = instance.oracle();
    let m = instance.ground_size();
    let beta = instance.beta();
    let all_sizes = name != "exact";
    let start = oracle.eval_count();
    let mut best: Option<(f64, Subset)> = None;
    for size in sizes {
        for members in (0..m).combinations(size) {
            let a = Subset::from_sorted_unchecked(members, m);
            let r = if all_sizes {
                exact_removal_all_sizes(oracle, &a, beta, u128::MAX)?
            } else {
                exact_removal(oracle, &a, beta, u128::MAX)?
            };
            let better = match &best {
                None => true,
                Some((v, b)) => r.residual_value > *v || (r.residual_value == *v && a < *b),
            };
            if better {
                best = Some((r.residual_value, a));
            }
        }
    }
    let (_, selected) = best.expect("size 0 or alpha always yields a selection");
    let selection_evals = oracle.eval_count() - start;
    let empty = Subset::empty(m);
    finish(
        instance,
        name,
        selected.clone(),
        (empty, selected),
        selection_evals,
        options,
    )
}
