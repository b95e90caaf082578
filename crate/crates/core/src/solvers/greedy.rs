use super::{finish, ProblemInstance, SolveOptions, SolveResult};
use crate::error::{Error, Result};
use crate::oracle::{check_subset, ObjectiveOracle};
use crate::subset::Subset;

/// Standard greedy: `k` rounds, each adding the candidate with the largest
/// marginal gain over the set built so far. Ties go to the smallest index.
///
/// Spends at most `|candidates|·k + k` evaluations (one base value plus one
/// per remaining candidate per round).
pub fn plain_greedy<O: ObjectiveOracle + ?Sized>(
    oracle: &O,
    candidates: &Subset,
    k: usize,
) -> Result<Subset> {
    check_subset(oracle, candidates)?;
    if k > candidates.len() {
        return Err(Error::invalid(format!(
            "cannot pick {k} elements from {} candidates",
            candidates.len()
        )));
    }
    let m = candidates.parent_size();
    let mut chosen = Subset::empty(m);
    if k == 0 {
        return Ok(chosen);
    }
    let mut remaining: Vec<usize> = candidates.members().to_vec();
    let mut current = oracle.evaluate(&chosen);
    for _ in 0..k {
        let mut best: Option<(f64, f64, usize)> = None;
        for (pos, &y) in remaining.iter().enumerate() {
            let value = oracle.evaluate(&chosen.with(y)?);
            let gain = value - current;
            if best.is_none_or(|(g, _, _)| gain > g) {
                best = Some((gain, value, pos));
            }
        }
        let (_, value, pos) = best.expect("k <= |candidates| leaves a candidate each round");
        chosen = chosen.with(remaining.remove(pos))?;
        current = value;
    }
    Ok(chosen)
}

/// Elements ordered by singleton value, largest first, ties by index.
/// Costs `m` evaluations.
pub fn rank_singletons<O: ObjectiveOracle + ?Sized>(oracle: &O) -> Vec<(usize, f64)> {
    let m = oracle.ground_size();
    let mut ranked: Vec<(usize, f64)> = (0..m)
        .map(|v| (v, oracle.evaluate(&Subset::singleton(v, m).expect("v < m"))))
        .collect();
    ranked.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    ranked
}

/// The two-phase resilient greedy.
///
/// 1. `A1` takes the `β` elements with the largest singleton values. They act
///    as bait: an adversary removing `β` elements will tend to spend its budget
///    on them.
/// 2. `A2` greedily picks `α − β` elements from `V ∖ A1`, with marginal gains
///    measured against `A2` alone, as if `A1` were already gone.
///
/// The selection phase uses at most `m(α−β) + m + (α−β)` evaluations.
pub fn resilient_greedy<O: ObjectiveOracle>(
    instance: &ProblemInstance<O>,
    options: &SolveOptions,
) -> Result<SolveResult> {
    let oracle = instance.oracle();
    let m = instance.ground_size();
    let start = oracle.eval_count();

    let ranked = rank_singletons(oracle);
    let a1 = Subset::from_indices(ranked[..instance.beta()].iter().map(|&(v, _)| v), m)?;
    let a2 = plain_greedy(oracle, &a1.complement(), instance.alpha() - instance.beta())?;
    let selected = a1.union(&a2)?;
    let selection_evals = oracle.eval_count() - start;

    finish(
        instance,
        "resilient",
        selected,
        (a1, a2),
        selection_evals,
        options,
    )
}
