//! Worst-case removal: given a selection `A` and a budget `β`, find the
//! `B ⊆ A` with `|B| ≤ β` minimizing the residual value `f(A∖B)`.
//!
//! For monotone objectives removing more never helps the residual, so both
//! routines remove exactly `min(β, |A|)` elements.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::oracle::{check_subset, ObjectiveOracle};
use crate::subset::Subset;

pub const DEFAULT_REMOVAL_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct RemovalResult {
    pub removed: Subset,
    /// `f(A ∖ removed)`, exactly as returned by the oracle.
    pub residual_value: f64,
    /// True when the removal is a proven minimizer.
    pub exact: bool,
    pub eval_count_used: u64,
}

impl RemovalResult {
    /// `removed,residual,exact,evals`; the subset is written in its brace form.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.removed, self.residual_value, self.exact, self.eval_count_used
        )
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Enumerates every removal of exactly `min(β, |A|)` elements of `A`.
/// Ties go to the lexicographically smallest removed set.
pub fn exact_removal<O: ObjectiveOracle + ?Sized>(
    oracle: &O,
    a: &Subset,
    beta: usize,
    cap: u128,
) -> Result<RemovalResult> {
    check_subset(oracle, a)?;
    let k = beta.min(a.len());
    let required = binomial(a.len(), k);
    if required > cap {
        return Err(Error::Capacity {
            what: "removal sets",
            required,
            cap,
            hint: "use the greedy removal method",
        });
    }
    let start = oracle.eval_count();
    let m = a.parent_size();
    let mut best: Option<(f64, Vec<usize>)> = None;
    for removed in a.members().iter().copied().combinations(k) {
        let kept: Vec<usize> = a.iter().filter(|x| !removed.contains(x)).collect();
        let v = oracle.evaluate(&Subset::from_sorted_unchecked(kept, m));
        if best.as_ref().is_none_or(|(bv, _)| v < *bv) {
            best = Some((v, removed));
        }
    }
    let (residual_value, removed) = best.expect("at least one combination");
    Ok(RemovalResult {
        removed: Subset::from_sorted_unchecked(removed, m),
        residual_value,
        exact: true,
        eval_count_used: oracle.eval_count() - start,
    })
}

/// Like [`exact_removal`] but over every removal size `0..=min(β, |A|)`.
/// Used to confirm that the fixed-size enumeration loses nothing.
pub fn exact_removal_all_sizes<O: ObjectiveOracle + ?Sized>(
    oracle: &O,
    a: &Subset,
    beta: usize,
    cap: u128,
) -> Result<RemovalResult> {
    let start = oracle.eval_count();
    let mut best: Option<RemovalResult> = None;
    for k in 0..=beta.min(a.len()) {
        let r = exact_removal(oracle, a, k, cap)?;
        if best
            .as_ref()
            .is_none_or(|b| r.residual_value < b.residual_value)
        {
            best = Some(r);
        }
    }
    let mut best = best.expect("k = 0 always runs");
    best.eval_count_used = oracle.eval_count() - start;
    Ok(best)
}

/// Removes, one at a time, the element whose loss hurts `f` most. Never
/// better for the adversary than [`exact_removal`].
pub fn greedy_removal<O: ObjectiveOracle + ?Sized>(
    oracle: &O,
    a: &Subset,
    beta: usize,
) -> Result<RemovalResult> {
    check_subset(oracle, a)?;
    let start = oracle.eval_count();
    let m = a.parent_size();
    let rounds = beta.min(a.len());
    let mut current = a.clone();
    let mut removed = Vec::with_capacity(rounds);
    let mut residual = None;
    for _ in 0..rounds {
        let mut best: Option<(f64, usize)> = None;
        for x in current.iter() {
            let v = oracle.evaluate(&current.without(x)?);
            if best.is_none_or(|(bv, _)| v < bv) {
                best = Some((v, x));
            }
        }
        let (v, x) = best.expect("current is non-empty");
        current = current.without(x)?;
        removed.push(x);
        residual = Some(v);
    }
    let residual_value = match residual {
        Some(v) => v,
        None => oracle.evaluate(a),
    };
    Ok(RemovalResult {
        removed: Subset::from_indices(removed, m)?,
        residual_value,
        exact: false,
        eval_count_used: oracle.eval_count() - start,
    })
}
