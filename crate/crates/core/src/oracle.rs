//! The set-function oracle contract.
//!
//! Objective families implement [`SetFunction`], a pure value map. Solvers talk
//! to an [`ObjectiveOracle`], which adds an evaluation counter. [`Oracle`] is
//! the plain counting wrapper; [`MemoizedOracle`] is an opt-in cache layered on
//! top of any oracle.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A set function `f: 2^V -> R` with `f(∅) = 0`.
pub trait SetFunction: Send + Sync {
    fn ground_size(&self) -> usize;

    fn value(&self, set: &Subset) -> f64;
}

pub trait ObjectiveOracle: Send + Sync {
    fn ground_size(&self) -> usize;

    /// Evaluates `f(set)` and increments the evaluation counter by one.
    fn evaluate(&self, set: &Subset) -> f64;

    /// Number of `evaluate` calls made so far.
    fn eval_count(&self) -> u64;
}

impl<T: ObjectiveOracle + ?Sized> ObjectiveOracle for &T {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn evaluate(&self, set: &Subset) -> f64 {
        (**self).evaluate(set)
    }
    fn eval_count(&self) -> u64 {
        (**self).eval_count()
    }
}

impl<T: ObjectiveOracle + ?Sized> ObjectiveOracle for Box<T> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn evaluate(&self, set: &Subset) -> f64 {
        (**self).evaluate(set)
    }
    fn eval_count(&self) -> u64 {
        (**self).eval_count()
    }
}

/// Counting wrapper around a [`SetFunction`].
#[derive(Debug)]
pub struct Oracle<F> {
    function: F,
    evals: AtomicU64,
}

impl<F: SetFunction> Oracle<F> {
    pub fn new(function: F) -> Self {
        Self {
            function,
            evals: AtomicU64::new(0),
        }
    }

    pub fn function(&self) -> &F {
        &self.function
    }

    pub fn into_inner(self) -> F {
        self.function
    }

    pub fn reset_count(&self) {
        self.evals.store(0, Ordering::Relaxed);
    }
}

impl<F: SetFunction> ObjectiveOracle for Oracle<F> {
    fn ground_size(&self) -> usize {
        self.function.ground_size()
    }

    fn evaluate(&self, set: &Subset) -> f64 {
        debug_assert_eq!(set.parent_size(), self.function.ground_size());
        self.evals.fetch_add(1, Ordering::Relaxed);
        self.function.value(set)
    }

    fn eval_count(&self) -> u64 {
        self.evals.load(Ordering::Relaxed)
    }
}

impl<F: SetFunction> Clone for Oracle<F>
where
    F: Clone,
{
    /// The clone starts with a fresh counter.
    fn clone(&self) -> Self {
        Self::new(self.function.clone())
    }
}

/// Caches values by canonical subset. The inner oracle is only consulted on misses.
#[derive(Debug)]
pub struct MemoizedOracle<O> {
    inner: O,
    cache: Mutex<HashMap<Subset, f64>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl<O: ObjectiveOracle> MemoizedOracle<O> {
    pub fn new(inner: O) -> Self {
        Self {
            inner,
            cache: Mutex::new(HashMap::new()),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }

    pub fn inner(&self) -> &O {
        &self.inner
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }
}

impl<O: ObjectiveOracle> ObjectiveOracle for MemoizedOracle<O> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn evaluate(&self, set: &Subset) -> f64 {
        if let Some(&v) = self.cache.lock().expect("cache poisoned").get(set) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return v;
        }
        // Evaluated outside the lock; a concurrent duplicate miss stores the same value.
        let v = self.inner.evaluate(set);
        self.misses.fetch_add(1, Ordering::Relaxed);
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(set.clone(), v);
        v
    }

    fn eval_count(&self) -> u64 {
        self.hits() + self.misses()
    }
}

/// `f(base ∪ {x}) − f(base)`, the marginal gain of `x` given `base`.
pub fn marginal_gain<O: ObjectiveOracle + ?Sized>(
    oracle: &O,
    x: usize,
    base: &Subset,
) -> Result<f64> {
    let m = oracle.ground_size();
    if base.parent_size() != m {
        return Err(Error::invalid(format!(
            "base subset has ground size {}, oracle has {m}",
            base.parent_size()
        )));
    }
    if x >= m {
        return Err(Error::invalid(format!(
            "element {x} out of range for ground set of size {m}"
        )));
    }
    if base.contains(x) {
        return Err(Error::invalid(format!(
            "element {x} already in base {base}"
        )));
    }
    let with = base.with(x)?;
    Ok(oracle.evaluate(&with) - oracle.evaluate(base))
}

/// Checks that `set` lives in the oracle's ground set.
pub(crate) fn check_subset<O: ObjectiveOracle + ?Sized>(oracle: &O, set: &Subset) -> Result<()> {
    if set.parent_size() != oracle.ground_size() {
        return Err(Error::invalid(format!(
            "subset {set} has ground size {}, oracle has {}",
            set.parent_size(),
            oracle.ground_size()
        )));
    }
    Ok(())
}
