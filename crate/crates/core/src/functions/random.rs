//! Seeded generators for random monotone submodular instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ModularFunction, TabularFunction, WeightedCoverageFunction};
use crate::error::{Error, Result};
use crate::oracle::SetFunction;
use crate::subset::Subset;

/// Weights uniform in `[0.1, 10)`.
pub fn random_modular(m: usize, seed: u64) -> Result<ModularFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ModularFunction::new((0..m).map(|_| rng.random_range(0.1..10.0)).collect())
}

/// Every element covers its own private item (so singletons are never zero)
/// plus a random subset of `shared` common items, each kept with probability
/// `density`. Weights are uniform in `[0.1, 5)`.
pub fn random_coverage(
    m: usize,
    shared: usize,
    density: f64,
    seed: u64,
) -> Result<WeightedCoverageFunction> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::invalid(format!("density {density} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = m + shared;
    let weights = (0..n).map(|_| rng.random_range(0.1..5.0)).collect();
    let covers = (0..m)
        .map(|v| {
            let mut items = vec![v];
            items.extend((m..n).filter(|_| rng.random_bool(density)));
            items
        })
        .collect();
    WeightedCoverageFunction::new(weights, covers)
}

/// Sum of a concave-over-modular term `c·sqrt(Σ w)` and a random coverage
/// function, tabulated. Both parts are monotone submodular, so the table
/// passes validation.
pub fn random_tabular(m: usize, seed: u64) -> Result<TabularFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w: Vec<f64> = (0..m).map(|_| rng.random_range(0.5..4.0)).collect();
    let c = rng.random_range(0.5..3.0);
    let cov = random_coverage(m, 2 * m, 0.35, rng.random())?;
    let mix = Mixture { w, c, cov };
    let table = TabularFunction::tabulate(&mix)?;
    TabularFunction::new(m, table.values().to_vec())
}

struct Mixture {
    w: Vec<f64>,
    c: f64,
    cov: WeightedCoverageFunction,
}

impl SetFunction for Mixture {
    fn ground_size(&self) -> usize {
        self.w.len()
    }

    fn value(&self, set: &Subset) -> f64 {
        let s: f64 = set.iter().map(|i| self.w[i]).sum();
        self.c * s.sqrt() + self.cov.value(set)
    }
}
