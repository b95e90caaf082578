use crate::error::{Error, Result};
use crate::oracle::SetFunction;
use crate::subset::Subset;

/// Weighted coverage: each element covers some items of a weighted universe,
/// and `f(A)` is the total weight of the items covered by `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedCoverageFunction {
    universe_weights: Vec<f64>,
    covers: Vec<Vec<usize>>,
}

impl WeightedCoverageFunction {
    pub fn new(universe_weights: Vec<f64>, covers: Vec<Vec<usize>>) -> Result<Self> {
        if covers.is_empty() {
            return Err(Error::invalid(
                "coverage function needs at least one element",
            ));
        }
        if let Some((i, w)) = universe_weights
            .iter()
            .enumerate()
            .find(|(_, w)| !(w.is_finite() && **w >= 0.0))
        {
            return Err(Error::invalid(format!(
                "universe weight {i} = {w} must be finite and non-negative"
            )));
        }
        let n = universe_weights.len();
        let mut covers = covers;
        for (v, items) in covers.iter_mut().enumerate() {
            if let Some(&bad) = items.iter().find(|&&u| u >= n) {
                return Err(Error::invalid(format!(
                    "element {v} covers item {bad}, but the universe has {n} items"
                )));
            }
            items.sort_unstable();
            items.dedup();
        }
        Ok(Self {
            universe_weights,
            covers,
        })
    }

    pub fn universe_weights(&self) -> &[f64] {
        &self.universe_weights
    }

    pub fn covers(&self) -> &[Vec<usize>] {
        &self.covers
    }
}

impl SetFunction for WeightedCoverageFunction {
    fn ground_size(&self) -> usize {
        self.covers.len()
    }

    fn value(&self, set: &Subset) -> f64 {
        let mut covered = vec![false; self.universe_weights.len()];
        for v in set.iter() {
            for &u in &self.covers[v] {
                covered[u] = true;
            }
        }
        covered
            .iter()
            .zip(&self.universe_weights)
            .filter(|(c, _)| **c)
            .map(|(_, w)| w)
            .sum()
    }
}
