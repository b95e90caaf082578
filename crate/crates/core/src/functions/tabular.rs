use crate::error::{Error, Result};
use crate::oracle::SetFunction;
use crate::subset::Subset;

/// Largest ground set a complete table may cover.
pub const MAX_TABULAR_SIZE: usize = 20;

/// Tolerance for the monotonicity and submodularity checks run at construction.
pub const TABLE_TOL: f64 = 1e-9;

/// A set function given by its value on every one of the `2^m` subsets,
/// indexed by bit mask.
#[derive(Debug, Clone, PartialEq)]
pub struct TabularFunction {
    m: usize,
    values: Vec<f64>,
}

/// The first violated property found when validating a table.
#[derive(Debug, Clone, PartialEq)]
pub enum TableViolation {
    NonZeroEmpty(f64),
    NotMonotone { set: Subset, element: usize },
    NotSubmodular { set: Subset, x: usize, y: usize },
}

impl TabularFunction {
    /// Builds and validates. Use [`TabularFunction::new_unchecked`] to skip validation.
    pub fn new(m: usize, values: Vec<f64>) -> Result<Self> {
        let f = Self::new_unchecked(m, values)?;
        if let Some(v) = f.find_violation() {
            return Err(Error::invalid(format!("table rejected: {v:?}")));
        }
        Ok(f)
    }

    /// Checks shape only; the table may violate monotonicity or submodularity.
    pub fn new_unchecked(m: usize, values: Vec<f64>) -> Result<Self> {
        if m == 0 || m > MAX_TABULAR_SIZE {
            return Err(Error::invalid(format!(
                "tabular functions need 1 <= m <= {MAX_TABULAR_SIZE}, got {m}"
            )));
        }
        if values.len() != 1 << m {
            return Err(Error::invalid(format!(
                "table for m={m} needs {} values, got {}",
                1usize << m,
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::invalid(format!("table value {v} is not finite")));
        }
        Ok(Self { m, values })
    }

    /// Tabulates any set function on a small ground set.
    pub fn tabulate<F: SetFunction + ?Sized>(f: &F) -> Result<Self> {
        let m = f.ground_size();
        if m == 0 || m > MAX_TABULAR_SIZE {
            return Err(Error::invalid(format!(
                "cannot tabulate a ground set of size {m}"
            )));
        }
        let values = (0..1u64 << m)
            .map(|mask| f.value(&Subset::from_mask(mask, m).expect("mask in range")))
            .collect();
        Self::new_unchecked(m, values)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value_at_mask(&self, mask: u64) -> f64 {
        self.values[mask as usize]
    }

    /// Validates normalization, monotonicity and diminishing returns.
    ///
    /// Uses the local forms: `f(A+x) >= f(A)` and
    /// `f(A+x) + f(A+y) >= f(A+x+y) + f(A)` for all `A` and `x, y ∉ A`.
    /// Each is equivalent to its global counterpart over all `A ⊆ A'` (the
    /// global gap telescopes into a sum of local gaps), at `O(2^m m^2)` cost.
    pub fn find_violation(&self) -> Option<TableViolation> {
        let f = &self.values;
        if f[0] != 0.0 {
            return Some(TableViolation::NonZeroEmpty(f[0]));
        }
        let m = self.m;
        let set = |mask: usize| Subset::from_mask(mask as u64, m).expect("mask in range");
        for a in 0..1usize << m {
            for x in (0..m).filter(|x| a >> x & 1 == 0) {
                let ax = a | 1 << x;
                if f[ax] < f[a] - TABLE_TOL {
                    return Some(TableViolation::NotMonotone {
                        set: set(a),
                        element: x,
                    });
                }
                for y in (x + 1..m).filter(|y| a >> y & 1 == 0) {
                    let ay = a | 1 << y;
                    if f[ax] + f[ay] < f[ax | ay] + f[a] - TABLE_TOL {
                        return Some(TableViolation::NotSubmodular { set: set(a), x, y });
                    }
                }
            }
        }
        None
    }
}

impl SetFunction for TabularFunction {
    fn ground_size(&self) -> usize {
        self.m
    }

    fn value(&self, set: &Subset) -> f64 {
        let mask = set.to_mask().expect("tabular ground sets fit in a mask");
        self.values[mask as usize]
    }
}

/// The three-element instance used to illustrate the resilient greedy
/// algorithm, with `f(v3) = base`. Elements `v1, v2, v3` are indices 0, 1, 2.
pub fn make_example1_function(base: f64) -> Result<TabularFunction> {
    if !(base.is_finite() && base > 0.0) {
        return Err(Error::invalid(format!(
            "base value f(v3) must be positive, got {base}"
        )));
    }
    let values = vec![
        0.0,              // {}
        base + 1.0,       // {v1}
        base + 0.5,       // {v2}
        base + 1.0,       // {v1,v2}
        base,             // {v3}
        2.0 * base + 1.0, // {v1,v3}
        2.0 * base + 0.5, // {v2,v3}
        2.0 * base + 1.0, // V
    ];
    TabularFunction::new(3, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(f: &TabularFunction, members: &[usize]) -> f64 {
        f.value(&Subset::from_indices(members.iter().copied(), 3).unwrap())
    }

    #[test]
    fn example1_values() {
        let f = make_example1_function(1.0).unwrap();
        assert_eq!(val(&f, &[0, 2]), 3.0);
        assert_eq!(val(&f, &[0, 1]), 2.0);
        assert_eq!(val(&f, &[0, 1, 2]), 3.0);
        assert_eq!(val(&f, &[1]), 1.5);
        assert_eq!(val(&f, &[]), 0.0);
        assert!(f.find_violation().is_none());
    }

    #[test]
    fn example1_rejects_bad_base() {
        assert!(make_example1_function(0.0).is_err());
        assert!(make_example1_function(-1.0).is_err());
        assert!(make_example1_function(f64::NAN).is_err());
    }

    #[test]
    fn example1_valid_for_other_bases() {
        for base in [0.1, 0.5, 2.0, 10.0] {
            assert!(make_example1_function(base).is_ok());
        }
    }

    #[test]
    fn rejects_non_monotone() {
        let err = TabularFunction::new(1, vec![0.0, -1.0]).unwrap_err();
        assert!(err.to_string().contains("NotMonotone"));
    }

    #[test]
    fn rejects_supermodular() {
        // f({0})=f({1})=1, f({0,1})=3: increasing returns.
        let err = TabularFunction::new(2, vec![0.0, 1.0, 1.0, 3.0]).unwrap_err();
        assert!(err.to_string().contains("NotSubmodular"));
        // Validation can be skipped.
        assert!(TabularFunction::new_unchecked(2, vec![0.0, 1.0, 1.0, 3.0]).is_ok());
    }

    #[test]
    fn rejects_nonzero_empty_and_bad_shape() {
        assert!(TabularFunction::new(1, vec![0.5, 1.0]).is_err());
        assert!(TabularFunction::new(2, vec![0.0; 3]).is_err());
        assert!(TabularFunction::new(21, vec![]).is_err());
        assert!(TabularFunction::new(0, vec![0.0]).is_err());
    }

    /// Direct Definition-style check over every (A ⊆ A', x ∉ A') triple.
    fn brute_force_ok(f: &TabularFunction) -> bool {
        let m = f.m;
        let v = f.values();
        (0..1usize << m).all(|ap| {
            // enumerate submasks a of ap
            let mut a = ap;
            loop {
                let ok_mono = v[a] <= v[ap] + TABLE_TOL;
                let ok_dr = (0..m)
                    .filter(|x| ap >> x & 1 == 0)
                    .all(|x| v[a | 1 << x] - v[a] >= v[ap | 1 << x] - v[ap] - TABLE_TOL);
                if !(ok_mono && ok_dr) {
                    return false;
                }
                if a == 0 {
                    break true;
                }
                a = (a - 1) & ap;
            }
        })
    }

    #[test]
    fn local_check_agrees_with_triple_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut accepted = 0;
        for _ in 0..400 {
            let m = rng.random_range(1..=4);
            // Perturbed concave-of-cardinality tables: some valid, some not.
            let mut values: Vec<f64> = (0..1u64 << m)
                .map(|mask| (mask.count_ones() as f64).sqrt() * 2.0)
                .collect();
            for v in values.iter_mut().skip(1) {
                *v += rng.random_range(-0.3..0.3);
            }
            let f = TabularFunction::new_unchecked(m, values).unwrap();
            let local = f.find_violation().is_none();
            assert_eq!(local, brute_force_ok(&f));
            accepted += local as usize;
        }
        assert!(accepted > 0);
    }
}
