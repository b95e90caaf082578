//! Checkers for the structural inequalities the guarantee rests on.
//!
//! Each check evaluates the oracle directly and reports the slack of the
//! inequality (non-negative when it holds) so sweeps can track margins.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::oracle::{check_subset, ObjectiveOracle};
use crate::subset::Subset;

/// Slack tolerance for every inequality check.
pub const CHECK_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Check {
    pub holds: bool,
    /// `rhs_side − lhs_side` arranged so that `slack >= 0` means the inequality holds.
    pub slack: f64,
}

impl Check {
    fn from_slack(slack: f64) -> Self {
        Self {
            holds: slack >= -CHECK_TOL,
            slack,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Lemma2Outcome {
    Checked(Check),
    /// Some element of `P` has a larger singleton value than some element of `Y`.
    PreconditionUnmet,
}

/// `f(A) ≥ f(A′)` is not violated for `A ⊆ A′`.
pub fn check_monotone<O: ObjectiveOracle + ?Sized>(
    oracle: &O,
    a: &Subset,
    a_prime: &Subset,
) -> Result<Check> {
    nested(oracle, a, a_prime)?;
    Ok(Check::from_slack(
        oracle.evaluate(a_prime) - oracle.evaluate(a),
    ))
}

/// Diminishing returns: `f(A∪{x}) − f(A) ≥ f(A′∪{x}) − f(A′)` for `A ⊆ A′`, `x ∉ A′`.
pub fn check_diminishing_returns<O: ObjectiveOracle + ?Sized>(
    oracle: &O,
    a: &Subset,
    a_prime: &Subset,
    x: usize,
) -> Result<Check> {
    nested(oracle, a, a_prime)?;
    if x >= oracle.ground_size() || a_prime.contains(x) {
        return Err(Error::invalid(format!(
            "element {x} must lie outside {a_prime}"
        )));
    }
    let small = oracle.evaluate(&a.with(x)?) - oracle.evaluate(a);
    let large = oracle.evaluate(&a_prime.with(x)?) - oracle.evaluate(a_prime);
    Ok(Check::from_slack(small - large))
}

/// `f(A) + f(B) ≥ f(A∪B) + f(A∩B)`.
pub fn check_union_submodularity<O: ObjectiveOracle + ?Sized>(
    oracle: &O,
    a: &Subset,
    b: &Subset,
) -> Result<Check> {
    check_subset(oracle, a)?;
    check_subset(oracle, b)?;
    let lhs = oracle.evaluate(a) + oracle.evaluate(b);
    let rhs = oracle.evaluate(&a.union(b)?) + oracle.evaluate(&a.intersection(b)?);
    Ok(Check::from_slack(lhs - rhs))
}

/// `f(A) ≥ (1 − κ) Σ_{a∈A} f({a})`.
pub fn check_lemma1<O: ObjectiveOracle + ?Sized>(
    oracle: &O,
    subset: &Subset,
    kappa: f64,
) -> Result<Check> {
    check_subset(oracle, subset)?;
    let m = oracle.ground_size();
    let singles: f64 = subset
        .iter()
        .map(|a| oracle.evaluate(&Subset::singleton(a, m).expect("in range")))
        .sum();
    Ok(Check::from_slack(
        oracle.evaluate(subset) - (1.0 - kappa) * singles,
    ))
}

/// `f(P ∪ Y) − f(Y) ≤ |P| f(Y)`, for disjoint non-empty `P`, `Y` where every
/// singleton in `Y` is worth at least every singleton in `P`.
pub fn check_lemma2<O: ObjectiveOracle + ?Sized>(
    oracle: &O,
    p: &Subset,
    y: &Subset,
) -> Result<Lemma2Outcome> {
    check_subset(oracle, p)?;
    check_subset(oracle, y)?;
    if p.is_empty() || y.is_empty() {
        return Err(Error::invalid("both P and Y must be non-empty"));
    }
    if !p.intersection(y)?.is_empty() {
        return Err(Error::invalid(format!("P {p} and Y {y} must be disjoint")));
    }
    let m = oracle.ground_size();
    let single = |v| oracle.evaluate(&Subset::singleton(v, m).expect("in range"));
    let min_y = y.iter().map(single).fold(f64::INFINITY, f64::min);
    let max_p = p.iter().map(single).fold(f64::NEG_INFINITY, f64::max);
    if min_y < max_p {
        return Ok(Lemma2Outcome::PreconditionUnmet);
    }
    let fy = oracle.evaluate(y);
    let gain = oracle.evaluate(&p.union(y)?) - fy;
    Ok(Lemma2Outcome::Checked(Check::from_slack(
        p.len() as f64 * fy - gain,
    )))
}

fn nested<O: ObjectiveOracle + ?Sized>(oracle: &O, a: &Subset, a_prime: &Subset) -> Result<()> {
    check_subset(oracle, a)?;
    check_subset(oracle, a_prime)?;
    if !a.is_subset_of(a_prime) {
        return Err(Error::invalid(format!("{a} is not a subset of {a_prime}")));
    }
    Ok(())
}

/// Tally of one randomized property.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Tally {
    pub checked: usize,
    pub violations: usize,
    pub worst_slack: f64,
}

impl Tally {
    fn record(&mut self, c: Check) {
        if self.checked == 0 || c.slack < self.worst_slack {
            self.worst_slack = c.slack;
        }
        self.checked += 1;
        self.violations += usize::from(!c.holds);
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PropertyReport {
    pub normalized: bool,
    pub monotone: Tally,
    pub diminishing_returns: Tally,
    pub union_submodular: Tally,
    pub lemma1: Option<Tally>,
    pub lemma2: Tally,
    pub lemma2_skipped: usize,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.normalized
            && self.monotone.passed()
            && self.diminishing_returns.passed()
            && self.union_submodular.passed()
            && self.lemma1.is_none_or(|t| t.passed())
            && self.lemma2.passed()
    }
}

/// Uniformly random subset: each element kept with an independent random rate.
pub fn random_subset<R: Rng>(rng: &mut R, m: usize) -> Subset {
    let p: f64 = rng.random();
    Subset::from_indices((0..m).filter(|_| rng.random_bool(p)), m).expect("in range")
}

/// Random `A ⊆ A′` pair.
pub fn random_nested_pair<R: Rng>(rng: &mut R, m: usize) -> (Subset, Subset) {
    let outer = random_subset(rng, m);
    let keep: f64 = rng.random();
    let inner =
        Subset::from_indices(outer.iter().filter(|_| rng.random_bool(keep)), m).expect("in range");
    (inner, outer)
}

/// Runs every property on `samples` random draws. `kappa` enables the
/// curvature-lower-bound sweep.
pub fn property_sweep<O: ObjectiveOracle + ?Sized>(
    oracle: &O,
    samples: usize,
    kappa: Option<f64>,
    seed: u64,
) -> Result<PropertyReport> {
    let m = oracle.ground_size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PropertyReport {
        normalized: oracle.evaluate(&Subset::empty(m)) == 0.0,
        lemma1: kappa.map(|_| Tally::default()),
        ..Default::default()
    };
    let singles: Vec<f64> = (0..m)
        .map(|v| oracle.evaluate(&Subset::singleton(v, m).expect("in range")))
        .collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| singles[b].total_cmp(&singles[a]).then(a.cmp(&b)));

    for _ in 0..samples {
        let (a, ap) = random_nested_pair(&mut rng, m);
        report.monotone.record(check_monotone(oracle, &a, &ap)?);

        let outside: Vec<usize> = (0..m).filter(|&x| !ap.contains(x)).collect();
        if let Some(&x) = outside.choose(&mut rng) {
            report
                .diminishing_returns
                .record(check_diminishing_returns(oracle, &a, &ap, x)?);
        }

        let b = random_subset(&mut rng, m);
        report
            .union_submodular
            .record(check_union_submodularity(oracle, &ap, &b)?);

        if let (Some(k), Some(t)) = (kappa, report.lemma1.as_mut()) {
            t.record(check_lemma1(oracle, &random_subset(&mut rng, m), k)?);
        }

        // Y from the top of the singleton order, P from below it.
        if m >= 2 {
            let cut = rng.random_range(1..m);
            let y_len = rng.random_range(1..=cut);
            let y =
                Subset::from_indices(order[..cut].choose_multiple(&mut rng, y_len).copied(), m)?;
            let p_len = rng.random_range(1..=m - cut);
            let p =
                Subset::from_indices(order[cut..].choose_multiple(&mut rng, p_len).copied(), m)?;
            match check_lemma2(oracle, &p, &y)? {
                Lemma2Outcome::Checked(c) => report.lemma2.record(c),
                Lemma2Outcome::PreconditionUnmet => report.lemma2_skipped += 1,
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{make_example1_function, ModularFunction, TabularFunction};
    use crate::oracle::Oracle;

    fn s(v: &[usize], m: usize) -> Subset {
        Subset::from_indices(v.iter().copied(), m).unwrap()
    }

    #[test]
    fn lemma1_modular_is_tight() {
        let o = Oracle::new(ModularFunction::new(vec![1.0, 2.0, 3.0]).unwrap());
        let c = check_lemma1(&o, &s(&[0, 2], 3), 0.0).unwrap();
        assert!(c.holds);
        assert_eq!(c.slack, 0.0);
    }

    #[test]
    fn lemma1_example1_trivial() {
        let o = Oracle::new(make_example1_function(1.0).unwrap());
        let c = check_lemma1(&o, &s(&[0, 1], 3), 1.0).unwrap();
        assert!(c.holds);
        assert_eq!(c.slack, 2.0);
    }

    #[test]
    fn lemma2_example1() {
        let o = Oracle::new(make_example1_function(1.0).unwrap());
        // Y = {v1} (top singleton), P = {v3} (bottom): gain 1 <= 1 * 2.
        match check_lemma2(&o, &s(&[2], 3), &s(&[0], 3)).unwrap() {
            Lemma2Outcome::Checked(c) => {
                assert!(c.holds);
                assert_eq!(c.slack, 1.0);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            check_lemma2(&o, &s(&[0], 3), &s(&[2], 3)).unwrap(),
            Lemma2Outcome::PreconditionUnmet
        );
    }

    #[test]
    fn lemma2_modular_equal_weights() {
        let o = Oracle::new(ModularFunction::new(vec![2.0; 5]).unwrap());
        match check_lemma2(&o, &s(&[0, 1], 5), &s(&[2, 3, 4], 5)).unwrap() {
            Lemma2Outcome::Checked(c) => assert_eq!(c.slack, 2.0 * 6.0 - 4.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lemma2_input_errors() {
        let o = Oracle::new(ModularFunction::new(vec![1.0; 3]).unwrap());
        assert!(check_lemma2(&o, &Subset::empty(3), &s(&[0], 3)).is_err());
        assert!(check_lemma2(&o, &s(&[0], 3), &Subset::empty(3)).is_err());
        assert!(check_lemma2(&o, &s(&[0, 1], 3), &s(&[1], 3)).is_err());
    }

    #[test]
    fn nested_and_element_errors() {
        let o = Oracle::new(ModularFunction::new(vec![1.0; 3]).unwrap());
        assert!(check_monotone(&o, &s(&[0, 1], 3), &s(&[0], 3)).is_err());
        assert!(check_diminishing_returns(&o, &s(&[0], 3), &s(&[0, 1], 3), 1).is_err());
    }

    #[test]
    fn modular_union_is_equality() {
        let o = Oracle::new(ModularFunction::new(vec![0.5, 1.25, 3.0, 4.5]).unwrap());
        let c = check_union_submodularity(&o, &s(&[0, 1, 2], 4), &s(&[1, 3], 4)).unwrap();
        assert!(c.slack.abs() < 1e-12);
    }

    #[test]
    fn sweep_flags_supermodular_table() {
        let t = TabularFunction::new_unchecked(2, vec![0.0, 1.0, 1.0, 3.0]).unwrap();
        let r = property_sweep(&Oracle::new(t), 300, None, 1).unwrap();
        assert!(r.union_submodular.violations > 0 || r.diminishing_returns.violations > 0);
        assert!(!r.passed());
    }
}
