use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{finish, plain_greedy, rank_singletons, ProblemInstance, SolveOptions, SolveResult};
use crate::error::Result;
use crate::oracle::ObjectiveOracle;
use crate::subset::Subset;

/// The `α` elements with the largest singleton values.
pub fn baseline_top_alpha<O: ObjectiveOracle>(
    instance: &ProblemInstance<O>,
    options: &SolveOptions,
) -> Result<SolveResult> {
    let oracle = instance.oracle();
    let m = instance.ground_size();
    let start = oracle.eval_count();
    let ranked = rank_singletons(oracle);
    let selected = Subset::from_indices(ranked[..instance.alpha()].iter().map(|&(v, _)| v), m)?;
    let evals = oracle.eval_count() - start;
    finish(
        instance,
        "top",
        selected.clone(),
        (Subset::empty(m), selected),
        evals,
        options,
    )
}

/// A uniformly random size-`α` selection drawn from a ChaCha8 stream.
pub fn baseline_random<O: ObjectiveOracle>(
    instance: &ProblemInstance<O>,
    seed: u64,
    options: &SolveOptions,
) -> Result<SolveResult> {
    let m = instance.ground_size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picks = (0..m).choose_multiple(&mut rng, instance.alpha());
    let selected = Subset::from_indices(picks, m)?;
    finish(
        instance,
        "random",
        selected.clone(),
        (Subset::empty(m), selected),
        0,
        options,
    )
}

/// Non-resilient greedy over all of `V`, ignoring the adversary.
pub fn baseline_greedy<O: ObjectiveOracle>(
    instance: &ProblemInstance<O>,
    options: &SolveOptions,
) -> Result<SolveResult> {
    let oracle = instance.oracle();
    let m = instance.ground_size();
    let start = oracle.eval_count();
    let selected = plain_greedy(oracle, &Subset::full(m), instance.alpha())?;
    let evals = oracle.eval_count() - start;
    finish(
        instance,
        "greedy",
        selected.clone(),
        (Subset::empty(m), selected),
        evals,
        options,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{make_example1_function, random_coverage, random_modular};
    use crate::oracle::Oracle;
    use crate::solvers::exact_maxmin;

    #[test]
    fn top_alpha_example1() {
        let inst =
            ProblemInstance::new(Oracle::new(make_example1_function(1.0).unwrap()), 2, 1).unwrap();
        let r = baseline_top_alpha(&inst, &SolveOptions::default()).unwrap();
        assert_eq!(r.selected.to_string(), "{0,1}");
        assert_eq!(r.residual_value, 1.5);
    }

    #[test]
    fn plain_greedy_is_fooled_by_example1() {
        // Without the bait phase the greedy picks {v1, v3}, worth 1 after the attack.
        let inst =
            ProblemInstance::new(Oracle::new(make_example1_function(1.0).unwrap()), 2, 1).unwrap();
        let r = baseline_greedy(&inst, &SolveOptions::default()).unwrap();
        assert_eq!(r.selected.to_string(), "{0,2}");
        assert_eq!(r.residual_value, 1.0);
    }

    #[test]
    fn top_alpha_optimal_for_modular() {
        for seed in 0..10 {
            let inst =
                ProblemInstance::new(Oracle::new(random_modular(8, seed).unwrap()), 4, 2).unwrap();
            let top = baseline_top_alpha(&inst, &SolveOptions::default()).unwrap();
            let opt = exact_maxmin(&inst, &SolveOptions::default()).unwrap();
            assert!((top.residual_value - opt.residual_value).abs() < 1e-12);
        }
    }

    #[test]
    fn random_is_reproducible() {
        let f = random_coverage(10, 10, 0.3, 1).unwrap();
        let i1 = ProblemInstance::new(Oracle::new(f.clone()), 4, 1).unwrap();
        let i2 = ProblemInstance::new(Oracle::new(f), 4, 1).unwrap();
        let a = baseline_random(&i1, 99, &SolveOptions::default()).unwrap();
        let b = baseline_random(&i2, 99, &SolveOptions::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.selected.len(), 4);
        assert_eq!(a.residual_value.to_bits(), b.residual_value.to_bits());
    }
}
