mod common;

use common::{family_representatives, fixture_path};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use resilient_core::analysis::properties::random_subset;
use resilient_core::analysis::{compute_curvature, property_sweep};
use resilient_core::functions::{load_instance, make_example1_function, InstanceSpec, Objective};
use resilient_core::{MemoizedOracle, ObjectiveOracle, Oracle, SetFunction};

#[test]
fn every_family_passes_the_property_sweep() {
    for (name, f) in family_representatives() {
        let oracle = Oracle::new(f);
        let kappa = compute_curvature(&oracle).unwrap().kappa;
        let report = property_sweep(&oracle, 500, Some(kappa), 11).unwrap();
        assert!(report.passed(), "{name}: {report:?}");
        assert_eq!(report.monotone.checked, 500);
        assert!(report.diminishing_returns.checked > 0, "{name}");
        assert!(report.lemma2.checked > 0, "{name}");
    }
}

#[test]
fn memoization_is_transparent() {
    for (name, f) in family_representatives() {
        let plain = Oracle::new(f.clone());
        let memo = MemoizedOracle::new(Oracle::new(f));
        let m = plain.ground_size();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let sets: Vec<_> = (0..1000).map(|_| random_subset(&mut rng, m)).collect();
        for s in sets.iter().chain(sets.iter()) {
            assert_eq!(
                plain.evaluate(s).to_bits(),
                memo.evaluate(s).to_bits(),
                "{name} {s}"
            );
        }
        assert_eq!(memo.eval_count(), 2000);
        assert_eq!(memo.hits() + memo.misses(), 2000);
        assert!(memo.inner().eval_count() <= 1000);
    }
}

#[test]
fn logdet_curvature_is_high() {
    for seed in 0..5 {
        let f = resilient_core::functions::random_psd_instance(10, 20, seed).unwrap();
        let k = compute_curvature(&Oracle::new(f)).unwrap().kappa;
        assert!(k > 0.9, "seed {seed}: kappa {k}");
    }
}

#[test]
fn fixture_matches_the_constructed_example() {
    let loaded = load_instance(fixture_path("example1.json")).unwrap();
    let built: Objective = make_example1_function(1.0).unwrap().into();
    assert_eq!(loaded, built);
}

#[test]
fn explicit_specs_round_trip() {
    for (name, f) in family_representatives() {
        let text = f.to_spec().to_json();
        let back = InstanceSpec::from_json(&text).unwrap().build().unwrap();
        assert_eq!(back, f, "{name}");
        let m = f.ground_size();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let s = random_subset(&mut rng, m);
            assert_eq!(back.value(&s).to_bits(), f.value(&s).to_bits());
        }
    }
}

#[test]
fn unknown_type_is_named() {
    let err = InstanceSpec::from_json(r#"{"type": "quadratic"}"#).unwrap_err();
    assert!(err.is_parse());
    assert!(err.to_string().contains("quadratic"));
}
