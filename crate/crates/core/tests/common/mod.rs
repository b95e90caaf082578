#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use resilient_core::functions::{
    make_example1_function, random_coverage, random_modular, random_psd_instance, random_tabular,
    Objective,
};

pub struct Case {
    pub label: String,
    pub objective: Objective,
    pub alpha: usize,
    pub beta: usize,
}

fn budgets(rng: &mut ChaCha8Rng, m: usize) -> (usize, usize) {
    let alpha = rng.random_range(1..=m.min(7));
    let beta = rng.random_range(0..=alpha);
    (alpha, beta)
}

fn case(label: String, objective: Objective, rng: &mut ChaCha8Rng) -> Case {
    let (alpha, beta) = budgets(rng, objective_size(&objective));
    Case {
        label,
        objective,
        alpha,
        beta,
    }
}

fn objective_size(o: &Objective) -> usize {
    use resilient_core::SetFunction;
    o.ground_size()
}

/// 30 modular (m ≤ 12), 30 coverage (m ≤ 12), 25 tabular (m ≤ 6) and
/// 20 log-det (m in 8..=12, d in {5, 20}) instances with random budgets.
pub fn bound_suite() -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    for i in 0..30u64 {
        let m = rng.random_range(3..=12);
        let f = random_modular(m, 100 + i).unwrap();
        out.push(case(format!("modular#{i} m={m}"), f.into(), &mut rng));
    }
    for i in 0..30u64 {
        let m = rng.random_range(3..=12);
        let density = rng.random_range(0.1..0.6);
        let f = random_coverage(m, 2 * m, density, 200 + i).unwrap();
        out.push(case(format!("coverage#{i} m={m}"), f.into(), &mut rng));
    }
    for i in 0..25u64 {
        let m = rng.random_range(2..=6);
        let f = random_tabular(m, 300 + i).unwrap();
        out.push(case(format!("tabular#{i} m={m}"), f.into(), &mut rng));
    }
    for i in 0..20u64 {
        let m = rng.random_range(8..=12);
        let d = if i % 2 == 0 { 5 } else { 20 };
        let f = random_psd_instance(m, d, 400 + i).unwrap();
        out.push(case(format!("logdet#{i} m={m} d={d}"), f.into(), &mut rng));
    }
    out
}

/// One representative per shipped family, used by the property sweeps.
pub fn family_representatives() -> Vec<(String, Objective)> {
    vec![
        (
            "example1".into(),
            make_example1_function(1.0).unwrap().into(),
        ),
        ("modular".into(), random_modular(10, 7).unwrap().into()),
        (
            "coverage".into(),
            random_coverage(10, 20, 0.3, 7).unwrap().into(),
        ),
        ("tabular".into(), random_tabular(6, 7).unwrap().into()),
        (
            "logdet-d5".into(),
            random_psd_instance(10, 5, 7).unwrap().into(),
        ),
        (
            "logdet-d20".into(),
            random_psd_instance(10, 20, 7).unwrap().into(),
        ),
    ]
}

pub fn fixture_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}
