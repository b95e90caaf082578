use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/example1.json")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resilient"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn solve_example1() {
    let f = fixture();
    let o = run(&[
        "solve",
        "--instance",
        f.to_str().unwrap(),
        "--alpha",
        "2",
        "--beta",
        "1",
        "--solver",
        "resilient",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("resilient,{0,1},1.5,"), "{out}");
    assert_eq!(out.lines().count(), 1);
}

#[test]
fn every_solver_runs_on_the_fixture() {
    let f = fixture();
    for solver in ["resilient", "exact", "greedy", "top", "random"] {
        let o = run(&[
            "solve",
            "--instance",
            f.to_str().unwrap(),
            "--alpha",
            "2",
            "--beta",
            "1",
            "--solver",
            solver,
        ]);
        assert_eq!(o.status.code(), Some(0), "{solver}: {}", stderr(&o));
        assert!(stdout(&o).starts_with(solver));
    }
    let o = run(&[
        "exact",
        "--instance",
        f.to_str().unwrap(),
        "--alpha",
        "2",
        "--beta",
        "1",
        "--header",
    ]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("solver,selected,residual,evals,kappa,bound")
    );
    assert!(lines.next().unwrap().starts_with("exact,{0,1},1.5,"));
}

#[test]
fn random_solver_is_reproducible() {
    let f = fixture();
    let args = [
        "solve",
        "--instance",
        f.to_str().unwrap(),
        "--alpha",
        "2",
        "--beta",
        "1",
        "--solver",
        "random",
        "--seed",
        "17",
    ];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn bound_at_zero_curvature() {
    let o = run(&["bound", "--kappa", "0", "--beta", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0,3,1,one_minus_kappa\n");
}

#[test]
fn beta_above_alpha_is_a_domain_error() {
    let f = fixture();
    let o = run(&[
        "solve",
        "--instance",
        f.to_str().unwrap(),
        "--alpha",
        "3",
        "--beta",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("beta") && err.contains("alpha"), "{err}");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let f = fixture();
    let f = f.to_str().unwrap();
    assert_eq!(run(&["solve", "--alpha", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&[
        "attack",
        "--instance",
        f,
        "--subset",
        "{2,0}",
        "--beta",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--subset"));
    let o = run(&[
        "solve",
        "--instance",
        f,
        "--alpha",
        "1",
        "--beta",
        "0",
        "--seed",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--seed"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"type": "quadratic"}"#).unwrap();
    let o = run(&["curvature", "--instance", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("quadratic"));
}

#[test]
fn attack_and_curvature_on_fixture() {
    let f = fixture();
    let f = f.to_str().unwrap();
    let o = run(&[
        "attack",
        "--instance",
        f,
        "--subset",
        "{0,1}",
        "--beta",
        "1",
        "--method",
        "exact",
    ]);
    assert_eq!(stdout(&o), "{0},1.5,true,2\n");
    let o = run(&[
        "attack",
        "--instance",
        f,
        "--subset",
        "{0,1}",
        "--beta",
        "1",
        "--method",
        "greedy",
    ]);
    assert!(stdout(&o).starts_with("{0},1.5,false,"));
    let o = run(&["curvature", "--instance", f]);
    assert_eq!(stdout(&o), "1,1,7\n");
}

#[test]
fn degenerate_element_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("zero.json");
    std::fs::write(&p, r#"{"type": "modular", "weights": [1.0, 0.0, 2.0]}"#).unwrap();
    let o = run(&["curvature", "--instance", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("element 1"));
}

#[test]
fn gcurve_endpoints() {
    assert_eq!(stdout(&run(&["gcurve", "--kappa", "1"])), "1,0\n");
    let out = stdout(&run(&["gcurve", "--points", "3"]));
    assert_eq!(out.lines().count(), 3);
    assert!(out.starts_with("0,1\n"));
}

#[test]
fn gen_logdet_round_trips_bit_identically() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("ld.json");
    let o = run(&[
        "gen-logdet",
        "--m",
        "6",
        "--d",
        "4",
        "--seed",
        "42",
        "--output",
        p.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let from_file = resilient_core::functions::load_instance(&p).unwrap();
    let direct: resilient_core::functions::Objective =
        resilient_core::functions::random_psd_instance(6, 4, 42)
            .unwrap()
            .into();
    assert_eq!(from_file, direct);

    let a = stdout(&run(&["curvature", "--instance", p.to_str().unwrap()]));
    let spec = dir.path().join("spec.json");
    std::fs::write(
        &spec,
        r#"{"type": "logdet_random", "m": 6, "d": 4, "seed": 42}"#,
    )
    .unwrap();
    let b = stdout(&run(&["curvature", "--instance", spec.to_str().unwrap()]));
    assert_eq!(a, b);
}

#[test]
fn check_passes_on_fixture() {
    let f = fixture();
    let o = run(&[
        "check",
        "--instance",
        f.to_str().unwrap(),
        "--samples",
        "100",
        "--header",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("property,checked,violations,worst_slack\n"));
    for line in out.lines().skip(1) {
        assert_eq!(line.split(',').nth(2), Some("0"), "{line}");
    }
}

#[test]
fn experiment_writes_reproducible_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = |name: &str| {
        let p = dir.path().join(name);
        let o = run(&[
            "experiment",
            "--m-values",
            "8",
            "--alpha",
            "7",
            "--beta-values",
            "1",
            "--trials",
            "1",
            "--seed",
            "5",
            "--output",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        p
    };
    let a = out("a.csv");
    let b = out("b.csv");
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert!(text
        .starts_with("m,beta,trial,seed,kappa,f_star,f_alg,ratio,bound,evals_alg,evals_exact\n"));
    assert_eq!(text.lines().count(), 2);
    let summary = std::fs::read_to_string(dir.path().join("a_summary.csv")).unwrap();
    assert!(summary.starts_with("m,beta,mean_ratio,min_ratio,max_ratio\n"));
}

#[test]
fn experiment_config_conflicts_with_flags() {
    let o = run(&["experiment", "--config", "x.json", "--trials", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cap_override_is_enforced() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("ld.json");
    std::fs::write(
        &p,
        r#"{"type": "logdet_random", "m": 10, "d": 3, "seed": 1}"#,
    )
    .unwrap();
    let o = run(&[
        "solve",
        "--instance",
        p.to_str().unwrap(),
        "--alpha",
        "5",
        "--beta",
        "2",
        "--solver",
        "exact",
        "--cap",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cap 10"), "{}", stderr(&o));
}
