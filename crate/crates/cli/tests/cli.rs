use std::process::{Command, Output};

use deltakit::report::SuiteReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltakit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn evaluate_examples() {
    let cases: [(&[&str], &str); 5] = [
        (&["evaluate", "hadamard", "--alpha", "0,2", "--beta", "1,2", "--p", "2", "--q", "2"], "0,4\n"),
        (&["evaluate", "contraction", "--w", "1/2,1/2", "--t", "1"], "1/2,1/2\n"),
        (&["evaluate", "contraction", "--w", "1/2,1/2", "--t", "1/2"], "3/4,1/4\n"),
        (&["evaluate", "homotopy-point", "--alpha", "0,1", "--beta", "0,1", "--u", "1/2,1/2"], "1/2,1/2\n"),
        (&["evaluate", "delta", "--alpha", "0,1", "--beta", "1,2", "--gamma", "1,1"], "2,2\n"),
    ];
    for (args, expected) in cases {
        let out = run(args);
        assert!(out.status.success(), "{args:?}");
        assert_eq!(stdout(&out), expected, "{args:?}");
    }
}

#[test]
fn evaluate_theta_matches_hadamard_of_pushed_pair() {
    // π = [id_1, [0,0], id_1] in P([1],[0];[1]), α = [0,2], β = [1]:
    // the pushed pair is ([0,2], [1,1]) and Θ gives [0,2].
    let out = run(&[
        "evaluate", "theta", "--sigma-x", "0,1", "--x", "1", "--sigma-y", "0,0", "--y", "0", "--gamma", "0,1",
        "--alpha", "0,2", "--p", "2", "--beta", "1", "--q", "1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0,2\n");
}

#[test]
fn enumerate_lists_and_counts() {
    for (m, n, lines) in [("1", "1", 3), ("0", "4", 5), ("2", "2", 10)] {
        let out = run(&["enumerate", m, n]);
        let text = stdout(&out);
        let body: Vec<&str> = text.lines().collect();
        assert_eq!(body.len(), lines + 1);
        assert_eq!(body[lines], format!("count: {lines}"));
    }
    assert_eq!(stdout(&run(&["enumerate", "1", "1"])), "0,0\n0,1\n1,1\ncount: 3\n");
}

#[test]
fn probe_reports_the_interior_deviation_and_exits_zero() {
    let out = run(&["probe-discrepancy", "--n", "1", "--m", "1", "--alpha", "0,1", "--grid-denominator", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("max deviation: 1/4"), "{text}");
    assert!(text.contains("witness: u=1/2,1/2 t=1/2"), "{text}");
    assert!(text.contains("affine homotopy: 1/2,1/2"), "{text}");
    assert!(text.contains("straight-line contraction: 3/4,1/4"), "{text}");
    assert!(text.contains("open interpretation question"), "{text}");
}

#[test]
fn probe_without_interior_points_or_with_constant_map_sees_nothing() {
    for args in [
        ["probe-discrepancy", "--n", "1", "--m", "1", "--alpha", "0,1", "--grid-denominator", "1"],
        ["probe-discrepancy", "--n", "1", "--m", "1", "--alpha", "0,0", "--grid-denominator", "2"],
    ] {
        let out = run(&args);
        assert!(out.status.success());
        let text = stdout(&out);
        assert!(text.contains("max deviation: 0"), "{text}");
        assert!(!text.contains("note:"), "{text}");
    }
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["verify", "--suite", "homotopy", "--max-dim", "4"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, run(&args).stdout);
    assert!(stdout(&first).contains("homotopy.endpoints"));
}

#[test]
fn verify_all_at_degenerate_bounds() {
    let out = run(&["verify", "--max-dim", "0", "--grid-denominator", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn json_round_trips() {
    let out = run(&["verify", "--suite", "kernel", "--max-dim", "1", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let reports: Vec<SuiteReport> = serde_json::from_str(&text).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert_eq!(r.passed + r.failed, r.instances);
        assert_eq!(r.config.suite, "kernel");
    }
    assert_eq!(serde_json::to_string_pretty(&reports).unwrap() + "\n", text);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&String> = value[0].as_object().unwrap().keys().collect();
    for key in ["suite", "config", "instances", "passed", "failed", "counterexamples"] {
        assert!(keys.iter().any(|k| *k == key), "missing {key}");
    }
}

#[test]
fn sampling_is_seeded() {
    let args = ["verify", "--suite", "kernel", "--max-dim", "2", "--sample", "50", "--seed", "9", "--format", "json"];
    let a = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, run(&args).stdout);
}

#[test]
fn malformed_input_exits_two() {
    for args in [
        vec!["evaluate", "hadamard", "--alpha", "0,x", "--beta", "1"],
        vec!["evaluate", "hadamard", "--alpha", "0,1", "--beta", "1"],
        vec!["evaluate", "contraction", "--w", "1/2,1/3", "--t", "1"],
        vec!["evaluate", "contraction", "--w", "1/2,1/2", "--t", "3/2"],
        vec!["verify", "--suite", "nope"],
        vec!["verify", "--grid-denominator", "0"],
        vec!["verify", "--format", "yaml"],
        vec!["probe-discrepancy", "--n", "1", "--m", "1", "--alpha", "0,2"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
