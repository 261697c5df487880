use std::process::{Command, Output};

use uncopy::scenarios::{run_all, MetricValue, ScenarioConfig};

fn uncopy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uncopy"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn run_all_text() {
    let out = uncopy(&["run", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().take(8).all(|l| l.contains("PASS")));
    assert_eq!(text.lines().last(), Some("8/8 scenarios passed"));
    assert!(out.stderr.is_empty());
}

#[test]
fn single_trial_run_is_deterministic() {
    let args = ["run", "all", "--trials", "1", "--seed", "42", "--format", "json"];
    let a = uncopy(&args);
    let b = uncopy(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_flag_exits_2() {
    let out = uncopy(&["run", "all", "--trials", "lots"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let out = uncopy(&["run", "all", "--alpha", "0.9", "--beta", "0.9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_metrics_round_trip() {
    let cfg = ScenarioConfig {
        seed: 3,
        ..Default::default()
    };
    let (reports, _) = run_all(&cfg);
    let out = uncopy(&["run", "all", "--seed", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let parsed = v["reports"].as_array().unwrap();
    assert_eq!(parsed.len(), reports.len());
    for (report, json) in reports.iter().zip(parsed) {
        assert_eq!(json["scenario"], report.scenario.as_str());
        for (name, value) in report.metrics.iter() {
            let j = &json["metrics"][name];
            match value {
                MetricValue::Real(x) if x.is_finite() => {
                    assert!((j.as_f64().unwrap() - x).abs() <= 1e-14, "{name}");
                }
                MetricValue::Real(_) => assert!(j.is_null()),
                MetricValue::Complex(z) => {
                    assert!((j["re"].as_f64().unwrap() - z.re).abs() <= 1e-14);
                    assert!((j["im"].as_f64().unwrap() - z.im).abs() <= 1e-14);
                }
            }
        }
    }
}

#[test]
fn single_scenario_with_complex_literal() {
    let out = uncopy(&["run", "cnot-superposition", "--alpha", "0.6", "--beta", "0+0.8i", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["beta"]["im"], 0.8);
    let copy = v["reports"][0]["metrics"]["copy_fidelity"].as_f64().unwrap();
    // |0.6³ + |0.8|²·0.8i|² = 0.216² + 0.512²
    assert!((copy - (0.216f64.powi(2) + 0.512f64.powi(2))).abs() < 1e-12);
}

#[test]
fn list_subcommand() {
    let out = uncopy(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for name in [
        "pb-linearity",
        "pb-orthogonality",
        "swap-machine",
        "counterexample",
        "cnot-basis",
        "cnot-superposition",
        "mcnot-known",
        "yuen",
    ] {
        assert!(text.contains(name), "{name}");
    }
}
