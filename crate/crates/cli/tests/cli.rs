use std::process::{Command, Output};

fn qball(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qball")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normal_form_prints_the_reordered_product() {
    let o = qball(&["normal-form", "z22* z22"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "q^2 * z22 z22* + (1 - q^2) * 1\n");
    assert_eq!(stdout(&qball(&["normal-form", ""])), "1\n");
}

#[test]
fn normal_form_evaluates_coefficients() {
    let o = qball(&["normal-form", "z22 z11", "--q", "0.5"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[1..], ["1 * z11 z22", "1.5 * z21 z12"]);
}

#[test]
fn parse_errors_exit_2_with_a_position() {
    let o = qball(&["normal-form", "z11 z33"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 2"));
    assert_eq!(qball(&["normal-form", "z11", "--q", "1.5"]).status.code(), Some(2));
}

#[test]
fn orbit_patches() {
    let o = qball(&["orbit", "--base", "0,0,0", "--range", "3", "--q", "0.5"]);
    let points: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let points = points.as_array().unwrap();
    assert_eq!(points.len(), 27);
    for p in points {
        assert!(p["value"].as_array().unwrap().iter().all(|x| (0.0..=1.0).contains(&x.as_f64().unwrap())));
    }

    let o = qball(&["orbit", "--base", "0,0,1"]);
    let points: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(points.as_array().unwrap().len(), 1);

    let o = qball(&["orbit", "--base", "1,1,0", "--range", "2"]);
    let points: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let values: Vec<Vec<f64>> = points
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["value"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect())
        .collect();
    assert_eq!(values, vec![vec![1.0, 1.0, 0.0], vec![0.25, 0.25, 0.75]]);

    assert_eq!(qball(&["orbit", "--base", "2,0,0"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(qball(&["verify", "--series", "pi", "--phi", "0", "--q", "0.5", "--cutoff", "20"]).status.code(), Some(0));
    let o = qball(&["verify", "--series", "rho-full", "--q", "0.5", "--cutoff", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["spectrum"]["orbit"], "0,0,0");
    assert_eq!(report["pass"], true);
    assert_eq!(qball(&["verify", "--series", "rho-full", "--cutoff", "4", "--margin", "3"]).status.code(), Some(2));
    assert_eq!(qball(&["verify", "--series", "nope"]).status.code(), Some(2));
    assert_eq!(qball(&["verify", "--series", "rho12", "--phi", "1"]).status.code(), Some(2));
}

#[test]
fn reports_recheck_identically_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    let o = qball(&["verify", "--series", "hat-rho", "--phi", "2", "--out", p]);
    assert!(o.status.success());
    let check = qball(&["report", p, "--check"]);
    assert_eq!(check.status.code(), Some(0));

    let mut report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    report["relations"][0]["residual"] = serde_json::json!(0.5);
    std::fs::write(&path, report.to_string()).unwrap();
    assert_eq!(qball(&["report", p, "--check"]).status.code(), Some(1));
    assert_eq!(qball(&["report", p]).status.code(), Some(0));
}

#[test]
fn output_is_stable_across_runs() {
    let args = ["verify", "--all", "--q", "0.5", "--format", "md"];
    let a = qball(&args);
    let b = qball(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 2 + 7);
}

#[test]
fn build_writes_the_matrices() {
    let o = qball(&["build", "--series", "pi", "--cutoff", "4", "--q", "0.5", "--phi", "0"]);
    let rep: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rep["lattice"]["cutoff"], 4);
    let z11 = rep["operators"]["z11"]["entries"].as_array().unwrap();
    assert_eq!(z11.len(), 3);
    assert!((z11[0][2].as_f64().unwrap() - 3f64.sqrt()).abs() < 1e-12);
}
