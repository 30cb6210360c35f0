use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schmidt-gates")).args(args).output().expect("binary runs")
}

fn run_fixture(command: &str, name: &str) -> Output {
    run(&[command, fixture(name).to_str().unwrap()])
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON report")
}

/// Compares against `fixtures/golden/<name>`; set `UPDATE_GOLDEN=1` to rewrite.
fn golden(name: &str, actual: &str) {
    let path = fixture("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert!(expected == actual, "{name} differs from golden output");
}

#[test]
fn orange_slice_report() {
    let out = run_fixture("simulate", "orange_slice.json");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert!((v["solid_angle"].as_f64().unwrap() + std::f64::consts::PI).abs() < 1e-12);
    assert!(v["geometric_gate"]["fidelity"].as_f64().unwrap() >= 1.0 - 1e-10);
    assert_eq!(v["invariants"]["class"], "SPE");
    assert_eq!(v["propagator"][1][2][0].as_f64().unwrap(), 1.0);
    assert_eq!(v["propagator"][2][1][0].as_f64().unwrap(), -1.0);
    assert_eq!(v["passed"], true);
    golden("orange_slice.json", &stdout(&out));
}

#[test]
fn stationary_path_is_identity() {
    let out = run_fixture("simulate", "stationary.json");
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["invariants"]["class"], "NOT_PE");
    for r in 0..4 {
        for k in 0..4 {
            let want = if r == k { 1.0 } else { 0.0 };
            assert!((v["propagator"][r][k][0].as_f64().unwrap() - want).abs() < 1e-15);
        }
    }
}

#[test]
fn dynamical_phase_is_flagged() {
    let out = run_fixture("simulate", "latitude_loop.json");
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["dynamical_phase"]["vanishes"], false);
    assert!((v["dynamical_phase"]["plus"].as_f64().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    let check = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "geometric_gate_fidelity").unwrap();
    assert_eq!(check["status"], "not_applicable");
}

#[test]
fn other_simulations_pass() {
    for name in ["geodesic_pair.json", "open_arc.json"] {
        let out = run_fixture("simulate", name);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let v = json(&run_fixture("simulate", "open_arc.json"));
    assert!(v["solid_angle"].is_null());
    assert!(v["tracking_error"].as_f64().unwrap() < 1e-9);
}

#[test]
fn classify_reports() {
    let v = json(&run_fixture("classify", "classify_iswap.json"));
    assert_eq!(v["invariants"]["class"], "SPE");
    let out = run_fixture("classify", "classify_cnot.json");
    assert!(out.status.success());
    let v = json(&out);
    assert!(v["invariants"]["g1_re"].as_f64().unwrap().abs() < 1e-14);
    assert!(v["closed_form"].is_null());
}

#[test]
fn sweep_map_golden_and_rows() {
    let out = run_fixture("sweep-map", "sweep_small.json");
    assert!(out.status.success());
    let text = stdout(&out);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rdr.headers().unwrap(), vec!["alpha0", "omega", "g1_re", "g1_im", "g2", "class"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 25);
    for r in &rows {
        let (alpha0, omega): (f64, f64) = (r[0].parse().unwrap(), r[1].parse().unwrap());
        if alpha0 < 0.1 {
            assert_eq!(&r[5], "NOT_PE");
        }
        if omega == 0.0 {
            assert!((r[2].parse::<f64>().unwrap() - 1.0).abs() < 1e-14);
            assert!((r[4].parse::<f64>().unwrap() - 3.0).abs() < 1e-14);
        }
        if (alpha0 - std::f64::consts::FRAC_PI_2).abs() < 1e-15 && omega == std::f64::consts::PI {
            assert_eq!(&r[5], "SPE");
        }
    }
    golden("sweep_small.csv", &text);
}

#[test]
fn trotter_sweep_golden() {
    let out = run_fixture("trotter-sweep", "trotter.json");
    assert!(out.status.success());
    let text = stdout(&out);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 5 * 9);
    let first = &rows[0];
    assert_eq!((&first[0], &first[1]), ("0.0000000000000000e0", "1"));
    assert!(first[2].parse::<f64>().unwrap() < 1e-13);
    for r in rows.iter().take(9) {
        assert!((r[3].parse::<f64>().unwrap() + std::f64::consts::PI).abs() < 1e-12);
    }
    golden("trotter.csv", &text);
}

#[test]
fn outputs_are_deterministic() {
    for (cmd, name) in [("sweep-map", "sweep_small.json"), ("trotter-sweep", "trotter.json"), ("simulate", "open_arc.json")] {
        let a = run_fixture(cmd, name);
        let b = run_fixture(cmd, name);
        assert_eq!(a.stdout, b.stdout, "{name}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("map.csv");
    let out = run(&["sweep-map", fixture("sweep_small.json").to_str().unwrap(), "--out", target.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap(), stdout(&run_fixture("sweep-map", "sweep_small.json")));
}

#[test]
fn tol_flag_can_fail_checks() {
    // the latitude-loop expectation holds only to rounding, so a zero-width
    // tolerance is rejected and an absurdly tight one fails
    let f = fixture("geodesic_pair.json");
    let out = run(&["simulate", f.to_str().unwrap(), "--tol", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["simulate", fixture("latitude_loop.json").to_str().unwrap(), "--tol", "1e-300"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL"));
}

#[test]
fn invalid_scenarios_exit_nonzero() {
    let out = run_fixture("simulate", "bad_times.json");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("simulate.path.t1"));
    let out = run_fixture("simulate", "open_in_loop_mode.json");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("open"));
    let out = run_fixture("classify", "orange_slice.json");
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["simulate", "/nonexistent/scenario.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_report_line_and_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"schema_version\": 1,\n  \"command\": \"classify\",\n  \"classify\": {\"gate\": 5}\n}\n").unwrap();
    let out = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.json:4:"), "{err}");
    assert!(err.contains("classify.gate"), "{err}");
}
