use std::fs;

use spectral_riesz::cli::run;

fn call(args: &[&str], env: Option<&str>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["spectral-riesz"];
    argv.extend_from_slice(args);
    let code = run(argv, env.map(String::from), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn spectrum_csv_has_header_and_full_precision() {
    let (code, out, _) = call(&["spectrum", "--domain", r#"{"type":"box","lengths":[1,1]}"#, "--count", "5", "--bc", "dirichlet"], None);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "index,eigenvalue");
    assert_eq!(lines.len(), 6);
    assert!(!out.contains('\r'));
    let first: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
    assert_eq!(first, 2.0 * std::f64::consts::PI.powi(2));
}

#[test]
fn empty_cutoff_gives_header_only() {
    let (code, out, _) = call(&["spectrum", "--domain", r#"{"type":"box","lengths":[1,1]}"#, "--cutoff", "0"], None);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "index,eigenvalue");
}

#[test]
fn json_output_carries_meta() {
    let (code, out, _) = call(&["--format", "json", "--seed", "7", "riesz1d", "--r", "2.5"], None);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["meta"]["seed"], 7);
    assert!(v["meta"]["version"].is_string());
    assert!(v["meta"]["command_line"].as_str().unwrap().contains("riesz1d"));
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
}

#[test]
fn default_seed_is_42() {
    let (_, out, _) = call(&["--format", "json", "riesz1d", "--r", "1"], None);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["meta"]["seed"], 42);
}

#[test]
fn output_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["-o", p, "sweep", "--bound", "twoterm", "--z-from", "10", "--z-to", "1000", "--steps", "2"], None);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.starts_with("z,bound_total,"));
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    fs::write(&cfg, "# defaults\nseed = 5\nformat = json\nthreads = 1\n").unwrap();
    let c = cfg.to_str().unwrap();
    let (code, out, _) = call(&["--config", c, "riesz1d", "--r", "3"], None);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["meta"]["seed"], 5);
    let (_, out, _) = call(&["--config", c, "--seed", "9", "--format", "csv", "riesz1d", "--r", "3"], None);
    assert!(out.starts_with("r,power,"));
}

#[test]
fn unknown_config_key_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.conf");
    fs::write(&cfg, "colour = blue\n").unwrap();
    let (code, _, err) = call(&["--config", cfg.to_str().unwrap(), "riesz1d", "--r", "1"], None);
    assert_eq!(code, 2);
    assert!(err.contains("colour"));
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["verify", "--suite", "avp", "--quick"];
    let (c1, one, _) = call(&args, Some("1"));
    let (c4, four, _) = call(&args, Some("4"));
    let (c2, flag, _) = call(&["--threads", "2", "verify", "--suite", "avp", "--quick"], Some("not-a-number"));
    assert_eq!((c1, c4, c2), (0, 0, 0));
    assert_eq!(one, four);
    assert_eq!(one, flag);
}

#[test]
fn bad_thread_env_is_usage_error() {
    let (code, _, _) = call(&["riesz1d", "--r", "1"], Some("zero"));
    assert_eq!(code, 2);
}

#[test]
fn same_seed_gives_identical_bytes() {
    let args = ["--seed", "11", "ineq", "--form", "1b", "--samples", "200"];
    let (_, a, _) = call(&args, None);
    let (_, b, _) = call(&args, None);
    assert_eq!(a, b);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(call(&["spectrum"], None).0, 2);
    assert_eq!(call(&["sweep", "--bound", "nonsense", "--z-from", "1", "--z-to", "2", "--steps", "3"], None).0, 2);
    assert_eq!(call(&["bounds", "--bound", "laptev", "--z", "-1"], None).0, 2);
    assert_eq!(call(&["spectrum", "--cutoff", "10", "--domain", "{\"type\":\"box\",\"lengths\":[-1]}"], None).0, 2);
    assert_eq!(call(&["--help"], None).0, 0);
}

#[test]
fn violated_bound_exits_1() {
    // below the second eigenvalue the counting bound exceeds N(z) = 1
    let slab = r#"{"type":"box","lengths":[1,1,0.25]}"#;
    let (code, _, err) = call(&["bounds", "--bound", "corrected-polya", "--z", "5", "--domain", slab], None);
    assert_eq!(code, 1);
    assert!(err.contains("note"));
    let (code, _, _) = call(&["bounds", "--bound", "corrected-polya", "--z", "100", "--domain", slab], None);
    assert_eq!(code, 0);
}

#[test]
fn unwritable_output_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let (code, _, _) = call(&["-o", path.to_str().unwrap(), "riesz1d", "--r", "1"], None);
    assert_eq!(code, 3);
}

#[test]
fn verify_rectangle_point() {
    let (code, out, err) = call(&["verify", "--suite", "rectangle", "--l1", "1", "--l2", "1", "--z", "100"], None);
    assert_eq!(code, 0, "{err}");
    assert!(out.lines().count() > 1);
}

#[test]
fn ineq_report_shape() {
    let (code, out, _) = call(&["ineq", "--form", "refined1", "--samples", "100"], None);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["samples"], 100);
    assert!(v["violations"].as_array().unwrap().is_empty());
    assert!(v["worst_margin"].as_f64().unwrap().is_finite());
}
