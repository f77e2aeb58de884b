use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logcoeff"))
        .args(args)
        .env("LOGCOEFF_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn coeffs_f3_extremal_gives_exact_values() {
    let o = run(&["coeffs", "--class", "F", "--c", "3", "--n", "5", "--extremal", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    let rows = v["rows"].as_array().expect("rows");
    let gammas: Vec<&str> = rows.iter().map(|r| r["gamma"].as_str().unwrap()).collect();
    assert_eq!(gammas, ["3/4", "7/16", "5/16", "31/128", "63/320"]);
    assert_eq!(rows[1]["bound"].as_str(), Some("7/16"));
}

#[test]
fn coeffs_koebe_and_twisted_g() {
    let o = run(&["coeffs", "--class", "janowski", "--A", "1", "--B", "-1", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let gammas: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["gamma"].as_str().unwrap()).collect();
    assert_eq!(gammas, ["1", "1/2", "1/3"]);

    let o = run(&["coeffs", "--class", "G", "--c", "1", "--twist", "2", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["rows"][1]["gamma"].as_str(), Some("-1/12"));
}

#[test]
fn coeffs_gap_reports_no_bound() {
    let o = run(&["coeffs", "--class", "F", "--c", "2.65", "--n", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let row = &json(&o)["rows"][3];
    assert_eq!(row["applicable"], serde_json::Value::Bool(false));
    assert_eq!(row["alternatives"].as_array().map(|a| a.len()), Some(2));
}

#[test]
fn coeffs_accepts_a_schwarz_file() {
    let dir = std::env::temp_dir().join(format!("logcoeff-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("phi.json");
    std::fs::write(&path, r#"{"schur": [[0.5, 0.0], [0.5, 0.0]]}"#).unwrap();
    let o = run(&["coeffs", "--class", "F", "--c", "3", "--n", "3", "--schwarz", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["rows"].as_array().unwrap().len(), 3);
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"schur": [[1.5, 0.0]]}"#).unwrap();
    let o = run(&["coeffs", "--class", "F", "--c", "3", "--schwarz", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_clean_class_exits_zero() {
    let o = run(&["verify", "--class", "G", "--c", "1", "--n", "8", "--samples", "100", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["report"]["proven_violations"], serde_json::json!(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--class", "F"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--class", "nonsense", "--c", "1"]).status.code(), Some(2));
    assert_eq!(run(&["explore"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["coeffs", "--class", "F", "--c", "5"]).status.code(), Some(2));
}

#[test]
fn phi_covered_and_uncovered() {
    let o = run(&["phi", "--mu", "1", "--upsilon", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"]["value"].as_f64(), Some(1.0));
    let o = run(&["phi", "--mu", "3", "--upsilon", "1.35"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());
}

#[test]
fn dilog_at_one() {
    let o = run(&["dilog", "--x", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1.6449340668482264"), "{}", stdout(&o));
    assert_eq!(run(&["dilog", "--x", "2"]).status.code(), Some(2));
}

#[test]
fn explore_g_general_reports_no_finding() {
    let o = run(&["explore", "--conjecture", "G_general", "--budget", "2000"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["report"]["findings"], serde_json::json!(0));
    assert_eq!(v["report"]["entries"].as_array().unwrap().len(), 24);
    assert_eq!(run(&["explore", "--conjecture", "nope"]).status.code(), Some(2));
}

#[test]
fn explore_search_and_oracle() {
    let o = run(&["explore", "--class", "F", "--c", "3", "--n", "1", "--budget", "500"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let best = json(&o)["result"]["search"]["best_value"].as_f64().unwrap();
    assert!((best - 0.75).abs() < 1e-9, "{best}");
    let o = run(&["explore", "--mu", "1", "--upsilon", "1", "--budget", "500"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn table_csv_header() {
    let o = run(&["table", "--class", "F", "--c", "3", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let header = text.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "class,params,n,bound,sharp,applicable,citation");
    assert!(text.contains("(conjectural)"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["verify", "--class", "janowski", "--A", "1", "--B", "-1/2", "--samples", "200", "--seed", "7", "--format", "json"][..],
        &["explore", "--conjecture", "F3_pointwise", "--budget", "300", "--seed", "3"][..],
        &["coeffs", "--class", "spiral", "--alpha", "0.5", "--beta", "1/2", "--n", "6", "--format", "csv"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn json_round_trips() {
    let o = run(&["verify", "--class", "F", "--c", "3", "--n", "6", "--samples", "50", "--format", "json"]);
    let v = json(&o);
    let text = serde_json::to_string(&v).unwrap();
    let back: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v, back);
    assert!(v["config"].is_object());
    assert!(v["report"]["checks"].as_array().unwrap().iter().all(|c| c["citation"].is_string()));
}
