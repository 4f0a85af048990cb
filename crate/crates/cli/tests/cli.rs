use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affine-shi"))
        .args(args)
        .env_remove("AFFINE_SHI_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn roots_summary() {
    let o = run(&["roots", "-t", "A", "-r", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("3 positive roots, h = 3"));
    let o = run(&["roots", "-t", "B", "-r", "2", "-f", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 4);
    assert_eq!(v["coxeter_number"], 4);
    assert!(stderr(&o).contains("4 positive roots, h = 4"));
}

#[test]
fn bad_rank_is_an_error() {
    let o = run(&["roots", "-t", "A", "-r", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
    let o = run(&["roots", "-t", "G", "-r", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumeration_counts() {
    for (what, t, r, line) in [
        ("low", "A", "2", "count: 16 low elements of A2"),
        ("dominant", "G", "2", "count: 8 dominant regions of G2"),
        ("regions", "A", "3", "count: 125 shi regions of A3"),
        ("ideals", "B", "2", "count: 6 ideals of B2"),
    ] {
        let o = run(&["enumerate", what, "-t", t, "-r", r]);
        assert!(o.status.success(), "{what} {t}{r}: {}", stderr(&o));
        assert!(stdout(&o).contains(line), "{what} {t}{r}");
    }
}

#[test]
fn budget_exceeded_is_an_error() {
    let o = run(&["enumerate", "regions", "-t", "A", "-r", "3", "--budget", "50"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("budget"));
}

#[test]
fn verify_reports_pass() {
    for (suite, t) in [("main-theorem", "B"), ("descent-walls", "A"), ("tables", "A")] {
        let o = run(&["verify", suite, "-t", t, "-r", "2", "--bound", "7", "-f", "json"]);
        assert!(o.status.success(), "{suite}: {}", stderr(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["suite"], suite);
        assert_eq!(v["bound"], 7);
        let checks = v["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c["status"] == "pass"), "{suite}");
    }
}

#[test]
fn automaton_dot() {
    let o = run(&["automaton", "-t", "A", "-r", "2"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(dot.matches("[label=").count() >= 16);
    assert!(stderr(&o).contains("16 states"));
}

#[test]
fn csv_to_file() {
    let path = std::env::temp_dir().join(format!("affine-shi-regions-{}.csv", std::process::id()));
    let o = run(&["enumerate", "regions", "-t", "B", "-r", "2", "-f", "csv", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("count: 25 shi regions of B2"));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("sign_type,"));
    assert_eq!(lines.count(), 25);
}

#[test]
fn unsupported_format_is_rejected() {
    let o = run(&["roots", "-t", "A", "-r", "2", "-f", "dot"]);
    assert_eq!(o.status.code(), Some(2));
}
