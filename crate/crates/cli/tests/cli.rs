use std::process::{Command, Output};

fn parhecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parhecke"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const DEMO_A: &str = "1/2,1/2,1/2,1/4,1/4";
const DEMO_B: &str = "1/2,1/2,1/2,-1/4,-1/4";

#[test]
fn okamoto_prints_the_matrix() {
    let o = parhecke(&["okamoto"]);
    assert!(o.status.success());
    let rows: Vec<Vec<String>> = stdout(&o)
        .lines()
        .map(|l| l.split_whitespace().map(String::from).collect())
        .collect();
    assert_eq!(rows.len(), 5);
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            assert_eq!(x, if i == j { "-15/8" } else { "5/8" });
        }
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--seed", "7", "chern", "--samples", "3"],
        vec!["--format", "json", "solve", "--a", DEMO_A, "--b", DEMO_B],
        vec!["lines"],
    ] {
        let x = parhecke(&args);
        let y = parhecke(&args);
        assert!(x.status.success(), "{args:?}");
        assert_eq!(x.stdout, y.stdout, "{args:?}");
    }
}

#[test]
fn seed_changes_samples() {
    let x = parhecke(&["--seed", "1", "chern", "--samples", "1"]);
    let y = parhecke(&["--seed", "2", "chern", "--samples", "1"]);
    assert_ne!(x.stdout, y.stdout);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(parhecke(&["okamoto", "--nonsense"]).status.code(), Some(2));
    assert_eq!(parhecke(&["iota", "--l4", "1/0", "--l5", "3"]).status.code(), Some(2));
    let o = parhecke(&["solve", "--a", "1/2,1/2", "--b", DEMO_B]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("expected 5 entries"));
}

#[test]
fn json_rationals_are_strings() {
    let o = parhecke(&["--format", "json", "okamoto"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0][0], "-15/8");
}

#[test]
fn solve_then_check_divisors() {
    let o = parhecke(&["--format", "json", "solve", "--a", DEMO_A, "--b", DEMO_B]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let path = std::env::temp_dir().join(format!("parhecke-params-{}.json", std::process::id()));
    std::fs::write(&path, v["params"].to_string()).unwrap();
    let p = path.to_str().unwrap();
    assert!(parhecke(&["divisors", "--check-kernel", p]).status.success());
    assert!(parhecke(&["divisors", "--check-hecke", p]).status.success());
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn stability_example() {
    let o = parhecke(&[
        "stability",
        "--p4",
        "3",
        "--p5",
        "5",
        "--flags",
        "0,0,1,inf,2",
        "--q",
        "1/5",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("STABLE"));
}

#[test]
fn csv_export_shape() {
    let o = parhecke(&["divisors", "--csv", "curves"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 50);
    assert!(lines.iter().all(|l| l.split(',').count() == 59));
}

#[test]
fn verify_all_reports_every_criterion() {
    let o = parhecke(&["--format", "json", "verify-all"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let results = v["results"].as_array().unwrap();
    for n in 1..=15 {
        let id = format!("criterion-{n}");
        assert!(results.iter().any(|r| r["id"] == id.as_str()), "{id}");
    }
    let failed = v["fail"].as_u64().unwrap();
    assert_eq!(o.status.code(), Some(i32::from(failed > 0)));
}
