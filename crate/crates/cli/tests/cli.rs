use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compedge"))
        .args(args)
        .env_remove("COMPEDGE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn analyze_c4_from_either_format() {
    let a = run(&["analyze", "--edges", "4 4\\n1 2\\n2 3\\n3 4\\n4 1", "--kmax", "3"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    let text = stdout(&a);
    assert!(text.contains("Ass^inf = {{1,3}, {2,4}}"));
    assert!(text.contains("symbolic = ordinary class: true"));
    assert!(text.contains("PASS symbolic"));
    let b = run(&["analyze", "--graph6", "Cl", "--kmax", "3"]);
    assert_eq!(stdout(&b), text);
}

#[test]
fn analyze_paw() {
    let o = run(&["analyze", "--edges", "4 4\\n1 2\\n1 3\\n2 3\\n3 4", "--kmax", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["per_k"]["2"]["v_oracle"], 3);
    assert_eq!(v["per_k"]["2"]["v_formula"], 3);
    let entry = v["observed_entry"].as_array().unwrap();
    assert!(entry.iter().any(|e| e[0] == serde_json::json!([1, 2, 3, 4]) && e[1] == 2));
    assert!(!v["per_k"]["1"]["ass_oracle"].as_array().unwrap().contains(&serde_json::json!([1, 2, 3, 4])));
}

#[test]
fn analyze_star_reports_entry_bound_failure() {
    let o = run(&["analyze", "--edges", "4 3\\n1 2\\n1 3\\n1 4", "--kmax", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL entry-bound"));
    let o = run(&["analyze", "--edges", "4 3\\n1 2\\n1 3\\n1 4", "--kmax", "3", "--checks", "ass,reg,v,depth"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn sweep_n4_all_checks() {
    let dir = tempfile::tempdir().unwrap();
    let jsonl = dir.path().join("r.jsonl");
    let o = run(&["sweep", "--nmax", "4", "--kmax", "3", "--checks", "all", "--jsonl", jsonl.to_str().unwrap()]);
    let md = stdout(&o);
    assert!(md.contains("63 graphs"));
    // Only the entry bound fails, on the four stars K_{1,3}.
    for line in md.lines().filter(|l| l.starts_with("| ") && !l.starts_with("| check")) {
        let cells: Vec<&str> = line.split('|').map(str::trim).collect();
        let expected_fail = if cells[1] == "entry-bound" { "4" } else { "0" };
        assert_eq!(cells[3], expected_fail, "{line}");
        assert_eq!(cells[4], "0", "{line}");
    }
    assert_eq!(o.status.code(), Some(1));
    let replay = run(&["replay", jsonl.to_str().unwrap()]);
    assert_eq!(replay.status.code(), Some(1));
    assert_eq!(stdout(&replay), md);
    assert_eq!(std::fs::read_to_string(&jsonl).unwrap().lines().count(), 63);
}

#[test]
fn sweep_symbolic_n6() {
    let o = run(&["sweep", "--nmax", "6", "--checks", "symbolic", "--kmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("| symbolic | 32767 | 0 | 0 | 0 |"));
}

#[test]
fn sweep_field_independence_n5() {
    let o = run(&["sweep", "--nmax", "5", "--checks", "betti-field-independence"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("| betti-field-independence | 1023 | 0 | 0 | 0 |"));
}

#[test]
fn sweep_with_cache_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["sweep", "--nmax", "4", "--kmax", "2", "--checks", "ass,reg,v", "--cache-dir", cache];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&second));
    assert!(dir.path().join("ass").is_dir());
    assert!(dir.path().join("betti").is_dir());
}

#[test]
fn betti_examples() {
    let o = run(&["betti", "--edges", "4 2\\n1 2\\n3 4", "--k", "1", "--primes", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("reg = 3,"));
    let o = run(&["betti", "--graph6", "Bw", "--k", "2"]);
    assert!(stdout(&o).contains("reg = 2,"), "{}", stdout(&o));
    let o = run(&["betti", "--ideal-text", "(x1*x2, x1*x3*x4)", "--vars", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["reg"], 3);
    let o = run(&["betti", "--ideal", r#"{"ambient": 2, "generators": [[1, 0], [0, 1]]}"#]);
    assert!(stdout(&o).contains("reg = 1, pd = 2, depth = 0"), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["analyze", "--graph6", "!!"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--edges", "3 1\\n1 9"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--graph6", "Cl", "--checks", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--nmax", "9"]).status.code(), Some(2));
    assert_eq!(run(&["betti"]).status.code(), Some(2));
    let o = run(&["analyze", "--graph6", "Cl", "--budget-ms", "0"]);
    assert_eq!(o.status.code(), Some(3));
}
