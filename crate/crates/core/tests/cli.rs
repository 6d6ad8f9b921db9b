use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphereconvex")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_then_countfp() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("octant.json");
    let o = run(&["gen", "--kind", "simplex", "--d", "2", "--p", "3", "--out", path(&f)]);
    assert!(o.status.success());
    let o = run(&["countfp", "--in", path(&f), "--mode", "by-face"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "12");
}

#[test]
fn polar_twice_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b, c) = (dir.path().join("a.json"), dir.path().join("b.json"), dir.path().join("c.json"));
    assert!(run(&["gen", "--kind", "random_points", "--d", "3", "--p", "8", "--seed", "3", "--out", path(&a)])
        .status
        .success());
    assert!(run(&["polar", "--in", path(&a), "--out", path(&b)]).status.success());
    assert!(run(&["polar", "--in", path(&b), "--out", path(&c)]).status.success());
    assert_eq!(std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&c).unwrap());
}

#[test]
fn bounds_table_row() {
    let o = run(&["bounds", "--d", "3", "--p", "6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let header: Vec<&str> = text.lines().next().unwrap().split(',').collect();
    let row: Vec<&str> = text.lines().find(|l| l.starts_with("1,")).unwrap().split(',').collect();
    let col = |name: &str| row[header.iter().position(|h| *h == name).unwrap()];
    assert_eq!(col("phi"), "12");
    assert_eq!(col("Phi_oracle"), "12");
}

#[test]
fn printed_formula_discrepancy_exits_zero() {
    for p in ["5", "6", "7"] {
        let o = run(&["bounds", "--d", "2", "--p", p]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        let header: Vec<&str> = text.lines().next().unwrap().split(',').collect();
        let row: Vec<&str> = text.lines().find(|l| l.starts_with("0,")).unwrap().split(',').collect();
        let col = |name: &str| row[header.iter().position(|h| *h == name).unwrap()];
        assert_eq!(col("Phi_printed"), "3");
        assert_eq!(col("Phi_oracle"), p);
    }
}

#[test]
fn sepcenter_and_partitions() {
    let dir = tempfile::tempdir().unwrap();
    let w1 = dir.path().join("w1.json");
    let w2 = dir.path().join("w2.json");
    std::fs::write(&w1, r#"{"dim": 2, "vertices": [["1","0","0"], ["0","1","0"]]}"#).unwrap();
    std::fs::write(&w2, r#"{"dim": 2, "vertices": [["-1","0","0"], ["0","-1","0"]]}"#).unwrap();
    let o = run(&["sepcenter", "--w1", path(&w1), "--w2", path(&w2)]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["empty"], false);

    let sq = dir.path().join("sq.json");
    assert!(run(&["gen", "--kind", "cube", "--d", "2", "--p", "4", "--out", path(&sq)]).status.success());
    let o = run(&["partitions", "--in", path(&sq)]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m"], 4);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 14);
    assert_eq!(v["count_by_face"], 16);
    assert_eq!(v["count_by_partition"], 12);
}

#[test]
fn hausdorff_of_singletons() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    std::fs::write(&a, r#"{"dim": 2, "vertices": [["1","0","0"]]}"#).unwrap();
    std::fs::write(&b, r#"{"dim": 2, "vertices": [["0","1","0"]]}"#).unwrap();
    let o = run(&["hausdorff", "--a", path(&a), "--b", path(&b), "--resolution", "0.05"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["h"].as_f64().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    assert_eq!(v["error_bar"].as_f64().unwrap(), 0.05);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["gen", "--kind", "simplex", "--d", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["countfp", "--in", "/nonexistent.json"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    std::fs::write(&f, r#"{"dim": 1, "vertices": [[0.5, 1]]}"#).unwrap();
    assert_eq!(run(&["polar", "--in", path(&f)]).status.code(), Some(2));
}

#[test]
fn verify_polar_exits_zero() {
    let o = run(&["verify", "--suite", "polar", "--seed", "7", "--trials", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
}
