use std::path::PathBuf;
use std::process::{Command, Output};

fn ringdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringdet")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn write_matrix(name: &str, json: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ringdet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path
}

const SYMBOLIC: &str = r#"{"ring":"poly:a,b,c,d","rows":2,"cols":2,"entries":[[[[1,[1,0,0,0]]],[[1,[0,1,0,0]]]],[[[1,[0,0,1,0]]],[[1,[0,0,0,1]]]]]}"#;

#[test]
fn integer_determinant_inline() {
    let o = ringdet(&["det", "--ring", "int", "--algo", "formula", "--matrix", "[[1,2],[3,4]]"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-2");
}

#[test]
fn symbolic_determinant_and_charpoly() {
    let p = write_matrix("sym.json", SYMBOLIC);
    let o = ringdet(&["det", "--ring", "poly:a,b,c,d", "--algo", "formula", p.to_str().unwrap()]);
    assert_eq!(stdout(&o), "a*d - b*c");
    let o = ringdet(&["charpoly", p.to_str().unwrap()]);
    assert_eq!(stdout(&o), "x^2 + (-a - d)*x + a*d - b*c");
    let o = ringdet(&["charpoly", "--algo", "berkowitz", "--format", "json", p.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coefficients"][0], "a*d - b*c");
}

#[test]
fn chio_refused_over_z4() {
    let p = write_matrix("z4.json", r#"{"ring":"mod:4","rows":2,"cols":2,"entries":[[1,2],[3,4]]}"#);
    let o = ringdet(&["det", "--ring", "mod:4", "--algo", "chio", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("field"));
    let o = ringdet(&["det", "--algo", "formula", p.to_str().unwrap()]);
    assert_eq!(stdout(&o), "2");
}

#[test]
fn csanky_refused_in_small_characteristic() {
    let p = write_matrix("z3.json", r#"{"ring":"mod:3","rows":3,"cols":3,"entries":[[1,2,0],[0,1,2],[2,0,1]]}"#);
    let o = ringdet(&["charpoly", "--algo", "csanky", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("characteristic"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(ringdet(&["det", "--matrix", "[[1,2]"]).status.code(), Some(2));
    assert_eq!(ringdet(&["det", "--ring", "rat", "--matrix", "[[1]]"]).status.code(), Some(2));
    assert_eq!(ringdet(&["det", "--ring", "mod:1", "--matrix", "[[1]]"]).status.code(), Some(2));
    assert_eq!(ringdet(&["det", "--matrix", "[[1,2]]"]).status.code(), Some(2));
    assert_eq!(ringdet(&["det", "--algo", "gauss", "--matrix", "[[1]]"]).status.code(), Some(2));
    assert_eq!(ringdet(&["frobnicate"]).status.code(), Some(2));
    let p = write_matrix("bad.json", "{\"rows\": 1,\n \"cols\": 1, \"entries\": [[\"x\"]]}");
    let o = ringdet(&["det", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("entries[0][0]"));
    let p = write_matrix("clash.json", r#"{"ring":"mod:5","rows":1,"cols":1,"entries":[[1]]}"#);
    assert_eq!(ringdet(&["det", "--ring", "mod:7", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn empty_matrix() {
    let p = write_matrix("empty.json", r#"{"ring":"int","rows":0,"cols":0,"entries":[]}"#);
    assert_eq!(stdout(&ringdet(&["det", p.to_str().unwrap()])), "1");
}

#[test]
fn emit_matrix_round_trip() {
    for (name, json) in [
        ("sym-rt.json", SYMBOLIC),
        ("rat-rt.json", r#"{"ring":"rat","rows":2,"cols":2,"entries":[["1/2","-3"],["4/6","0"]]}"#),
        ("mod-rt.json", r#"{"ring":"mod:7","rows":1,"cols":1,"entries":[[-1]]}"#),
    ] {
        let p = write_matrix(name, json);
        let first = stdout(&ringdet(&["det", "--emit-matrix", p.to_str().unwrap()]));
        let q = write_matrix(&format!("again-{name}"), &first);
        let second = stdout(&ringdet(&["det", "--emit-matrix", q.to_str().unwrap()]));
        assert_eq!(first, second);
    }
}

#[test]
fn verify_reports() {
    let p = write_matrix("id5.json", r#"{"ring":"rat","rows":5,"cols":5,"entries":[[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]}"#);
    let o = ringdet(&["verify", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));

    let p = write_matrix("swap.json", r#"{"ring":"rat","rows":2,"cols":2,"entries":[[0,1],[1,0]]}"#);
    let o = ringdet(&["verify", p.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("SKIPPED(hypothesis)") && l.contains("telescoping")), "{out}");
    assert!(out.lines().filter(|l| l.contains("det formula")).all(|l| l.starts_with("PASS")));

    let o = ringdet(&["verify", "--ring", "mod:6", "--random", "4", "--seed", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("SKIPPED(field)") && l.contains("chio")), "{out}");
    assert!(!out.contains("FAIL"));
}

fn without_ms(csv: &str) -> Vec<String> {
    csv.lines().map(|l| l.rsplit_once(',').unwrap().0.to_string()).collect()
}

#[test]
fn bench_is_deterministic() {
    let args = ["bench", "--algo", "formula", "--sizes", "4,8,16", "--seed", "7"];
    let a = stdout(&ringdet(&args));
    let b = stdout(&ringdet(&args));
    assert_eq!(a.lines().next(), Some("algo,n,adds,subs,muls,depth,ms"));
    assert_eq!(a.lines().count(), 4);
    assert_eq!(without_ms(&a), without_ms(&b));
}

#[test]
fn bench_guards_and_comparison() {
    assert_eq!(ringdet(&["bench", "--algo", "permutation", "--sizes", "12"]).status.code(), Some(3));
    let o = ringdet(&["bench", "--algo", "formula,berkowitz", "--sizes", "8"]);
    let out = stdout(&o);
    let muls: Vec<f64> = out.lines().skip(1).map(|l| l.split(',').nth(4).unwrap().parse().unwrap()).collect();
    assert_eq!(muls.len(), 2);
    assert!(muls[0] <= 4.0 * muls[1] && muls[1] <= 4.0 * muls[0], "{out}");
    let o = ringdet(&["bench", "--algo", "formula", "--sizes", "2,3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn thread_cap_does_not_change_output() {
    let run = |threads: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_ringdet"))
            .args(["bench", "--algo", "formula", "--sizes", "6", "--ring", "mod:6"])
            .env("RINGDET_THREADS", threads)
            .output()
            .unwrap();
        without_ms(&stdout(&o))
    };
    assert_eq!(run("1"), run("0"));
}
