use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

const TRIANGLE: &str = "v 0\nv 1\nv 2\nt 0\nt 2\ne 0 0 1\ne 1 1 2\ne 2 2 0\nrot 0 0 2\nrot 1 1 0\nrot 2 2 1\n";
const PATH: &str = "v 0\nv 1\nv 2\nt 0\nt 2\ne 0 0 1\ne 1 1 2\nrot 0 0\nrot 1 0 1\nrot 2 1\n";

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tcycle-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn tcycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcycle")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_exit_codes() {
    let dir = scratch("solve");
    let tri = dir.join("tri.txt");
    let path = dir.join("path.txt");
    fs::write(&tri, TRIANGLE).unwrap();
    fs::write(&path, PATH).unwrap();

    let o = tcycle(&["solve", tri.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("YES\n"));
    let mut edges: Vec<&str> = out.lines().nth(1).unwrap().split_whitespace().skip(1).collect();
    edges.sort();
    assert_eq!(edges, ["0", "1", "2"]);

    let o = tcycle(&["solve", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NO\n");

    let o = tcycle(&["oracle", "t-cycle", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    let o = tcycle(&["solve", dir.join("missing.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_input_is_an_error() {
    let dir = scratch("bad");
    let bad = dir.join("bad.txt");
    fs::write(&bad, "v 0\ne 0 0 7\n").unwrap();
    let o = tcycle(&["solve", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    let o = tcycle(&["gen", "no-such-family"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn td_is_pace_and_supplied_td_is_used() {
    let dir = scratch("td");
    let g = dir.join("g.txt");
    assert!(tcycle(&["gen", "grid-with-terminals", "--n", "16", "--k", "2", "-o", g.to_str().unwrap()])
        .status
        .success());
    for mode in ["greedy", "radial"] {
        let o = tcycle(&["td", g.to_str().unwrap(), "--mode", mode]);
        assert!(o.status.success());
        let out = stdout(&o);
        let s = out.lines().find(|l| l.starts_with("s td")).unwrap();
        let fields: Vec<usize> = s.split_whitespace().skip(2).map(|x| x.parse().unwrap()).collect();
        assert_eq!(fields[2], 16);
        assert_eq!(out.lines().filter(|l| l.starts_with("b ")).count(), fields[0]);
        let td = dir.join(format!("{mode}.td"));
        fs::write(&td, out.lines().filter(|l| !l.starts_with("c ")).collect::<Vec<_>>().join("\n")).unwrap();
        let a = tcycle(&["solve", g.to_str().unwrap(), "--td", td.to_str().unwrap()]);
        let b = tcycle(&["solve", g.to_str().unwrap()]);
        assert_eq!(a.status.code(), b.status.code());
    }
    let o = tcycle(&["td", g.to_str().unwrap(), "--mode", "exact"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reduce_and_kernelize_keep_the_answer() {
    let dir = scratch("kernel");
    let g = dir.join("g.txt");
    assert!(tcycle(&["gen", "nested-rings", "--depth", "5", "--k", "3", "-o", g.to_str().unwrap()])
        .status
        .success());
    let want = tcycle(&["solve", g.to_str().unwrap()]).status.code();
    let red = dir.join("red.txt");
    let report = dir.join("red.json");
    let o = tcycle(&["reduce", g.to_str().unwrap(), red.to_str().unwrap(), "--g", "1", "--report", report.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(tcycle(&["solve", red.to_str().unwrap()]).status.code(), want);
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["n"], 30);
    assert!(json["kept"].as_u64().unwrap() < 30);

    let ker = dir.join("ker.txt");
    let report = dir.join("ker.json");
    let o = tcycle(&["kernelize", g.to_str().unwrap(), ker.to_str().unwrap(), "--g", "1", "--report", report.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(tcycle(&["solve", ker.to_str().unwrap()]).status.code(), want);
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["report"]["k"], 3);
    assert_eq!(json["config"]["level"], 2);
}

#[test]
fn seed_comes_from_the_environment() {
    let run = |seed: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_tcycle"))
            .args(["gen", "random-planar", "--n", "30"])
            .env("TCYCLE_SEED", seed)
            .output()
            .unwrap();
        stdout(&o)
    };
    assert_eq!(run("3"), run("3"));
    assert_ne!(run("3"), run("4"));
    assert!(run("3").starts_with("# random-planar n=30 depth=3 k=3 seed=3\n"));
}

#[test]
fn oracle_subcommands() {
    let dir = scratch("oracle");
    let tri = dir.join("tri.txt");
    fs::write(&tri, TRIANGLE).unwrap();
    let path = dir.join("path.txt");
    fs::write(&path, PATH).unwrap();
    let t = tri.to_str().unwrap();
    assert_eq!(tcycle(&["oracle", "t-cycle", t]).status.code(), Some(0));
    assert_eq!(tcycle(&["oracle", "disjoint-paths", t, "--pairs", "0-2"]).status.code(), Some(0));
    assert_eq!(tcycle(&["oracle", "disjoint-paths", t, "--pairs", "0-2,1-1"]).status.code(), Some(2));
    assert_eq!(tcycle(&["oracle", "minor", t, path.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(tcycle(&["oracle", "minor", path.to_str().unwrap(), t]).status.code(), Some(1));
    assert_eq!(tcycle(&["oracle", "isolation", t, "--vertex", "1", "--l", "0"]).status.code(), Some(1));
}

#[test]
fn check_config_reports_levels() {
    let dir = scratch("config");
    // two nested triangles joined by one spoke, terminal 6 outside next to 3 and 4;
    // the cheap loops run 3-4 directly or around through 5
    let text = "v 0\nv 1\nv 2\nv 3\nv 4\nv 5\nv 6\nt 6\n\
                e 0 0 1\ne 1 1 2\ne 2 2 0\ne 3 3 4\ne 4 4 5\ne 5 5 3\ne 6 0 3\ne 7 6 3\ne 8 6 4\n\
                rot 0 2 6 0\nrot 1 1 0\nrot 2 2 1\nrot 3 5 7 3 6\nrot 4 4 3 8\nrot 5 5 4\nrot 6 8 7\n\
                cycle 0 1 2\ncycle 3 4 5\n";
    let f = dir.join("c.txt");
    fs::write(&f, text).unwrap();
    let o = tcycle(&["check-config", f.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["depth"], 1);
    let loops = json["loops"].as_array().unwrap();
    assert_eq!(loops.len(), 2);
    assert_eq!(loops[0]["cost"], 2);
    assert_eq!(loops[0]["levels"].as_array().unwrap().len(), 2);

    fs::write(&f, format!("{text}loop 7 3 8\n")).unwrap();
    let o = tcycle(&["check-config", f.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}
