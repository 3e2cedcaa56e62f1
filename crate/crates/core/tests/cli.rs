use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");

fn skeinlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skeinlab"))
        .args(args)
        .env_remove("SKEINLAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

const RAT_REP: &str =
    r#"{"surface":"1,1","ring":"rat","images":[[["2","1"],["1","1"]],[["1","1"],["1","2"]]]}"#;

#[test]
fn reduce_commutator() {
    let o = skeinlab(&["skein", "reduce", "--word", "abAB"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "-x*y*z + x^2 + y^2 + z^2 - 2");

    let o = skeinlab(&["--json", "skein", "reduce", "--word", "abAB"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["trace"]["vars"], serde_json::json!(["x", "y", "z"]));
    assert_eq!(v["trace"]["terms"].as_array().unwrap().len(), 5);
}

#[test]
fn eval_agrees_with_reduce() {
    let dir = tempfile::tempdir().unwrap();
    let rep = write(dir.path(), "rep.json", RAT_REP);
    let o = skeinlab(&["skein", "eval", "--rep", rep.to_str().unwrap(), "--word", "abAB"]);
    assert_eq!(code(&o), 0);
    // x = y = 3, z = 6 in the commutator trace polynomial
    assert_eq!(stdout(&o).trim(), "\"-2/1\"");
}

#[test]
fn decompose_and_fiber() {
    let o = skeinlab(&["skein", "decompose", "--expr", "x*y"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "1·T[-1/1] + 1·T[1/1]");

    let o = skeinlab(&["skein", "fiber", "--traces", "2,2,2,2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "x^2 + y^2 + z^2 + xyz - 8x - 8y - 8z + 28 = 0");
}

#[test]
fn builtin_maps_meet_expectations() {
    for surface in ["1,1", "0,4"] {
        let o = skeinlab(&["act", "verify", "--surface", surface, "--all"]);
        assert_eq!(code(&o), 0, "{surface}: {}", stdout(&o));
    }
    let o = skeinlab(&["act", "apply", "--gens", "R,T", "--expr", "x"]);
    assert_eq!(stdout(&o).trim(), "x*y - z");
    let o = skeinlab(&["act", "conj-sign", "--gens", "T", "--eps=-1,1"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn lamination_commands() {
    let o = skeinlab(&["lam", "valuate", "--lam", "0/1:1", "--expr", "x*y"]);
    assert_eq!(stdout(&o).trim(), "1");
    let fixture = format!("{FIXTURES}/laurent_diag_t.json");
    let o = skeinlab(&["lam", "dominate", "--rep", &fixture]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "0/1:1");
    let o = skeinlab(&["lam", "farey", "--slope", "1/2", "--ball", "1"]);
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn sphere_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let rep = write(dir.path(), "rep.json", RAT_REP);
    let o = skeinlab(&["sphere", "from-rep", "--rep", rep.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let config = write(dir.path(), "config.json", &stdout(&o));
    let cfg = config.to_str().unwrap();

    let o = skeinlab(&["sphere", "braid", "--config", cfg, "--word", "1,-1"]);
    assert_eq!(code(&o), 0);
    let before: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&config).unwrap()).unwrap();
    let after: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(before, after);

    let a = skeinlab(&["sphere", "coxeter", "--config", cfg]);
    let o = skeinlab(&["sphere", "braid", "--config", cfg, "--word", "2"]);
    let moved = write(dir.path(), "moved.json", &stdout(&o));
    let b = skeinlab(&["sphere", "coxeter", "--config", moved.to_str().unwrap()]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_is_deterministic() {
    let a = skeinlab(&["--json", "--seed", "7", "verify", "braid"]);
    let b = skeinlab(&["--json", "--seed", "7", "verify", "braid"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let via_env = Command::new(env!("CARGO_BIN_EXE_skeinlab"))
        .args(["--json", "verify", "braid"])
        .env("SKEINLAB_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(a.stdout, via_env.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["seed"], 7);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&skeinlab(&["verify", "nope"])), 2);
    assert_eq!(code(&skeinlab(&["skein", "reduce", "--word", "a?"])), 2);
    assert_eq!(code(&skeinlab(&["sphere", "signs", "--a=1,1", "--n", "2"])), 2);
    assert_eq!(code(&skeinlab(&["skein", "eval", "--rep", "/nonexistent.json", "--word", "a"])), 2);
    assert_eq!(code(&skeinlab(&[])), 2);
}

#[test]
fn failed_checks_exit_one() {
    // a zero trace on a simple curve leaves no dominating lamination
    let dir = tempfile::tempdir().unwrap();
    let rep = write(
        dir.path(),
        "zero.json",
        r#"{"surface":"1,1","ring":"laurent","images":[
            [[{"t":{}},{"t":{"0":"1/1"}}],[{"t":{"0":"-1/1"}},{"t":{}}]],
            [[{"t":{"0":"1/1"}},{"t":{"0":"1/1"}}],[{"t":{}},{"t":{"0":"1/1"}}]]]}"#,
    );
    let o = skeinlab(&["lam", "dominate", "--rep", rep.to_str().unwrap()]);
    assert_eq!(code(&o), 1, "{}", String::from_utf8_lossy(&o.stderr));
}
