use std::path::PathBuf;
use std::process::{Command, Output};

const SHOWCASE_P: &str = "(n^2+k^2)*((n+1)^2+(k-3)^2)*(k-n+3)";
const SHOWCASE_Q: &str = "((n+2)^2+(k-1)^2)*((n-2)^2+(k+7)^2)*(2*k-3*n)";
const EXAMPLE1_SOLUTION: &str = "(3*k+n)/((2*k*n+1)*(2*(k+2)*n+1)*(2*k*(n+1)+1)*(2*(k+2)*(n+1)+1))";

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(p).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pldebound")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn json_goldens() {
    let e1 = data("example1.eq");
    let e5 = data("example5.eq");
    assert_eq!(stdout(&["bound", &e1, "--json"]), golden("example1_bound.json"));
    assert_eq!(stdout(&["bound", &e5, "--json"]), golden("example5_bound.json"));
    assert_eq!(stdout(&["corners", &e1, "--json"]), golden("example1_corners.json"));
    assert_eq!(stdout(&["spread", "--vars", "n,k", SHOWCASE_P, SHOWCASE_Q, "--json"]), golden("showcase_spread.json"));
    assert_eq!(stdout(&["spread", "--vars", "n,k", "n-k", "n-k", "--json"]), golden("diagonal_spread.json"));
    let p = "3*k^2+6*n*k-7*k+3*n^2-7*n+1";
    let q = "3*k^2+6*n*k-13*k+3*n^2-13*n+11";
    assert_eq!(stdout(&["spread", "--vars", "n,k", p, q, "--json"]), golden("quadratic_spread.json"));
}

#[test]
fn dispersion_of_showcase() {
    let out = stdout(&["disp", "--vars", "n,k", SHOWCASE_P, SHOWCASE_Q]);
    assert_eq!(out, "10\nn: 3\nk: 10\n");
}

#[test]
fn verify_example_one() {
    let out = stdout(&["verify", &data("example1.eq"), "--solution", EXAMPLE1_SOLUTION]);
    assert!(out.contains("equation holds: yes"));
    assert!(out.contains("divides bound: yes"));
}

#[test]
fn verify_rejects_wrong_solution() {
    let out = run(&["verify", &data("example1.eq"), "--solution", "1/(n+k)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("equation holds: no"));
}

#[test]
fn bounds() {
    assert_eq!(stdout(&["bound", &data("example5.eq")]), "1\n");
    assert_eq!(stdout(&["bound", &data("intro.eq")]), "1\n");
    assert_eq!(
        stdout(&["bound", &data("example1.eq")]),
        "(2*n*k+1)*(2*n*k+4*n+1)*(2*n*k+2*k+1)*(2*n*k+4*n+2*k+5)\n"
    );
    let per_corner = stdout(&["bound", &data("example1.eq"), "--corner", "0", "--inner-vector", "1,1", "--factored"]);
    assert!(per_corner.lines().all(|l| l.starts_with("N^(")));
    let all = stdout(&["bound", &data("example1.eq"), "--all"]);
    assert_eq!(all.matches("corner ").count(), 4);
    assert!(all.contains("combined:"));
    assert_eq!(stdout(&["bound", &data("univariate.eq"), "--expanded"]), "n\n");
}

#[test]
fn structure_with_diagonal_inner_vector() {
    let out = stdout(&["structure", &data("example1.eq"), "--corner", "0", "--depth", "4", "--inner-vector", "1,1"]);
    assert_eq!(out.trim().matches('(').count(), 25);
    assert!(out.contains("(8,0)") && out.contains("(0,8)") && !out.contains("(8,2)"));
}

#[test]
fn split_and_corners() {
    assert_eq!(stdout(&["split", "--vars", "n,k", "(n-k)*(n^2+k^2+1)"]), "periodic: n-k\naperiodic: n^2+k^2+1\n");
    let out = stdout(&["corners", &data("example5.eq")]);
    let points: Vec<&str> = out.lines().map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(points, ["(0,0)", "(0,1)", "(1,1)", "(2,0)"]);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["bound", "no-such-file.eq"]).status.code(), Some(2));
    assert_eq!(run(&["spread", "--vars", "n,k", "n+", "k"]).status.code(), Some(2));
    assert_eq!(run(&["split", "--vars", "n", "k"]).status.code(), Some(2));
    let out = run(&["bound", &data("example1.eq"), "--corner", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["bound", &data("example1.eq"), "--corner", "0", "--inner-vector", "-1,0"]).status.code(), Some(2));
}
