use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.display().to_string()
}

fn asd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asd"))
        .args(args)
        .output()
        .expect("spawn asd")
}

fn code(args: &[&str]) -> i32 {
    asd(args).status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// `p/q` or `p` as a pair of integers.
fn fraction(s: &str) -> (i128, i128) {
    match s.trim().split_once('/') {
        Some((p, q)) => (p.parse().unwrap(), q.parse().unwrap()),
        None => (s.trim().parse().unwrap(), 1),
    }
}

fn le((a, b): (i128, i128), (c, d): (i128, i128)) -> bool {
    a * d <= c * b
}

#[test]
fn eval_square_plus_one() {
    let out = asd(&["eval", "x*x+1", "--at", "1/3", "--eps", "1/1000000"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let inner = text.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap();
    let (l, u) = inner.split_once(',').unwrap();
    let (l, u) = (fraction(l), fraction(u));
    let value = (10, 9);
    assert!(le(l, value) && le(value, u), "{text}");
    // u - l = 2/10^6
    assert_eq!((u.0 * l.1 - l.0 * u.1) * 1_000_000, 2 * u.1 * l.1, "{text}");
}

#[test]
fn eval_json_fields() {
    let out = asd(&["eval", "x+1", "--at", "-1/2", "--eps", "1/2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["expr"], "x+1");
    assert_eq!(v["at"], "-1/2");
    assert_eq!(v["eps"], "1/2");
    let (l, u) = (
        fraction(v["lower"].as_str().unwrap()),
        fraction(v["upper"].as_str().unwrap()),
    );
    assert!(le(l, (1, 2)) && le((1, 2), u));
    assert!(v["depth"].is_u64());
}

#[test]
fn eval_errors() {
    let out = asd(&["eval", "x+", "--at", "0", "--eps", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("offset 2"), "{}", stderr(&out));
    assert_eq!(code(&["eval", "0.5*x", "--at", "0", "--eps", "1"]), 2);
    assert_eq!(code(&["eval", "x/2", "--at", "0", "--eps", "1"]), 2);
    assert_eq!(code(&["eval", "x", "--at", "1/0", "--eps", "1"]), 2);
    assert_eq!(code(&["eval", "x", "--at", "0", "--eps", "0"]), 2);
    assert_eq!(code(&["eval", "x", "--at", "0"]), 2);
}

#[test]
fn eval_depth_exhaustion() {
    let out = asd(&["eval", "x*x", "--at", "1/3", "--eps", "1/1000000", "--max-depth", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).is_empty());
}

#[test]
fn check_nucleus_exits() {
    assert_eq!(code(&["check-nucleus", "free-dl-1", "--max-card", "3"]), 0);
    assert_eq!(code(&["check-nucleus", &data("chain2.json")]), 0);
    let out = asd(&["check-nucleus", "sigma-2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--sampled"));
    assert_eq!(code(&["check-nucleus", "sigma-2", "--sampled", "5", "--seed", "3"]), 0);
    assert_eq!(code(&["check-nucleus", "real-line"]), 2);
}

#[test]
fn arbitrary_predicates_print_a_triple() {
    let out = asd(&["check-nucleus", "chain-3", "--arbitrary", "--max-card", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("(Φ, Ψ, ξ) = ({"), "{}", stdout(&out));
}

#[test]
fn check_basis_exits() {
    assert_eq!(code(&["check-basis", &data("chain2.json")]), 0);
    assert_eq!(code(&["check-basis", &data("subsets.json"), "--exhaustive"]), 0);
    assert_eq!(code(&["check-basis", &data("zero_not_below.json")]), 1);
    assert_eq!(code(&["check-basis", "broken-chain-2"]), 1);
    assert_eq!(code(&["check-basis", "real-line", "--samples", "300"]), 0);
    assert_eq!(code(&["check-basis", "real-line", "--exhaustive"]), 2);
    assert_eq!(code(&["check-basis", "no-such-basis"]), 2);
}

#[test]
fn classification_line() {
    let out = asd(&["check-basis", "unit-interval", "--samples", "200"]);
    assert!(stdout(&out).contains("compact: yes, filter: yes"), "{}", stdout(&out));
    let out = asd(&["check-basis", "free-dl-1"]);
    assert!(stdout(&out).contains("compact: yes"), "{}", stdout(&out));
}

#[test]
fn seeded_runs_repeat() {
    let args = ["check-basis", "mutated-real-line", "--samples", "300", "--seed", "7"];
    let (a, b) = (asd(&args), asd(&args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn check_points_exits() {
    assert_eq!(code(&["check-points", "sigma-2"]), 0);
    assert_eq!(
        code(&["check-points", "real-line", "--points", "3", "--samples", "50"]),
        0
    );
    assert_eq!(code(&["check-points", "unit-interval", "--at", "1/3", "--at", "1"]), 0);
    assert_eq!(code(&["check-points", "unit-interval", "--at", "3/2"]), 2);
    assert_eq!(code(&["check-points", "broken-chain-2"]), 1);
}

#[test]
fn validate_matrix_exits() {
    assert_eq!(code(&["validate-matrix", &data("identity_pairs.json")]), 0);
    assert_eq!(code(&["validate-matrix", &data("everything_pairs.json")]), 1);
    assert_eq!(
        code(&["validate-matrix", &data("add_third.json"), "--samples", "300"]),
        0
    );
    assert_eq!(
        code(&[
            "validate-matrix",
            &data("abs_expr.json"),
            "--samples",
            "200",
            "--preserves",
            "meet"
        ]),
        0
    );
    assert_eq!(
        code(&["validate-matrix", &data("constant_true.json"), "--samples", "200"]),
        1
    );
    assert_eq!(
        code(&[
            "validate-matrix",
            &data("shift_union.json"),
            "--samples",
            "300",
            "--preserves",
            "meet"
        ]),
        1
    );
    assert_eq!(code(&["validate-matrix", &data("decimal_param.json")]), 2);
    assert_eq!(code(&["validate-matrix", &data("missing_source.json")]), 2);
    assert_eq!(code(&["validate-matrix", &data("no_such_file.json")]), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["--help"]), 0);
}
