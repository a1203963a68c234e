use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hghopf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().expect("piped").write_all(input.as_bytes()).expect("write input");
    child.wait_with_output().expect("binary exits")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const TRIANGLE: &str = r#"{"kind": "graph", "vertices": [1, 2, 3], "edges": [[1, 2], [2, 3], [1, 3]]}"#;
const EDGE: &str = r#"{"vertices": [1, 2], "edges": [[1, 2]]}"#;
const EMPTY: &str = r#"{"vertices": [], "edges": []}"#;

#[test]
fn poly_of_the_triangle_by_both_methods() {
    let o = run(&["poly", "--method", "both"], TRIANGLE);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "n^3 - 3n^2 + 2n\ncoefficients: [\"0\",\"2\",\"-3\",\"1\"]\n");
}

#[test]
fn poly_formats() {
    let o = run(&["poly"], EDGE);
    assert_eq!(stdout(&o).lines().next(), Some("n^2 - n"));
    let o = run(&["poly", "--format", "coeffs"], EDGE);
    assert_eq!(stdout(&o), "[\"0\",\"-1\",\"1\"]\n");
    let o = run(&["poly", "--format", "csv", "-"], EDGE);
    assert_eq!(stdout(&o), "degree,coefficient\n0,0\n1,-1\n2,1\n");
    let o = run(&["poly"], EMPTY);
    assert_eq!(stdout(&o).lines().next(), Some("1"));
}

#[test]
fn poly_reads_files() {
    let dir = std::env::temp_dir().join(format!("hghopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("simplicial.json");
    std::fs::write(&path, r#"{"kind": "simplicial", "vertices": ["a", "b", "c"], "facets": [["a", "b", "c"]]}"#).unwrap();
    let o = run(&["poly", "--method", "both", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().next(), Some("n^3 - 3n^2 + 2n"));
    let o = run(&["poly", dir.join("missing.json").to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn eval_at_negative_one() {
    let o = run(&["eval", "--n", "-1"], TRIANGLE);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "value: -6\npairs: 6\nverdict: MATCH\n");
    let o = run(&["eval", "--n", "-1"], r#"{"kind": "paths", "paths": ["abc"]}"#);
    assert_eq!(stdout(&o), "value: -5\npairs: 5\nverdict: MATCH\n");
    let o = run(&["eval", "--n", "-2"], r#"{"kind": "paths", "paths": ["ab", "c"]}"#);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn eval_at_one_is_zeta() {
    assert_eq!(stdout(&run(&["eval", "--n", "1"], TRIANGLE)), "0\n");
    assert_eq!(stdout(&run(&["eval", "--n", "1"], r#"{"vertices": [1, 2], "edges": [[1], [2]]}"#)), "1\n");
    assert_eq!(stdout(&run(&["eval", "--n", "3"], TRIANGLE)), "6\n");
}

#[test]
fn antipode_output() {
    let o = run(&["antipode"], r#"{"vertices": ["x"], "edges": [["x"]]}"#);
    assert_eq!(stdout(&o), "-1 × {{x}}\n");
    let o = run(&["antipode"], EDGE);
    assert_eq!(stdout(&o), "1 × {{1}}\n1 × {{2}}\n-1 × {{1,2}}\n");
    let o = run(&["antipode"], EMPTY);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("identity"));
}

#[test]
fn size_guards() {
    let big = r#"{"vertices": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11], "edges": [[1, 2]]}"#;
    let o = run(&["eval", "--n", "7"], big);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("--force"));
    assert_eq!(run(&["poly"], big).status.code(), Some(3));
    assert_eq!(run(&["eval", "--n", "6"], big).status.code(), Some(0));
    let seven = r#"{"vertices": [1, 2, 3, 4, 5, 6, 7], "edges": []}"#;
    assert_eq!(run(&["antipode"], seven).status.code(), Some(3));
    assert_eq!(run(&["antipode", "--max-vertices", "7"], r#"{"vertices": [1, 2], "edges": []}"#).status.code(), Some(0));
}

#[test]
fn parse_errors_exit_two_with_location() {
    let o = run(&["poly"], "{\"vertices\": [1, 2],\n \"edges\": [[1, 2]");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let o = run(&["poly"], r#"{"vertices": [1, 2], "edges": [[1, 3]]}"#);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("edges[0][1]"), "{}", stderr(&o));
    let o = run(&["poly", "--method", "formula"], r#"{"kind": "paths", "paths": ["ab"]}"#);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_lemmas_only() {
    let o = run(&["check", "--scope", "lemmas"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let names: Vec<&str> = out.lines().map(|l| l.split_whitespace().nth(1).unwrap_or("")).collect();
    assert_eq!(names, ["compsum", "f-n"]);
}

#[test]
fn check_is_deterministic() {
    let args = ["check", "--scope", "hopf-axioms,paths", "--seed", "5", "--axiom-cases", "20"];
    let a = run(&args, "");
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&run(&args, "")));
}

#[test]
fn unsigned_antipode_fails_reciprocity() {
    let o = run(&["check", "--scope", "antipode", "--unsigned-antipode"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL antipode:"), "{}", stdout(&o));
}

#[test]
fn unknown_scope_is_rejected() {
    assert_eq!(run(&["check", "--scope", "everything"], "").status.code(), Some(2));
}
