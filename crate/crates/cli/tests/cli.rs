use std::process::{Command, Output};

fn pichar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pichar"))
        .args(args)
        .env_remove("PICHAR_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = pichar(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    pichar(args).status.code().unwrap()
}

#[test]
fn degree_of_a_hook() {
    assert_eq!(stdout(&["degree", "5,1^4"]), "70\n");
    assert_eq!(stdout(&["degree", "5,1,1,1,1"]), "70\n");
    assert_eq!(stdout(&["degree", "5,1^4", "--alt"]), "5,1^4#0\t35\n5,1^4#1\t35\n");
    assert_eq!(
        stdout(&["degree", "5,1^4", "--format", "json"]),
        "{\"label\":\"5,1^4\",\"degree\":\"70\",\"mult\":1,\"split\":false}\n"
    );
}

#[test]
fn only_linear_characters_of_s9() {
    let out = stdout(&["pi-irr", "9", "-p", "2", "-q", "3", "--group", "sym"]);
    assert_eq!(out, "9\t1\n1^9\t1\n");
    assert_eq!(stdout(&["classify", "sym", "9", "-p", "2", "-q", "3"]), "only-linear\n");
    assert_eq!(stdout(&["witness", "sym", "9", "-p", "3", "-q", "2"]), "only-linear\n");
}

#[test]
fn s17_graph_misses_one_edge() {
    let dot = stdout(&["graph", "sym", "17", "--format", "dot"]);
    assert!(dot.starts_with("graph gamma_prime {\n"));
    assert!(dot.ends_with("}\n"));
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains("--")).collect();
    assert_eq!(edges.len(), 7 * 6 / 2 - 1);
    assert!(!dot.contains("  2 -- 17;"));
    let tsv = stdout(&["graph", "sym", "17"]);
    let missing: Vec<&str> = tsv.lines().filter(|l| l.starts_with("missing")).collect();
    assert_eq!(missing, ["missing\t2\t17"]);
}

#[test]
fn alternating_witness() {
    assert_eq!(stdout(&["witness", "alt", "9", "-p", "2", "-q", "3"]), "witness\t5,1^4\t35\tSelfConjugate\tsplit\n");
    assert_eq!(stdout(&["witness", "alt", "4", "-p", "2", "-q", "5"]), "witness\t3,1\t3\tSearch\n");
    assert_eq!(stdout(&["classify", "alt-ext", "10", "-p", "3", "-q", "5"]), "none\n");
    assert_eq!(stdout(&["classify", "alt-ext", "11", "-p", "3", "-q", "5"]), "extendible-exists\n");
}

#[test]
fn graph_families() {
    assert_eq!(stdout(&["graph", "alt", "9"]).lines().filter(|l| l.starts_with("missing")).count(), 0);
    assert_eq!(
        stdout(&["graph", "nilpotent", "2:n", "3:a", "5:a", "--format", "json"]),
        "{\"vertices\":[2,3,5],\"edges\":[[3,5]]}\n"
    );
    assert_eq!(stdout(&["graph", "gl", "4", "3"]).lines().filter(|l| l.starts_with("missing")).count(), 1);
    assert_eq!(stdout(&["graph", "gl", "2", "3", "-1"]), "vertices\t2\t3\nmissing\t2\t3\n");
}

#[test]
fn general_linear_commands() {
    assert_eq!(stdout(&["gl", "degrees", "3", "2"]), "1\t1\n3\t2\n6\t1\n7\t1\n8\t1\n");
    assert_eq!(stdout(&["gl", "classify", "4", "3", "-p", "3", "-q", "2"]), "only-linear\n");
    assert_eq!(stdout(&["gl", "classify", "2", "3", "-p", "3", "-q", "2", "--eps", "-1"]), "only-linear\n");
    let graph = stdout(&["gl", "graph", "2", "2"]);
    assert!(graph.starts_with("source\ttable\n"));
    assert!(graph.contains("disagreement\t2\t3\n"));
}

#[test]
fn partitions_listing() {
    assert_eq!(stdout(&["partitions", "4"]), "4\n3,1\n2^2\n2,1^2\n1^4\n");
    assert_eq!(stdout(&["partitions", "2", "--format", "json"]), "{\"partition\":\"2\"}\n{\"partition\":\"1^2\"}\n");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["degree", "3,1,2"][..],
        &["pi-irr", "9", "-p", "4", "-q", "3"],
        &["pi-irr", "9", "-p", "3", "-q", "3"],
        &["bogus"],
        &["degree", "5", "--frobnicate"],
        &["partitions", "4", "--format", "dot"],
        &["graph", "cubic", "4"],
        &["graph", "nilpotent", "2:x"],
        &["verify", "--suite", "nope", "--max-n", "5"],
        &["gl", "degrees", "2", "6"],
    ] {
        let out = pichar(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn scan_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_pichar"))
        .args(["graph", "sym", "20"])
        .env("PICHAR_MAX_N", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // the closed form needs no scan
    let out = Command::new(env!("CARGO_BIN_EXE_pichar"))
        .args(["classify", "sym", "200", "-p", "2", "-q", "3"])
        .env("PICHAR_MAX_N", "10")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["verify", "--suite", "all", "--max-n", "12"];
    let one = stdout(&[&args[..], &["--jobs", "1"]].concat());
    let four = stdout(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one, four);
    assert_eq!(one.lines().filter(|l| l.contains("\tPASS\t")).count(), 19);
    assert!(!one.contains("FAIL"));
    assert_eq!(exit_code(&["verify", "--suite", "macdonald", "--max-n", "10", "--format", "json"]), 0);
}

#[test]
fn graph_output_is_deterministic_across_workers() {
    let a = stdout(&["graph", "alt", "14", "--jobs", "1", "--format", "json"]);
    let b = stdout(&["graph", "alt", "14", "--jobs", "3", "--format", "json"]);
    assert_eq!(a, b);
}
