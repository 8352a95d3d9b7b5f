//! Golden tests against the built `syzygy` binary: line-stable machine
//! output, the documented exit-code contract (0 verdict, 1 violation,
//! 2 input error), and determinism of the seeded sweeps.

use std::path::Path;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn syzygy(args: &[&str], dir: &Path) -> Run {
    let output = Command::new(env!("CARGO_BIN_EXE_syzygy"))
        .args(args)
        .current_dir(dir)
        .env_remove("SYZYGY_SEED")
        .output()
        .expect("the binary runs");
    Run {
        code: output.status.code().expect("no signal"),
        stdout: String::from_utf8(output.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(output.stderr).expect("utf-8 stderr"),
    }
}

fn here() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn resolve_prints_the_machine_format_for_the_four_vertex_algebra() {
    let run = syzygy(&["resolve", "corpus:paper_lambda", "--injective", "--depth", "3"], here());
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout, "0\t2:1,3:2,4:2\t10\n1\t2:3\t6\n2\t1:3\t3\nterminated\ttrue\n");
}

#[test]
fn resolve_terminates_immediately_on_a_self_injective_algebra() {
    let run = syzygy(&["resolve", "corpus:loop(2)", "--injective"], here());
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout, "0\t1:1\t2\nterminated\ttrue\n");
}

#[test]
fn resolve_gives_a_depth_zero_report_on_an_injective_module() {
    // Over the linear two-vertex algebra the simple at the source is
    // injective, so its coresolution is a single term.
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("s1.mod"), "module over corpus:linear_an(2)\ndim 1 1\n").unwrap();
    let run = syzygy(&["resolve", "s1.mod", "--injective"], dir.path());
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout, "0\t1:1\t1\nterminated\ttrue\n");
}

#[test]
fn resolve_side_right_uses_the_opposite_regular_module() {
    let run = syzygy(
        &["resolve", "corpus:paper_lambda", "--injective", "--side", "right", "--depth", "8"],
        here(),
    );
    assert_eq!(run.code, 0, "{}", run.stderr);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines.last(), Some(&"terminated\ttrue"));
    assert_eq!(lines.len(), 4, "the opposite side also has three terms: {}", run.stdout);
}

#[test]
fn parse_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.alg"), "vertices 3\nfield 2\n").unwrap();
    let run = syzygy(&["resolve", "bad.alg", "--injective"], dir.path());
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("expected `field` or `module`"), "{}", run.stderr);

    let run = syzygy(&["resolve", "corpus:no_such_algebra", "--injective"], here());
    assert_eq!(run.code, 2);

    let run = syzygy(&["resolve", "corpus:paper_lambda"], here());
    assert_eq!(run.code, 2, "a direction is required");
}

#[test]
fn check_cogenerator_reports_the_witness_vertex() {
    let run = syzygy(&["check", "cogenerator", "corpus:paper_lambda", "--n", "1"], here());
    assert_eq!(run.code, 0, "{}", run.stderr);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines[0], "cogenerator\tn=1\tNO");
    assert_eq!(lines[1], "  witness vertex 1");

    let run = syzygy(&["check", "cogenerator", "corpus:paper_lambda", "--n", "2"], here());
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout.lines().next(), Some("cogenerator\tn=2\tYES"));
}

#[test]
fn check_syzygy_refutes_with_a_torsionless_certificate() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("s1.mod"), "module over corpus:linear_an(2)\ndim 1 1\n").unwrap();
    let run = syzygy(&["check", "syzygy", "s1.mod", "--n", "1"], dir.path());
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout, "syzygy\tn=1\tNO\n  torsionless defect at vertex 1 (dim 1)\n");
}

#[test]
fn check_rn_at_degree_zero_is_vacuously_yes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("s1.mod"), "module over corpus:linear_an(2)\ndim 1 1\n").unwrap();
    let run = syzygy(&["check", "rn", "s1.mod", "--n", "0"], dir.path());
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout, "rn\tn=0\tYES\n");
}

#[test]
fn fuzz_summaries_are_deterministic() {
    let args = ["fuzz", "lemma21", "--trials", "2", "--seed", "42"];
    let first = syzygy(&args, here());
    let second = syzygy(&args, here());
    let parallel = syzygy(&["fuzz", "lemma21", "--trials", "2", "--seed", "42", "--jobs", "3"], here());
    assert_eq!(first.code, 0, "{}", first.stderr);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, parallel.stdout);
    assert!(first.stdout.contains("violations\t0"), "{}", first.stdout);
    assert!(first.stderr.starts_with("elapsed_ms\t"), "{}", first.stderr);
}

#[test]
fn exported_algebras_parse_back_identically() {
    let dir = tempfile::tempdir().unwrap();
    let exported = syzygy(&["export", "paper_lambda"], here());
    assert_eq!(exported.code, 0, "{}", exported.stderr);
    std::fs::write(dir.path().join("lambda.alg"), &exported.stdout).unwrap();
    let run = syzygy(&["resolve", "lambda.alg", "--injective", "--depth", "3"], dir.path());
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout, "0\t2:1,3:2,4:2\t10\n1\t2:3\t6\n2\t1:3\t3\nterminated\ttrue\n");
}

#[test]
fn a_corrupted_corpus_fact_fails_verify_naming_the_fact() {
    let run = syzygy(&["verify", "--corrupt-fact", "loop(2)"], here());
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("loop(2): dim expected"), "{}", run.stdout);
    assert!(run.stdout.ends_with("verdict\tFAIL\n"), "{}", run.stdout);

    let run = syzygy(&["verify", "--corrupt-fact", "no_such_entry"], here());
    assert_eq!(run.code, 2);
}
