//! End-to-end tests of the command-line binary: exit codes, report grammar,
//! and file-format round-trips.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use subtractive::claims;
use subtractive::format::render_semiring;
use subtractive::semiring;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_subtractive"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn write_structure(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).expect("write temp structure");
    path.to_str().expect("utf8 path").to_string()
}

fn s3_file(dir: &Path) -> String {
    let s = semiring::truncated_nat(2).expect("valid threshold");
    write_structure(dir, "s3.txt", &render_semiring(&s))
}

#[test]
fn validate_accepts_a_builtin_and_reports_its_shape() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = s3_file(dir.path());
    let out = run(&["validate", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "ok: S3 order=3 zero=0 one=1\n");
}

#[test]
fn validate_rejects_a_broken_table_with_exit_two() {
    let dir = tempfile::tempdir().expect("tempdir");
    // 1+1 = 0 next to 1+0 = 1 breaks associativity against the third row.
    let path = write_structure(
        dir.path(),
        "broken.txt",
        "semiring broken\nelements 0 1 2\nzero 0\none 1\nadd\n0 1 2\n1 0 2\n2 2 2\nmul\n0 0 0\n0 1 2\n0 2 2\n",
    );
    let out = run(&["validate", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:"), "stderr: {}", stderr(&out));
}

#[test]
fn validate_rejects_syntax_errors_with_line_numbers() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = write_structure(dir.path(), "syntax.txt", "semiring x\nelements 0 1\nzero 0\n");
    let out = run(&["validate", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line"), "stderr: {}", stderr(&out));
}

#[test]
fn ideals_lists_closures_and_filters_subtractive() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = s3_file(dir.path());
    let out = run(&["ideals", &path]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("STRUCT S3 IDEALS 3 SUBTRACTIVE 2\n"), "got: {text}");
    assert!(text.contains("IDEAL 1 {0,T} SUBTRACTIVE no CLOSURE {0,1,T}"), "got: {text}");

    let filtered = run(&["ideals", &path, "--subtractive-only"]);
    let text = stdout(&filtered);
    let rows: Vec<&str> =
        text.lines().filter(|l| l.starts_with("IDEAL")).collect();
    assert_eq!(rows.len(), 2, "got: {text}");
    assert!(rows.iter().all(|r| r.contains("SUBTRACTIVE yes")), "got: {text}");
}

#[test]
fn closure_reports_the_witness_and_rejects_non_ideals() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = s3_file(dir.path());
    let out = run(&["closure", &path, "--ideal", "0,T"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.starts_with("IDEAL {0,T} CLOSURE {0,1,T} SUBTRACTIVE no WITNESS x=T y=1"),
        "got: {text}"
    );

    let bad = run(&["closure", &path, "--ideal", "0,1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("not an ideal"), "stderr: {}", stderr(&bad));

    let unknown = run(&["closure", &path, "--ideal", "0,q"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("unknown element label"), "{}", stderr(&unknown));
}

#[test]
fn topology_prints_the_frozen_downset_verdicts() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = s3_file(dir.path());
    let out = run(&["topology", &path, "--semantics", "downset"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("STRUCT S3 SEM downset POINTS 3\n"), "got: {text}");
    assert!(text.contains("CLOSED-FAMILY 3\n"), "got: {text}");
    assert!(text.contains("T0 fails WITNESS"), "got: {text}");
    assert!(text.contains("T1-SUBTRACTIVE fails WITNESS"), "got: {text}");
    // The doubly generic irreducible set that breaks uniqueness.
    assert!(
        text.contains("IRREDUCIBLE {{0},{0,T},{0,1,T}} GENERIC {0,T} {0,1,T}"),
        "got: {text}"
    );

    let fixed = run(&["topology", &path, "--semantics", "fixedpoint"]);
    let text = stdout(&fixed);
    assert!(text.contains("T0 holds"), "got: {text}");
    assert!(text.contains("T1-SUBTRACTIVE holds"), "got: {text}");
}

#[test]
fn topology_reports_caps_and_escalates_only_under_strict() {
    let dir = tempfile::tempdir().expect("tempdir");
    let s = semiring::chain_minplus(4).expect("valid order");
    let path = write_structure(dir.path(), "chain.txt", &render_semiring(&s));
    let relaxed = run(&["topology", &path, "--max-closed", "3"]);
    assert_eq!(relaxed.status.code(), Some(0));
    assert!(stdout(&relaxed).contains("CAP closed family exceeds the cap of 3 sets"));

    let strict = run(&["topology", &path, "--max-closed", "3", "--strict"]);
    assert_eq!(strict.status.code(), Some(3));
}

/// Every CLAIM line follows the grammar
/// `CLAIM <id> STRUCT <name> SEM <downset|fixedpoint|na> RESULT <verdict> [WITNESS <text>]`.
fn assert_claim_grammar(text: &str) {
    let mut rows = 0usize;
    for line in text.lines() {
        if !line.starts_with("CLAIM ") {
            continue;
        }
        rows += 1;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        assert!(tokens.len() >= 8, "short claim line: {line}");
        assert_eq!(tokens[0], "CLAIM");
        assert!(claims::claim(tokens[1]).is_some(), "unknown id in: {line}");
        assert_eq!(tokens[2], "STRUCT");
        assert_eq!(tokens[4], "SEM");
        assert!(["downset", "fixedpoint", "na"].contains(&tokens[5]), "bad: {line}");
        assert_eq!(tokens[6], "RESULT");
        assert!(["holds", "fails", "cap"].contains(&tokens[7]), "bad: {line}");
        if tokens.len() > 8 {
            assert_eq!(tokens[8], "WITNESS", "bad: {line}");
        }
    }
    assert!(rows > 0, "no claim rows in: {text}");
}

#[test]
fn check_on_one_file_follows_the_report_grammar() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = s3_file(dir.path());
    let out = run(&["check", &path, "--claims", "C9,C12", "--semantics", "downset"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_claim_grammar(&text);
    assert!(
        text.contains("CLAIM C9 STRUCT S3 SEM downset RESULT fails WITNESS"),
        "got: {text}"
    );
    assert!(!text.contains("STRUCT Nat"), "explicit corpus must not add the naturals");
    assert!(
        text.contains("SUMMARY structures=1 claims=2 holds=0 fails=2 cap=0 must-hold-failures=0"),
        "got: {text}"
    );
}

#[test]
fn default_check_reports_the_continuity_refutation_and_exits_one() {
    let out = run(&["check"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert_claim_grammar(&text);
    assert!(text.contains("STRUCT Nat"), "default corpus includes the naturals");
    let summary = text.lines().last().expect("summary line");
    assert!(summary.starts_with("SUMMARY structures=16 "), "got: {summary}");
    assert!(summary.ends_with("must-hold-failures=22"), "got: {summary}");
    // Every must-hold failure is a continuity cell; nothing else regresses.
    for line in text.lines().filter(|l| l.starts_with("CLAIM") && l.contains(" RESULT fails")) {
        let id = line.split_whitespace().nth(1).expect("claim id");
        if claims::claim(id).expect("known id").must_hold {
            assert!(id == "C14", "unexpected must-hold failure: {line}");
        }
    }
    assert!(
        text.lines().filter(|l| l.starts_with("CLAIM C14") && l.contains("fails")).count() == 22,
        "expected the 22 known continuity refutations"
    );
}

#[test]
fn check_rejects_unknown_claims_and_duplicate_names() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = s3_file(dir.path());
    let out = run(&["check", "--claims", "C99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown claim id"), "{}", stderr(&out));

    let dup = run(&["check", &path, &path]);
    assert_eq!(dup.status.code(), Some(2));
    assert!(stderr(&dup).contains("duplicate structure name"), "{}", stderr(&dup));
}

#[test]
fn check_caps_escalate_only_under_strict() {
    let dir = tempfile::tempdir().expect("tempdir");
    let s = semiring::chain_minplus(4).expect("valid order");
    let path = write_structure(dir.path(), "chain.txt", &render_semiring(&s));
    let base = [
        "check", &path, "--claims", "C11", "--semantics", "downset", "--max-closed", "3",
    ];
    let relaxed = run(&base);
    assert_eq!(relaxed.status.code(), Some(0));
    assert!(stdout(&relaxed).contains("RESULT cap WITNESS"), "got: {}", stdout(&relaxed));

    let strict = run(&[&base[..], &["--strict"]].concat());
    assert_eq!(strict.status.code(), Some(3));
}

#[test]
fn check_accepts_extra_ideals_of_the_naturals() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = s3_file(dir.path());
    let out = run(&["check", &path, "--nat-ideal", "5,7", "--claims", "C1.1"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("STRUCT Nat"), "got: {}", stdout(&out));

    let bad = run(&["check", &path, "--nat-ideal", "5,x"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn search_output_round_trips_through_validate() {
    let out = run(&["search", "--order", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.starts_with("# order 2 canonical no structures 2 complete yes\n"),
        "got: {text}"
    );

    let dir = tempfile::tempdir().expect("tempdir");
    let blocks: Vec<&str> =
        text.split("\n\n").skip(1).filter(|b| !b.trim().is_empty()).collect();
    assert_eq!(blocks.len(), 2, "got: {text}");
    for (i, block) in blocks.iter().enumerate() {
        let path = write_structure(dir.path(), &format!("g2_{i}.txt"), block);
        let check = run(&["validate", &path]);
        assert_eq!(check.status.code(), Some(0), "block {i}: {}", stderr(&check));
    }
}

#[test]
fn search_respects_limits_and_rejects_bad_orders() {
    let out = run(&["search", "--order", "3", "--limit", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("# order 3 canonical no structures 4 complete no\n"), "got: {text}");

    let bad = run(&["search", "--order", "9"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("order must be in"), "{}", stderr(&bad));
}
