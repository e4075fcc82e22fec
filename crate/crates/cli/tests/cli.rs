use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(file: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(file)
        .display()
        .to_string()
}

fn finitop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finitop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn validate_rejects_missing_union() {
    let o = finitop(&["validate", &corpus("ex-3.11.top")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("{a} ∪ {d} = {a,d} is missing"),
        "{}",
        stderr(&o)
    );
    let o = finitop(&["validate", &corpus("ex-3.7.top")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn classify_single_set() {
    let o = finitop(&[
        "classify",
        &corpus("ex-2.11.top"),
        "--set",
        "{a,b,d}",
        "--class",
        "pigdhat",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).split_whitespace().nth(2), Some("true"));
    let o = finitop(&[
        "classify",
        &corpus("ex-2.11.top"),
        "--set",
        "{a,b,d}",
        "--class",
        "closed",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn families_in_tsv() {
    let o = finitop(&[
        "--format",
        "tsv",
        "families",
        &corpus("ex-2.14.top"),
        "--class",
        "pigdhat",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    let fields: Vec<&str> = line.trim_end().split('\t').collect();
    assert_eq!(
        fields[1..],
        ["pigdhat-closed", "7", "{} {a} {b} {c} {a,c} {b,c} {a,b,c}"]
    );
}

#[test]
fn enumerate_counts() {
    let o = finitop(&["enumerate", "--n", "3", "--count-only"]);
    assert_eq!(stdout(&o).trim(), "29");
    let o = finitop(&["enumerate", "--n", "4", "--canonical", "--count-only"]);
    assert_eq!(stdout(&o).trim(), "33");
}

#[test]
fn enumerate_refuses_large_scope() {
    let o = finitop(&["enumerate", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
}

#[test]
fn normality_listing_and_single_kind() {
    let o = finitop(&["--format", "tsv", "normality", &corpus("ex-3.9.top")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 11);
    assert!(out
        .lines()
        .next()
        .unwrap()
        .starts_with("ex-3.9\tnormal\tFAILS\twitness A={b} B={c}"));

    let o = finitop(&["normality", &corpus("ex-3.7.top"), "--kind", "quasi"]);
    assert_eq!(o.status.code(), Some(0));
    let o = finitop(&["normality", &corpus("ex-3.9.top"), "--kind", "normal"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn mapcheck_reports_violation() {
    let o = finitop(&["mapcheck", &corpus("ex-4.2.map"), "--class", "pig-closed"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("{c}"));
    let o = finitop(&[
        "mapcheck",
        &corpus("ex-4.2.map"),
        "--class",
        "pigdhat-closed",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let run = |jobs: &str| {
        let o = finitop(&["--format", "tsv", "verify", "--n", "3", "--jobs", jobs]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        stdout(&o)
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert!(one.contains("summary\t5.6\tpass\t"));
}

#[test]
fn mine_found_and_not_found() {
    let o = finitop(&["mine", "--goal", "g-closed & !closed", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("found"));
    let o = finitop(&["mine", "--goal", "closed & !pigdhat-closed", "--n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = finitop(&["mine", "--goal", "bogus", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fixtures_flag_discrepancies() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let o = finitop(&[
        "--format",
        "tsv",
        "fixtures",
        "--corpus",
        &dir.display().to_string(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    for line in [
        "ex-3.7\tstatus\tconfirmed",
        "ex-3.9\tstatus\tdiscrepant",
        "ex-3.11\tstatus\tinvalid-input",
    ] {
        assert!(out.contains(line), "missing {line}");
    }
}

#[test]
fn fixtures_on_clean_corpus_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(corpus("ex-3.7.top"), dir.path().join("ex-3.7.top")).unwrap();
    std::fs::write(
        dir.path().join("claims.tsv"),
        "fixture-id\tpredicate-token\texpected\tlocator\nex-3.7\tspace:quasi\ttrue\tq\n",
    )
    .unwrap();
    let o = finitop(&["fixtures", "--corpus", &dir.path().display().to_string()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
