use std::process::{Command, Output};

use schubkey::foundations::BasisExpansion;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubkey")).args(args).output().expect("spawn schubkey")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf8")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn golden_expansions() {
    let cases: &[(&[&str], &str)] = &[
        (&["schubert", "--w", "42153", "--basis", "key"], "1*key(3,1,0,1) + 1*key(3,2,0,0)"),
        (&["stanley", "--w", "42153", "--basis", "schur"], "1*s(3,1,1) + 1*s(3,2)"),
        (&["key", "--a", "0,3,0,2"], "1*slide(0,3,0,2) + 1*slide(1,3,0,1) + 1*slide(2,2,0,1) + 1*slide(2,3,0,0)"),
        (
            &["product", "--a", "0,2,1,0", "--b", "0,1,0,1"],
            "1*key(0,3,1,1) + 1*key(0,3,2,0) + 1*key(1,2,1,1) + 1*key(1,2,2,0) + 1*key(2,2,0,1) - 1*key(2,2,1,0)",
        ),
        (&["skew-schur", "--lambda", "3,2", "--mu", "1"], "1*s(2,2) + 1*s(3,1)"),
        (&["shuffle", "--alpha", "2,1", "--beta", "1"], "1*F(1,2,1) + 1*F(2,1,1) + 1*F(2,2) + 1*F(3,1)"),
    ];
    for (args, want) in cases {
        let mut with_oracle = vec!["--oracle"];
        with_oracle.extend_from_slice(args);
        assert_eq!(stdout(&with_oracle).trim(), *want, "{args:?}");
    }
}

#[test]
fn json_and_text_agree() {
    let commands: &[&[&str]] = &[
        &["schubert", "--w", "42153"],
        &["schubert", "--w", "42153", "--basis", "key"],
        &["stanley", "--w", "4132"],
        &["key", "--a", "1,0,3", "--basis", "monomial"],
        &["product", "--a", "0,2,1,0", "--b", "0,1,0,1"],
        &["product", "--a", "1,0,2", "--lambda", "2,1"],
        &["product", "--mu", "2,1", "--nu", "2,1"],
        &["skew-key", "--d", "0,3,1", "--a", "0,1,0"],
        &["slide-product", "--a", "0,1,0", "--b", "1,0,1"],
    ];
    for args in commands {
        let text: BasisExpansion = stdout(args).trim().parse().expect("text parses");
        let mut j = vec!["--json"];
        j.extend_from_slice(args);
        let v: Value = serde_json::from_str(&stdout(&j)).expect("json");
        assert!(v.get("family").is_some(), "{args:?} has no family header");
        let json: BasisExpansion = serde_json::from_value(v).expect("json expansion");
        assert_eq!(text, json, "{args:?}");
    }
}

#[test]
fn family_header() {
    let v: Value = serde_json::from_str(&stdout(&["--json", "schubert", "--w", "132"])).unwrap();
    assert_eq!(v["family"], "SCHUBERT");
    assert_eq!(v["w"], serde_json::json!([1, 3, 2]));
    assert_eq!(v["basis"], "SLIDE");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["key", "--a", "x"]), 2);
    assert_eq!(code(&["schubert", "--w", "1123"]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
    assert_eq!(code(&["product", "--a", "1,0"]), 2);
    assert_eq!(code(&["skew-schur", "--lambda", "2", "--mu", "3"]), 2);
    assert_eq!(code(&["--oracle", "schur", "--lambda", "2,1", "--nvars", "3"]), 0);
}

#[test]
fn expand_round_trip() {
    let mono = stdout(&["expand", "--from", "1*key(0,3,0,2)", "--basis", "monomial"]);
    let back = stdout(&["--oracle", "expand", "--from", mono.trim(), "--basis", "key"]);
    assert_eq!(back.trim(), "1*key(0,3,0,2)");
}

#[test]
fn product_with_unsorted_right_factor_fails_axioms() {
    let out = run(&["check-axioms", "--family", "product", "--a", "0,2,1,0", "--b", "0,1,0,1", "--witnesses", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"), "{text}");
    assert!(text.contains("overall: FAIL"));
    let v: Value = serde_json::from_str(&stdout_any(&[
        "--json",
        "check-axioms",
        "--family",
        "product",
        "--a",
        "0,2,1,0",
        "--b",
        "0,1,0,1",
        "--witnesses",
        "10",
    ]))
    .unwrap();
    assert_eq!(v["passed"], false);
    // the class of |3/5|/4 1|2/| carries these descents and is no single key
    let classes = stdout(&["classes", "--a", "0,2,1,0", "--right", "0,1,0,1"]);
    let witness = classes.split("class ").find(|c| c.contains("no single key")).expect("a class without a key");
    for des in ["des (1,2,2,0)", "des (2,1,2,0)", "des (2,2,0,1)", "des (1,2,1,1)", "des virtual"] {
        assert!(witness.contains(des), "missing {des} in {witness}");
    }
}

fn stdout_any(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).unwrap()
}

#[test]
fn axiom_sweeps_pass() {
    for (family, max) in [("words", "8"), ("weak-words", "5"), ("syt", "6"), ("skt", "6"), ("product", "6")] {
        let out = stdout(&["check-axioms", "--family", family, "--max", max, "--max-len", "3"]);
        assert!(out.trim_end().ends_with("overall: PASS"), "{family}: {out}");
    }
}

#[test]
fn listings() {
    assert_eq!(stdout(&["reduced-words", "--w", "42153", "--count"]).trim(), "11");
    assert_eq!(stdout(&["tableaux", "--kind", "syt", "--lambda", "3,2", "--count"]).trim(), "5");
    // one of the five is virtual, leaving the four slide terms
    assert_eq!(stdout(&["tableaux", "--kind", "skt", "--a", "0,3,0,2", "--count"]).trim(), "5");
    let skt = stdout(&["tableaux", "--kind", "skt", "--a", "0,3,0,2"]);
    assert_eq!(skt.matches("des virtual").count(), 1);
    let classes = stdout(&["classes", "--w", "42153", "--weak"]);
    assert!(classes.contains("key(3,2,0,0)") && classes.contains("key(3,1,0,1)"), "{classes}");
    let dot = stdout(&["classes", "--lambda", "2,1", "--dot"]);
    assert!(dot.starts_with("graph"), "{dot}");
    let r = stdout(&["rectify", "--word", "2,1,2", "--weak"]);
    assert!(r.contains("key(0,2,1)"), "{r}");
}

/// Every block of the stored corpus is "$ args", the exact stdout, then a
/// blank line.
#[test]
fn stored_corpus_is_bit_exact() {
    let corpus = include_str!("golden/corpus.txt");
    let mut blocks = 0;
    for block in corpus.split("\n\n").filter(|b| !b.trim().is_empty()) {
        let (cmd, want) = block.split_once('\n').expect("command line");
        let args: Vec<&str> = cmd.strip_prefix("$ ").expect("$ prefix").split_whitespace().collect();
        let mut got = stdout(&args);
        got.truncate(got.trim_end_matches('\n').len());
        assert_eq!(got, want, "{cmd}");
        blocks += 1;
    }
    assert_eq!(blocks, 15);
}
