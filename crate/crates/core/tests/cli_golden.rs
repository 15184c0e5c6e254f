//! Runs the installed binary end to end.

use std::process::{Command, Output};

use genomic_schur_core::cli::{CountDoc, ExpansionDoc, ListDoc, FORMAT_ENV, GOLDEN_COMMANDS};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genomic-schur"))
        .args(args)
        .env_remove(FORMAT_ENV)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn goldens() {
    for (args, expected) in GOLDEN_COMMANDS {
        assert_eq!(stdout(args), expected, "{args:?}");
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let commands: [&[&str]; 4] = [
        &[
            "expand",
            "--shape",
            "3,3,3",
            "--basis",
            "fundamental-inc",
            "--format",
            "json",
        ],
        &[
            "expand", "--shape", "3,2,1", "--basis", "monomial", "--vars", "3",
        ],
        &["list", "--shape", "2,2,1", "--kind", "qy"],
        &["verify", "--shape", "3,2", "--format", "json"],
    ];
    for args in commands {
        let first = run(args);
        for _ in 0..2 {
            let again = run(args);
            assert_eq!(again.stdout, first.stdout, "{args:?}");
            assert_eq!(again.status.code(), first.status.code());
        }
    }
}

#[test]
fn json_expansion_round_trips() {
    for basis in ["schur", "fundamental-qy", "fundamental-inc", "two-row"] {
        let text = stdout(&[
            "expand", "--shape", "3,3", "--basis", basis, "--format", "json",
        ]);
        let doc: ExpansionDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(doc.shape, vec![3, 3]);
        assert_eq!(doc.basis, basis);
        assert_eq!(serde_json::to_string(&doc).unwrap() + "\n", text);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap() + "\n", text);
    }
    let text = stdout(&[
        "expand", "--shape", "3,3,3", "--basis", "schur", "--format", "json",
    ]);
    let doc: ExpansionDoc = serde_json::from_str(&text).unwrap();
    let negative: Vec<_> = doc.terms.iter().filter(|t| t.coeff < 0).collect();
    assert_eq!(negative.len(), 1);
    assert_eq!(negative[0].index, vec![2, 2, 2, 2]);
    assert_eq!(negative[0].coeff, -1);
}

#[test]
fn json_count_and_list_round_trip() {
    let text = stdout(&[
        "count",
        "--shape",
        "3,3",
        "--by-max-entry",
        "--format",
        "json",
    ]);
    let doc: CountDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.counts["gapless"], 11);
    assert_eq!(doc.counts["qy"], 11);
    assert_eq!(
        doc.by_max_entry.as_ref().unwrap().values().sum::<usize>(),
        11
    );
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap() + "\n", text);

    let text = stdout(&[
        "list", "--shape", "3,3", "--kind", "gapless", "--format", "json",
    ]);
    let doc: ListDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.tableaux.len(), 11);
    assert_eq!(serde_json::to_string(&doc).unwrap() + "\n", text);
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_genomic-schur"))
        .args(["expand", "--shape", "2,1", "--basis", "schur"])
        .env(FORMAT_ENV, "json")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.starts_with("{\"shape\":[2,1],\"basis\":\"schur\""),
        "{text}"
    );
    // an explicit flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_genomic-schur"))
        .args([
            "expand", "--shape", "2,1", "--basis", "schur", "--format", "text",
        ])
        .env(FORMAT_ENV, "json")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "s[2,1] + s[1,1]\n");
}

#[test]
fn exit_codes() {
    let bad = [
        &["expand", "--shape", "2,3", "--basis", "schur"][..],
        &["expand", "--shape", "2,1", "--basis", "monomial"],
        &["expand", "--shape", "2,1,1", "--basis", "two-row"],
        &[
            "count", "--shape", "3,3,3", "--kind", "gapless", "--limit", "5",
        ],
        &["frobnicate"],
    ];
    for args in bad {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = run(&["verify", "--shape", "3,3", "--vars", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 10);
    assert!(text.ends_with("all checks passed\n"));
}
