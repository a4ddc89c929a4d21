use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn park(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_park"))
        .args(args)
        .env_remove("PARK_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn check_reports_both_verdicts() {
    let out = park(&["check", "2,1,1"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("parking function; assignment 2,1,3\n"), "{text}");
    assert!(text.contains("simulation: parking\n"));
    assert!(text.contains("sorted criterion: parking\n"));

    let out = park(&["check", "1,3,3,4"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("not a parking function; car 4 fails\n"));

    let out = park(&["check", ""], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(!stderr(&out).is_empty());

    let out = park(&["check"], r#"{"n":3,"pf":[2,1,1]}"#);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(park(&["check", "1,x"], "").status.code(), Some(2));
    assert_eq!(park(&["check", "0,1"], "").status.code(), Some(2));
}

#[test]
fn check_reads_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seq.txt");
    std::fs::write(&path, "3,1,1,2\n").unwrap();
    let out = park(&["check", "--in", path.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(park(&["check", "--in", "/nonexistent/x"], "").status.code(), Some(2));
}

#[test]
fn unknown_flags_are_usage_errors() {
    assert_eq!(park(&["check", "--frobnicate"], "").status.code(), Some(2));
    assert_eq!(
        park(&["enumerate", "--kind", "tree", "--n", "3"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        park(&["verify", "--n", "2", "--suite", "nope"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        park(&["enumerate", "--kind", "pf", "--n", "2", "--jobs", "0"], "")
            .status
            .code(),
        Some(2)
    );
}

const WORKED_EXAMPLE_GRAPH: &str = r#"{"edges":[{"j":1,"k":2,"kind":"downish"},{"j":1,"k":3,"kind":"down"},{"j":1,"k":4,"kind":"down"},{"j":2,"k":3,"kind":"downish"},{"j":2,"k":4,"kind":"downish"},{"j":3,"k":4,"kind":"up"}],"n":4}"#;

#[test]
fn convert_examples() {
    let out = park(
        &["convert", "--from", "pf", "--to", "graph"],
        r#"{"n":4,"pf":[3,1,1,2]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim_end(), WORKED_EXAMPLE_GRAPH);

    let out = park(&["convert", "--from", "pf", "--to", "code"], r#"{"n":3,"pf":[1,1,1]}"#);
    assert_eq!(stdout(&out).trim_end(), r#"{"code":[0,0]}"#);

    let downish = r#"{"n":3,"edges":[{"j":1,"k":2,"kind":"downish"},{"j":1,"k":3,"kind":"downish"},{"j":2,"k":3,"kind":"downish"}]}"#;
    let out = park(&["convert", "--from", "graph", "--to", "region"], downish);
    let region: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(region["signs"].as_array().unwrap().iter().all(|s| s["s"] == "between"));
    assert_eq!(region["witness"]["coords"].as_array().unwrap().len(), 3);

    let out = park(&["convert", "--from", "code", "--to", "pf"], r#"{"code":[3,0,1]}"#);
    assert_eq!(stdout(&out).trim_end(), r#"{"n":4,"pf":[3,1,1,2]}"#);
}

#[test]
fn convert_trace() {
    let out = park(
        &["convert", "--from", "pf", "--to", "graph", "--trace"],
        r#"{"n":4,"pf":[3,1,1,2]}"#,
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["trace"]["s"], serde_json::json!([-1, -2, -4, -3]));
    assert_eq!(
        v["trace"]["events"][0],
        serde_json::json!({"type": "up", "feeder": 3, "targets": [4]})
    );

    let out = park(
        &["convert", "--from", "graph", "--to", "pf", "--trace"],
        WORKED_EXAMPLE_GRAPH,
    );
    assert!(!stdout(&out).contains("trace"));
}

#[test]
fn convert_rejects_domain_errors() {
    // coherently oriented triangle 1 -> 2 -> 3 -> 1
    let cyclic = r#"{"n":3,"edges":[{"j":1,"k":2,"kind":"up"},{"j":1,"k":3,"kind":"down"},{"j":2,"k":3,"kind":"up"}]}"#;
    let out = park(&["convert", "--from", "graph", "--to", "pf"], cyclic);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("{1,2,3}"), "{}", stderr(&out));

    let cyclic_region =
        r#"{"n":3,"signs":[{"j":1,"k":2,"s":"below"},{"j":1,"k":3,"s":"above"},{"j":2,"k":3,"s":"below"}]}"#;
    let out = park(&["convert", "--from", "region", "--to", "pf"], cyclic_region);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cycle"));

    let out = park(&["convert", "--from", "pf", "--to", "tree"], r#"{"n":3,"pf":[3,3,1]}"#);
    assert_eq!(out.status.code(), Some(1));

    let out = park(&["convert", "--from", "pf", "--to", "tree"], "{not json");
    assert_eq!(out.status.code(), Some(2));
}

/// Every A -> B -> A conversion reproduces A byte for byte, n <= 4.
#[test]
fn convert_round_trips_are_byte_identical() {
    let kinds = ["region", "graph", "pf", "code", "tree"];
    for n in 1..=4 {
        let regions = stdout(&park(&["enumerate", "--kind", "region", "--n", &n.to_string()], ""));
        let sources: Vec<(&str, String)> = regions
            .lines()
            .flat_map(|region| {
                kinds.iter().map(move |&k| {
                    let out = park(&["convert", "--from", "region", "--to", k], region);
                    assert_eq!(out.status.code(), Some(0));
                    (k, stdout(&out).trim_end().to_string())
                })
            })
            .collect();
        for (from, text) in &sources {
            for to in kinds {
                let there = park(&["convert", "--from", from, "--to", to], text);
                assert_eq!(there.status.code(), Some(0), "{from}->{to} on {text}");
                let back = park(&["convert", "--from", to, "--to", from], &stdout(&there));
                assert_eq!(stdout(&back).trim_end(), text, "{from}->{to}->{from}");
            }
        }
    }
}

#[test]
fn enumerate_examples() {
    let count = |args: &[&str]| stdout(&park(args, "")).trim().to_string();
    assert_eq!(
        count(&["enumerate", "--kind", "region", "--n", "3", "--count-only"]),
        "16"
    );
    assert_eq!(
        count(&[
            "enumerate",
            "--kind",
            "region",
            "--n",
            "3",
            "--bounded-only",
            "--count-only"
        ]),
        "4"
    );
    assert_eq!(
        count(&["enumerate", "--kind", "graph", "--n", "4", "--count-only"]),
        "125"
    );
    let lines = stdout(&park(&["enumerate", "--kind", "pf", "--n", "2"], ""));
    assert_eq!(
        lines,
        "{\"n\":2,\"pf\":[1,1]}\n{\"n\":2,\"pf\":[1,2]}\n{\"n\":2,\"pf\":[2,1]}\n"
    );
    assert_eq!(
        park(&["enumerate", "--kind", "region", "--n", "9"], "").status.code(),
        Some(1)
    );
    assert_eq!(
        park(&["enumerate", "--kind", "pf", "--n", "2", "--bounded-only"], "")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn enumerate_is_independent_of_jobs() {
    for (kind, n) in [("pf", "5"), ("graph", "4"), ("region", "4")] {
        let one = park(&["enumerate", "--kind", kind, "--n", n, "--jobs", "1"], "");
        let four = park(&["enumerate", "--kind", kind, "--n", n, "--jobs", "4"], "");
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, four.stdout, "{kind}");
    }
    let mut child = Command::new(env!("CARGO_BIN_EXE_park"));
    let env_jobs = child
        .args(["enumerate", "--kind", "region", "--n", "4"])
        .env("PARK_JOBS", "3")
        .output()
        .unwrap();
    let one = park(&["enumerate", "--kind", "region", "--n", "4", "--jobs", "1"], "");
    assert_eq!(env_jobs.stdout, one.stdout);
}

#[test]
fn verify_suites() {
    let out = park(&["verify", "--n", "3", "--suite", "counts"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for expected in ["pf=16", "graphs=16", "regions=16", "bounded=4", "trees=16"] {
        assert!(text.contains(expected), "{text}");
    }
    let out = park(&["verify", "--n", "2", "--suite", "all"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().all(|l| l.starts_with("PASS ")));
    assert_eq!(
        park(&["verify", "--n", "4", "--suite", "roundtrip"], "").status.code(),
        Some(0)
    );
}

#[test]
fn label_examples() {
    let out = park(&["label", "--point", "2/3,1/3,0"], "");
    assert_eq!(stdout(&out).trim_end(), r#"{"n":3,"pf":[1,1,1]}"#);
    let out = park(&["label", "--point", "6/5,1/2,0"], "");
    assert_eq!(stdout(&out).trim_end(), r#"{"n":3,"pf":[2,1,1]}"#);
    let out = park(&["label", "--point", "0,0,0"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("x_1 - x_2 = 0"));
    assert_eq!(park(&["label", "--point", "a,b"], "").status.code(), Some(2));
    let out = park(&["label", "--point", "-1/2,3,0"], "");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn render_n3() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    assert_eq!(
        park(&["render", "--n", "3", "--out", a.to_str().unwrap()], "")
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        park(&["render", "--n", "3", "--out", b.to_str().unwrap()], "")
            .status
            .code(),
        Some(0)
    );
    let svg = std::fs::read_to_string(&a).unwrap();
    assert_eq!(svg, std::fs::read_to_string(&b).unwrap());
    assert_eq!(svg.matches("<line ").count(), 6);
    assert_eq!(svg.matches("<text ").count(), 16);

    let labels: BTreeSet<String> = svg
        .lines()
        .filter_map(|l| l.strip_suffix("</text>"))
        .map(|l| l.rsplit('>').next().unwrap().to_string())
        .collect();
    let pfs: BTreeSet<String> = stdout(&park(&["enumerate", "--kind", "pf", "--n", "3"], ""))
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            v["pf"].as_array().unwrap().iter().map(|e| e.to_string()).collect()
        })
        .collect();
    assert_eq!(labels, pfs);

    let c = dir.path().join("c.svg");
    assert_eq!(
        park(&["render", "--n", "4", "--out", c.to_str().unwrap()], "")
            .status
            .code(),
        Some(1)
    );
    assert!(!c.exists());
}
