use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn mixdim(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_mixdim"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn json(run: &Run) -> Value {
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    serde_json::from_str(&run.stdout).unwrap()
}

const BOWTIE: &str = "# two triangles sharing vertex 0\n5 6\n0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n";
const P3: &str = "3 2\n0 1\n1 2\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";

#[test]
fn dim_bowtie_json() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bowtie.txt", BOWTIE);
    let run = mixdim(&["dim", f.to_str().unwrap(), "--json"]);
    assert_eq!(
        run.stdout,
        "{\"cycles\":[{\"id\":0,\"needs_delta\":false,\"rt\":1,\"term\":2},\
         {\"id\":1,\"needs_delta\":false,\"rt\":1,\"term\":2}],\"delta\":0,\"l1\":0,\"total\":4}\n"
    );
}

#[test]
fn dim_human_shows_formula() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bowtie.txt", BOWTIE);
    let run = mixdim(&["dim", f.to_str().unwrap()]);
    assert_eq!(run.code, 0);
    assert!(run
        .stdout
        .contains("cycle 0: ring [0 1 2], roots [0], rt = 1, max{3 - 1, 0} = 2"));
    assert!(
        run.stdout.ends_with("mdim = 0 + 2 + 2 + 0 = 4\n"),
        "{}",
        run.stdout
    );
}

#[test]
fn dim_force_oracle_and_cross_check() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bowtie.txt", BOWTIE);
    let v = json(&mixdim(&[
        "dim",
        f.to_str().unwrap(),
        "--json",
        "--force-oracle",
    ]));
    assert_eq!(v["value"], 4);
    assert_eq!(v["source"], "oracle");
    let v = json(&mixdim(&[
        "dim",
        f.to_str().unwrap(),
        "--json",
        "--cross-check",
    ]));
    assert_eq!(v["total"], 4);
}

#[test]
fn dim_general_graph_is_structural_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k4.txt", K4);
    let run = mixdim(&["dim", f.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("NotACactus"));
    assert!(run.stderr.contains("mixdim oracle"));
    let v = json(&mixdim(&["oracle", f.to_str().unwrap(), "--json"]));
    assert_eq!(v, serde_json::json!({"value": 4, "witness": [0, 1, 2, 3]}));
}

#[test]
fn verify_reports_failing_pair() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p3.txt", P3);
    let run = mixdim(&["verify", f.to_str().unwrap(), "--set", "1"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, "false\nfailing pair: vertex 1 and edge {0,1}\n");
    let v = json(&mixdim(&[
        "verify",
        f.to_str().unwrap(),
        "--set",
        "0,2",
        "--json",
    ]));
    assert_eq!(
        v,
        serde_json::json!({"generator": true, "failing_pair": null})
    );
    let v = json(&mixdim(&[
        "verify",
        f.to_str().unwrap(),
        "--set",
        "1",
        "--json",
    ]));
    assert_eq!(
        v["failing_pair"],
        serde_json::json!([{"vertex": 1}, {"edge": [0, 1]}])
    );
}

#[test]
fn generator_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "c8.txt",
        "11 11\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n0 8\n1 9\n2 10\n",
    );
    let v = json(&mixdim(&["generator", f.to_str().unwrap(), "--json"]));
    assert_eq!(v["verified"], true);
    assert_eq!(v["sa"], serde_json::json!([8, 9, 10]));
    assert_eq!(v["sc"].as_array().unwrap().len(), 1);
    let set: Vec<String> = v["set"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    let run = mixdim(&["verify", f.to_str().unwrap(), "--set", &set.join(",")]);
    assert_eq!(run.stdout, "true\n");
}

#[test]
fn classify_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bowtie.txt", BOWTIE);
    let v = json(&mixdim(&["classify", f.to_str().unwrap(), "--json"]));
    assert_eq!(v["class"], "cactus");
    assert_eq!(v["cycle_count"], 2);
    assert_eq!(v["cycles"][1]["ring"], serde_json::json!([0, 3, 4]));
    let v = json(&mixdim(&["bounds", f.to_str().unwrap(), "--json"]));
    assert_eq!(
        v,
        serde_json::json!({"attained": true, "bound": 4, "mdim": 4})
    );

    let c5 = write(dir.path(), "c5.txt", C5);
    let run = mixdim(&["bounds", c5.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("CycleExcluded"));
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let short = write(dir.path(), "short.txt", "3 2\n0 1\n");
    let run = mixdim(&["dim", short.to_str().unwrap()]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("line 2"), "{}", run.stderr);

    let looped = write(dir.path(), "loop.txt", "3 2\n0 1\n1 1\n");
    assert_eq!(mixdim(&["dim", looped.to_str().unwrap()]).code, 1);

    let split = write(dir.path(), "split.txt", "4 2\n0 1\n2 3\n");
    let run = mixdim(&["classify", split.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("Disconnected"));

    assert_eq!(mixdim(&["dim", "/nonexistent/graph.txt"]).code, 1);
    assert_eq!(mixdim(&["frobnicate"]).code, 1);
    assert_eq!(mixdim(&["verify", short.to_str().unwrap()]).code, 1);
    assert_eq!(mixdim(&["--help"]).code, 0);
}

#[test]
fn oracle_limit_is_structural_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k4.txt", K4);
    let run = mixdim(&["oracle", f.to_str().unwrap(), "--max-n", "3"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("TooLarge"));
}

#[test]
fn conjecture_campaign_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.jsonl");
    let args = |count: &str| {
        vec![
            "conjecture".to_string(),
            "--count".into(),
            count.into(),
            "--seed".into(),
            "5".into(),
            "--n-range".into(),
            "4..8".into(),
            "--out".into(),
            out.to_str().unwrap().into(),
        ]
    };
    let a: Vec<String> = args("20");
    let run = mixdim(&a.iter().map(String::as_str).collect::<Vec<_>>());
    let summary = json(&run);
    assert_eq!(summary["total"], 20);
    assert_eq!(summary["violations"], 0);
    let first = std::fs::read_to_string(&out).unwrap();
    assert_eq!(first.lines().count(), 20);
    let rec: Value = serde_json::from_str(first.lines().next().unwrap()).unwrap();
    for key in [
        "graph_id",
        "n",
        "m",
        "l1",
        "cyclomatic",
        "mdim",
        "mdim_source",
        "bound",
        "holds",
        "gap",
        "excluded",
    ] {
        assert!(rec.get(key).is_some(), "missing {key}");
    }

    let b: Vec<String> = args("30");
    let summary = json(&mixdim(&b.iter().map(String::as_str).collect::<Vec<_>>()));
    assert_eq!(summary["resumed_from"], 20);
    assert_eq!(summary["total"], 30);
    assert!(std::fs::read_to_string(&out).unwrap().starts_with(&first));
}
