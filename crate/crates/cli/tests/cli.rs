//! End-to-end runs of the built binary.

use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn degspread(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_degspread"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(run: &Run) -> Value {
    serde_json::from_str(&run.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", run.stdout))
}

#[test]
fn compute_command() {
    let r = degspread(&["compute", "-k", "1"], "Bw\n");
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["command"], "compute");
    assert_eq!(v["results"]["value"], 3);
    assert_eq!(v["violations"], Value::Array(vec![]));

    let r = degspread(&["compute", "-k", "0", "-"], "4\n0 1\n1 2\n2 3\n");
    assert_eq!(json(&r)["results"]["value"], 2);

    let dir = std::env::temp_dir().join(format!("degspread-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.g6");
    std::fs::write(&bad, "B!\n").unwrap();
    let r = degspread(&["compute", bad.to_str().unwrap()], "");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("invalid character"), "{}", r.stderr);
    let edges = dir.join("tri.txt");
    std::fs::write(&edges, "3\n0 1\n1 2\n0 2\n").unwrap();
    let r = degspread(&["--format", "text", "compute", edges.to_str().unwrap()], "");
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("sp(G,0) = 3"));
    let r = degspread(&["compute", dir.join("missing").to_str().unwrap()], "");
    assert_eq!(r.code, 2);
    std::fs::remove_dir_all(&dir).unwrap();

    // Forced graph6 decoding of an edge list fails.
    let r = degspread(&["--format-in", "graph6", "compute"], "3\n0 1\n");
    assert_eq!(r.code, 2);
}

#[test]
fn bounds_command() {
    let mop = degspread(&["--format", "text", "construct", "--family", "mop-k1", "--p", "5"], "");
    let r = degspread(&["bounds", "-k", "1"], &mop.stdout);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["results"]["computed_sp"], 8);
    let k1 = &v["results"]["bounds"]["mop_k1_lower"];
    assert_eq!((k1["value_num"].as_i64(), k1["value_den"].as_i64()), (Some(16), Some(3)));
    assert_eq!(k1["ceil"], 6);
    assert!(v["results"]["bounds"].get("tree_lower").is_none());

    let r = degspread(&["bounds", "-k", "0"], "D~{\n");
    let v = json(&r);
    assert_eq!(v["results"]["computed_sp"], 5);
    assert_eq!(v["results"]["bounds"]["gap_best"]["value_num"], 5);
    assert_eq!(v["results"]["bounds"]["gap_best"]["value_den"], 1);

    let r = degspread(&["bounds", "-k", "3"], "4\n0 1\n");
    assert_eq!(r.code, 0);
    assert_eq!(json(&r)["results"]["bounds"]["baseline"]["applicable"], false);

    let r = degspread(&["--format", "csv", "bounds", "-k", "0"], "Bw");
    assert!(r.stdout.starts_with("name,kind,value_num,value_den,ceil,threshold,applicable,ref,computed_sp\n"));

    let r = degspread(&["bounds"], "garbage");
    assert_eq!(r.code, 2);
}

#[test]
fn construct_command() {
    let r = degspread(&["construct", "--family", "mop-k2", "--p", "3"], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["results"]["n"], 38);
    assert_eq!(v["results"]["expected_sp"], 19);
    assert_eq!(v["results"]["computed_sp"], 19);
    assert_eq!(v["results"]["validation"], "pass");

    let r = degspread(&["construct", "--family", "tree-leaf-hub", "--n", "10", "--k", "1"], "");
    let v = json(&r);
    assert_eq!(v["results"]["census"], serde_json::json!([[1, 6], [3, 4]]));

    let r = degspread(&["construct", "--family", "mop-f", "--t", "1", "--k", "3"], "");
    assert_eq!(r.code, 0);
    assert_eq!(json(&r)["results"]["n"], 10);

    let r = degspread(&["--format", "text", "construct", "--family", "mop-k1", "--p", "4", "--out", "edge-list"], "");
    assert!(r.stdout.starts_with("10\n"));
    let again = degspread(&["compute", "-k", "1"], &r.stdout);
    assert_eq!(json(&again)["results"]["value"], 7);

    let r = degspread(&["construct", "--family", "tree-leaf-hub", "--n", "11", "--k", "1"], "");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("divisible"), "{}", r.stderr);
    let r = degspread(&["construct", "--family", "mop-k9", "--p", "3"], "");
    assert_eq!(r.code, 2);
    let r = degspread(&["construct", "--family", "mop-k1"], "");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("p >= 3"));
}

#[test]
fn search_command() {
    let r = degspread(&["search", "--class", "mop", "--n", "6", "--k", "0"], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["results"][0]["minimum"], 2);
    assert_eq!(v["results"][0]["inspected"], 14);

    let r = degspread(&["--format", "csv", "search", "--class", "mop", "--n", "6..10", "--k", "2"], "");
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines[0], "class,n,k,minimum,inspected,witness_graph6,distinct_censuses");
    assert_eq!(lines.len(), 6);

    let r = degspread(&["search", "--class", "tree", "--n", "4..30", "--k", "1"], "");
    for row in json(&r)["results"].as_array().unwrap() {
        let n = row["n"].as_u64().unwrap();
        if n % 2 == 0 {
            assert_eq!(row["minimum"].as_u64().unwrap(), (n + 2).div_ceil(2), "n={n}");
        }
    }

    let r = degspread(&["search", "--class", "mop", "--n", "17", "--k", "0"], "");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("guard"));
    let r = degspread(&["search", "--class", "tree", "--n", "8", "--k", "1", "--trend"], "");
    assert_eq!(r.code, 2);
    let r = degspread(&["search", "--class", "mop", "--n", "9..4"], "");
    assert_eq!(r.code, 2);
}

#[test]
fn search_output_ignores_job_count() {
    let args = |jobs: &'static str| ["--jobs", jobs, "search", "--class", "mop", "--n", "6..11", "--k", "1"];
    let one = degspread(&args("1"), "");
    let many = degspread(&args("6"), "");
    assert_eq!(one.code, 0);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn verify_command() {
    let r = degspread(&["verify", "--samples", "1000", "--seed", "42", "--n-max", "40", "--k-max", "5"], "");
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(json(&r)["results"]["passed"], true);

    let r = degspread(&["verify", "--samples", "1", "--seed", "7"], "");
    assert_eq!(r.code, 0);

    let r = degspread(&["verify", "--samples", "10", "--tamper", "refined=+50"], "");
    assert_eq!(r.code, 1);
    let v = json(&r);
    let g6 = v["violations"][0]["graph6"].as_str().unwrap();
    let recheck = degspread(&["compute"], g6);
    assert_eq!(recheck.code, 0);

    let r = degspread(&["verify", "--samples", "0"], "");
    assert_eq!(r.code, 2);
    let r = degspread(&["verify", "--tamper", "nonsense"], "");
    assert_eq!(r.code, 2);

    let a = degspread(&["verify", "--samples", "50", "--seed", "3"], "");
    let b = degspread(&["verify", "--samples", "50", "--seed", "3", "--jobs", "4"], "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(degspread(&[], "").code, 2);
    assert_eq!(degspread(&["frobnicate"], "").code, 2);
    assert_eq!(degspread(&["--format", "xml", "compute"], "Bw").code, 2);
    let help = degspread(&["--help"], "");
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("search"));
}
