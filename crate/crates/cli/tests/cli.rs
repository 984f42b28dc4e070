use std::io::Write;
use std::process::{Command, Output, Stdio};

use ramsey_core::codec::decode_graph6;
use ramsey_core::iso::are_isomorphic;
use ramsey_core::GraphName;

fn ramsey(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ramsey"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // a command that never reads stdin may already have exited
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn gen_round_trips() {
    let o = ramsey(&["gen", "CK3"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let g = decode_graph6(text.trim()).unwrap();
    let expected = "CK3".parse::<GraphName>().unwrap().build().unwrap();
    assert!(are_isomorphic(&g, &expected).unwrap());
}

#[test]
fn analyze_k2_adhesion() {
    let o = ramsey(&["--format", "json", "analyze", "--param", "adh"], "A_\n");
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v[0]["params"]["adh"], serde_json::json!([1, 1]));
    assert_eq!(v[0]["order"], 2);
}

#[test]
fn scan_chain_enumerate_six() {
    let o = ramsey(
        &["--format", "json", "scan", "--checks", "chain", "--enumerate", "6"],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["graphs"], 1 + 2 + 4 + 11 + 34 + 156);
}

#[test]
fn scan_and_extremal_ignore_jobs() {
    let scan = |jobs: &str| {
        stdout(&ramsey(
            &["--format", "json", "scan", "--enumerate", "5", "--jobs", jobs],
            "",
        ))
    };
    assert_eq!(scan("1"), scan("3"));
    let ext = |jobs: &str| {
        stdout(&ramsey(
            &[
                "--format",
                "json",
                "extremal",
                "--family",
                "deg:4",
                "--param",
                "deg",
                "--max-n",
                "7",
                "--connected",
                "--jobs",
                jobs,
            ],
            "",
        ))
    };
    assert_eq!(ext("1"), ext("4"));
}

#[test]
fn witness_spec_example() {
    let g6 = stdout(&ramsey(&["gen", "K2,6"], ""));
    let o = ramsey(&["--format", "json", "witness", "--theorem", "deg", "--n", "4"], &g6);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v[0]["report"]["outcome"]["kind"], "found");
    assert_eq!(v[0]["report"]["outcome"]["member"], "K2,4");

    let p5 = stdout(&ramsey(&["gen", "P5"], ""));
    let o = ramsey(
        &[
            "--format",
            "json",
            "witness",
            "--theorem",
            "deg",
            "--n",
            "4",
            "--mode",
            "paper",
        ],
        &p5,
    );
    assert_eq!(json(&o)[0]["report"]["outcome"]["step"], "threshold");
}

#[test]
fn free_and_le() {
    let p5 = stdout(&ramsey(&["gen", "P5"], ""));
    let v = json(&ramsey(&["--format", "json", "free", "--family", "adh:3"], &p5));
    assert_eq!(v[0]["free"], false);
    assert_eq!(v[0]["member"], "P3");

    let o = ramsey(&["le", "--left", "P3;K3", "--right", "deg:3"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = ramsey(&["le", "--left", "K3", "--right", "P4"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn ramsey_certificate() {
    let o = ramsey(&["--format", "json", "ramsey", "certify-small"], "");
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["k6_with_mono_triangle"], 32768);
    assert_eq!(v["pentagon_mono_triangles"], 0);
}

#[test]
fn only_if_reports_failure_code() {
    assert_eq!(
        ramsey(&["only-if", "--theorem", "deg", "--c", "2"], "").status.code(),
        Some(0)
    );
    // K_n+E_n has no vertex with a disconnected neighbourhood
    assert_eq!(
        ramsey(&["only-if", "--theorem", "h-c", "--c", "2", "--c2", "2"], "")
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn exit_codes() {
    let bad = ramsey(&["analyze"], "zz\n");
    assert_eq!(bad.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 1"));
    assert_eq!(ramsey(&["analyze", "--lenient"], "zz\nA_\n").status.code(), Some(0));
    assert_eq!(ramsey(&["scan", "--enumerate", "9"], "").status.code(), Some(2));
    assert_eq!(ramsey(&["gen", "nope"], "").status.code(), Some(2));
    assert_eq!(ramsey(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn table_and_json_carry_the_same_data() {
    let table = stdout(&ramsey(&["analyze", "--param", "deg"], "Bw\n"));
    let v = json(&ramsey(&["--format", "json", "analyze", "--param", "deg"], "Bw\n"));
    let degs: Vec<u64> = v[0]["params"]["deg"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    for (i, d) in degs.iter().enumerate() {
        assert!(table.contains(&format!("  {i}      {d}")), "{table}");
    }
}
