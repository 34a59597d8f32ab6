use std::io::Write;
use std::process::{Command, Output, Stdio};

fn zf(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn generated(args: &[&str]) -> String {
    let o = zf(args, None);
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn gen_is_deterministic() {
    let a = generated(&["gen", "random-cactus", "--n", "11", "--seed", "4"]);
    let b = generated(&["gen", "random-cactus", "--n", "11", "--seed", "4"]);
    assert_eq!(a, b);
    assert!(a.starts_with("11 "));
}

#[test]
fn exact_and_family_agree_in_json() {
    let g = generated(&["gen", "random-unicyclic", "--n", "10", "--seed", "8"]);
    let exact: serde_json::Value =
        serde_json::from_slice(&zf(&["exact", "-", "--connected", "--json"], Some(&g)).stdout).unwrap();
    let family: serde_json::Value = serde_json::from_slice(&zf(&["family", "-", "--json"], Some(&g)).stdout).unwrap();
    assert_eq!(exact["value"], family["value"]);
    assert_eq!(family["method"], "unicyclic");
    for key in ["witness", "sets_examined", "elapsed"] {
        assert!(exact.get(key).is_some(), "{key}");
    }
}

#[test]
fn family_falls_back_with_a_note() {
    let g = generated(&["gen", "random-connected", "--n", "8", "--extra", "5", "--seed", "1"]);
    let o = zf(&["family", "-"], Some(&g));
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("falling back"));
    let o = zf(&["family", "-", "--expect", "tree"], Some(&g));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn spread_reports_fixture_values() {
    let g = generated(&["gen", "g1-spread", "--k", "5"]);
    let r: serde_json::Value = serde_json::from_slice(&zf(&["spread", "-", "--edge", "2,3", "--json"], Some(&g)).stdout).unwrap();
    assert_eq!((r["zc_before"].as_u64(), r["zc_after"].as_u64()), (Some(4), Some(9)));
    let o = zf(&["spread", "-", "--edge", "0,8"], Some(&g));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn trace_structure_reduce_axioms_equality() {
    let star = generated(&["gen", "star", "--leaves", "3"]);
    let o = zf(&["trace", "-", "--set", "0,1,2"], Some(&star));
    assert!(stdout(&o).contains("0 -> 3") && stdout(&o).contains("forcing set: yes"));
    let dot = stdout(&zf(&["trace", "-", "--set", "0,1,2", "--dot"], Some(&star)));
    assert!(dot.contains("steelblue") && dot.contains("lightblue"));

    let s = stdout(&zf(&["structure", "-"], Some(&star)));
    assert!(s.contains("R3  {0}") && s.contains("lower bounds: |M| = 3"));

    let o = zf(&["reduce", "-", "--verify"], Some(&star));
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("7 9\n") && stdout(&o).contains("holds"));

    let a: serde_json::Value = serde_json::from_slice(&zf(&["axioms", "-", "--json"], Some(&star)).stdout).unwrap();
    assert_eq!(a["matroid"], true);
    let o = zf(&["axioms", "-", "--cap", "3"], Some(&star));
    assert_eq!(o.status.code(), Some(1));

    let e = stdout(&zf(&["equality", "-"], Some(&generated(&["gen", "cycle", "--n", "6"]))));
    assert!(e.contains("equal: yes"));
}

#[test]
fn validate_small_corpus() {
    let args = [
        "validate", "--trees", "5", "--unicyclic", "5", "--cactus", "3", "--block", "3", "--max-n", "9", "--format", "csv",
    ];
    let o = zf(&args, None);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 17);
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(zf(&["exact", "-"], Some("2 1\n0 5\n")).status.code(), Some(2));
    assert_eq!(zf(&["exact", "-"], Some("not a graph\n")).status.code(), Some(2));
    assert_eq!(zf(&["exact", "-"], Some("3 1\n0 1\n")).status.code(), Some(1));
    assert_eq!(zf(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(zf(&["gen", "cycle"], None).status.code(), Some(2));
    assert_eq!(zf(&["gen", "g1-spread", "--k", "2"], None).status.code(), Some(2));
    let dup = "2 2\n0 1\n1 0\n";
    assert_eq!(zf(&["exact", "-"], Some(dup)).status.code(), Some(2));
    assert!(zf(&["exact", "-", "--dedup"], Some(dup)).status.success());
}

#[test]
fn dimacs_input_is_detected() {
    let o = zf(&["exact", "-", "--connected"], Some("p edge 3 2\ne 1 2\ne 2 3\n"));
    assert!(stdout(&o).starts_with("Z_c = 1"));
}
