use std::process::{Command, Output};

use fq_incidence::{FieldSpec, PointSet, Space};
use fq_incidence_cli::format::{ingest, Ingested};
use fq_incidence_cli::{generate, seeded_rng, GeneratorShape};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fq-incidence"))
        .args(args)
        .output()
        .expect("spawn binary")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn beck_on_full_plane() {
    let out = run(&["beck", "--q", "5", "--shape", "full"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"], "beck");
    assert_eq!(v["verdict"], "holds");
    assert_eq!(v["results"]["determined_count"], 125);
    assert_eq!(v["results"]["bound"], 56);
}

#[test]
fn incidence_engines_agree() {
    let out = run(&["incidence", "--q", "5", "--d", "3", "--shape", "random:40", "--spheres", "random:200", "--trials", "4", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["verdict"], "holds");
    let trials = v["results"]["trials"].as_array().unwrap();
    assert_eq!(trials.len(), 4);
    assert!(trials.iter().all(|t| t["engines_agree"] == true));
}

#[test]
fn empty_sets_are_vacuous() {
    let out = run(&["incidence", "--q", "5", "--shape", "random:0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "vacuous");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["pinned", "--q", "13", "--epsilon", "3/2"][..],
        &["pinned", "--q", "13", "--alpha", "0/1"],
        &["beck", "--q", "4"],
        &["beck", "--q", "5", "--d", "3"],
        &["gen", "--q", "3", "--shape", "random:10"],
        &["nonsense"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn text_and_csv_formats() {
    let csv = run(&["beck", "--q", "5", "--shape", "full", "--format", "csv"]);
    let csv = String::from_utf8(csv.stdout).unwrap();
    assert!(csv.starts_with("key,value\n"));
    assert!(csv.contains("results.determined_count,125\n"));
    let text = run(&["beck", "--q", "5", "--shape", "full", "--format", "text"]);
    assert!(String::from_utf8(text.stdout).unwrap().contains("verdict: holds\n"));
}

#[test]
fn gen_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    let out = run(&["gen", "--q", "7", "--shape", "random:20", "--seed", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let Ingested::Points(read) = ingest(&path).unwrap() else { panic!("points expected") };
    let space = Space::new(FieldSpec::new(7).unwrap(), 2).unwrap();
    let expected: PointSet = generate(space, &GeneratorShape::Random(20), &mut seeded_rng(5)).unwrap();
    assert_eq!(read, expected);

    // The file can be fed back in; q and d come from its header.
    let out = run(&["pinned", "--points", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["q"], 7);
    assert_eq!(v["d"], 2);
}

#[test]
fn header_mismatch_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    std::fs::write(&path, "q=5 d=2 kind=points\n1 2\n").unwrap();
    let out = run(&["beck", "--q", "7", "--points", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::write(&path, "q=5 d=2 kind=points\n1 2\n9 9\n").unwrap();
    let out = run(&["beck", "--points", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn same_seed_same_bytes() {
    let args = ["identities", "--q", "3", "--d", "2", "--trials", "5", "--seed", "77"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let other = ["identities", "--q", "3", "--d", "2", "--trials", "5", "--seed", "78"];
    assert_ne!(run(&args).stdout, run(&other).stdout);
}
