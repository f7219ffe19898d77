use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

use selfconverse::cli::sequence_json;
use selfconverse::wire::{parse_tournament, parse_witness};
use selfconverse::{is_self_converse_witness, scores_of, Rational, Tournament};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_selfconverse"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn seq_file(dir: &Path, name: &str, scores: &[&str]) -> String {
    write(dir, name, &sequence_json(scores));
    name.to_string()
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();

    let r = cli(d, &["check", &seq_file(d, "a.json", &["1/2", "1/2"])]);
    assert_eq!(r.code, 0);
    let rep = json(&r.stdout);
    assert_eq!(rep["condition_I"], true);
    assert_eq!(rep["condition_II"], true);

    let r = cli(d, &["check", &seq_file(d, "b.json", &["0", "0", "3"])]);
    assert_eq!(r.code, 1);
    assert_eq!(json(&r.stdout)["first_violation"], 2);
    assert_eq!(strings(&json(&r.stdout)["prefix_slacks"]), ["0", "-1", "0"]);

    let r = cli(d, &["check", &seq_file(d, "c.json", &["1/2", "1/2", "2"])]);
    assert_eq!(r.code, 1);
    assert_eq!(json(&r.stdout)["condition_I"], true);
    assert_eq!(json(&r.stdout)["condition_II"], false);
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write(d, "empty.json", "");
    write(d, "garbage.json", "{ not json");
    write(d, "noscores.json", r#"{"n": 0, "scores": []}"#);
    write(d, "neg.json", r#"{"n": 1, "scores": ["-1"]}"#);
    for f in ["empty.json", "garbage.json", "noscores.json", "neg.json", "missing.json"] {
        assert_eq!(cli(d, &["check", f]).code, 2, "{f}");
        assert_eq!(cli(d, &["approximate", f, "-m", "3"]).code, 2, "{f}");
    }
    let r = cli(d, &["check", &seq_file(d, "unsorted.json", &["2", "0", "1"])]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("non-decreasing"));
}

#[test]
fn realize_pipeline_half() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let r = cli(d, &["realize", &seq_file(d, "a.json", &["1/2", "1/2"]), "--method", "pipeline"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc = json(&r.stdout);
    assert_eq!(doc["tournament"]["n"], 2);
    assert_eq!(strings(&doc["tournament"]["weights"][0]), ["0", "1/2"]);
    assert_eq!(strings(&doc["tournament"]["weights"][1]), ["1/2", "0"]);
    assert_eq!(doc["witness"]["image"], json("[2, 1]"));
}

#[test]
fn realize_moon_versus_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let f = seq_file(d, "a.json", &["0", "3/2", "3/2"]);
    let r = cli(d, &["realize", &f, "--method", "moon"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc = json(&r.stdout);
    assert!(doc["witness"].is_null());
    let g = parse_tournament(&r.stdout).unwrap();
    let want: Vec<Rational> = ["0", "3/2", "3/2"].iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(scores_of(&g).labeled, want);

    assert_eq!(cli(d, &["realize", &f, "--method", "pipeline"]).code, 1);
    assert_eq!(cli(d, &["realize", &f, "--method", "symmetrize"]).code, 1);
    assert_eq!(cli(d, &["realize", &seq_file(d, "bad.json", &["0", "0", "3"]), "--method", "moon"]).code, 1);
}

#[test]
fn realize_respects_cap() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let f = seq_file(d, "a.json", &["1/2", "1", "3/2"]);
    assert_eq!(cli(d, &["realize", &f, "--method", "pipeline", "--cap", "6"]).code, 0);
    assert_eq!(cli(d, &["realize", &f, "--method", "pipeline", "--cap", "5"]).code, 3);

    // without an explicit method the symmetrized Moon route takes over
    let r = cli(d, &["realize", &f, "--cap", "5"]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("symmetrized Moon"));
    let g = parse_tournament(&r.stdout).unwrap();
    let rho = parse_witness(&json(&r.stdout)["witness"].to_string()).unwrap();
    assert!(is_self_converse_witness(&g, &rho));
}

#[test]
fn realize_output_files_round_trip_through_witness() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let f = seq_file(d, "a.json", &["1/3", "4/3", "5/3", "8/3"]);
    for method in ["pipeline", "symmetrize"] {
        let r = cli(d, &["realize", &f, "--method", method, "--output", "t.json", "--witness-output", "w.json"]);
        assert_eq!(r.code, 0, "{method}: {}", r.stderr);
        assert!(r.stdout.is_empty());
        let g = parse_tournament(&fs::read_to_string(d.join("t.json")).unwrap()).unwrap();
        let rho = parse_witness(&fs::read_to_string(d.join("w.json")).unwrap()).unwrap();
        assert!(is_self_converse_witness(&g, &rho));
        let w = cli(d, &["witness", "t.json"]);
        assert_eq!(w.code, 0, "{method}: {}", w.stderr);

        // the combined stdout document is accepted too
        let r = cli(d, &["realize", &f, "--method", method]);
        write(d, "doc.json", &r.stdout);
        assert_eq!(cli(d, &["witness", "doc.json"]).code, 0);
    }
    // witness printed to stdout when only the tournament goes to a file
    let r = cli(d, &["realize", &f, "--output", "t2.json"]);
    assert_eq!(r.code, 0);
    assert!(parse_witness(&r.stdout).is_ok());
}

#[test]
fn realize_sorted_input_notes_permutation() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let f = seq_file(d, "a.json", &["2", "0", "1"]);
    assert_eq!(cli(d, &["realize", &f]).code, 2);
    let r = cli(d, &["realize", &f, "--sort"]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("[2, 3, 1]"));
}

#[test]
fn approximate_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let r = cli(d, &["approximate", &seq_file(d, "a.json", &["1", "1", "1"]), "-m", "5"]);
    assert_eq!(r.code, 0);
    let doc = json(&r.stdout);
    assert_eq!(strings(&doc["sequence"]["scores"]), ["1", "1", "1"]);
    assert!(doc["trace"]["n_prime"].is_null());

    let r = cli(d, &["approximate", &seq_file(d, "b.json", &["0", "1", "2"]), "-m", "10"]);
    assert_eq!(r.code, 0);
    let doc = json(&r.stdout);
    assert_eq!(strings(&doc["sequence"]["scores"]), ["1/11", "1", "21/11"]);
    assert_eq!(doc["trace"]["n_prime"], 1);
    assert_eq!(doc["trace"]["intervals"], json(r#"[["0", "1/10"]]"#));
    assert_eq!(strings(&doc["trace"]["picks"]), ["1/11"]);

    let r = cli(d, &["approximate", &seq_file(d, "c.json", &["0.7071", "1", "1.2929"]), "-m", "100"]);
    assert_eq!(strings(&json(&r.stdout)["sequence"]["scores"]), ["5/7", "1", "9/7"]);

    assert_eq!(cli(d, &["approximate", &seq_file(d, "bad.json", &["0", "0", "3"]), "-m", "10"]).code, 1);
}

#[test]
fn blowup_plan_output() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let r = cli(d, &["blowup", &seq_file(d, "a.json", &["1/2", "1", "3/2"])]);
    assert_eq!(r.code, 0);
    assert_eq!(json(&r.stdout), json(r#"{"n": 3, "m": 2, "targets": [[1, 2], [2, 3], [3, 4]]}"#));

    let r = cli(d, &["blowup", &seq_file(d, "b.json", &["0", "1", "2"]), "-m", "3"]);
    assert_eq!(json(&r.stdout)["targets"], json("[[1, 1, 1], [4, 4, 4], [7, 7, 7]]"));
    assert_eq!(cli(d, &["blowup", "a.json", "-m", "3"]).code, 1);
}

fn tournament_file(dir: &Path, name: &str, t: &Tournament) -> String {
    let doc = selfconverse::wire::TournamentJson::from_tournament(t.as_generalised());
    write(dir, name, &serde_json::to_string(&doc).unwrap());
    name.to_string()
}

#[test]
fn witness_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cycle = Tournament::from_arcs(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
    let r = cli(d, &["witness", &tournament_file(d, "c.json", &cycle)]);
    assert_eq!(r.code, 0);
    let rho = parse_witness(&r.stdout).unwrap();
    assert!(rho.is_involution());
    assert_eq!(rho.fixed_points().len(), 1);
    assert!(is_self_converse_witness(cycle.as_generalised(), &rho));

    let dominated = Tournament::from_arcs(4, &[(1, 2), (2, 3), (3, 1), (4, 1), (4, 2), (4, 3)]).unwrap();
    let r = cli(d, &["witness", &tournament_file(d, "d.json", &dominated)]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("no witness"));

    let big = Tournament::from_beats(11, |i, j| i > j);
    assert_eq!(cli(d, &["witness", &tournament_file(d, "big.json", &big)]).code, 3);
    assert_eq!(cli(d, &["witness", "big.json", "--cap", "11"]).code, 0);
}

#[test]
fn oracle_command() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let r = cli(d, &["oracle", "--n", "4"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        json(&r.stdout),
        json(r#"{"n": 4, "equal": true, "only_in_conditions": [], "only_in_bruteforce": []}"#)
    );
    assert_eq!(cli(d, &["oracle", "--n", "7"]).code, 3);
}
