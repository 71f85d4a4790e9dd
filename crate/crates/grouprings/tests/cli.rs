use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(cache: Option<&Path>, args: &[&str], epoch: &str) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_grouprings"));
    cmd.args(args).env("SOURCE_DATE_EPOCH", epoch);
    match cache {
        Some(dir) => cmd.env("GROUPRINGS_CACHE_DIR", dir),
        None => cmd.arg("--no-cache"),
    };
    cmd.output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stderr)))
}

#[test]
fn analyze_d8() {
    let o = run(None, &["analyze", "D(8)"], "0");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    let p = &v["properties"];
    assert_eq!(p["sn"]["holds"], true);
    assert_eq!(p["dk"]["holds"], true);
    assert_eq!(p["nd"]["status"], "Holds");
    assert_eq!(v["wedderburn"]["matrix_count_max"], 1);
    assert_eq!(v["wedderburn"]["dims"], serde_json::json!([1, 1, 1, 1, 4]));
}

#[test]
fn nd_g223_reports_congruence_samples() {
    let o = run(None, &["nd", "G(2,2,3)", "--samples", "220", "--seed", "11"], "0");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["nd"]["status"], "Holds");
    assert_eq!(v["nd"]["basis"], "known_exception");
    assert_eq!(v["congruence"]["samples"], 220);
    assert_eq!(v["congruence"]["seed"], 11);
    assert_eq!(v["congruence"]["all_pass"], true);
}

#[test]
fn sl2z_subcommands() {
    let v = json(&run(None, &["sl2z", "normalize", "[[5,-4],[4,-3]]"], "0"));
    assert_eq!(v["result"]["s"], "[[1,-2],[1,-1]]");
    assert_eq!(v["result"]["m"], "-4");
    let v = json(&run(None, &["sl2z", "level", "[[5,-4],[4,-3]]"], "0"));
    assert_eq!(v["result"]["level"], "4");
    let v = json(&run(None, &["sl2z", "in-v", "[[5,-4],[4,-3]]", "--level", "4"], "0"));
    assert_eq!(v["result"]["member"], true);
    let v = json(&run(None, &["sl2z", "triangle", "6"], "0"));
    assert_eq!(v["result"]["finite"], false);
    let v = json(&run(None, &["sl2z", "nilpotent", "[[2,-4],[1,-2]]"], "0"));
    assert_eq!(v["result"]["nilpotent"], true);
    let o = run(None, &["sl2z", "normalize", "[[2,0],[0,1]]"], "0");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn errors_exit_with_one() {
    let o = run(None, &["nd", "Q(6)"], "0");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 0"));
    let o = run(None, &["dk", "C(2) x D(7)"], "0");
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 7"));
    assert_eq!(run(None, &["analyze"], "0").status.code(), Some(1));
    let o = run(None, &["analyze", "MC(17,8,16)"], "0");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard"));
}

#[test]
fn undetermined_exit_code() {
    let o = run(None, &["nd", "MC(17,8,16)"], "0");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["nd"]["status"], "Undetermined");
    let o = run(None, &["nd", "MC(17,8,16)", "--expect-decided"], "0");
    assert_eq!(o.status.code(), Some(2));
    let o = run(None, &["nd", "MC(17,8,16)", "--expect-decided", "--force"], "0");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(None, &["nd", "D(8)", "--expect-decided"], "0").status.code(), Some(0));
}

#[test]
fn cache_hits_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cold = run(Some(dir.path()), &["analyze", "Q(8)"], "100");
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let hit = run(Some(dir.path()), &["analyze", "Q(8)"], "200");
    assert_eq!(cold.stdout, hit.stdout);
    let other_seed = run(Some(dir.path()), &["analyze", "Q(8)", "--seed", "3"], "300");
    assert_ne!(cold.stdout, other_seed.stdout);
    let fresh = run(None, &["analyze", "Q(8)"], "100");
    assert_eq!(cold.stdout, fresh.stdout);
}

#[test]
fn corrupt_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let cold = run(Some(dir.path()), &["dk", "A(4)"], "100");
    let entry = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let text = std::fs::read_to_string(&entry).unwrap();
    let fp = json(&cold)["group"]["fingerprint"].as_str().unwrap().to_string();
    std::fs::write(&entry, text.replace(&fp[..16], "0000000000000000")).unwrap();
    let again = run(Some(dir.path()), &["dk", "A(4)"], "200");
    assert_eq!(again.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&again.stderr).contains("corrupt"));
    assert_eq!(json(&again)["timestamp"], 200);
    assert_eq!(json(&again)["dk"], json(&cold)["dk"]);
    let hit = run(Some(dir.path()), &["dk", "A(4)"], "300");
    assert_eq!(hit.stdout, again.stdout);
}

#[test]
fn no_cache_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_grouprings"));
    let o = cmd.args(["sn", "S(3)", "--no-cache"]).env("GROUPRINGS_CACHE_DIR", dir.path()).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn witness_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.json");
    let f = file.to_str().unwrap();
    let o = run(None, &["witness", "G(2,3,2)", "--json-out", f], "0");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&file).unwrap(), o.stdout);
    let v = json(&o);
    assert_eq!(v["triple"]["checks"]["accepted"], true);
    assert_eq!(v["nd"]["status"], "Fails");
    let o = run(None, &["verify", f], "0");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["valid"], true);

    let mut bad = v.clone();
    bad["witnesses"][0]["coefficient"] = "1/7".into();
    bad["nd"]["witness"]["coefficient"] = "1/7".into();
    std::fs::write(&file, serde_json::to_vec(&bad).unwrap()).unwrap();
    let o = run(None, &["verify", f], "0");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["valid"], false);

    let mut bad = v;
    bad["group"]["expr"] = "G(2,2,3)".into();
    std::fs::write(&file, serde_json::to_vec(&bad).unwrap()).unwrap();
    assert_eq!(run(None, &["verify", f], "0").status.code(), Some(1));
}

#[test]
fn witness_needs_a_failing_group() {
    let o = run(None, &["witness", "D(8)"], "0");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Holds"));
    let o = run(None, &["witness", "S(4)"], "0");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["nd"]["status"], "Fails");
}
