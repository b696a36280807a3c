use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use wiener_cli::claims::{criteria, find, REGISTRY};
use wiener_cli::graph6;

fn wiener(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wiener"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/ladder3.djson");

#[test]
fn registry_shape() {
    let nums: BTreeSet<u8> = criteria().filter_map(|c| c.criterion).collect();
    assert_eq!(nums, (1..=18).collect());
    let ids: BTreeSet<&str> = REGISTRY.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), REGISTRY.len());
    for id in ["chem8-min", "c11-soltes", "ladder-wmax"] {
        assert!(find(id).unwrap().gate);
    }
    assert!(find("nope").err().unwrap().to_string().contains("folklore-bounds"));
}

#[test]
fn verify_spot_checks() {
    let out = wiener(&["verify", "chem8-min", "--json"], None);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v[0]["status"], "pass");
    assert!(v[0]["observed"].as_str().unwrap().contains("min W = Some(40) by 6 graphs"));

    let out = wiener(&["verify", "c11-soltes"], None);
    assert!(out.status.success());

    let out = wiener(&["verify", "ladder-wmax", "--n", "3", "--json"], None);
    assert!(out.status.success());
    assert!(json(&out)[0]["observed"].as_str().unwrap().contains("brute force 78, formula 78"));

    let out = wiener(&["verify", "no-such-claim"], None);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("chem8-min") && err.contains("codec-hygiene"), "{err}");
}

#[test]
fn ladder_fixture_attains_the_maximum() {
    let out = wiener(&["orient", FIXTURE], None);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v[0]["w"], 78);
    assert_eq!(v[0]["w_max_underlying"], 78);
    assert_eq!(v[0]["attains_w_max"], true);
}

#[test]
fn emit_and_read_back() {
    let out = wiener(&["enumerate", "--n", "5", "--filter", "connected", "--emit"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let graphs = graph6::decode_lines(&text).unwrap();
    assert_eq!(graphs.len(), 21);
    let out = wiener(&["invariant", "-", "--which", "w,sz,blocks", "--out", "csv"], Some(&text));
    assert!(out.status.success());
    let csv = String::from_utf8(out.stdout).unwrap();
    assert_eq!(csv.lines().count(), 22);
    assert!(csv.starts_with("graph6,n,m,w,sz,blocks,cut_vertices"));

    let mut total = 0;
    for i in 0..3 {
        let shard = format!("{i}/3");
        let out = wiener(&["enumerate", "--n", "8", "--filter", "chemical", "--shards", &shard], None);
        total += json(&out)[0]["visited"].as_u64().unwrap();
    }
    assert_eq!(total, 1929);

    let out = wiener(&["enumerate", "--n", "7", "--extremal", "w", "max"], None);
    let v = json(&out);
    assert_eq!(v[0]["best"], 56);
    assert_eq!(v[0]["graphs"].as_array().unwrap().len(), 1);
}

#[test]
fn other_commands() {
    let out = wiener(&["soltes", "--family", "cycle:11"], None);
    assert_eq!(json(&out)[0]["soltes_graph"], true);

    let p5 = "{\"n\":5,\"edges\":[[0,1],[1,2],[2,3],[3,4]],\"signs\":[1,-1,1,-1]}";
    let out = wiener(&["signed", "-"], Some(p5));
    assert!(out.status.success());
    let ws = json(&out)[0]["w_sigma"].as_u64().unwrap();
    let out = wiener(&["signed", "-", "--mode", "minimize"], Some(p5));
    assert_eq!(json(&out)[0]["w_star"].as_u64().unwrap(), ws);

    let out = wiener(&["signed", "-", "--mode", "canceling"], Some("E~~w\n"));
    assert!(json(&out)[0]["signature"].is_array());

    let out = wiener(&["alpha", "--structural", "1000,120"], None);
    assert_eq!(json(&out)[0]["sign_changes"], 3);

    let out = wiener(&["orient", "-", "--mode", "coloring"], Some("Bw\n"));
    assert_eq!(json(&out)[0]["w_min_coloring"], 3);

    let out = wiener(&["invariant", "-"], Some("A`\n"));
    assert_eq!(out.status.code(), Some(2));
}
