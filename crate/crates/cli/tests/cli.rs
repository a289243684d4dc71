use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn glide(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glide"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = glide(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn ladder_loop(extra: &[&str]) -> Output {
    let (g, l, v) = (corpus("ladder.json"), corpus("ladder_loop.json"), corpus("ladder_vhalves.json"));
    let mut args = vec!["braid", "--input", &g, "--loop", &l, "--vhalves", &v, "--format", "text"];
    args.extend_from_slice(extra);
    glide(&args)
}

#[test]
fn theta_five_is_complete_with_free_rank_six() {
    let v = json(&["complex", "--input", &corpus("theta5.json")]);
    assert_eq!(v["f_vector"], serde_json::json!([5, 10]));
    assert_eq!(v["components"], 1);
    assert_eq!(v["h1"][0]["betti"], 6);
    assert_eq!(v["h1"][0]["torsion"], serde_json::json!([]));
}

#[test]
fn ladder_braid() {
    let out = ladder_loop(&[]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "(231)\n");
}

#[test]
fn triangle_has_no_coverings() {
    let v = json(&["dimers", "--input", &corpus("c3.json")]);
    assert_eq!(v["count"], 0);
    assert_eq!(v["coverings"], serde_json::json!([]));
}

#[test]
fn ladder_group_is_infinite_cyclic() {
    let v = json(&["present", "--input", &corpus("ladder.json")]);
    assert_eq!(v["abelianization"]["betti"], 1);
    assert_eq!(v["abelianization"]["torsion"], serde_json::json!([]));
    assert_eq!(v["presentation"]["generators"].as_array().unwrap().len(), 1);
}

#[test]
fn hull_of_opposite_corners() {
    let v = json(&[
        "hull",
        "--input",
        &corpus("c4_c4.json"),
        "--a",
        "1.e1,1.e3,2.e1,2.e3",
        "--b",
        "1.e2,1.e4,2.e2,2.e4",
    ]);
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn typing_words_of_random_loops_are_trivial() {
    let v = json(&["mu", "--input", &corpus("theta4.json"), "--loops", "20", "--seed", "7"]);
    let loops = v["loops"].as_array().unwrap();
    assert_eq!(loops.len(), 20);
    assert!(loops.iter().all(|l| l["identity"] == true));
}

#[test]
fn seven_corner_states_fail_both_sides() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("seven_corners.json");
    let corners: Vec<Vec<&str>> = vec![
        vec![],
        vec!["a"],
        vec!["b"],
        vec!["c"],
        vec!["a", "b"],
        vec!["a", "c"],
        vec!["b", "c"],
    ];
    let file = serde_json::json!({
        "edges": ["a", "b", "c"],
        "glides": [["a"], ["b"], ["c"]],
        "states": corners,
    });
    std::fs::write(&path, file.to_string()).unwrap();
    let v = json(&["check-npc", "--states", path.to_str().unwrap()]);
    assert_eq!(v["three_cube"], false);
    assert_eq!(v["flag"], false);
    assert_eq!(v["npc"], false);
}

#[test]
fn exit_codes() {
    let out = glide(&["complex", "--input", &corpus("theta6.json"), "--max-cubes", "3"]);
    assert_eq!(out.status.code(), Some(3));
    let out = glide(&["complex", "--input", &corpus("theta6.json"), "--max-cycles", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = glide(&["hull", "--input", &corpus("c4.json"), "--a", "e1", "--b", "e2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = glide(&["dimers", "--input", &corpus("missing.json")]);
    assert_eq!(out.status.code(), Some(2));
    let out = glide(&["complex", "--input", &corpus("ladder_loop.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let runs = [
        vec!["complex", "--input", "ladder.json", "--format", "dot"],
        vec!["present", "--input", "theta5.json", "--jobs", "2"],
        vec!["mu", "--input", "ladder.json", "--seed", "11"],
        vec!["components", "--input", "c3_c4.json"],
    ];
    for args in runs {
        let path = corpus(args[2]);
        let mut args = args.clone();
        args[2] = &path;
        let first = glide(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, glide(&args).stdout, "{args:?}");
    }
}

#[test]
fn subdivided_braid_has_more_marks() {
    let out = ladder_loop(&["--subdivide", "ad=1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim().len(), "(1234)".len());
}
