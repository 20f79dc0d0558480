use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn szeged(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szeged")).args(args).output().expect("run szeged")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn compute_c5_text_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.edges", "# five-cycle\np 5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");

    let out = szeged(&["compute", &c5]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("W=15 Sz=20 Sz*=125/4"), "{text}");
    assert!(text.contains("decimal 31.25"), "{text}");

    let out = szeged(&["compute", &c5, "--json", "--verify"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["indices"]["wiener"], 15);
    assert_eq!(v["indices"]["szeged"], 20);
    assert_eq!(v["indices"]["revised_szeged"]["exact"], "125/4");
    assert_eq!(v["indices"]["revised_szeged"]["decimal"], "31.25");
    assert_eq!(v["graph"]["blocks"][0]["kind"], "cycle");
    assert_eq!(v["graph"]["blocks"][0]["length"], 5);
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 6);
}

#[test]
fn compute_keeps_original_labels() {
    let dir = tempfile::tempdir().unwrap();
    // triangle 10-20-30 with a pendant 40 on 30
    let g = write(dir.path(), "g.edges", "10 20\n20 30\n30 10\n30 40\n");
    let out = szeged(&["compute", &g, "--json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["graph"]["cut_vertices"], serde_json::json!([30]));
    assert_eq!(v["twice_wiener_equals_szeged"], false);
}

#[test]
fn bad_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let looped = write(dir.path(), "loop.edges", "0 1\n1 2\n# comment\n2 2\n");
    let out = szeged(&["compute", &looped]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("self-loop at line 4"));

    let split = write(dir.path(), "split.edges", "0 1\n2 3\n");
    assert_eq!(szeged(&["compute", &split]).status.code(), Some(2));

    let missing = dir.path().join("nope.edges");
    assert_eq!(szeged(&["compute", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn vertex_cap_comes_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "p.edges", "0 1\n1 2\n2 3\n");
    let out = Command::new(env!("CARGO_BIN_EXE_szeged"))
        .args(["compute", &path])
        .env("CACTUS_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reference_graphs_passes() {
    let out = szeged(&["verify", "--paper", "--json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["passed"], true);
    let checks = v["reproduction"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    assert!(checks.iter().all(|c| c["matches"] == true));
}

#[test]
fn verify_cycle_family() {
    let out = szeged(&["verify", "--family", "cycles", "--n", "3..12"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("cycle lemma: 10 cycles checked, 0 failed"));
}

#[test]
fn gen_corpus_is_reproducible_and_verifiable() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let out = szeged(&["gen", "--corpus", "cactus", "--count", "12", "--seed", "3", "--out", dir.path().to_str().unwrap()]);
        assert!(out.status.success());
    }
    let manifest_a = fs::read_to_string(a.path().join("manifest.json")).unwrap();
    assert_eq!(manifest_a, fs::read_to_string(b.path().join("manifest.json")).unwrap());
    let manifest: Value = serde_json::from_str(&manifest_a).unwrap();
    let graphs = manifest["graphs"].as_array().unwrap();
    assert_eq!(graphs.len(), 12);
    for g in graphs {
        let file = g["file"].as_str().unwrap();
        assert_eq!(
            fs::read(a.path().join(file)).unwrap(),
            fs::read(b.path().join(file)).unwrap()
        );
    }

    let out = szeged(&["verify", a.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("summary: 12 graphs"));
}

#[test]
fn gen_single_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().to_str().unwrap();
    assert!(szeged(&["gen", "--named", "fig3", "--out", out_dir]).status.success());
    let out = szeged(&["compute", dir.path().join("fig3.edges").to_str().unwrap()]);
    assert!(stdout(&out).contains("W=1818 Sz=2963 Sz*=3636"));

    let out = szeged(&["gen", "--cactus", "--cycles-only", "--blocks", "4", "--seed", "9", "--parity", "even", "--out", out_dir]);
    assert!(out.status.success());
    let manifest: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("manifest.json")).unwrap()).unwrap();
    let file = manifest["graphs"][0]["file"].as_str().unwrap();
    let out = szeged(&["compute", dir.path().join(file).to_str().unwrap(), "--json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["twice_wiener_equals_szeged"], true);
    assert_eq!(v["twice_wiener_equals_revised_szeged"], true);

    assert_eq!(szeged(&["gen", "--cactus", "--blocks", "2..5", "--out", out_dir]).status.code(), Some(2));
}
