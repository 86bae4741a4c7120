use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn halfroot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_halfroot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

const P4: &str = "graph 4\n0 1\n1 2\n2 3\n";
const DIAMOND: &str = "graph 4\n0 1\n0 2\n1 2\n1 3\n2 3\n";
const K3: &str = "graph 3\n0 1\n0 2\n1 2\n";
const C4: &str = "graph 4\n0 1\n1 2\n2 3\n0 3\n";

#[test]
fn biconvex_p4_has_seven_vertex_root() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "p4.txt", P4);
    let cert = dir.path().join("cert.json");
    let out = halfroot(&[
        "recognize",
        "--class",
        "biconvex",
        "-i",
        s(&g),
        "--cert",
        s(&cert),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["verdict"], "yes");
    let root = &v["certificate"]["root"];
    let total = root["nx"].as_u64().unwrap() + root["ny"].as_u64().unwrap();
    assert_eq!(total, 7);

    let verify = halfroot(&["verify-root", "-i", s(&g), "--cert", s(&cert)]);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn tree_rejects_diamond() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "diamond.txt", DIAMOND);
    let out = halfroot(&["recognize", "--class", "tree", "-i", s(&g)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["obstruction"]["kind"], "diamond");
}

#[test]
fn reduce_refuses_universal_vertex() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k3.txt", K3);
    let out = halfroot(&["ecc", "reduce", "-k", "2", "-i", s(&g)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("universal_vertex:"));
}

#[test]
fn errors_are_one_token_line() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.txt", "graph 2\n0 5\n");
    for args in [
        vec!["recognize", "--class", "convex", "-i", s(&bad)],
        vec!["recognize", "--class", "nope", "-i", s(&bad)],
        vec!["recognize", "--class", "convex", "-i", "/nonexistent/file"],
    ] {
        let out = halfroot(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{err}");
        let token = err.split(':').next().unwrap();
        assert!(!token.is_empty() && token.chars().all(|c| c.is_ascii_lowercase() || c == '_'));
    }
}

#[test]
fn recognize_then_verify_every_class() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k3.txt", K3);
    for class in [
        "star_convex",
        "star_biconvex",
        "convex",
        "biconvex",
        "chordal_bipartite",
        "tree",
        "balanced_bisplit",
    ] {
        let cert = dir.path().join(format!("{class}.json"));
        let out = halfroot(&[
            "recognize",
            "--class",
            class,
            "-i",
            s(&g),
            "--cert",
            s(&cert),
        ]);
        assert_eq!(out.status.code(), Some(0), "{class}");
        let verify = halfroot(&["verify-root", "-i", s(&g), "--cert", s(&cert)]);
        assert_eq!(verify.status.code(), Some(0), "{class}");
    }
}

#[test]
fn verify_rejects_certificate_for_other_graph() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3.txt", K3);
    let p4 = file(&dir, "p4.txt", P4);
    let cert = dir.path().join("cert.json");
    halfroot(&[
        "recognize",
        "--class",
        "convex",
        "-i",
        s(&p4),
        "--cert",
        s(&cert),
    ]);
    let out = halfroot(&["verify-root", "-i", s(&k3), "--cert", s(&cert)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .starts_with("side_mismatch:"));
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "c4.txt", C4);
    let a = halfroot(&["recognize", "--class", "chordal_bipartite", "-i", s(&g)]);
    let b = halfroot(&["recognize", "--class", "chordal_bipartite", "-i", s(&g)]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(1));
}

#[test]
fn half_square_formats() {
    let dir = TempDir::new().unwrap();
    let b = file(&dir, "b.txt", "bigraph 3 2\n0 0\n1 0\n1 1\n2 1\n");
    let text = halfroot(&["half-square", "-i", s(&b), "--format", "text"]);
    assert_eq!(
        String::from_utf8(text.stdout).unwrap(),
        "graph 3\n0 1\n1 2\n"
    );
    let y = halfroot(&[
        "half-square",
        "-i",
        s(&b),
        "--side",
        "y",
        "--format",
        "json",
    ]);
    let v = stdout_json(&y);
    assert_eq!(v["n"], 2);
    assert_eq!(v["edges"], serde_json::json!([[0, 1]]));
    let dot = halfroot(&["half-square", "-i", s(&b), "--format", "dot"]);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("graph"));
}

#[test]
fn build_root_prints_only_the_root() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k3.txt", K3);
    let out = halfroot(&[
        "build-root",
        "--class",
        "tree",
        "-i",
        s(&g),
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "bigraph 3 1\n0 0\n1 0\n2 0\n"
    );
}

#[test]
fn ecc_pipeline_round_trip() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "c4.txt", C4);
    let solve = halfroot(&["ecc", "solve", "-k", "4", "-i", s(&g)]);
    assert_eq!(solve.status.code(), Some(0));
    let cover = file(
        &dir,
        "cover.json",
        &String::from_utf8(solve.stdout).unwrap(),
    );

    let none = halfroot(&["ecc", "solve", "-k", "3", "-i", s(&g)]);
    assert_eq!(none.status.code(), Some(1));

    let build = halfroot(&[
        "ecc",
        "build-root",
        "-k",
        "4",
        "-i",
        s(&g),
        "--cover",
        s(&cover),
    ]);
    assert_eq!(build.status.code(), Some(0));
    let root_json = stdout_json(&build);
    assert_eq!(root_json["root"]["nx"], 8);
    let root = file(&dir, "root.json", &String::from_utf8(build.stdout).unwrap());

    let extract = halfroot(&["ecc", "extract", "-k", "4", "-i", s(&g), "--root", s(&root)]);
    assert_eq!(extract.status.code(), Some(0));
    let cliques = stdout_json(&extract);
    assert_eq!(cliques.as_array().unwrap().len(), 4);

    let gadget = halfroot(&["ecc", "reduce", "-k", "4", "-i", s(&g), "--format", "text"]);
    let gfile = file(
        &dir,
        "gadget.txt",
        &String::from_utf8(gadget.stdout).unwrap(),
    );
    let rec = halfroot(&["recognize", "--class", "balanced_bisplit", "-i", s(&gfile)]);
    assert_eq!(rec.status.code(), Some(0));
}

#[test]
fn oracle_commands() {
    let dir = TempDir::new().unwrap();
    let claw = file(&dir, "claw.txt", "graph 4\n0 1\n0 2\n0 3\n");
    let out = halfroot(&[
        "oracle",
        "check",
        "--class",
        "biconvex",
        "-i",
        s(&claw),
        "--wmax",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_json(&out)["root"].is_null());

    let sweep = halfroot(&["oracle", "sweep", "--n", "4", "--class", "convex"]);
    assert_eq!(sweep.status.code(), Some(0));
    let v = stdout_json(&sweep);
    assert_eq!(v["graphs"], 64);
    assert_eq!(v["disagreements"], serde_json::json!([]));

    let capped = halfroot(&["oracle", "sweep", "--n", "9", "--class", "convex"]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8(capped.stderr)
        .unwrap()
        .starts_with("cap_exceeded:"));
}

#[test]
fn output_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "p4.txt", P4);
    let out_path = dir.path().join("out.json");
    let out = halfroot(&[
        "recognize",
        "--class",
        "convex",
        "-i",
        s(&g),
        "-o",
        s(&out_path),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(v["verdict"], "yes");
}
