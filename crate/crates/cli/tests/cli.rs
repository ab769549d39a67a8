use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lollipop"))
        .args(args)
        .env_remove("LOLLIPOP_GUARD_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lollipop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn complete_six_certificate_has_nine_chords() {
    let o = run(&["dense-cycle", "--family", "complete", "--params", "n=6", "--k", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["kind"], "dense-cycle");
    assert_eq!(v["chord_count"], 9);
    assert_eq!(v["chord_bound"], 9);
}

#[test]
fn complete_six_census() {
    let o = run(&["active-paths", "--family", "complete", "--params", "n=6", "--full"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("120 paths, 114 active\n"), "{}", stdout(&o));
}

#[test]
fn icosahedron_has_no_cyclic_k5() {
    let o = run(&["certify", "--family", "icosahedron", "--target", "K5", "--oracle"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "no cyclic K5 minor (exhaustive)\n");
}

#[test]
fn oracle_guard_is_enforced_and_raisable() {
    let o = Command::new(env!("CARGO_BIN_EXE_lollipop"))
        .args(["certify", "--family", "petersen", "--target", "K4", "--oracle"])
        .env("LOLLIPOP_GUARD_N", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard"));
    let o = run(&["certify", "--family", "petersen", "--target", "K4", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn emitted_documents_reverify() {
    let cases: [&[&str]; 4] = [
        &["dense-cycle", "--family", "petersen"],
        &["contract", "--family", "random_min_degree", "--params", "n=40,k=5,extra=30", "--seed", "7"],
        &["clique-minor", "--family", "complete", "--params", "n=12", "--target", "K6"],
        &["clique-minor", "--family", "complete", "--params", "n=9", "--target", "Kll:2"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let path = temp(&format!("doc{i}.json"));
        let mut full = args.to_vec();
        let p = path.to_str().unwrap();
        full.extend(["--format", "json", "--out", p]);
        assert_eq!(run(&full).status.code(), Some(0), "{args:?}");
        let o = run(&["certify", "--input", p]);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn tampered_document_is_rejected() {
    let o = run(&["dense-cycle", "--family", "complete", "--params", "n=6", "--format", "json"]);
    let text = stdout(&o).replace("\"chord_count\": 9", "\"chord_count\": 10");
    let path = temp("tampered.json");
    std::fs::write(&path, text).unwrap();
    assert_eq!(run(&["certify", "--input", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn identical_invocations_give_identical_bytes() {
    let args = [
        "contract", "--family", "random_min_degree", "--params", "n=60,k=6,extra=50", "--seed", "3", "--format", "json",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let exp = ["experiment", "--per-k", "4", "--max-n", "40", "--format", "json"];
    let a = run(&exp);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, run(&[&exp[..], &["--sequential"]].concat()).stdout);
}

#[test]
fn edge_list_input_and_generate_round_trip() {
    let path = temp("prism.txt");
    let o = run(&["generate", "--family", "prism", "--params", "n=4", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["analyze", "--input", path.to_str().unwrap()]);
    assert!(stdout(&o).contains("vertices: 8\nedges: 12\n"), "{}", stdout(&o));
}

#[test]
fn not_found_and_error_codes() {
    // K5 needs a quotient of average degree 6, which a cycle never has.
    assert_eq!(run(&["clique-minor", "--family", "cycle", "--params", "n=6", "--target", "K5"]).status.code(), Some(1));
    assert_eq!(run(&["clique-minor", "--family", "cycle", "--params", "n=8", "--target", "K6"]).status.code(), Some(2));
    assert_eq!(run(&["certify", "--family", "cycle", "--params", "n=5", "--target", "K4", "--oracle"]).status.code(), Some(2));
    assert_eq!(run(&["dense-cycle", "--family", "nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["dense-cycle", "--family", "path", "--params", "n=4"]).status.code(), Some(1));
    assert_eq!(run(&["clique-minor", "--family", "petersen", "--target", "K9x"]).status.code(), Some(1));
}

#[test]
fn dot_output_marks_arcs() {
    let o = run(&["contract", "--family", "petersen", "--format", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("graph G {\n") && dot.ends_with("}\n"));
    assert!(dot.contains("style=bold"));
}
