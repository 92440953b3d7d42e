use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> (i32, String) {
    let Output {
        status,
        stdout,
        stderr,
    } = Command::new(env!("CARGO_BIN_EXE_desguard"))
        .args(args)
        .output()
        .expect("binary runs");
    let mut text = String::from_utf8(stdout).unwrap();
    text.push_str(&String::from_utf8(stderr).unwrap());
    (status.code().expect("exit code"), text)
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn check_reports_the_example_violation() {
    let (code, out) = run(&["check", &path("ex1.json")]);
    assert_eq!(code, 1, "{out}");
    assert!(
        out.contains("attack on w: A3\nattack on w': A2\nshared output: abab"),
        "{out}"
    );
    assert!(out.contains("event: c"));
}

#[test]
fn check_accepts_single_attacks() {
    for f in [
        "ex1-a1only.json",
        "ex1-a2only.json",
        "ex1-a3only.json",
        "ex1-ir-d.json",
    ] {
        let (code, out) = run(&["check", &path(f)]);
        assert_eq!(code, 0, "{f}: {out}");
    }
}

#[test]
fn check_methods_agree() {
    for method in ["product", "brute"] {
        let (code, _) = run(&[
            "check",
            &path("ex1-a2a3.json"),
            "--method",
            method,
            "--depth",
            "7",
        ]);
        assert_eq!(code, 1, "{method}");
    }
    let (code, out) = run(&["check", &path("ex1-a2a3.json"), "--method", "reduction"]);
    assert_eq!(code, 3, "{out}");
    let (code, _) = run(&["check", &path("ex1-ir.json"), "--method", "brute"]);
    assert_eq!(code, 1);
    let (code, _) = run(&["check", &path("ex1-mixed.json")]);
    assert_eq!(code, 0);
}

#[test]
fn simulate_matches_the_specification() {
    let (code, out) = run(&["simulate", &path("ex1-a2only.json"), "--depth", "7"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("|K≤7| = 8"));
    assert!(out.contains("attack A2: |lmax| = 8, |lmin| = 8"));
    let (code, out) = run(&["simulate", &path("ex1-a2a3.json"), "--depth", "6"]);
    assert_eq!(code, 1);
    assert!(
        out.contains("discrepancy: attack A2 outside-spec `abcdac`"),
        "{out}"
    );
    let (code, _) = run(&["simulate", &path("ex1-ir.json")]);
    assert_eq!(code, 3);
}

#[test]
fn synthesize_writes_dot_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().to_string_lossy().into_owned();
    let (code, out) = run(&["synthesize", &path("ex1-a2a3.json"), "--dot-dir", &out_dir]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("q2 {x0,x2,x3} enables {a,b,c,d}"), "{out}");
    let dot = std::fs::read_to_string(dir.path().join("observer-A3.dot")).unwrap();
    assert!(dot.starts_with("digraph"));
    let (code, _) = run(&["synthesize", &path("ex1-ir.json")]);
    assert_eq!(code, 3);
}

#[test]
fn oracle_passes_on_fixtures() {
    for f in ["ex1.json", "ex1-ir.json", "ex1-mixed.json"] {
        let (code, out) = run(&["oracle", &path(f)]);
        assert_eq!(code, 0, "{f}: {out}");
        assert!(!out.contains("MISMATCH"));
    }
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _) = run(&["check", "/definitely/missing.json"]);
    assert_eq!(code, 2);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let (code, out) = run(&["check", &bad.to_string_lossy()]);
    assert_eq!(code, 2);
    assert!(out.contains("malformed"));

    let text = std::fs::read_to_string(fixture("ex1.json")).unwrap();
    let empty_phi = text.replacen("\"d\": [\n          \"\"\n        ]", "\"d\": []", 1);
    assert_ne!(empty_phi, text);
    std::fs::write(&bad, empty_phi).unwrap();
    let (code, out) = run(&["check", &bad.to_string_lossy()]);
    assert_eq!(code, 2);
    assert!(out.contains("attacks[2]"), "{out}");
}

#[test]
fn shipped_fixtures_match_the_built_in_examples() {
    use desguard::fixtures::{example1, example1_insertion_removal};
    use desguard::io::load_problem;
    assert_eq!(load_problem(fixture("ex1.json")).unwrap(), example1());
    assert_eq!(
        load_problem(fixture("ex1-ir.json")).unwrap(),
        example1_insertion_removal()
    );
    assert_eq!(
        load_problem(fixture("ex1-a2a3.json")).unwrap(),
        example1().with_attacks(&["A2", "A3"])
    );
}
