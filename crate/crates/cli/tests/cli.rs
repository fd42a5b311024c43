use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn predual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_predual")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites the file instead.
fn golden(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

const GOLDEN_CASES: &[(&str, &str)] = &[
    ("validate", "z2_regular"),
    ("validate", "broken_relation"),
    ("reconstruct", "z2_characters"),
    ("reconstruct", "z2_regular"),
    ("reconstruct", "trivial"),
    ("lift", "z2_two_reps"),
    ("rho-tilde", "comatrix"),
    ("rho-tilde", "z2_functions"),
    ("nat", "z2_regular"),
    ("characters", "z3_twisted"),
];

#[test]
fn golden_text_reports() {
    for (cmd, fixture) in GOLDEN_CASES {
        let o = predual(&["--fixture", fixture, cmd]);
        golden(&format!("{cmd}_{fixture}.txt"), &stdout(&o));
    }
}

#[test]
fn golden_json_reports_are_deterministic() {
    for (cmd, fixture) in [("reconstruct", "z2_characters"), ("rho-tilde", "comatrix")] {
        let a = predual(&["--json", "--fixture", fixture, cmd]);
        let b = predual(&["--json", "--fixture", fixture, cmd]);
        assert_eq!(a.stdout, b.stdout);
        golden(&format!("{cmd}_{fixture}.json"), &stdout(&a));
    }
}

#[test]
fn exit_codes_follow_the_report() {
    assert_eq!(predual(&["--fixture", "z2_regular", "validate"]).status.code(), Some(0));
    assert_eq!(predual(&["--fixture", "empty", "validate"]).status.code(), Some(0));
    let broken = predual(&["--fixture", "broken_relation", "validate"]);
    assert_eq!(broken.status.code(), Some(1));
    assert!(stdout(&broken).contains("[FAIL] functor: relation g.g = id_*"));
    assert_eq!(predual(&["--fixture", "nope", "validate"]).status.code(), Some(2));
    assert_eq!(predual(&["--fixture", "z2_regular", "rho-tilde"]).status.code(), Some(2));
}

#[test]
fn reconstruct_reports_dimensions() {
    for (fixture, dim) in [("z2_characters", 2), ("trivial", 1), ("z2_regular", 2)] {
        let o = predual(&["--json", "--fixture", fixture, "reconstruct"]);
        assert!(o.status.success());
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["coend"]["quotient_dim"], dim, "{fixture}");
        assert_eq!(v["passed"], true);
    }
}

#[test]
fn rho_tilde_flags() {
    let v: serde_json::Value =
        serde_json::from_slice(&predual(&["--json", "--fixture", "comatrix", "rho-tilde"]).stdout).unwrap();
    assert_eq!((v["rank"].as_u64(), v["bijective"].as_bool()), (Some(4), Some(true)));
    let v: serde_json::Value =
        serde_json::from_slice(&predual(&["--json", "--fixture", "z2_functions", "rho-tilde"]).stdout).unwrap();
    assert_eq!(v["surjective"], true);
}

#[test]
fn coherence_examples() {
    // Two routes from A⊗B⊗C to C⊗A⊗B: the hexagon side and a longer detour.
    let hexagon = predual(&[
        "coherence",
        "--dims",
        "A=2,B=3,C=2",
        "((id[A] * swap[B,C;0]) ; (swap[A,C;0] * id[B]))",
        "(swap[A,B,C;0] ; (swap[B,A,C;1] ; (swap[B,C,A;0] ; swap[C,B,A;1])))",
    ]);
    assert_eq!(hexagon.status.code(), Some(0), "{}", stdout(&hexagon));
    assert!(stdout(&hexagon).contains("equal: yes"));
    let involution = predual(&["coherence", "(swap[A,B;0] ; swap[B,A;0])", "id[A,B]"]);
    assert_eq!(involution.status.code(), Some(0));
    let unequal = predual(&["--json", "coherence", "--dims", "A=2", "swap[A,A;0]", "id[A,A]"]);
    assert_eq!(unequal.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&unequal.stdout).unwrap();
    assert_eq!((v["equal"].as_bool(), v["matrices_equal"].as_bool()), (Some(false), Some(false)));
    let unbracketed = predual(&["coherence", "swap[A,B;0] ; swap[B,A;0]", "id[A,B]"]);
    assert_eq!(unbracketed.status.code(), Some(2));
}

#[test]
fn stdin_and_input_file() {
    let text = &std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/z2_regular.json")).unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_predual"))
        .args(["reconstruct"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let piped = child.wait_with_output().unwrap();
    assert!(piped.status.success());
    let path = std::env::temp_dir().join(format!("predual-cli-{}.json", std::process::id()));
    std::fs::write(&path, text).unwrap();
    let from_file = predual(&["--input", path.to_str().unwrap(), "reconstruct"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(piped.stdout, from_file.stdout);
    assert_eq!(from_file.stdout, predual(&["--fixture", "z2_regular", "reconstruct"]).stdout);
}

#[test]
fn field_override() {
    let o = predual(&["--json", "--field", "Fp:7", "--fixture", "z3_twisted", "characters"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["field"], "Fp:7");
    // ℤ/3 has three characters once the field holds the cube roots of unity.
    assert_eq!(v["characters"].as_array().unwrap().len(), 3);
    assert_eq!(predual(&["--field", "F9", "--fixture", "trivial", "validate"]).status.code(), Some(2));
}

#[test]
fn schema_errors_carry_positions() {
    let path = std::env::temp_dir().join(format!("predual-bad-{}.json", std::process::id()));
    std::fs::write(&path, "{\"objects\": [\"A\"],\n \"functor\": {\"on_objects\": {\"A\": }}}").unwrap();
    let o = predual(&["--input", path.to_str().unwrap(), "validate"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}
