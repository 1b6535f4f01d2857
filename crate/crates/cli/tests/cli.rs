//! End-to-end tests against the compiled binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_multiseg");
const WORKED_PSI: &str = "[0;6)+[0;5)+[3;5)+[1;4)+2*[3;3)+[0;3)+[2;2)+[2;1)";

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout_line(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

#[test]
fn epsstar_worked_example() {
    assert_eq!(stdout_line(&["epsstar", "--e", "4", WORKED_PSI]), "2 1 0 0");
}

#[test]
fn eps_and_weight_vectors() {
    assert_eq!(stdout_line(&["eps", "--e", "4", "[0;2)"]), "0 1 0 0");
    assert_eq!(stdout_line(&["wt", "--e", "4", "[0;1)"]), "-2 1 0 1");
}

#[test]
fn fvinv_reconstructions() {
    assert_eq!(
        stdout_line(&["fvinv", "--e", "4", "--charge", "0,0,1", WORKED_PSI]),
        "6.5.2|5.3.1|4.3.3"
    );
    assert_eq!(
        stdout_line(&["fvinv", "--e", "4", "--charge", "0,0,1,2,3", WORKED_PSI]),
        "6.3|5.3|4.3|2|5.1"
    );
}

#[test]
fn star_coincides_with_rho_at_e2() {
    let star = stdout_line(&["star", "--e", "2", "[0;2)+[1;1)"]);
    let rho = stdout_line(&["rho", "--e", "2", "[0;2)+[1;1)"]);
    assert_eq!(star, rho);
}

#[test]
fn text_output_round_trips() {
    // Piping a command's output back as input is lossless: ∗ and ρ are
    // involutions, so going twice returns the original canonical form.
    let once = stdout_line(&["star", "--e", "4", WORKED_PSI]);
    let twice = stdout_line(&["star", "--e", "4", &once]);
    let canonical = stdout_line(&[
        "rho",
        "--e",
        "4",
        &stdout_line(&["rho", "--e", "4", WORKED_PSI]),
    ]);
    assert_eq!(twice, canonical);
    let empty = stdout_line(&["star", "--e", "4", "∅"]);
    assert_eq!(stdout_line(&["star", "--e", "4", &empty]), "∅");
}

#[test]
fn charges_lists_admissible_multicharges() {
    let out = stdout_line(&["charges", "--e", "4", "--max-level", "4", WORKED_PSI]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        vec!["0,0,1", "0,0,0,1", "0,0,1,1", "0,0,1,2", "0,0,1,3"]
    );
}

#[test]
fn fv_and_mullineux() {
    assert_eq!(
        stdout_line(&["fv", "--e", "4", "--charge", "0,1", "2.1|1"]),
        "[0;2)+[1;1)+[3;1)"
    );
    // ♯ψ computed two ways: path negation on the multisegment side, and
    // the Mullineux route f_{v♯} ∘ m_l^v ∘ f_v⁻¹.
    let sharp = stdout_line(&["sharp", "--e", "4", WORKED_PSI]);
    let mull = stdout_line(&[
        "mullineux",
        "--e",
        "4",
        "--charge",
        "0,0,1",
        "6.5.2|5.3.1|4.3.3",
    ]);
    let embedded = stdout_line(&["fv", "--e", "4", "--charge", "0,0,3", &mull]);
    assert_eq!(embedded, sharp);
}

#[test]
fn commutor_json_shape() {
    let out = stdout_line(&[
        "commutor", "--e", "4", "--left", "0", "--right", "0", "--lambda", "1",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed["left_charge"], serde_json::json!([0]));
    assert_eq!(parsed["right_charge"], serde_json::json!([0]));
    assert_eq!(parsed["lambda"]["components"], serde_json::json!([[1]]));
}

#[test]
fn commutor_json_stdin() {
    let input = r#"{"left_charge":[0],"right_charge":[0],"lambda":{"components":[[1]]}}"#;
    let out = run_with_stdin(&["commutor", "--e", "4", "--json"], input);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().trim_end()).unwrap();
    assert_eq!(parsed["lambda"]["components"], serde_json::json!([[1]]));
}

#[test]
fn json_multisegment_stdin_carries_e() {
    let input =
        r#"{"e":2,"segments":[{"head":0,"length":2,"mult":1},{"head":1,"length":1,"mult":1}]}"#;
    let out = run_with_stdin(&["star", "--json"], input);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().trim_end()).unwrap();
    assert_eq!(parsed["e"], 2);
    // --e must agree with the embedded value when both are present.
    let out = run_with_stdin(&["star", "--json", "--e", "3"], input);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn graph_exports() {
    let dot = stdout_line(&["graph", "--e", "2", "--kind", "infty", "--rank", "2"]);
    assert!(dot.starts_with("digraph crystal {"));
    assert!(dot.contains("label=\"∅\""));
    assert!(dot.contains("->"));
    let json = stdout_line(&[
        "graph", "--e", "4", "--kind", "fock", "--rank", "2", "--charge", "0,1", "--format", "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed["nodes"][0], "-|-");
    assert!(parsed["edges"].as_array().unwrap().len() >= 2);
}

#[test]
fn selfcheck_small_passes() {
    let out = run(&["selfcheck", "--e", "2", "--rank", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pass"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn hyphen_values_parse() {
    // Negative multicharge entries and empty multipartition components
    // both begin with '-' and must survive argument parsing.
    assert_eq!(
        stdout_line(&["fv", "--e", "4", "--charge", "-1,0", "1|1"]),
        "[0;1)+[3;1)"
    );
    assert_eq!(
        stdout_line(&["mullineux", "--e", "4", "--charge", "0,1", "-|-"]),
        "-|-"
    );
}

#[test]
fn usage_errors_exit_one_not_two() {
    // Exit code 2 is reserved for a failed selfcheck.
    let out = run(&["bogus-subcommand"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn input_errors_exit_one() {
    // Parse error with a position.
    let out = run(&["star", "--e", "4", "[0;2) [1;1)"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 6"), "{err}");

    // Inadmissible multicharge reports the violated bound.
    let out = run(&["fvinv", "--e", "4", "--charge", "0,1", WORKED_PSI]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("kappa_0 = 1 < eps*_0 = 2"), "{err}");

    // Missing --e.
    let out = run(&["star", "[0;1)"]);
    assert_eq!(out.status.code(), Some(1));

    // Periodic input is rejected for crystal operations.
    let out = run(&["star", "--e", "2", "[0;1)+[1;1)"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not aperiodic"), "{err}");
}
