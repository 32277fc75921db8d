use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use multiproj_cli::{load, parse_spec, InputFormat};
use serde_json::Value;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_multiproj"))
        .args(args)
        .output()
        .expect("failed to run multiproj");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn run_stdin(input: &str, args: &[&str]) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_multiproj"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("failed to spawn multiproj");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn doc(path: &str) -> (i32, Value) {
    let (code, out, _) = run(&[golden(path).to_str().unwrap()]);
    (code, serde_json::from_str(&out).expect("stdout is JSON"))
}

fn result(d: &Value, i: usize) -> &Value {
    assert_eq!(d["results"][i]["status"], "ok", "{}", d["results"][i]);
    &d["results"][i]["result"]
}

#[test]
fn p1_document() {
    let (code, d) = doc("p1.toml");
    assert_eq!(code, 0);
    assert_eq!(d["format_version"], 1);
    let atlas = result(&d, 1);
    assert_eq!(atlas["chart_count"], 2);
    assert_eq!(atlas["overlap_count"], 1);
    assert_eq!(atlas["triples"].as_array().unwrap().len(), 0);
    assert_eq!(atlas["triples_consistent"], true);
    let gens: Vec<&str> = atlas["overlaps"][0]["presentation"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["fraction"].as_str().unwrap())
        .collect();
    assert_eq!(gens, ["x0/x1", "x1/x0"]);

    let twist = result(&d, 2);
    let t = twist["transitions"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["from"] == "{x0}" && t["to"] == "{x1}")
        .unwrap();
    assert_eq!(t["fraction"], "x0/x1");
    assert_eq!(twist["cocycle"], true);

    assert_eq!(result(&d, 3)["passed"], true);
    let img = &result(&d, 4)["u0"]["generator_images"][0];
    assert_eq!(img["source"], "x1/x0");
    assert_eq!(img["image"], "(x0 + x1)/x0");
    assert_eq!(result(&d, 5)["u0"]["invariant"], true);
}

#[test]
fn irrelevant_family_is_a_verdict() {
    let (code, d) = doc("p1xp1.toml");
    assert_eq!(code, 0);
    let check = result(&d, 0);
    assert_eq!(check["lone"]["relevant"], false);
    assert_eq!(check["lone"]["verdict"], "not-relevant");
    assert_eq!(check["a"]["relevant"], true);
    assert_eq!(result(&d, 1)["overlap_count"], 6);
    assert_eq!(result(&d, 2)["passed"], true);
}

#[test]
fn precondition_failure_exits_3() {
    let (code, d) = doc("p112.toml");
    assert_eq!(code, 3);
    let twist = &d["results"][3];
    assert_eq!(twist["status"], "error");
    assert_eq!(twist["error"]["kind"], "TwistObstruction");
    assert!(twist["error"]["message"].as_str().unwrap().contains("{z}"));
    // earlier requests still answered
    assert_eq!(result(&d, 0)["uz"]["relation_lattice"].as_array().unwrap().len(), 1);
}

#[test]
fn bad_degree_length_exits_2() {
    let src = "[group]\nrank = 1\n\n[[variables]]\nname = \"x\"\ndegree = [1, 0]\n";
    let (code, out, err) = run_stdin(src, &[]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("variables[0].degree"), "{err}");
}

#[test]
fn unknown_field_reports_path() {
    let src = "[group]\nrank = 1\nbogus = 3\n";
    let (code, _, err) = run_stdin(src, &[]);
    assert_eq!(code, 2);
    assert!(err.contains("group"), "{err}");
    assert!(err.contains("bogus"), "{err}");
}

#[test]
fn syntax_error_reports_line() {
    let src = "[group]\nrank = 1\n\n[[variables]]\nname = \"x\"\ndegree = [1\n";
    let (code, _, err) = run_stdin(src, &[]);
    assert_eq!(code, 2);
    assert!(err.contains("line"), "{err}");
}

#[test]
fn bad_polynomial_reports_family() {
    let src = "[group]\nrank = 1\n\n[[variables]]\nname = \"x\"\ndegree = [1]\n\n[families]\nf = [\"x + y\"]\n";
    let (code, _, err) = run_stdin(src, &["--quiet"]);
    assert_eq!(code, 2);
    assert!(err.is_empty());
    let e = load(src, InputFormat::Toml).unwrap_err();
    assert_eq!(e.path, "families.f[0]");
}

#[test]
fn unknown_family_in_request() {
    let src = "[group]\nrank = 1\n\n[[variables]]\nname = \"x\"\ndegree = [1]\n\n[[requests]]\ncommand = \"check\"\nfamilies = [\"nope\"]\n";
    let e = load(src, InputFormat::Toml).unwrap_err();
    assert_eq!(e.path, "requests[0]");
}

#[test]
fn small_bound_is_a_precondition_failure() {
    let (code, out, _) = run(&["--bound", "0", golden("p1.toml").to_str().unwrap()]);
    assert_eq!(code, 3);
    let d: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(d["results"][1]["error"]["kind"], "BoundExceeded");
}

#[test]
fn echoed_problem_round_trips() {
    for name in ["p1.toml", "p112.toml", "p1xp1.toml", "z2.toml", "trivial.toml"] {
        let (_, d) = doc(name);
        let echoed = serde_json::to_string(&d["problem"]).unwrap();
        let reparsed = load(&echoed, InputFormat::Json).unwrap();
        let direct = parse_spec(&echoed, InputFormat::Json).unwrap();
        assert_eq!(reparsed.spec, direct, "{name}");
        let original = load(&std::fs::read_to_string(golden(name)).unwrap(), InputFormat::Toml).unwrap();
        assert_eq!(original.spec, reparsed.spec, "{name}");
    }
}

#[test]
fn json_input_gives_same_results() {
    let (_, d) = doc("p1xp1.toml");
    let echoed = serde_json::to_string(&d["problem"]).unwrap();
    let (code, out, _) = run_stdin(&echoed, &[]);
    assert_eq!(code, 0);
    let again: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(again, d);
}

#[test]
fn text_format() {
    let (code, out, _) = run(&["--format", "text", golden("z2.toml").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("request 0 (check): ok\n"));
    assert!(out.contains("fraction: 1/x^2"));
}

#[test]
fn canonical_spec_rewrites_polynomials() {
    let src = "[group]\nrank = 1\n\n[[variables]]\nname = \"x\"\ndegree = [1]\n\n[[variables]]\nname = \"y\"\ndegree = [1]\n\n[families]\nf = [\"y + x\", \"x*x\"]\n\n[morphisms]\nm = { x = \"x\", y = \"y + x\" }\n";
    let p = load(src, InputFormat::Toml).unwrap();
    assert_eq!(p.spec.families["f"], ["x + y", "x^2"]);
    assert_eq!(p.spec.morphisms["m"].len(), 1);
    assert_eq!(p.spec.morphisms["m"]["y"], "x + y");
}

#[test]
fn degree_mismatched_morphism_rejected() {
    let src = "[group]\nrank = 1\n\n[[variables]]\nname = \"x\"\ndegree = [1]\n\n[morphisms]\nm = { x = \"x^2\" }\n";
    let e = load(src, InputFormat::Toml).unwrap_err();
    assert_eq!(e.path, "morphisms.m");
}
