use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigmaloci"))
        .current_dir(tests_dir())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

/// `name|arg arg ...`, with commas inside an argument standing for spaces.
fn cases() -> Vec<(String, Vec<String>)> {
    std::fs::read_to_string(tests_dir().join("cases.txt"))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (name, args) = l.split_once('|').unwrap();
            let args = args.split_whitespace().map(|a| a.replace(',', " ")).collect();
            (name.to_string(), args)
        })
        .collect()
}

fn leaves(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Array(xs) => xs.iter().for_each(|x| leaves(x, out)),
        Value::Object(m) => m.values().for_each(|x| leaves(x, out)),
        Value::String(s) => out.push(s.clone()),
        Value::Null => {}
        other => out.push(other.to_string()),
    }
}

fn set_text(names: &Value) -> String {
    let parts: Vec<&str> = names.as_array().unwrap().iter().map(|n| n.as_str().unwrap()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Reconstructs what the text report must say from the JSON report.
fn assert_equivalent(name: &str, text: &str, j: &Value) {
    let lines: Vec<&str> = text.lines().collect();
    let obj = j.as_object().unwrap();
    if obj.len() == 1 {
        if let Some(b) = obj.values().next().unwrap().as_bool() {
            assert_eq!(text, format!("{b}\n"), "{name}");
            return;
        }
    }
    if let Some(supports) = obj.get("supports").and_then(Value::as_array) {
        let expected: Vec<String> = supports
            .iter()
            .map(|s| match s.get("good") {
                Some(g) => format!(
                    "W = {}: {}",
                    set_text(&s["support"]),
                    if g.as_bool().unwrap() { "good" } else { "bad" }
                ),
                None => format!("W = {}", set_text(s)),
            })
            .collect();
        assert_eq!(lines, expected, "{name}");
        return;
    }
    if let Some(homology) = obj.get("homology").and_then(Value::as_array) {
        assert_eq!(lines[0], format!("coefficients: {}", obj["coefficients"].as_str().unwrap()));
        for (line, h) in lines[1..].iter().zip(homology) {
            let tors: Vec<String> = h["torsion"].as_array().unwrap().iter().map(ToString::to_string).collect();
            let mut expected = format!("H~_{}: rank {}", h["degree"], h["rank"]);
            if !tors.is_empty() {
                expected.push_str(&format!(", torsion [{}]", tors.join(", ")));
            }
            assert_eq!(*line, expected, "{name}");
        }
        assert_eq!(lines.len(), homology.len() + 1, "{name}");
        return;
    }
    if let Some(betti) = obj.get("betti").and_then(Value::as_array) {
        assert_eq!(lines[0], format!("W = {}", set_text(&obj["support"])));
        for (i, (line, b)) in lines[1..].iter().zip(betti).enumerate() {
            assert_eq!(*line, format!("beta_{i} = {b}"), "{name}");
        }
        return;
    }
    if let Some(t) = obj.get("text").and_then(Value::as_str) {
        assert_eq!(lines[0], t, "{name}");
        if let Some(tc) = obj.get("tc1").and_then(Value::as_str) {
            assert_eq!(lines[1], format!("TC1: {tc} = 0"), "{name}");
        }
        return;
    }
    let mut all = Vec::new();
    leaves(j, &mut all);
    for leaf in all {
        assert!(text.contains(&leaf), "{name}: `{leaf}` missing from text report");
    }
}

#[test]
fn golden_reports_and_format_equivalence() {
    for (name, args) in cases() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let text = stdout(&args);
        let golden = tests_dir().join("golden");
        let expected_text = std::fs::read_to_string(golden.join(format!("{name}.txt"))).unwrap();
        assert_eq!(text, expected_text, "{name} text");
        let j = json(&args);
        let expected_json: Value =
            serde_json::from_str(&std::fs::read_to_string(golden.join(format!("{name}.json"))).unwrap()).unwrap();
        assert_eq!(j, expected_json, "{name} json");
        assert_equivalent(&name, &text, &j);
    }
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["tau1", "--poly", "t1+t2-2"]), "{0}\n");
    assert_eq!(
        stdout(&["sigma", "member", "--graph", "data/edge.g", "--chi", "a=1 b=1", "--q", "3", "--coeff", "Z"]),
        "true\n"
    );
    assert_eq!(
        stdout(&["toric", "resonance", "--complex", "data/p3.sc", "--i", "1", "--d", "1", "--field", "Q"]),
        "W = {a,c}\n"
    );
}

#[test]
fn subdivision_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let once = stdout(&["complex", "subdivide", "--complex", "data/rp2.sc"]);
    let path = dir.path().join("sd.sc");
    std::fs::write(&path, &once).unwrap();
    let p = path.to_str().unwrap();
    let expected = stdout(&["complex", "betti", "--complex", "data/rp2.sc", "--coeff", "Z"]);
    assert_eq!(stdout(&["complex", "betti", "--complex", p, "--coeff", "Z"]), expected);
    let j = json(&["complex", "subdivide", "--complex", "data/rp2.sc"]);
    assert_eq!(j["vertices"].as_array().unwrap().len(), 31);
    assert_eq!(j["facets"].as_array().unwrap().len(), 60);
}

#[test]
fn reports_are_byte_stable() {
    let args = ["sigma", "describe", "--graph", "data/c4.g", "--q", "2", "--coeff", "F2"];
    assert_eq!(stdout(&args), stdout(&args));
    let jobs = ["--jobs", "1", "sigma", "describe", "--graph", "data/c4.g", "--q", "2", "--coeff", "F2"];
    assert_eq!(stdout(&jobs), stdout(&args));
    assert_eq!(stdout(&["selfcheck", "--seed", "7"]), stdout(&["selfcheck", "--seed", "7"]));
}

#[test]
fn selfcheck_passes() {
    let j = json(&["selfcheck", "--rounds", "10"]);
    for c in j["checks"].as_array().unwrap() {
        assert!(c["failures"].as_array().unwrap().is_empty(), "{c}");
        assert!(c["checks"].as_u64().unwrap() >= 10);
    }
}

fn failure(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(2), "{args:?}");
    assert!(out.stdout.is_empty());
    String::from_utf8(out.stderr).unwrap()
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.sc");
    std::fs::write(&bad, "vertices: a b\nfacet: a b\nfacets a\n").unwrap();
    let msg = failure(&["complex", "betti", "--complex", bad.to_str().unwrap()]);
    assert!(msg.contains("line 3"), "{msg}");

    let msg = failure(&["tau1", "--poly", "t1 +"]);
    assert!(msg.contains("--poly #1"), "{msg}");

    let msg = failure(&["sigma", "member", "--graph", "data/edge.g", "--chi", "z=1", "--q", "1"]);
    assert!(msg.contains("unknown vertex `z`"), "{msg}");

    let msg = failure(&["sigma", "member", "--graph", "data/edge.g", "--chi", "a=0", "--q", "1"]);
    assert!(msg.contains("zero"), "{msg}");

    let msg = failure(&["toric", "resonance", "--complex", "data/rp2.sc", "--i", "1", "--cap", "4"]);
    assert!(msg.contains("cap 4") && msg.contains("size 6"), "{msg}");

    let msg = failure(&["artin-kernel", "v11", "--graph", "data/c4.g", "--chi", "a=1 b=2"]);
    assert!(msg.contains("assumption"), "{msg}");

    let msg = failure(&["cover", "toric", "--graph", "data/p3.g", "--nu", "2 2 2", "--q", "1"]);
    assert!(msg.contains("surjective"), "{msg}");

    failure(&["charvar1", "--presentation", "data/missing.p", "--point", "1 1"]);
    failure(&["complex", "betti", "--complex", "data/p3.sc", "--coeff", "F4"]);
    failure(&["toric", "charvar", "--complex", "data/p3.sc", "--i", "1", "--field", "Z"]);
    failure(&["sigma", "frobnicate"]);
}

#[test]
fn assumption_flag_is_echoed() {
    let args = [
        "artin-kernel",
        "sigma1",
        "--graph",
        "data/pendant.g",
        "--chi",
        "a=1 b=1 c=1 d=1 e=2",
        "--assume-trivial-monodromy",
    ];
    let text = stdout(&args);
    assert!(text.starts_with("assumed trivial monodromy: true\n"));
    assert!(text.contains("empty_sigma: true"));
    assert_eq!(json(&args)["assumed"], Value::Bool(true));
}
