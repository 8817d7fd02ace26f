use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn relfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relfree")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn analyze_json(name: &str) -> Value {
    let out = relfree(&["analyze", data(name).to_str().unwrap(), "--json"]);
    serde_json::from_str(&stdout(&out)).expect("json report")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn analyze_bs12() {
    let out = relfree(&["analyze", data("bs12.pres").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("NO_FREE (BaumslagSolitar12)"), "{text}");
    assert!(text.contains("Theorem 2"));

    let v = analyze_json("bs12.pres");
    assert_eq!(v["verdict"], "NO_FREE");
    assert_eq!(v["reason"], "BaumslagSolitar12");
    assert_eq!(v["diagnostics"]["abelianization_divisors"], serde_json::json!([1, 0]));
    assert_eq!(v["model"], "Baumslag-Solitar matrices");
    assert!(v["trace"].as_array().unwrap().iter().all(|s| !s["citation"].as_str().unwrap().is_empty()));
}

#[test]
fn analyze_free_coefficients() {
    let v = analyze_json("free_coefficients.pres");
    assert_eq!(v["verdict"], "HAS_FREE");
    let w = &v["witnesses"][0];
    assert_eq!((w["u"].as_str(), w["v"].as_str()), (Some("g1"), Some("g2")));
    assert_eq!(w["status"], "bounded-verified");
    assert_eq!(w["depth"], 10);
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(code(&relfree(&["analyze", data("sum_two.pres").to_str().unwrap()])), 2);
    assert_eq!(code(&relfree(&["analyze", data("two_generators.pres").to_str().unwrap()])), 0);
    assert_eq!(code(&relfree(&["analyze", "/nonexistent/file.pres"])), 1);

    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("coeff Z\ntpart F 1\n", 1),
        ("coeff Q\ntpart F 1\nrelator t\n", 1),
        ("coeff Z\ntpart F 1\nrelator g y\n", 1),
        ("coeff F 0\ntpart F 1\nrelator t\n", 1),
        ("coeff Z\ntpart Z/2\nrelator g t\n", 2),
        ("coeff Z\ntpart F 0\nrelator g\n", 2),
        ("coeff Z\ntpart Z^2\nrelator g x1^2\n", 2),
    ];
    for (i, (text, expected)) in cases.iter().enumerate() {
        let p = write(dir.path(), &format!("case{i}.pres"), text);
        let out = relfree(&["analyze", p.to_str().unwrap()]);
        assert_eq!(code(&out), *expected, "{text:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(code(&relfree(&["frobnicate"])), 1);
    assert_eq!(code(&relfree(&["--help"])), 0);
}

#[test]
fn trace_verbose_adds_intermediates() {
    let path = data("bs12.pres");
    let plain = relfree(&["analyze", path.to_str().unwrap(), "--json"]);
    let verbose = relfree(&["analyze", path.to_str().unwrap(), "--json", "--trace-verbose"]);
    let (p, v): (Value, Value) =
        (serde_json::from_str(&stdout(&plain)).unwrap(), serde_json::from_str(&stdout(&verbose)).unwrap());
    assert!(p["diagnostics"].get("intermediates").is_none());
    assert!(v["diagnostics"]["intermediates"]["cyclic_reduction"].is_string());
    assert!(v["diagnostics"]["intermediates"]["form1"].is_string());
}

#[test]
fn verify_outcomes() {
    let bs = data("bs12.pres");
    let out = relfree(&["verify", bs.to_str().unwrap(), "--u", "g", "--v", "t", "--depth", "5"]);
    assert_eq!(code(&out), 3);
    assert_eq!(stdout(&out).trim(), "counterexample: u v^2 u^-1 v^-1");
    let out = relfree(&["verify", bs.to_str().unwrap(), "--u", "g", "--v", "t", "--depth", "4"]);
    assert_eq!(code(&out), 0);

    let f2 = data("free_coefficients.pres");
    let out = relfree(&["verify", f2.to_str().unwrap(), "--u", "g1", "--v", "g2", "--depth", "8", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"], "pass");
    assert_eq!(v["depth"], 8);

    let one = data("complexity_one.pres");
    assert_eq!(code(&relfree(&["verify", one.to_str().unwrap(), "--u", "g1", "--v", "g2"])), 2);
    assert_eq!(code(&relfree(&["verify", f2.to_str().unwrap(), "--u", "g7", "--v", "g2"])), 1);
}

#[test]
fn oracles() {
    let out = relfree(&["oracle", "complexity", "--seq", "++-"]);
    assert_eq!((code(&out), stdout(&out).trim().to_string()), (0, "One".to_string()));
    let out = relfree(&["oracle", "power", "x1 x2 x1 x2"]);
    assert_eq!(stdout(&out).trim(), "root x1 x2 k=2");
    let out = relfree(&["oracle", "power", "x1 x2"]);
    assert_eq!(stdout(&out).trim(), "not a proper power");
    let out = relfree(&["oracle", "snf", "2 0; 0 3"]);
    assert_eq!(stdout(&out).trim(), "1 6");
    assert_eq!(code(&relfree(&["oracle", "complexity", "--seq", "+x-"])), 1);
    assert_eq!(code(&relfree(&["oracle", "snf", "1 2; 3"])), 1);
}

#[test]
fn batch_reports_are_deterministic() {
    let names = ["bs12.pres", "free_coefficients.pres", "complexity_one.pres", "amalgam.pres", "two_generators.pres"];
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        for n in names {
            std::fs::copy(data(n), dir.path().join(n)).unwrap();
        }
        let out = relfree(&["analyze", dir.path().to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        let lines = stdout(&out).lines().count();
        assert_eq!(lines, names.len());
        let reports: Vec<Vec<u8>> =
            names.iter().map(|n| std::fs::read(dir.path().join(n).with_extension("report.json")).unwrap()).collect();
        reports
    };
    let first = run();
    assert_eq!(first, run());

    // each batch report matches the single-file JSON output
    for (n, report) in names.iter().zip(&first) {
        let single = relfree(&["analyze", data(n).to_str().unwrap(), "--json"]);
        let (a, b): (Value, Value) =
            (serde_json::from_slice(report).unwrap(), serde_json::from_slice(&single.stdout).unwrap());
        assert_eq!(a["verdict"], b["verdict"], "{n}");
        assert_eq!(a["trace"], b["trace"], "{n}");
    }
}

#[test]
fn batch_exit_code_reflects_worst_file() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(data("bs12.pres"), dir.path().join("a.pres")).unwrap();
    std::fs::copy(data("sum_two.pres"), dir.path().join("b.pres")).unwrap();
    assert_eq!(code(&relfree(&["analyze", dir.path().to_str().unwrap()])), 2);
    write(dir.path(), "c.pres", "coeff Z\n");
    let out = relfree(&["analyze", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("c.pres: error"));
    assert!(dir.path().join("a.report.json").exists());
}
