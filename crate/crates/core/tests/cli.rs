use std::path::Path;
use std::process::{Command, Output};

fn heislab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heislab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn growth_to(path: &Path, workers: &str) -> Output {
    heislab(&[
        "growth",
        "--suite",
        "thm5",
        "--p",
        "11,13",
        "--family",
        "random:size=5",
        "--sizes",
        "4,5",
        "--trials",
        "2",
        "--seed",
        "99",
        "--workers",
        workers,
        "--out",
        path.to_str().unwrap(),
    ])
}

#[test]
fn growth_is_byte_identical_across_runs_and_workers() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    assert!(growth_to(&a, "1").status.success());
    assert!(growth_to(&b, "4").status.success());
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn report_reads_growth_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.json");
    let out = heislab(&[
        "growth", "--suite", "thm4", "--p", "5", "--family", "interval:lo=0;hi=4", "--format", "json", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let out = heislab(&["report", "--in", path.to_str().unwrap(), "--theorem", "1.4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("min ratio 1.000000"), "{text}");
    let out = heislab(&["report", "--in", path.to_str().unwrap(), "--theorem", "1.9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.toml");
    let out = dir.path().join("rows.csv");
    std::fs::write(
        &cfg,
        format!("suite = \"thm3\"\np = [7]\nfamily = \"random:size=3\"\nseed = 1\nout = {:?}\n", out),
    )
    .unwrap();
    let run = heislab(&["growth", "--config", cfg.to_str().unwrap(), "--p", "11"]);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("# rng=chacha8\n"));
    assert!(text.lines().skip(2).all(|l| l.starts_with("thm3,F_11,")), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(heislab(&["field", "check", "--p", "3", "--k", "2"]).status.code(), Some(0));
    assert_eq!(heislab(&["field", "check", "--p", "9"]).status.code(), Some(2));
    assert_eq!(heislab(&["field", "check", "--p", "3", "--k", "2", "--modulus", "2,0,1"]).status.code(), Some(2));
    assert_eq!(heislab(&["growth", "--suite", "thm7", "--p", "5"]).status.code(), Some(2));
    assert_eq!(heislab(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    let ok = heislab(&["verify", "--suite", "reduction", "--json"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("\"failures\": []"));
}
