use std::path::PathBuf;

use apa_cli::format::{parse_algebra, print_algebra};
use apa_cli::reproduce::{run_reproduction, Config};
use apa_cli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use apa_core::freeobjects::{build_ak, AkElement, FreeObject};
use apa_core::{CayleyTable, Result};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn apa(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("apa").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("apa-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn check_reports_requested_properties() {
    let (code, out, _) = apa(&["check", &data("ex_left.pa"), "--prop", "apa,ltd"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, _, _) = apa(&["check", &data("pair49.pa"), "--prop", "ltd"]);
    assert_eq!(code, EXIT_FAILED);
    let (code, _, _) = apa(&["check", &data("pair49.pa"), "--prop", "apa"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn check_json_is_parseable() {
    let (code, out, _) = apa(&["--json", "check", &data("prop_both3.pa")]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["classification"]["is_ltd"], true);
    assert_eq!(v["classification"]["is_rtd"], true);
}

#[test]
fn singleton_satisfies_everything() {
    let f = scratch("one.pa", "n 1\ndot\n0\nstar\n0\n");
    let (code, out, _) = apa(&["check", &f, "--all"]);
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn malformed_files_are_usage_errors() {
    let range = scratch("range.pa", "n 2\ndot\n0 0\n0 2\nstar\n0 1\n0 1\n");
    let (code, _, err) = apa(&["check", &range]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 4"), "{err}");
    let syntax = scratch("syntax.pa", "n two\n");
    assert_eq!(apa(&["check", &syntax]).0, EXIT_USAGE);
    assert_eq!(apa(&["check", "/nonexistent/file.pa"]).0, EXIT_USAGE);
    assert_eq!(apa(&["frobnicate"]).0, EXIT_USAGE);
}

#[test]
fn build_ak_prints_the_table() {
    let (code, out, _) = apa(&["build", "ak", "--k", "2", "--n", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "n 3\nelements (0,1) (1,1) (2,1)\nstar\n1 2 1\n2 1 2\n1 2 1\n"
    );
}

#[test]
fn tensor_of_c1_has_alternating_rows() {
    let (code, out, err) = apa(&[
        "tensor",
        "--mode",
        "ltd",
        "--star",
        &data("c1.pa"),
        "--names",
        "x,y",
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    let f = parse_algebra(&out).unwrap();
    let star = f.star.unwrap();
    for x in 0..6 {
        let want: Vec<u32> = if x % 2 == 0 {
            vec![1, 0, 3, 2, 5, 4]
        } else {
            (0..6).collect()
        };
        assert_eq!(star.row(x), want.as_slice());
    }
}

#[test]
fn census_order_two_has_no_violations() {
    let (code, out, _) = apa(&[
        "--json",
        "census",
        "--order",
        "2",
        "--all-dots",
        "--crosscheck",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total"], 22);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn census_is_thread_count_independent() {
    let a = apa(&["--jobs", "1", "census", "--order", "3", "--all-dots"]);
    let b = apa(&["--jobs", "4", "census", "--order", "3", "--all-dots"]);
    assert_eq!(a, b);
}

#[test]
fn present_default_has_seven_elements() {
    let (code, out, _) = apa(&["present"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("size: 7\n"), "{out}");
    assert!(
        out.contains("labels: [a, b, a^2, ab, ba, a^3, aba]"),
        "{out}"
    );
}

#[test]
fn shipped_files_round_trip() {
    for name in ["ex_left.pa", "pair49.pa", "c1.pa", "prop_both3.pa"] {
        let text = std::fs::read_to_string(data(name)).unwrap();
        let f = parse_algebra(&text).unwrap();
        assert_eq!(print_algebra(&f), text, "{name}");
    }
}

fn corrupted_ak(k: usize, n: usize) -> Result<FreeObject<AkElement>> {
    let mut obj = build_ak(k, n)?;
    let m = obj.table.n();
    let mut cells: Vec<usize> = obj.table.cells().collect();
    cells[0] = (cells[0] + 1) % m;
    obj.table = CayleyTable::new(m, cells)?.with_labels(obj.table.labels().unwrap().to_vec())?;
    Ok(obj)
}

#[test]
fn reproduction_detects_a_corrupted_builder() {
    let honest = run_reproduction(&Config::default());
    let broken = run_reproduction(&Config {
        ak: corrupted_ak,
        ..Config::default()
    });
    assert!(
        broken.failed > honest.failed,
        "{} vs {}",
        broken.failed,
        honest.failed
    );
}
