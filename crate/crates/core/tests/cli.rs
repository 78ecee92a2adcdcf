//! Golden tests of the command-line front end.

use std::path::Path;
use std::process::{Command, Output};

use symalg::format::{from_json, to_json};
use symalg::{Matrix, Scalar};

fn symalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symalg")).args(args).env_remove("SYMALG_SEED").output().unwrap()
}

fn write(dir: &Path, name: &str, m: &Matrix) -> String {
    let p = dir.join(name);
    std::fs::write(&p, to_json(m)).unwrap();
    p.to_string_lossy().into_owned()
}

fn report(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn reference_square() -> Matrix {
    Matrix::from_int_rows(&[
        &[-2, 3, 0, -4, 5, -2],
        &[1, -2, -1, 5, -6, 3],
        &[-2, 3, 0, -4, 5, -2],
        &[4, -5, 2, 2, -3, 0],
        &[-5, 6, -3, -1, 2, 1],
        &[4, -5, 2, 2, -3, 0],
    ])
}

#[test]
fn classify_most_perfect_square() {
    let dir = tempfile::tempdir().unwrap();
    let r = report(&symalg(&["classify", &write(dir.path(), "m.json", &reference_square())]));
    for p in ["S", "M", "P"] {
        assert_eq!(r["properties"][p]["weight"], "0", "{p}");
    }
    assert_eq!(r["composites"]["mps"], true);
}

#[test]
fn classify_e4_and_generic() {
    let dir = tempfile::tempdir().unwrap();
    let r = report(&symalg(&["classify", &write(dir.path(), "e.json", &Matrix::ones(4, 4))]));
    for (p, v) in r["properties"].as_object().unwrap() {
        assert_eq!(v["holds"], true, "{p}");
    }
    assert_eq!(r["properties"]["S"]["weight"], "1");

    let csv = dir.path().join("g.csv");
    std::fs::write(&csv, "1,2\n3,4\n").unwrap();
    let r = report(&symalg(&["classify", csv.to_str().unwrap()]));
    for flag in ["mps", "nqs", "rv", "as", "bs", "rs"] {
        assert_eq!(r["composites"][flag], false, "{flag}");
    }
}

#[test]
fn decompose_writes_exact_parts() {
    let dir = tempfile::tempdir().unwrap();
    let e = Matrix::ones(4, 4);
    let input = write(dir.path(), "e.json", &e);
    let prefix = dir.path().join("parts");
    let out = symalg(&["decompose", &input, "--split", "sv", "--out", prefix.to_str().unwrap()]);
    assert!(out.status.success());
    let read = |s: &str| from_json(&std::fs::read_to_string(format!("{}.{s}.json", prefix.display())).unwrap()).unwrap();
    assert_eq!(read("even"), e);
    assert_eq!(read("odd"), Matrix::zero(4));

    let m = Matrix::from_fn(5, 5, |i, j| Scalar::from_int((i * 5 + j * j) as i64 % 7 - 3));
    let input = write(dir.path(), "m.json", &m);
    for split in ["ba", "sv", "nm"] {
        let prefix = dir.path().join(split);
        assert!(symalg(&["decompose", &input, "--split", split, "--out", prefix.to_str().unwrap()]).status.success());
        let read = |s: &str| from_json(&std::fs::read_to_string(format!("{}.{s}.json", prefix.display())).unwrap()).unwrap();
        assert_eq!(&read("even") + &read("odd"), m, "{split}");
    }
}

#[test]
fn block_of_e3() {
    let dir = tempfile::tempdir().unwrap();
    let out = symalg(&["block", &write(dir.path(), "e.json", &Matrix::ones(3, 3))]);
    let b = from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(b.get(0, 1), &Scalar::sqrt2());
    assert_eq!(b.get(1, 1), &Scalar::one());
}

#[test]
fn construct_then_classify_every_type() {
    let dir = tempfile::tempdir().unwrap();
    for (tag, n, key) in [
        ("a", 5, "a"),
        ("b", 5, "b"),
        ("s", 5, "s"),
        ("v", 5, "v"),
        ("n", 5, "n"),
        ("m", 5, "m"),
        ("r", 5, "r"),
        ("p", 4, "p"),
        ("q", 4, "q"),
    ] {
        let path = dir.path().join(format!("{tag}.json"));
        let out = symalg(&["construct", "--type", tag, "--n", &n.to_string(), "--seed", "7", "-o", path.to_str().unwrap()]);
        assert!(out.status.success(), "{tag}: {}", String::from_utf8_lossy(&out.stderr));
        let r = report(&symalg(&["classify", path.to_str().unwrap()]));
        assert_eq!(r["spaces"][key], true, "{tag}");
    }
    for (tag, n, key) in [("mps", 6, "mps"), ("nqs", 4, "nqs"), ("rv", 5, "rv")] {
        let path = dir.path().join(format!("{tag}.json"));
        assert!(symalg(&["construct", "--type", tag, "--n", &n.to_string(), "--seed", "7", "-o", path.to_str().unwrap()])
            .status
            .success());
        let r = report(&symalg(&["classify", path.to_str().unwrap()]));
        assert_eq!(r["composites"][key], true, "{tag}");
    }
}

#[test]
fn construct_is_deterministic_and_honours_env_seed() {
    let run = |seed: Option<&str>, args: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_symalg"));
        c.args(args).env_remove("SYMALG_SEED");
        if let Some(s) = seed {
            c.env("SYMALG_SEED", s);
        }
        c.output().unwrap().stdout
    };
    let a = run(None, &["construct", "--type", "s", "--n", "6", "--seed", "3"]);
    let b = run(Some("3"), &["construct", "--type", "s", "--n", "6"]);
    let c = run(Some("4"), &["construct", "--type", "s", "--n", "6"]);
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn construct_with_weight_and_params() {
    let dir = tempfile::tempdir().unwrap();
    let out = symalg(&["construct", "--type", "rv", "--n", "4", "--w", "1"]);
    let m = from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(symalg::classify(&m).unwrap().weight(symalg::Property::A), Some(&Scalar::one()));

    let params = dir.path().join("p.json");
    std::fs::write(
        &params,
        r#"{"form": "mps_block", "a": ["1","-2","1"], "b": ["-2","4","-2"],
            "z": [["1","0","-1"],["-1","0","1"],["1","0","-1"]]}"#,
    )
    .unwrap();
    let out = symalg(&["construct", "--type", "mps", "--n", "6", "--params", params.to_str().unwrap()]);
    let m = from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(m.scale(&Scalar::from_int(2)), reference_square());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n": 2, "entries": ["1", "x", "2", "3"]}"#).unwrap();
    assert_eq!(symalg(&["classify", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(symalg(&["classify", "/nonexistent/file.json"]).status.code(), Some(2));
    let rect = dir.path().join("rect.csv");
    std::fs::write(&rect, "1,2,3\n4,5,6\n").unwrap();
    assert_eq!(symalg(&["classify", rect.to_str().unwrap()]).status.code(), Some(2));

    // Odd n for a quartered type, and a violated block precondition.
    assert_eq!(symalg(&["construct", "--type", "p", "--n", "5"]).status.code(), Some(3));
    let params = dir.path().join("p.json");
    std::fs::write(&params, r#"{"form": "mps_block", "a": ["1","1"], "b": ["0","0"], "z": [["0","0"],["0","0"]]}"#).unwrap();
    let out = symalg(&["construct", "--type", "mps", "--n", "4", "--params", params.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let odd = write(dir.path(), "odd.json", &Matrix::ones(3, 3));
    assert_eq!(symalg(&["decompose", &odd, "--split", "qp"]).status.code(), Some(3));

    assert_eq!(symalg(&["verify", "--suite", "dimensions", "--n-max", "3", "--trials", "5"]).status.code(), Some(0));
    assert_eq!(symalg(&["dim", "--space", "V", "--n", "4"]).status.code(), Some(0));
}
