use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bolkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bolkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn construct(dir: &TempDir, file: &str, spec: &[&str]) -> PathBuf {
    let path = dir.path().join(file);
    let mut args = vec!["construct"];
    args.extend_from_slice(spec);
    args.extend_from_slice(&["-o", p(&path)]);
    let out = bolkit(&args);
    assert!(
        out.status.success(),
        "{spec:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    path
}

#[test]
fn check_order8_fixture() {
    let out = bolkit(&["check", p(&fixture("bol8_commutant_rnuc.tbl"))]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("commutant: {1,2,3,4}\n"));
    assert!(text.contains("left_bol: true\n"));
}

#[test]
fn check_z2_and_bad_input() {
    let dir = TempDir::new().unwrap();
    let z2 = dir.path().join("z2.tbl");
    fs::write(&z2, "2\n1 2\n2 1\n").unwrap();
    let out = bolkit(&["check", p(&z2)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("associative: true\n"));

    let bad = dir.path().join("bad.tbl");
    fs::write(&bad, "2\n1 1\n2 1\n").unwrap();
    let out = bolkit(&["check", p(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));

    assert_eq!(
        bolkit(&["check", p(&dir.path().join("missing.tbl"))])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn construct_then_check() {
    let dir = TempDir::new().unwrap();
    let q9 = construct(&dir, "q9.tbl", &["q9", "000000000"]);
    let text = fs::read_to_string(&q9).unwrap();
    assert_eq!(text.lines().count(), 17);
    assert!(text.starts_with("16\n"));
    assert_eq!(bolkit(&["check", p(&q9)]).status.code(), Some(0));

    let order12 = construct(&dir, "o12.tbl", &["named order12"]);
    let report = stdout(&bolkit(&["check", p(&order12)]));
    assert!(report.contains("order: 12\n"));
    assert!(report.contains("commutant_size: 3\n"));
    assert!(report.contains("commutant_is_subloop: false\n"));

    let semi = construct(
        &dir,
        "semi.tbl",
        &["semidirect", "K=cyclic:3", "E=elem2:2", "tau=0,0,0,1"],
    );
    assert_eq!(fs::read(&semi).unwrap(), fs::read(&order12).unwrap());
}

#[test]
fn construct_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = construct(&dir, "a.tbl", &["q9 1,0,1,0,0,1,0,0,1"]);
    let b = construct(&dir, "b.tbl", &["q9", "101001001"]);
    assert_eq!(fs::read(a).unwrap(), fs::read(b).unwrap());
}

#[test]
fn construct_rejects_bad_specs() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("x.tbl");
    for spec in ["q9 01", "named order13", "semidirect K=cyclic:3", "bogus"] {
        let res = bolkit(&["construct", spec, "-o", p(&out)]);
        assert_eq!(res.status.code(), Some(2), "{spec}");
    }
    assert!(!out.exists());
}

#[test]
fn exceptional_matches_fixture() {
    let dir = TempDir::new().unwrap();
    let ex = construct(&dir, "ex.tbl", &["exceptional"]);
    let out = bolkit(&["iso", p(&ex), p(&fixture("bol16_trivial_lnuc.tbl"))]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("isomorphic: [1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16]"));

    let other = construct(&dir, "q.tbl", &["q9 000000000"]);
    let out = bolkit(&["iso", p(&ex), p(&other)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "not isomorphic\n");
}

#[test]
fn classify_listed_tuples() {
    const LISTED: [&str; 19] = [
        "000000000",
        "000000001",
        "000000011",
        "000000110",
        "000000111",
        "000001111",
        "001000000",
        "001000001",
        "001000011",
        "001000100",
        "001000101",
        "001000110",
        "001001100",
        "101000000",
        "101000001",
        "101000010",
        "101000011",
        "101000110",
        "101001001",
    ];
    let dir = TempDir::new().unwrap();
    let mut files: Vec<PathBuf> = LISTED
        .iter()
        .map(|bits| construct(&dir, &format!("{bits}.tbl"), &["q9", bits]))
        .collect();
    let args = |fs: &[PathBuf]| {
        let mut a = vec!["classify".to_string()];
        a.extend(fs.iter().map(|f| p(f).to_string()));
        a
    };
    let run = |fs: &[PathBuf]| {
        let a = args(fs);
        stdout(&bolkit(&a.iter().map(String::as_str).collect::<Vec<_>>()))
    };
    let text = run(&files);
    assert!(text.ends_with("classes: 19\n"));
    assert!(text.starts_with("class 1: size 1 representative "));
    files.push(fixture("bol16_trivial_lnuc.tbl"));
    assert!(run(&files).ends_with("classes: 20\n"));
    assert!(run(&[files[0].clone(), files[0].clone()]).ends_with("classes: 1\n"));
}

#[test]
fn enumerate_q9_classes() {
    let out = bolkit(&["enumerate-q9", "--classify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("class ")).count(), 19);
    assert!(text.ends_with("classes: 19\n"));

    let listing = stdout(&bolkit(&["enumerate-q9"]));
    assert_eq!(listing.lines().count(), 512);
    assert!(listing
        .lines()
        .all(|l| l.contains("left_bol=true") && l.contains("commutant_is_subloop=false")));
    assert_eq!(listing, stdout(&bolkit(&["enumerate-q9"])));
}

#[test]
fn enumerate_q9_writes_files() {
    let dir = TempDir::new().unwrap();
    let out = bolkit(&["enumerate-q9", "--out-dir", p(dir.path())]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 512);
    assert!(dir.path().join("q9_101001001.tbl").exists());
}

#[test]
fn order8_oracle() {
    let out = bolkit(&["oracle", "order8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("group classes: 5\n"));
    assert!(text.contains("tables with non-subloop commutant: 0\n"));
    assert!(text.contains("all commutants are subloops: true\n"));

    let out = bolkit(&["oracle", "order8", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_paper_passes() {
    let out = bolkit(&["verify-paper"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.lines().any(|l| l.starts_with("PASS sec6-19-noniso:")));
    assert!(text
        .lines()
        .any(|l| l.starts_with("PASS sec5-order8-oracle:")));
    assert!(text.ends_with("13/13 claims passed\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(bolkit(&[]).status.code(), Some(2));
    assert_eq!(bolkit(&["construct", "exceptional"]).status.code(), Some(2));
    assert_eq!(bolkit(&["frobnicate"]).status.code(), Some(2));
}
