use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn celltree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_celltree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(' ')))
}

fn generate(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let o = celltree(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn tau(file: &Path, method: &str, extra: &[&str]) -> Output {
    let mut args = vec!["tau", file.to_str().unwrap(), "--method", method];
    args.extend_from_slice(extra);
    celltree(&args)
}

#[test]
fn gen_examples() {
    let k62 = stdout(&celltree(&["gen", "simplex-skeleton", "6", "2"]));
    assert!(k62.starts_with("# seed 1 cap 5000000\n"));
    assert_eq!(field(&k62, "facets"), Some("20"));
    let facet_lines = k62.lines().filter(|l| l.split(' ').count() == 3 && !l.starts_with(|c: char| c.is_alphabetic() || c == '#')).count();
    assert_eq!(facet_lines, 20);

    let b = stdout(&celltree(&["gen", "named", "bipyramid"]));
    assert_eq!(field(&b, "facets"), Some("7"));

    let q = stdout(&celltree(&["gen", "hypercube", "3"]));
    let counts: Vec<usize> = q
        .lines()
        .filter(|l| l.starts_with("cells "))
        .map(|l| l.split(' ').count() - 2)
        .collect();
    assert_eq!(counts, vec![8, 12, 6, 1]);

    let again = stdout(&celltree(&["gen", "hypercube", "3"]));
    assert_eq!(q, again);
}

#[test]
fn tau_examples() {
    let dir = TempDir::new().unwrap();
    let b = generate(&dir, "b.txt", &["named", "bipyramid"]);
    let o = tau(&b, "reduced", &[]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(field(&text, "value"), Some("15"));
    assert_eq!(field(&text, "method"), Some("reduced"));
    assert!(text.contains("correction t_top-1(X) 1"));
    assert!(text.contains("hypothesis z-apc yes"));

    let r = generate(&dir, "r.txt", &["named", "rp2_six_vertex"]);
    assert_eq!(field(&stdout(&tau(&r, "alternating", &[])), "value"), Some("4"));
    let cell = generate(&dir, "c.txt", &["named", "rp2_cell"]);
    assert_eq!(field(&stdout(&tau(&cell, "covolume", &[])), "value"), Some("4"));

    let m = generate(&dir, "m.txt", &["named", "moebius"]);
    let lyons = stdout(&tau(&m, "lyons", &[]));
    let oracle = stdout(&tau(&m, "oracle", &[]));
    assert_eq!(field(&lyons, "value"), field(&oracle, "value"));
    assert_eq!(field(&stdout(&tau(&m, "lyons-spectral", &[])), "value"), field(&oracle, "value"));

    let k4 = generate(&dir, "k4.txt", &["simplex-skeleton", "4", "2"]);
    assert_eq!(field(&stdout(&tau(&k4, "pseudodet", &["--k", "1"])), "value"), Some("16"));
}

#[test]
fn weighted_tau() {
    let dir = TempDir::new().unwrap();
    let b = generate(&dir, "b.txt", &["named", "bipyramid"]);
    let weights = dir.path().join("w.txt");
    let lines: String = (0..7).map(|i| format!("2 {i} 2\n")).collect();
    std::fs::write(&weights, lines).unwrap();
    let w = weights.to_str().unwrap();
    for method in ["reduced", "pseudodet", "covolume", "oracle"] {
        let text = stdout(&tau(&b, method, &["--weights", w]));
        assert_eq!(field(&text, "value"), Some("480"), "{method}");
    }
    let a = stdout(&tau(&b, "weighted-alternating", &["--weights", "random", "--seed", "9"]));
    let o = stdout(&tau(&b, "algebraic-weighted", &["--weights", "random", "--seed", "9"]));
    assert_eq!(field(&a, "value"), field(&o, "value"));
    assert!(a.starts_with("# seed 9 "));
    assert!(a.contains("weights sampled ChaCha8 seed 9"));
}

#[test]
fn homology_critical_rooted() {
    let dir = TempDir::new().unwrap();
    let r = generate(&dir, "r.txt", &["named", "rp2_six_vertex"]);
    let h = stdout(&celltree(&["homology", r.to_str().unwrap()]));
    assert!(h.contains("H_1: Z^0 + Z/2"), "{h}");
    assert!(h.contains("z-apc no"));

    let k3 = generate(&dir, "k3.txt", &["simplex-skeleton", "3", "1"]);
    let c = stdout(&celltree(&["critical", k3.to_str().unwrap()]));
    assert!(c.contains("K_0 Z/3"), "{c}");
    assert!(c.contains("holds true"));

    let b = generate(&dir, "b.txt", &["named", "bipyramid"]);
    let p = celltree(&["rooted-poly", b.to_str().unwrap(), "--check"]);
    assert!(p.status.success());
    assert!(stdout(&p).contains("agree true"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(celltree(&["gen", "dodecahedron"]).status.code(), Some(2));
    assert_eq!(celltree(&["gen", "simplex-skeleton", "4"]).status.code(), Some(2));
    assert_eq!(celltree(&["gen", "simplex-skeleton", "x", "1"]).status.code(), Some(2));
    assert_eq!(celltree(&["frobnicate"]).status.code(), Some(2));
    let m = generate(&dir, "m.txt", &["named", "moebius"]);
    let o = tau(&m, "pseudodet", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("beta_1 = 1"));
    assert_eq!(tau(&m, "nope", &[]).status.code(), Some(2));
    let b = generate(&dir, "b.txt", &["named", "bipyramid"]);
    assert_eq!(tau(&b, "oracle", &["--cap", "3"]).status.code(), Some(3));
}

#[test]
fn verify_is_deterministic() {
    let a = celltree(&["verify", "duality", "--seed", "5"]);
    let b = celltree(&["verify", "duality", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("# verify suites=duality generator=ChaCha8 seed=5 samples=5 cap=5000000"));
    assert!(text.lines().last().unwrap().contains("fail 0"));

    let capped = stdout(&celltree(&["verify", "duality", "--cap", "10"]));
    assert!(capped.contains("\tskipped\t"));
    assert_eq!(celltree(&["verify", "everything"]).status.code(), Some(2));
}

#[test]
fn verify_families_and_theorems() {
    for suite in ["families", "theorems", "critical"] {
        let o = celltree(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", String::from_utf8_lossy(&o.stderr));
    }
}
