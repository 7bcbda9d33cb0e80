use std::path::Path;
use std::process::{Command, Output};

use hallshuffle::shuffle::oracle::{gen_Pbar_value, random_point};
use hallshuffle::shuffle::{gen_H, gen_Sbar};
use hallshuffle::{Monomial, Presentation, RatFunc, ShuffleElement, SlopeParams, Vars};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const BIN: &str = env!("CARGO_BIN_EXE_hallshuffle");

fn run(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args).env_remove("HALLSHUFFLE_CACHE");
    match cache {
        Some(dir) => cmd.arg("--cache-dir").arg(dir),
        None => cmd.arg("--no-cache"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(args: &[&str], cache: Option<&Path>) -> String {
    let out = run(args, cache);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args, None).status.code().unwrap()
}

fn save(dir: &Path, name: &str, args: &[&str]) -> String {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let path = dir.join(name);
    std::fs::write(&path, stdout(&a, None)).unwrap();
    path.to_str().unwrap().to_string()
}

fn element(json: &str) -> ShuffleElement {
    ShuffleElement::from_json(json).unwrap()
}

#[test]
fn gen_h_0_1() {
    assert_eq!(stdout(&["gen", "H", "0", "1"], None).trim(), "(1 - q2)");
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["gen", "Pbar", "1", "1", "2", "--format", "json"],
        &["gen", "Sbar", "1", "2", "1", "--format", "latex"],
        &["gen", "ribbon", "1", "1", "+-"],
        &["phi", "1", "1", "hbar[2] - ebar[1]^2"],
    ];
    for args in cases {
        let plain = stdout(args, None);
        let cold = stdout(args, Some(dir.path()));
        let warm = stdout(args, Some(dir.path()));
        assert_eq!(plain, cold, "{args:?}");
        assert_eq!(plain, warm, "{args:?}");
    }
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), cases.len());
}

#[test]
fn corrupt_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["gen", "H", "1", "2"];
    let want = stdout(&args, Some(dir.path()));
    for e in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(e.unwrap().path(), "{ not json").unwrap();
    }
    assert_eq!(stdout(&args, Some(dir.path())), want);
}

#[test]
fn output_is_deterministic() {
    let args = ["gen", "Sbar", "1", "2", "2", "--format", "json"];
    assert_eq!(stdout(&args, None), stdout(&args, None));
}

#[test]
fn non_coprime_slopes_are_normalized_or_refused() {
    assert_eq!(stdout(&["gen", "Sbar", "2", "4", "1"], None), stdout(&["gen", "Sbar", "1", "2", "2"], None));
    let out = run(&["phi", "2", "4", "ebar[1]"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("are coprime"));
    assert_eq!(code(&["gen", "ribbon", "0", "2", "+"]), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["gen", "Q", "1"]), 2);
    assert_eq!(code(&["gen", "H", "x", "1"]), 2);
    assert_eq!(code(&["gen", "Sbar", "1", "1"]), 2);
    assert_eq!(code(&["phi", "0", "1", "ebar[2"]), 2);
    assert_eq!(code(&["mul", "/nonexistent/a.json", "/nonexistent/b.json"]), 2);
    assert_eq!(code(&["verify", "everything"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["gen", "ribbon", "1", "3", "+-"]), 2);
    assert_eq!(code(&["phi", "1", "2", "ebar[3]"]), 2);
    assert_eq!(code(&["affine", "bruhat", "s1", "s0 s1 s2 s0 s1 s2 s0 s1 s2 s0 s1 s2"]), 2);
}

#[test]
fn mul_by_unit_and_associativity() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.json");
    std::fs::write(&one, ShuffleElement::unit().to_json()).unwrap();
    let x = save(dir.path(), "x.json", &["gen", "Sbar", "1", "2", "1"]);
    let one = one.to_str().unwrap();
    let xj = std::fs::read_to_string(&x).unwrap();
    assert_eq!(element(&stdout(&["mul", one, &x, "--format", "json"], None)), element(&xj));
    assert_eq!(element(&stdout(&["mul", &x, one, "--format", "json"], None)), element(&xj));

    let h = save(dir.path(), "h.json", &["gen", "H", "0", "1"]);
    let hh = dir.path().join("hh.json");
    std::fs::write(&hh, stdout(&["mul", &h, &h, "--format", "json"], None)).unwrap();
    let hh = hh.to_str().unwrap();
    let left = stdout(&["mul", hh, &h, "--format", "json"], None);
    let right = stdout(&["mul", &h, hh, "--format", "json"], None);
    assert_eq!(element(&left), element(&right));
    assert_eq!(element(&left).n(), 3);
}

#[test]
fn square_of_sbar_111_matches_phi() {
    let dir = tempfile::tempdir().unwrap();
    let s = save(dir.path(), "s.json", &["gen", "Sbar", "1", "1", "1"]);
    let sq = stdout(&["mul", &s, &s, "--format", "json"], Some(dir.path()));
    let phi = stdout(&["phi", "1", "1", "ebar[1]^2", "--format", "json"], Some(dir.path()));
    assert_eq!(element(&sq), element(&phi));
    assert_eq!(stdout(&["mul", &s, &s, "--format", "json"], Some(dir.path())), sq);
}

#[test]
fn phi_examples() {
    let pbar = |a: &[&str]| element(&stdout(a, None));
    assert_eq!(pbar(&["phi", "0", "1", "pbar[1]", "--format", "json"]), pbar(&["gen", "Pbar", "0", "1", "1", "--format", "json"]));
    assert_eq!(pbar(&["phi", "1", "2", "ebar[2]", "--format", "json"]), pbar(&["gen", "Sbar", "1", "2", "2", "--format", "json"]));
    let h = pbar(&["phi", "0", "1", "h[2]", "--format", "json"]);
    let one_minus_q1 = RatFunc::binomial(&Vars::q(), &Monomial::var(0, 1), 1);
    assert_eq!(h, gen_H(0, 2).unwrap().scale(&one_minus_q1));
}

#[test]
fn affine_examples() {
    assert_eq!(stdout(&["affine", "convexpath", "w w", "-n", "4"], None).trim(), "[(1,2),(1,2)]");
    assert_eq!(stdout(&["affine", "length", "w"], None).trim(), "0");
    assert_eq!(stdout(&["affine", "cycles", "w w s1", "-n", "4"], None).trim(), "[(4,2)]");
    assert_eq!(stdout(&["affine", "degree", "w w s1 w^-1", "-n", "4"], None).trim(), "1");
    assert_eq!(stdout(&["affine", "compose", "s1", "s1", "-n", "3"], None).trim(), "[1, 2, 3]");
    assert_eq!(stdout(&["affine", "length", "s3 s1"], None).trim(), "2");
    assert_eq!(stdout(&["affine", "bruhat", "s1", "s1 s2"], None).trim(), "true");
    assert_eq!(stdout(&["affine", "centralizer", "1", "2", "2", "w"], None).lines().last(), Some("member: true"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["affine", "length", "s1 s2", "--format", "json"], None)).unwrap();
    assert_eq!(json["length"], "2");
}

#[test]
fn golden_pbar_1_1_2() {
    let golden = include_str!("golden/pbar_1_1_2.json");
    assert_eq!(stdout(&["gen", "Pbar", "1", "1", "2", "--format", "json"], None), golden);
    // the golden is certified by the pointwise evaluation of the defining sum
    let v = element(golden);
    let sp = SlopeParams { m: 1, n: 1, d: 2 };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 5 {
        let p = random_point(&mut rng, 2);
        let (Some(want), Ok(got)) = (gen_Pbar_value(sp, &p), v.eval(&p.as_vec())) else { continue };
        assert_eq!(got, want);
        checked += 1;
    }
}

#[test]
fn golden_sbar_0_2_1() {
    let golden = include_str!("golden/sbar_0_2_1.tex");
    assert_eq!(stdout(&["gen", "Sbar", "0", "2", "1", "--format", "latex"], None), golden);
    let direct = gen_Sbar(SlopeParams { m: 0, n: 1, d: 2 }, Presentation::A).unwrap();
    assert_eq!(golden.trim_end(), direct.to_latex());
}

#[test]
fn verify_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    stdout(&["gen", "H", "1", "2"], Some(dir.path()));
    let out = run(&["verify", "arith", "--format", "json"], Some(dir.path()));
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["id"] == "11" && c["status"] == "pass"));
    let cache = checks.iter().find(|c| c["id"] == "cache").unwrap();
    assert_eq!(cache["status"], "pass");

    // a tampered entry is caught even when reads are disabled
    for e in std::fs::read_dir(dir.path()).unwrap() {
        let path = e.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap().replacen("\"num\":\"1\"", "\"num\":\"2\"", 1);
        std::fs::write(&path, text).unwrap();
    }
    let out = Command::new(BIN).args(["verify", "arith", "--no-cache", "--cache-dir"]).arg(dir.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_shuffle_reports_the_known_failure() {
    let out = run(&["verify", "shuffle"], None);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("FAIL   1")), "{text}");
    assert!(text.lines().any(|l| l.starts_with("PASS 1-inv")), "{text}");
}
