use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use strongkoszul::gallery::cycle_family_gb;
use strongkoszul::{Field, IdealPresentation};

fn skz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skz")).args(args).output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn report(args: &[&str]) -> (i32, Value) {
    let o = skz(args);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stderr)));
    assert_eq!(v["schema"], 1);
    (code(&o), v)
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("skz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn gb_shows_the_order_dependent_cubic() {
    let twisted = stdout(&skz(&["gb", "--ideal", "gallery:remark", "--order", "revlex:x3,x1,x2"]));
    assert!(twisted.lines().any(|l| l == "x2^3"), "{twisted}");
    let natural = stdout(&skz(&["gb", "--ideal", "remark"]));
    assert!(!natural.contains("x2^3"));
    assert!(natural.contains("# initial ideal: (x3^2, x2*x3, x2^2)"));
}

#[test]
fn gb_output_round_trips() {
    let out = stdout(&skz(&["gb", "--ideal", "gallery:cycle:5"]));
    let parsed = IdealPresentation::parse(&out).unwrap();
    let expected = cycle_family_gb(5, Field::Rational).unwrap();
    let expected: Vec<_> = expected.iter().map(|g| g.change_ring(parsed.ring()).unwrap()).collect();
    for g in parsed.gens() {
        assert!(expected.contains(g) || expected.contains(&g.neg()), "{g}");
    }
    let again = stdout(&skz(&["gb", "--ideal", temp_file("cycle5.txt", &out).to_str().unwrap()]));
    assert_eq!(IdealPresentation::parse(&again).unwrap().hash(), parsed.hash());
}

#[test]
fn koszul_verdicts_and_exit_codes() {
    let (c, v) = report(&["koszul", "--ideal", "clebsch", "--mode", "exhaustive"]);
    assert_eq!((c, v["verdict"].as_str().unwrap()), (0, "certified"));
    let (c, v) = report(&["koszul", "--ideal", "gallery:pfaffians:5:4"]);
    assert_eq!((c, v["verdict"].as_str().unwrap()), (1, "not-strongly-koszul"));
    assert!(v["result"]["witness"]["generator"].is_string());
    let (c, v) = report(&["koszul", "--ideal", "gallery:apolar:minors:2x2", "--mode", "sample:10", "--seed", "3"]);
    assert_eq!((c, v["seed"].as_u64()), (2, Some(3)));
    let (c, _) = report(&["koszul", "--ideal", "gallery:apolar:pf:6", "--mode", "theorem:sample:20"]);
    assert_eq!(c, 0);
}

#[test]
fn universal_verdicts_and_cap() {
    let (c, v) = report(&["universal", "--ideal", "gallery:minors:sym:3", "--mode", "exhaustive"]);
    assert_eq!((c, v["result"]["orders_checked"].as_u64()), (0, Some(720)));
    let (c, v) = report(&["universal", "--ideal", "remark"]);
    assert_eq!(c, 1);
    assert_eq!(v["result"]["witness"]["order"], "revlex:x1,x3,x2");
    let (c, _) = report(&["universal", "--ideal", "gallery:minors:gen:3x3", "--mode", "sample:30"]);
    assert_eq!(c, 2);
    let o = skz(&["universal", "--ideal", "gallery:pfaffians:5:4", "--mode", "exhaustive"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn obstruction_report() {
    let (c, v) = report(&["obstruction", "--ideal", "gallery:cycle:5"]);
    assert_eq!(c, 0);
    assert_eq!(v["result"]["excluded_characteristics"], serde_json::json!([2, 3, 11]));
    let f = temp_file("inconclusive.txt", "vars: x, y\nfield: QQ\nx^2\nx*y\n");
    let (c, v) = report(&["obstruction", "--ideal", f.to_str().unwrap()]);
    assert_eq!((c, v["verdict"].as_str().unwrap()), (2, "inconclusive"));
}

#[test]
fn sampled_runs_are_deterministic() {
    let args = ["universal", "--ideal", "gallery:apolar:pf:5", "--mode", "sample:25", "--seed", "9"];
    let (_, mut a) = report(&args);
    let (_, mut b) = report(&args);
    a["wall_seconds"] = Value::Null;
    b["wall_seconds"] = Value::Null;
    assert_eq!(a, b);
}

#[test]
fn apolar_from_gallery_and_file() {
    let out = stdout(&skz(&["apolar", "--forms", "gallery:forms:minors:2x2"]));
    assert!(out.contains("# hilbert function: [1, 4, 1, 0]"), "{out}");
    assert_eq!(IdealPresentation::parse(&out).unwrap().gens().len(), 9);
    let f = temp_file("clebsch-form.txt", "dualvars: X, Y, Z, T\nfield: QQ\nX^2*Y + Y^2*Z + Z^2*T + T^2*X\n");
    let out = stdout(&skz(&["apolar", "--forms", f.to_str().unwrap()]));
    assert!(out.contains("[1, 4, 4, 1, 0]"), "{out}");
    let o = skz(&["apolar", "--forms", "gallery:clebsch-form", "--field", "GF(2)"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn transform_applies_a_linear_change() {
    let map = temp_file("swap.map", "# exchange two coordinates\nx2 -> x3\nx3 -> x2\n");
    let out = stdout(&skz(&["transform", "--ideal", "remark", "--map", map.to_str().unwrap()]));
    assert!(out.contains("x1*x2 - x3^2") || out.contains("-x3^2 + x1*x2"), "{out}");
    assert!(out.contains("maximal degree 3"), "{out}");
    let bad = temp_file("bad.map", "x1 -> x1\nx2 -> x2^2\n");
    let o = skz(&["transform", "--ideal", "remark", "--map", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let f = temp_file("broken.txt", "vars: x, y\nfield: QQ\nx^2\nx*q\n");
    let o = skz(&["gb", "--ideal", f.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn field_override() {
    let out = stdout(&skz(&["gb", "--ideal", "remark", "--field", "GF(32003)"]));
    assert!(out.contains("field: GF(32003)"));
    assert_eq!(code(&skz(&["gb", "--ideal", "remark", "--field", "GF(33)"])), 3);
}

#[test]
fn verify_paper_filters() {
    let o = skz(&["verify-paper", "--filter", "severi"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("criterion")).count(), 1);
    assert!(out.contains("[PASS] severi "));
    let o = skz(&["verify-paper", "--filter", "no-such-check"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn gallery_listing() {
    let out = stdout(&skz(&["gallery", "list"]));
    assert!(out.lines().any(|l| l == "cayley"));
    let planes = stdout(&skz(&["gallery", "show", "lines27"]));
    assert_eq!(planes.lines().filter(|l| !l.starts_with('#')).count(), 45);
    assert_eq!(code(&skz(&["gallery", "show", "bogus"])), 3);
    assert_eq!(code(&skz(&["koszul", "--ideal", "clebsch", "--mode", "sometimes"])), 3);
    assert_eq!(code(&skz(&["frobnicate"])), 3);
}
