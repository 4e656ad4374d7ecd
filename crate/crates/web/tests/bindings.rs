use strongkoszul_web::{apolar_text, example_text, groebner_text, koszul_json};

#[test]
fn groebner_on_the_remark_ideal() {
    let ideal = example_text("remark").unwrap();
    assert!(groebner_text(&ideal, "revlex:x3,x1,x2").unwrap().lines().any(|l| l == "x2^3"));
    assert!(!groebner_text(&ideal, "").unwrap().contains("x2^3"));
    assert!(groebner_text(&ideal, "revlex:x3,x1").is_err());
}

#[test]
fn koszul_verdicts() {
    let v: serde_json::Value = serde_json::from_str(&koszul_json(&example_text("clebsch").unwrap()).unwrap()).unwrap();
    assert_eq!(v["verdict"], "certified");
    assert_eq!(v["pairs_checked"], 32);
    let v: serde_json::Value = serde_json::from_str(&koszul_json("vars: x, y\nx^2 - x*y\n").unwrap()).unwrap();
    assert_eq!(v["verdict"], "not-strongly-koszul");
    assert!(koszul_json(&example_text("pfaffians:5:4").unwrap()).unwrap_err().contains("cap"));
}

#[test]
fn apolar_of_the_cubic() {
    let out = apolar_text(&example_text("clebsch-form").unwrap()).unwrap();
    assert!(out.ends_with("# hilbert function: [1, 4, 4, 1, 0]\n"), "{out}");
    assert!(apolar_text("vars: x\nx\n").is_err());
    assert!(example_text("lines27").is_err());
}
