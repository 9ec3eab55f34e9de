use dyncolor_web::{cycle_explorer, discharge_fixture, fixtures, random_coloring};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn cycle_values() {
    let c5 = parse(cycle_explorer(5));
    assert_eq!(c5["chi"], 3);
    assert_eq!(c5["chi_dynamic"], 5);
    assert!(c5["even_formula"].is_null());
    let c8 = parse(cycle_explorer(8));
    assert_eq!(c8["chi_dynamic"], 4);
    assert_eq!(c8["even_formula"], 4);
    assert_eq!(c8["svg"].as_str().unwrap().matches("<circle").count(), 8);
}

#[test]
fn cycle_bounds_are_errors() {
    assert!(parse(cycle_explorer(2))["error"].is_string());
    assert!(parse(cycle_explorer(25))["error"].is_string());
}

#[test]
fn random_drawing_is_colored() {
    let a = parse(random_coloring(30, 7, true));
    assert!(a["colors"].as_u64().unwrap() <= 11);
    assert_eq!(a["svg"].as_str().unwrap().matches("<circle").count(), 30);
    assert_eq!(a["fallback"], false);
    assert_eq!(a, parse(random_coloring(30, 7, true)));
    assert!(parse(random_coloring(0, 0, false))["error"].is_string());
}

#[test]
fn discharge_tables() {
    let names = parse(fixtures());
    for n in names.as_array().unwrap() {
        let r = parse(discharge_fixture(n.as_str().unwrap()));
        assert!(r["text"].as_str().unwrap().contains("total: initial"), "{n}");
    }
    assert_eq!(parse(discharge_fixture("octahedron"))["total_final"], "-8");
    assert!(parse(discharge_fixture("nope"))["error"].is_string());
}
