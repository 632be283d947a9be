use multibrot_core::certificates::{real_pcf_driver, quadratic_parabolic_driver, higher_degree_parabolic_driver, Verdict};
use serde_json::Value;

fn step_witness(report: &Value, claim: &str) -> Value {
    report["steps"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["claim"].as_str().unwrap().starts_with(claim))
        .unwrap_or_else(|| panic!("no step {claim}"))["witness"]
        .clone()
}

#[test]
fn pcf_table() {
    let r = real_pcf_driver(2, 9).unwrap();
    assert!(r.passed());
    let v = serde_json::to_value(&r).unwrap();
    let set = |d: u32| step_witness(&v, &format!("real PCF parameters for d = {d}"))["pcf"].clone();
    assert_eq!(set(2), serde_json::json!(["-2", "-1", "0"]));
    assert_eq!(set(4), serde_json::json!(["-1", "0"]));
    assert_eq!(set(3), serde_json::json!(["0"]));
    assert_eq!(set(9), serde_json::json!(["0"]));
}

#[test]
fn quadratic_parabolic() {
    let r = quadratic_parabolic_driver().unwrap();
    assert!(r.passed());
    let v = serde_json::to_value(&r).unwrap();
    let w = step_witness(&v, "totally real parabolic parameters for d = 2");
    assert_eq!(w["parameters"], serde_json::json!(["-7/4", "-5/4", "-3/4", "1/4"]));
    assert_eq!(r.step("negative control").unwrap().verdict, Verdict::Pass);
}

#[test]
fn higher_degree_parabolic() {
    let r = higher_degree_parabolic_driver(3, 6, 3).unwrap();
    assert!(r.passed(), "{}", serde_json::to_string_pretty(&r).unwrap());
    let v = serde_json::to_value(&r).unwrap();
    let params = |d: u32| step_witness(&v, &format!("totally real parabolic parameters for d = {d}"))["parameters"].clone();
    let three = params(3);
    assert_eq!(three.as_array().unwrap().len(), 2);
    assert_eq!(three[0]["minpoly"], "27T^2 - 4");
    for d in 4..=6 {
        assert_eq!(params(d).as_array().unwrap().len(), 0);
    }
    assert!(r.step("d = 4, degree 3").is_some());
    assert!(higher_degree_parabolic_driver(2, 4, 3).is_err());
}

#[test]
fn reports_are_deterministic() {
    let a = serde_json::to_string(&quadratic_parabolic_driver().unwrap()).unwrap();
    let b = serde_json::to_string(&quadratic_parabolic_driver().unwrap()).unwrap();
    assert_eq!(a, b);
}
