use serde_json::{json, Value};
use torus_contact::arith::{neg_cf, torus_knot_params, NegCf, TorusKnotParams};
use torus_contact::diagram::{enumerate_presentations, Presentation};
use torus_contact::floer::{hfk_minus, GradedModule};
use torus_contact::invariants::{classical_invariants, ClassicalInvariants};

#[test]
fn params_schema() {
    let t = torus_knot_params(5, 8).unwrap();
    let v = serde_json::to_value(t).unwrap();
    assert_eq!(
        v,
        json!({"p": 5, "q": 8, "p_prime": 3, "q_prime": 5, "n": 2, "k": 2, "C": 3, "D": 1})
    );
    assert_eq!(serde_json::from_value::<TorusKnotParams>(v).unwrap(), t);
}

#[test]
fn cf_schema() {
    let cf = neg_cf(8, 5).unwrap();
    let v = serde_json::to_value(&cf).unwrap();
    assert_eq!(v, json!([2, 3, 2]));
    assert_eq!(serde_json::from_value::<NegCf>(v).unwrap(), cf);
    assert!(serde_json::from_value::<NegCf>(json!([2, 1])).is_err());
}

#[test]
fn presentation_schema() {
    let t = torus_knot_params(2, 3).unwrap();
    let x = Presentation::new(t, [vec![1], vec![1, 0]], 2, 1).unwrap();
    let v = serde_json::to_value(&x).unwrap();
    assert_eq!(
        v,
        json!({
            "p": 2, "q": 3,
            "chains": [{"tb": [-2], "rot": [1]}, {"tb": [-2, -1], "rot": [1, 0]}],
            "stab_pos": 2, "stab_neg": 1
        })
    );
    assert_eq!(serde_json::from_value::<Presentation>(v).unwrap(), x);
    let bad = json!({"p": 2, "q": 3, "chains": [{"tb": [-2], "rot": [0]}, {"tb": [-2, -1], "rot": [1, 0]}], "stab_pos": 0, "stab_neg": 0});
    assert!(serde_json::from_value::<Presentation>(bad).is_err());
}

#[test]
fn presentations_roundtrip() {
    for x in enumerate_presentations(&torus_knot_params(3, 7).unwrap(), 1).unwrap() {
        let text = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<Presentation>(&text).unwrap(), x);
    }
}

#[test]
fn invariants_schema() {
    let t = torus_knot_params(2, 3).unwrap();
    let x = Presentation::new(t, [vec![1], vec![1, 0]], 0, 0).unwrap();
    let inv = classical_invariants(&x).unwrap();
    let v = serde_json::to_value(inv).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys.len(), 5);
    for k in ["tb", "rot", "d3", "A", "M"] {
        assert!(keys.contains(&k), "{k}");
    }
    assert_eq!(
        serde_json::from_value::<ClassicalInvariants>(v).unwrap(),
        inv
    );
}

#[test]
fn module_schema() {
    let m = hfk_minus(3, 4).unwrap();
    let v = serde_json::to_value(&m).unwrap();
    let towers = v["towers"].as_array().unwrap();
    assert_eq!(towers.len(), 3);
    assert!(towers.iter().any(|t| t["order"] == Value::Null));
    for t in towers {
        assert!(t["bottom_A"].is_i64() && t["bottom_M"].is_i64());
    }
    assert_eq!(serde_json::from_value::<GradedModule>(v).unwrap(), m);
}
