//! Hand-computed values of the structure maps on small instances.

use mhag_core::session::Session;
use mhag_core::{AutPair, CElem, CTensor, Group, Lc};
use serde_json::{json, Value};

fn session(group: Value) -> Session {
    Session::from_json(&json!({"instance": {"kind": "group", "group": group}})).unwrap()
}

fn int() -> Session {
    session(json!({"kind": "int"}))
}

fn s3() -> Session {
    session(json!({"kind": "symmetric", "degree": 3}))
}

fn el(s: &Session, v: Value) -> CElem {
    s.element(&v).unwrap()
}

fn g(s: &Session, v: Value) -> AutPair {
    s.autos.pair(&v).unwrap()
}

fn tensor(s: &Session, terms: &[(Value, Value)]) -> CTensor {
    let mut t = CTensor::zero();
    for (l, r) in terms {
        let (l, r) = (el(s, json!([l])), el(s, json!([r])));
        let (l, r) = (*l.iter().next().unwrap().0, *r.iter().next().unwrap().0);
        t.add_term((l, r), s.double.one());
    }
    t
}

fn trivial() -> Value {
    json!(["identity", "identity"])
}

#[test]
fn integer_product_with_trivial_grading_adds_group_legs() {
    let s = int();
    let d = &s.double;
    let p = g(&s, trivial());
    assert_eq!(d.mul(&p, &el(&s, json!([[4, 2]])), &el(&s, json!([[4, 3]]))), el(&s, json!([[4, 5]])));
    assert!(d.mul(&p, &el(&s, json!([[4, 2]])), &el(&s, json!([[5, 3]]))).is_zero());
}

#[test]
fn integer_product_with_negated_second_leg_double_shifts() {
    let s = int();
    let p = g(&s, json!(["identity", "negation"]));
    // nonzero since 5 - 2·2 = 1
    assert_eq!(s.double.mul(&p, &el(&s, json!([[1, 2]])), &el(&s, json!([[5, 3]]))), el(&s, json!([[1, 5]])));
    assert!(s.double.mul(&p, &el(&s, json!([[1, 2]])), &el(&s, json!([[1, 3]]))).is_zero());
}

#[test]
fn s3_product_needs_conjugate_deltas() {
    let s = s3();
    let p = g(&s, trivial());
    let h3 = Group::symmetric(3);
    let c = h3.parse_str("(123)").unwrap();
    for h in h3.elements().unwrap() {
        let got = s.double.mul(&p, &el(&s, json!([["(23)", "(123)"]])), &el(&s, json!([["(12)", h3.name(h)]])));
        // (123)(12)(123)⁻¹ = (23)
        assert_eq!(got, el(&s, json!([["(23)", h3.name(h3.mul(c, h))]])));
    }
    assert!(s.double.mul(&p, &el(&s, json!([["(23)", "(123)"]])), &el(&s, json!([["(13)", "e"]]))).is_zero());
}

#[test]
fn twist_with_trivial_and_negated_gradings() {
    let s = int();
    let d = &s.double;
    let b = |v: i64| el(&s, json!([[0, v]])).iter().next().unwrap().0 .1;
    let a = |v: i64| el(&s, json!([[v, 0]])).iter().next().unwrap().0 .0;
    assert_eq!(d.twist_basis(&g(&s, trivial()), &b(2), &a(7)), el(&s, json!([[7, 2]])));
    assert_eq!(d.twist_basis(&g(&s, json!(["identity", "negation"])), &b(2), &a(7)), el(&s, json!([[3, 2]])));
}

#[test]
fn integer_counit() {
    let s = int();
    let d = &s.double;
    assert!(d.counit(&el(&s, json!([[0, 0]]))).is_one());
    assert!(d.counit(&el(&s, json!([[5, 4]]))).is_zero());
    assert_eq!(d.counit(&el(&s, json!([[2, 0, 0], [7, 1, 3]]))).to_string(), "2");
}

#[test]
fn covered_comultiplication_on_integers() {
    let s = int();
    let e = g(&s, trivial());
    let got = s.double.delta_right(&e, &e, &el(&s, json!([[5, 2]])), &el(&s, json!([[3, 0]])));
    assert_eq!(got, tensor(&s, &[(json!([2, 2]), json!([3, 2]))]));
}

#[test]
fn unit_covered_comultiplication_on_z2() {
    let s = session(json!({"kind": "cyclic", "order": 2}));
    let e = g(&s, trivial());
    let one = s.double.unit().unwrap();
    for u in [0, 1] {
        let got = s.double.delta_right(&e, &e, &el(&s, json!([[u, u]])), &one);
        let want = tensor(&s, &[(json!([u, u]), json!([0, u])), (json!([(u + 1) % 2, u]), json!([1, u]))]);
        assert_eq!(got, want);
    }
}

#[test]
fn antipodes() {
    let s = s3();
    let got = s.double.antipode(&g(&s, trivial()), &el(&s, json!([["(12)", "(123)"]])));
    assert_eq!(got, el(&s, json!([["(13)", "(132)"]])));

    let z = int();
    let e = g(&z, trivial());
    for (p, h) in [(3, 4), (-2, 5), (0, -1)] {
        assert_eq!(z.double.antipode(&e, &el(&z, json!([[p, h]]))), el(&z, json!([[-p, -h]])));
    }
}

#[test]
fn crossing_action_on_integers() {
    let s = int();
    let (e, m) = (g(&s, trivial()), g(&s, json!(["identity", "negation"])));
    let x = el(&s, json!([[3, 4]]));
    assert_eq!(s.double.xi(&e, &m, &x), x);
    assert_eq!(s.double.xi(&m, &e, &x), el(&s, json!([[-3, -4]])));
}

#[test]
fn r_matrix_on_integers() {
    let s = int();
    let e = g(&s, trivial());
    let got = s.double.r_left(&e, &el(&s, json!([[7, 0]])), &el(&s, json!([[4, 0]])));
    assert_eq!(got, tensor(&s, &[(json!([7, 4]), json!([4, 0]))]));
}

#[test]
fn zero_inputs_give_zero() {
    let s = s3();
    let p = g(&s, json!([{"kind": "inner", "by": "(12)"}, {"kind": "inner", "by": "(123)"}]));
    let x = el(&s, json!([["(12)", "(123)"]]));
    let zero = CElem::zero();
    assert!(s.double.mul(&p, &x, &zero).is_zero());
    assert!(s.double.xi(&p, &p, &zero).is_zero());
    assert!(s.double.delta_right(&p, &p, &zero, &x).is_zero());
    assert!(s.double.commutation_residual(&p, &Lc::zero(), &Lc::basis(x.iter().next().unwrap().0 .1, s.double.one()), &x).is_zero());
}
