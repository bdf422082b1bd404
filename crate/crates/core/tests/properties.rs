use proptest::prelude::*;
use serde_json::json;

use mhag_core::enumerate::{CaseSet, Enumeration};
use mhag_core::session::Session;
use mhag_core::{AutPair, CElem, Field, Lc, Scalar};

fn q(field: Field, n: i64, d: i64) -> Scalar {
    let d = if d == 0 { 1 } else { d };
    field.parse(&format!("{n}/{d}")).unwrap_or_else(|_| field.int(n))
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(7)), Just(Field::Prime(101))]
}

proptest! {
    #[test]
    fn scalar_field_laws(f in field(), a in (-50i64..50, 1i64..9), b in (-50i64..50, 1i64..9), c in (-50i64..50, 1i64..9)) {
        let (a, b, c) = (q(f, a.0, a.1), q(f, b.0, b.1), q(f, c.0, c.1));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn linear_combinations_form_a_vector_space(xs in prop::collection::vec((0u8..6, -5i64..5), 0..8), ys in prop::collection::vec((0u8..6, -5i64..5), 0..8), c in -4i64..4) {
        let f = Field::Rational;
        let mk = |v: &[(u8, i64)]| {
            let mut x = Lc::<u8>::zero();
            for (l, k) in v {
                x.add_term(*l, f.int(*k));
            }
            x
        };
        let (x, y, c) = (mk(&xs), mk(&ys), f.int(c));
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert!(x.sub(&x).is_zero());
        prop_assert_eq!(x.add(&y).scale(&c), x.scale(&c).add(&y.scale(&c)));
        prop_assert!(x.iter().all(|(_, k)| !k.is_zero()));
    }

    #[test]
    fn sampled_cases_are_sorted_unique_and_in_range(sizes in prop::collection::vec(1usize..7, 1..5), count in 1usize..300, seed: u64) {
        let mode = Enumeration::Sampled { count, seed, window: None };
        let a = CaseSet::new(&sizes, &mode, "axiom");
        let b = CaseSet::new(&sizes, &mode, "axiom");
        let cases: Vec<Vec<usize>> = (0..a.len()).map(|i| a.get(i)).collect();
        prop_assert!(cases.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(cases.iter().all(|c| c.iter().zip(&sizes).all(|(i, n)| i < n)));
        prop_assert!(a.len() <= count);
        prop_assert_eq!(cases, (0..b.len()).map(|i| b.get(i)).collect::<Vec<_>>());
    }
}

fn s3() -> Session {
    Session::from_json(&json!({"instance": {"kind": "group", "group": {"kind": "symmetric", "degree": 3}}, "gradings": "inner"})).unwrap()
}

fn int() -> Session {
    let g = json!([["identity", "identity"], ["identity", "negation"], ["negation", "identity"], ["negation", "negation"]]);
    Session::from_json(&json!({"instance": {"kind": "group", "group": {"kind": "int"}}, "gradings": g})).unwrap()
}

const S3: [&str; 6] = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];

fn s3_elem(terms: &[(usize, usize, i64)]) -> CElem {
    let s = s3();
    let v: Vec<_> = terms.iter().map(|(a, b, c)| json!([c, S3[*a], S3[*b]])).collect();
    s.element(&json!(v)).unwrap()
}

fn terms(n: usize) -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    prop::collection::vec((0..n, 0..n, -3i64..4), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn s3_product_is_associative(p in 0usize..36, x in terms(6), y in terms(6), z in terms(6)) {
        let s = s3();
        let (d, p) = (&s.double, &s.gradings[p]);
        let (x, y, z) = (s3_elem(&x), s3_elem(&y), s3_elem(&z));
        prop_assert_eq!(d.mul(p, &d.mul(p, &x, &y), &z), d.mul(p, &x, &d.mul(p, &y, &z)));
    }

    #[test]
    fn s3_antipode_reverses_products(p in 0usize..36, x in terms(6), y in terms(6)) {
        let s = s3();
        let (d, p) = (&s.double, &s.gradings[p]);
        let (x, y) = (s3_elem(&x), s3_elem(&y));
        let pi = d.ginv(p);
        prop_assert_eq!(d.antipode(p, &d.mul(p, &x, &y)), d.mul(&pi, &d.antipode(p, &y), &d.antipode(p, &x)));
        prop_assert_eq!(d.antipode_inv(p, &d.antipode(p, &x)), x);
    }

    #[test]
    fn s3_crossing_is_an_action(m in 0usize..36, n in 0usize..36, q in 0usize..36, x in terms(6)) {
        let s = s3();
        let d = &s.double;
        let (m, n, q) = (&s.gradings[m], &s.gradings[n], &s.gradings[q]);
        let x = s3_elem(&x);
        let nq = d.xi_target(n, q);
        prop_assert_eq!(d.xi(m, &nq, &d.xi(n, q, &x)), d.xi(&d.gmul(m, n), q, &x));
    }

    #[test]
    fn grading_group_laws(a in 0usize..36, b in 0usize..36, c in 0usize..36) {
        let s = s3();
        let d = &s.double;
        let (a, b, c) = (&s.gradings[a], &s.gradings[b], &s.gradings[c]);
        prop_assert_eq!(d.gmul(&d.gmul(a, b), c), d.gmul(a, &d.gmul(b, c)));
        prop_assert!(d.gmul(a, &d.ginv(a)).is_unit());
    }

    #[test]
    fn integer_product_is_associative(p in 0usize..4, x in prop::collection::vec((-4i64..4, -4i64..4, 1i64..3), 1..3), y in prop::collection::vec((-4i64..4, -4i64..4, 1i64..3), 1..3), z in prop::collection::vec((-4i64..4, -4i64..4, 1i64..3), 1..3)) {
        let s = int();
        let (d, p): (_, &AutPair) = (&s.double, &s.gradings[p]);
        let el = |v: &[(i64, i64, i64)]| s.element(&json!(v.iter().map(|(a, b, c)| json!([c, a, b])).collect::<Vec<_>>())).unwrap();
        let (x, y, z) = (el(&x), el(&y), el(&z));
        prop_assert_eq!(d.mul(p, &d.mul(p, &x, &y), &z), d.mul(p, &x, &d.mul(p, &y, &z)));
        prop_assert_eq!(d.twist(p, &d.twist_inv(p, &x)), x);
    }
}
