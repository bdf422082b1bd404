use std::sync::Arc;

use mhag_core::aut::inner_pairs;
use mhag_core::crossed::Double;
use mhag_core::oracle::{double_celem, group_celem, group_ctensor, DoubleOracle, GroupOracle};
use mhag_core::pairing::{DoublePairing, GroupPairing};
use mhag_core::{AutPair, Automorphism, CElem, Field, Group};

fn sign_pairs(g: &Group) -> Vec<AutPair> {
    let id = Automorphism::identity(g);
    let neg = if g.is_finite() {
        let images: Vec<(i64, i64)> = g.elements().unwrap().into_iter().map(|x| (x, g.inv(x))).collect();
        Automorphism::from_images(g, &images).unwrap()
    } else {
        Automorphism::negation(g).unwrap()
    };
    let mut out = vec![];
    for a in [&id, &neg] {
        for b in [&id, &neg] {
            out.push(AutPair::new(a.clone(), b.clone()));
        }
    }
    out
}

fn check_group_case(g: &Group, pairs: &[AutPair], elems: &[i64]) {
    let f = Field::Rational;
    let d = Double::new(Arc::new(GroupPairing::new(g.clone(), f)));
    let o = GroupOracle { group: g };
    let pts: Vec<(i64, i64)> = elems.iter().flat_map(|&p| elems.iter().map(move |&h| (p, h))).collect();
    for p in pairs {
        for &x in &pts {
            let xe = group_celem(x, f);
            let s = d.antipode(p, &xe);
            assert_eq!(s, group_celem(o.antipode(p, x), f), "S at {p} on {x:?}");
            assert_eq!(d.antipode_inv(p, &s), xe);
            assert_eq!(d.counit(&xe).is_one(), o.counit(x));
            for &y in &pts {
                let ye = group_celem(y, f);
                let want = o.mul(p, x, y).map(|z| group_celem(z, f)).unwrap_or_else(CElem::zero);
                assert_eq!(d.mul(p, &xe, &ye), want, "product at {p}: {x:?} {y:?}");
            }
        }
        for q in pairs {
            for &x in &pts {
                let xe = group_celem(x, f);
                assert_eq!(d.xi(p, q, &xe), group_celem(o.xi(p, q, x), f));
                for &y in &pts {
                    let (l, r) = o.delta_right(p, q, x, y);
                    let got = d.delta_right(p, q, &xe, &group_celem(y, f));
                    assert_eq!(got, group_ctensor(l, r, f), "Δ at {p},{q}: {x:?} {y:?}");
                }
            }
        }
    }
}

#[test]
fn cyclic_four_matches_closed_forms() {
    let g = Group::cyclic(4);
    check_group_case(&g, &sign_pairs(&g), &g.elements().unwrap());
}

#[test]
fn s3_matches_closed_forms() {
    let g = Group::symmetric(3);
    check_group_case(&g, &inner_pairs(&g), &g.elements().unwrap());
}

#[test]
fn integers_match_closed_forms_on_window() {
    let g = Group::integers();
    check_group_case(&g, &sign_pairs(&g), &g.window(2));
}

#[test]
fn double_s3_matches_corrected_forms() {
    let g = Group::symmetric(3);
    let f = Field::Rational;
    let d = Double::new(Arc::new(DoublePairing::new(g.clone(), f).unwrap()));
    let els = g.elements().unwrap();
    let mut literal_mismatch = 0;
    for &al in &els {
        for &be in &els {
            let p = AutPair::new(Automorphism::inner(&g, al).unwrap(), Automorphism::inner(&g, be).unwrap());
            let o = DoubleOracle { group: &g, alpha: al, beta: be };
            for (i, &h) in els.iter().enumerate() {
                let (pp, l, q) = (els[(i + 1) % 6], els[(i * 5 + al as usize) % 6], els[(i + be as usize) % 6]);
                let x = ((l, q), (pp, h));
                let got = d.antipode(&p, &double_celem(x, f));
                assert_eq!(got, double_celem(o.antipode(x), f));
                if o.antipode_literal(x) != o.antipode(x) {
                    literal_mismatch += 1;
                }
                let t = d.twist_basis(&p, &mhag_core::Label(pp, h), &mhag_core::Label(l, q));
                let (ta, tb) = o.twist((pp, h), (l, q));
                assert_eq!(t, double_celem((ta, tb), f));
            }
        }
    }
    assert!(literal_mismatch > 0);
}
