use std::sync::Arc;

use mhag_core::aut::inner_pairs;
use mhag_core::crossed::{Double, Mutation};
use mhag_core::pairing::{FiniteDimPairing, GroupPairing, Side};
use mhag_core::{AutPair, Automorphism, CElem, Field, Group, Label, Lc};

fn basis(d: &Double, elems: &[i64]) -> Vec<CElem> {
    let one = d.one();
    elems
        .iter()
        .flat_map(|&p| elems.iter().map(move |&h| (p, h)))
        .map(|(p, h)| Lc::basis((Label::one(p), Label::one(h)), one.clone()))
        .collect()
}

/// The first violated quasitriangularity identity, if any.
fn first_failure(d: &Double, gradings: &[AutPair], xs: &[CElem]) -> Option<String> {
    for p in gradings {
        for q in gradings {
            for side in [Side::Left, Side::Right] {
                for x in xs {
                    for y in xs {
                        for m in gradings.iter().take(2) {
                            let (l, r) = d.qt_xi_invariance(side, m, p, q, x, y);
                            if l != r {
                                return Some(format!("xi invariance {side:?} m={m} p={p} q={q}"));
                            }
                        }
                        for z in xs {
                            let (l, r) = d.qt_intertwines_coproduct(side, p, q, x, y, z);
                            if l != r {
                                return Some(format!("intertwines coproduct {side:?} p={p} q={q} {} {} {}", d.render(x), d.render(y), d.render(z)));
                            }
                            let (l, r) = d.qt_coproduct_first(side, p, q, q, x, y, z);
                            if l != r {
                                return Some(format!("coproduct first leg {side:?} p={p} q={q}"));
                            }
                            let (l, r) = d.qt_coproduct_second(side, p, q, q, x, y, z);
                            if l != r {
                                return Some(format!("coproduct second leg {side:?} p={p} q={q}"));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

#[test]
fn cyclic_three_axioms() {
    let g = Group::cyclic(3);
    let d = Double::new(Arc::new(GroupPairing::new(g.clone(), Field::Rational)));
    let els = g.elements().unwrap();
    let inv: Vec<(i64, i64)> = els.iter().map(|&x| (x, g.inv(x))).collect();
    let neg = Automorphism::from_images(&g, &inv).unwrap();
    let id = Automorphism::identity(&g);
    let gr = vec![AutPair::new(id.clone(), id.clone()), AutPair::new(id.clone(), neg.clone()), AutPair::new(neg, id)];
    assert_eq!(first_failure(&d, &gr, &basis(&d, &els)), None);
}

#[test]
fn s3_axioms_small() {
    let g = Group::symmetric(3);
    let d = Double::new(Arc::new(GroupPairing::new(g.clone(), Field::Rational)));
    let els = g.elements().unwrap();
    let gr: Vec<AutPair> = inner_pairs(&g).into_iter().step_by(7).take(3).collect();
    assert_eq!(first_failure(&d, &gr, &basis(&d, &els[..4])), None);
}

#[test]
fn finite_dim_s3_axioms_small() {
    let g = Group::symmetric(3);
    let d = Double::new(Arc::new(FiniteDimPairing::group_algebra(&g, Field::Rational).unwrap()));
    let gr: Vec<AutPair> = inner_pairs(&g).into_iter().step_by(7).take(2).collect();
    assert_eq!(first_failure(&d, &gr, &basis(&d, &[0, 1, 2])), None);
}

#[test]
fn integers_axioms_window() {
    let g = Group::integers();
    let d = Double::new(Arc::new(GroupPairing::new(g.clone(), Field::Rational)));
    let id = Automorphism::identity(&g);
    let neg = Automorphism::negation(&g).unwrap();
    let gr = vec![AutPair::new(id, neg.clone()), AutPair::new(neg.clone(), neg)];
    assert_eq!(first_failure(&d, &gr, &basis(&d, &[-1, 0, 2])), None);
}

#[test]
fn intertwining_identities() {
    let g = Group::symmetric(3);
    let d = Double::new(Arc::new(GroupPairing::new(g.clone(), Field::Rational)));
    let els = g.elements().unwrap();
    let xs = basis(&d, &els);
    for p in inner_pairs(&g).into_iter().step_by(5) {
        for q in inner_pairs(&g).into_iter().step_by(11) {
            for &a in &els {
                for x in xs.iter().step_by(5) {
                    for &a2 in &els {
                        let (l, r) = d.w_intertwines_a(&p, &Label::one(a), x, &Label::one(a2));
                        assert_eq!(l, r, "a-leg {p} a={a} a'={a2}");
                        let (l, r) = d.w_intertwines_b(&p, &q, &Label::one(a), &Label::one(a2), x);
                        assert_eq!(l, r, "b-leg {p} {q} b={a} u={a2}");
                    }
                }
            }
        }
    }
}

#[test]
fn w_identities() {
    let g = Group::symmetric(3);
    let d = Double::new(Arc::new(FiniteDimPairing::group_algebra(&g, Field::Rational).unwrap()));
    for x in 0..6 {
        for y in 0..6 {
            for z in 0..6 {
                let (l, r) = d.w_identity_b(&Label::one(x), &Label::one(y), &Label::one(z));
                assert_eq!(l, r);
                let (l, r) = d.w_identity_a(&Label::one(x), &Label::one(y), &Label::one(z));
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn corruptions_are_visible() {
    // S3 is needed: over an abelian group with trivial gradings both K(H) and KH are
    // commutative and cocommutative, and Σ g⁻¹⊗δ_g is itself an R-matrix
    let s3 = Group::symmetric(3);
    let id = Automorphism::identity(&s3);
    let gr = vec![AutPair::new(id.clone(), id)];
    for m in [Mutation::DropRSummand, Mutation::SwapDeltaLegs, Mutation::RSinv] {
        let pr = FiniteDimPairing::group_algebra(&s3, Field::Rational).unwrap();
        let d = Double::with_mutation(Arc::new(pr), Some(m));
        assert!(first_failure(&d, &gr, &basis(&d, &[0, 1, 2, 3, 4, 5])).is_some(), "{m} undetected");
    }
}
