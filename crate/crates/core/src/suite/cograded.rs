//! The grading group and the diagonal crossed products themselves.

use super::{differ, AxiomReport, Context, Dom, Suite};
use crate::linalg::Echelon;
use crate::linear::{CElem, CLabel, Elem, Lc, Tensor};
use crate::mha::{Mha, TKind};

pub struct Cograded;

/// Rank-based non-degeneracy is used up to this dimension; above it the unit
/// witnesses non-degeneracy.
const RANK_DIM_LIMIT: usize = 64;

fn t_roundtrip(m: &dyn Mha, x: &crate::linear::Label, y: &crate::linear::Label) -> Option<(String, String)> {
    let t: Tensor = Lc::basis((*x, *y), m.field().one());
    for kind in TKind::ALL {
        let a = m.t_map_inv(kind, &m.t_map(kind, &t));
        let b = m.t_map(kind, &m.t_map_inv(kind, &t));
        if a != t || b != t {
            return Some((format!("{kind}: {} ; {}", m.render_tensor(&a), m.render_tensor(&b)), m.render_tensor(&t)));
        }
    }
    None
}

impl Suite for Cograded {
    fn name(&self) -> &'static str {
        "cograded"
    }

    fn run(&self, ctx: &Context) -> Vec<AxiomReport> {
        let d = &ctx.double;
        let pr = d.pairing();
        let e = ctx.identity_grading();
        let showe = |x: &CElem| d.render(x);
        let mut out = vec![];

        out.push(ctx.check("group law associativity", &[("p", Dom::G), ("q", Dom::G), ("r", Dom::G)], |k| {
            let (p, q, r) = (k.g(0), k.g(1), k.g(2));
            differ(d.gmul(&d.gmul(p, q), r), d.gmul(p, &d.gmul(q, r)), |g| g.to_string())
        }));
        out.push(ctx.check("group law unit", &[("p", Dom::G)], |k| {
            let p = k.g(0);
            differ((d.gmul(&e, p), d.gmul(p, &e)), (p.clone(), p.clone()), |(a, b)| format!("{a} ; {b}"))
        }));
        out.push(ctx.check("group law inverse", &[("p", Dom::G)], |k| {
            let p = k.g(0);
            let pi = d.ginv(p);
            differ((d.gmul(p, &pi), d.gmul(&pi, p)), (e.clone(), e.clone()), |(a, b)| format!("{a} ; {b}"))
        }));

        out.push(ctx.check("associativity", &[("p", Dom::G), ("x", Dom::X), ("y", Dom::X), ("z", Dom::X)], |k| {
            let (p, x, y, z) = (k.g(0), k.x(1), k.x(2), k.x(3));
            differ(d.mul(p, &d.mul(p, &x, &y), &z), d.mul(p, &x, &d.mul(p, &y, &z)), showe)
        }));

        out.push(ctx.check(
            "commutation rule",
            &[("p", Dom::G), ("a", Dom::A), ("b", Dom::B), ("x", Dom::X)],
            |k| {
                let (p, x) = (k.g(0), k.x(3));
                let a: Elem = Lc::basis(k.a(1), d.one());
                let b: Elem = Lc::basis(k.b(2), d.one());
                differ(d.commutation_residual(p, &a, &b, &x), CElem::zero(), showe)
            },
        ));

        out.push(ctx.check("twist roundtrip", &[("p", Dom::G), ("b", Dom::B), ("a", Dom::A)], |k| {
            let (p, b, a) = (k.g(0), k.b(1), k.a(2));
            let t = d.twist_inv(p, &d.twist_basis(p, &b, &a));
            differ(t, Lc::basis((b, a), d.one()), |t: &Tensor| format!("{t:?}"))
        }));
        out.push(ctx.check("twist inverse roundtrip", &[("p", Dom::G), ("x", Dom::X)], |k| {
            let (p, x) = (k.g(0), k.x(1));
            differ(d.twist(p, &d.twist_inv(p, &x)), x, showe)
        }));

        out.push(ctx.check("t-map roundtrip a", &[("a", Dom::A), ("a'", Dom::A)], |k| t_roundtrip(pr.a(), &k.a(0), &k.a(1))));
        out.push(ctx.check("t-map roundtrip b", &[("b", Dom::B), ("b'", Dom::B)], |k| t_roundtrip(pr.b(), &k.b(0), &k.b(1))));

        if let Some(dim) = ctx.dim() {
            let basis: Vec<CLabel> = ctx.xs.clone();
            out.push(ctx.check("non-degeneracy", &[("p", Dom::G)], |k| {
                let p = k.g(0);
                if dim > RANK_DIM_LIMIT {
                    let u = d.unit().expect("finite instances are unital");
                    for x in &basis {
                        let xe = Lc::basis(*x, d.one());
                        let (l, r) = (d.mul(p, &u, &xe), d.mul(p, &xe, &u));
                        if l != xe || r != xe {
                            return Some((format!("1·x = {} ; x·1 = {}", d.render(&l), d.render(&r)), d.render(&xe)));
                        }
                    }
                    return None;
                }
                // x ↦ (y·x)_y and x ↦ (x·y)_y must both be injective
                let mut left = Echelon::default();
                let mut right = Echelon::default();
                for x in &basis {
                    let xe = Lc::basis(*x, d.one());
                    let mut lv = Lc::<(CLabel, CLabel)>::zero();
                    let mut rv = Lc::<(CLabel, CLabel)>::zero();
                    for y in &basis {
                        let ye = Lc::basis(*y, d.one());
                        lv = lv.add(&d.mul(p, &ye, &xe).map_labels(|l| (*y, *l)));
                        rv = rv.add(&d.mul(p, &xe, &ye).map_labels(|l| (*y, *l)));
                    }
                    left.insert(&lv);
                    right.insert(&rv);
                }
                differ((left.rank(), right.rank()), (dim, dim), |(l, r)| format!("ranks {l}, {r}"))
            }));
        }
        out
    }
}
