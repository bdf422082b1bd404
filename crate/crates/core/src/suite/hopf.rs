//! Cograded Hopf axioms of `D(A,B)`.

use super::{differ, AxiomReport, Context, Dom, Suite};
use crate::linalg::Echelon;
use crate::linear::{CElem, CLabel, CTensor, Lc};
use crate::quasitri::CTensor3;

pub struct Hopf;

/// Surjectivity rank checks are skipped above this component dimension.
const RANK_DIM_LIMIT: usize = 64;

impl Suite for Hopf {
    fn name(&self) -> &'static str {
        "hopf"
    }

    fn run(&self, ctx: &Context) -> Vec<AxiomReport> {
        let d = &ctx.double;
        let e = ctx.identity_grading();
        let show = |t: &CTensor| d.render_tensor(t);
        let show3 = |t: &CTensor3| {
            crate::linear::render(t, |(a, b, c)| {
                format!("({})⊗({})⊗({})", d.render_label(a), d.render_label(b), d.render_label(c))
            })
        };
        let showe = |x: &CElem| d.render(x);
        let mut out = vec![];

        out.push(ctx.check(
            "coassociativity",
            &[("p", Dom::G), ("q", Dom::G), ("r", Dom::G), ("x", Dom::X), ("a", Dom::C), ("c", Dom::C)],
            |k| {
                let (p, q, r) = (k.g(0), k.g(1), k.g(2));
                let (x, a, c) = (k.x(3), k.c(4), k.c(5));
                let pq = d.gmul(p, q);
                let qr = d.gmul(q, r);
                // (a⊗1⊗1)(Δ_{p,q}⊗ι)(Δ_{pq,r}(x)(1⊗c))
                let mut lhs = CTensor3::zero();
                for ((u, v), s) in &d.delta_right(&pq, r, &x, &c) {
                    let t = d.delta_left(p, q, &a, &Lc::basis(*u, s.clone()));
                    for ((l, m), w) in &t {
                        lhs.add_term((*l, *m, *v), w.clone());
                    }
                }
                // (ι⊗Δ_{q,r})((a⊗1)Δ_{p,qr}(x))(1⊗1⊗c)
                let mut rhs = CTensor3::zero();
                for ((u, v), s) in &d.delta_left(p, &qr, &a, &x) {
                    let t = d.delta_right(q, r, &Lc::basis(*v, s.clone()), &c);
                    for ((l, m), w) in &t {
                        rhs.add_term((*u, *l, *m), w.clone());
                    }
                }
                differ(lhs, rhs, show3)
            },
        ));

        out.push(ctx.check("counit left", &[("p", Dom::G), ("x", Dom::X), ("y", Dom::C)], |k| {
            let (p, x, y) = (k.g(0), k.x(1), k.c(2));
            let t = d.delta_right(&e, p, &x, &y);
            let lhs: CElem = t.lift(|(u, v)| Lc::basis(*v, d.counit(&Lc::basis(*u, d.one()))));
            differ(lhs, d.mul(p, &x, &y), showe)
        }));

        out.push(ctx.check("counit right", &[("p", Dom::G), ("x", Dom::X), ("y", Dom::C)], |k| {
            let (p, x, y) = (k.g(0), k.x(1), k.c(2));
            let t = d.delta_left(p, &e, &y, &x);
            let lhs: CElem = t.lift(|(u, v)| Lc::basis(*u, d.counit(&Lc::basis(*v, d.one()))));
            differ(lhs, d.mul(p, &y, &x), showe)
        }));

        out.push(ctx.check("antipode axiom left", &[("p", Dom::G), ("x", Dom::X), ("y", Dom::C)], |k| {
            let (p, x, y) = (k.g(0), k.x(1), k.c(2));
            let pi = d.ginv(p);
            // m(S_{p⁻¹}⊗ι)(Δ_{p⁻¹,p}(x)(1⊗y))
            let mut lhs = CElem::zero();
            for ((u, v), s) in &d.delta_right(&pi, p, &x, &y) {
                let su = d.antipode(&pi, &Lc::basis(*u, s.clone()));
                lhs = lhs.add(&d.mul(p, &su, &Lc::basis(*v, d.one())));
            }
            differ(lhs, y.scale(&d.counit(&x)), showe)
        }));

        out.push(ctx.check("antipode axiom right", &[("p", Dom::G), ("x", Dom::X), ("y", Dom::C)], |k| {
            let (p, x, y) = (k.g(0), k.x(1), k.c(2));
            let pi = d.ginv(p);
            // m(ι⊗S_{p⁻¹})((y⊗1)Δ_{p,p⁻¹}(x))
            let mut lhs = CElem::zero();
            for ((u, v), s) in &d.delta_left(p, &pi, &y, &x) {
                let sv = d.antipode(&pi, &Lc::basis(*v, s.clone()));
                lhs = lhs.add(&d.mul(p, &Lc::basis(*u, d.one()), &sv));
            }
            differ(lhs, y.scale(&d.counit(&x)), showe)
        }));

        out.push(ctx.check(
            "delta multiplicative",
            &[("p", Dom::G), ("q", Dom::G), ("x", Dom::X), ("x'", Dom::X), ("y", Dom::C)],
            |k| {
                let (p, q) = (k.g(0), k.g(1));
                let (x, x2, y) = (k.x(2), k.x(3), k.c(4));
                let pq = d.gmul(p, q);
                let lhs = d.delta_right(p, q, &d.mul(&pq, &x, &x2), &y);
                // Δ(x)·(Σ u⊗v) = Σ (Δ(x)(1⊗v))(u⊗1)
                let mut rhs = CTensor::zero();
                for ((u, v), s) in &d.delta_right(p, q, &x2, &y) {
                    let t = d.delta_right(p, q, &x, &Lc::basis(*v, s.clone()));
                    let ue = Lc::basis(*u, d.one());
                    rhs = rhs.add(&d.map_first_leg(&t, |l| d.mul(p, &Lc::basis(*l, d.one()), &ue)));
                }
                differ(lhs, rhs, show)
            },
        ));

        out.push(ctx.check("antipode anti-homomorphism", &[("p", Dom::G), ("x", Dom::X), ("y", Dom::X)], |k| {
            let (p, x, y) = (k.g(0), k.x(1), k.x(2));
            let pi = d.ginv(p);
            let lhs = d.antipode(p, &d.mul(p, &x, &y));
            let rhs = d.mul(&pi, &d.antipode(p, &y), &d.antipode(p, &x));
            differ(lhs, rhs, showe)
        }));

        out.push(ctx.check("antipode bijective", &[("p", Dom::G), ("x", Dom::X)], |k| {
            let (p, x) = (k.g(0), k.x(1));
            let back = d.antipode_inv(p, &d.antipode(p, &x));
            let fwd = d.antipode(p, &d.antipode_inv(p, &x));
            differ((back, fwd), (x.clone(), x), |(a, b)| format!("S⁻¹S: {} ; SS⁻¹: {}", d.render(a), d.render(b)))
        }));

        if let Some(dim) = ctx.dim().filter(|&n| n <= RANK_DIM_LIMIT) {
            let basis: Vec<CLabel> = ctx.xs.clone();
            let full = dim * dim;
            for right in [true, false] {
                let name = if right { "surjectivity right" } else { "surjectivity left" };
                out.push(ctx.check(name, &[("p", Dom::G), ("q", Dom::G)], |k| {
                    let (p, q) = (k.g(0), k.g(1));
                    let mut ech = Echelon::default();
                    for x in &basis {
                        for y in &basis {
                            let (xe, ye) = (Lc::basis(*x, d.one()), Lc::basis(*y, d.one()));
                            let t = if right { d.delta_right(p, q, &xe, &ye) } else { d.delta_left(p, q, &ye, &xe) };
                            ech.insert(&t);
                            if ech.rank() == full {
                                return None;
                            }
                        }
                    }
                    differ(ech.rank(), full, |r| format!("rank {r}"))
                }));
            }
        }
        out
    }
}
