//! The crossing action `ξ`.

use super::{differ, AxiomReport, Context, Dom, Suite};
use crate::aut::{AutPair, Automorphism};
use crate::linear::{CElem, CTensor, Lc};

pub struct Crossing;

fn compose(xs: &[&Automorphism]) -> Automorphism {
    let mut it = xs.iter();
    let first = (*it.next().expect("nonempty")).clone();
    it.fold(first, |acc, x| acc.compose(x).expect("same backend"))
}

impl Suite for Crossing {
    fn name(&self) -> &'static str {
        "crossing"
    }

    fn run(&self, ctx: &Context) -> Vec<AxiomReport> {
        let d = &ctx.double;
        let showe = |x: &CElem| d.render(x);
        let graded = |x: &(AutPair, CElem)| format!("{} at {}", d.render(&x.1), x.0);
        let mut out = vec![];

        out.push(ctx.check("xi grading", &[("m", Dom::G), ("q", Dom::G)], |k| {
            let (m, q) = (k.g(0), k.g(1));
            let (al, be) = (&m.first, &m.second);
            let (ga, de) = (&q.first, &q.second);
            // (αγα⁻¹, αβ⁻¹δγ⁻¹βγα⁻¹)
            let shown = AutPair::new(
                compose(&[al, ga, &al.inverse()]),
                compose(&[al, &be.inverse(), de, &ga.inverse(), be, ga, &al.inverse()]),
            );
            differ(d.xi_target(m, q), shown, |g| g.to_string())
        }));

        out.push(ctx.check("xi algebra map", &[("m", Dom::G), ("q", Dom::G), ("x", Dom::X), ("y", Dom::X)], |k| {
            let (m, q, x, y) = (k.g(0), k.g(1), k.x(2), k.x(3));
            let mq = d.xi_target(m, q);
            let lhs = d.xi(m, q, &d.mul(q, &x, &y));
            let rhs = d.mul(&mq, &d.xi(m, q, &x), &d.xi(m, q, &y));
            differ(lhs, rhs, showe)
        }));

        out.push(ctx.check("xi inverse", &[("m", Dom::G), ("q", Dom::G), ("x", Dom::X)], |k| {
            let (m, q, x) = (k.g(0), k.g(1), k.x(2));
            let mq = d.xi_target(m, q);
            let mi = d.ginv(m);
            let back = (d.xi_target(&mi, &mq), d.xi(&mi, &mq, &d.xi(m, q, &x)));
            differ(back, (q.clone(), x), graded)
        }));

        out.push(ctx.check("xi action", &[("m", Dom::G), ("n", Dom::G), ("q", Dom::G), ("x", Dom::X)], |k| {
            let (m, n, q, x) = (k.g(0), k.g(1), k.g(2), k.x(3));
            let nq = d.xi_target(n, q);
            let lhs = (d.xi_target(m, &nq), d.xi(m, &nq, &d.xi(n, q, &x)));
            let mn = d.gmul(m, n);
            let rhs = (d.xi_target(&mn, q), d.xi(&mn, q, &x));
            differ(lhs, rhs, graded)
        }));

        out.push(ctx.check(
            "xi comultiplication",
            // m varies fastest so the right-hand coproduct is reused from the memo
            &[("p", Dom::G), ("q", Dom::G), ("x", Dom::X), ("y", Dom::C), ("m", Dom::G)],
            |k| {
                let (m, p, q) = (k.g(4), k.g(0), k.g(1));
                let (x, y) = (k.x(2), k.c(3));
                let pq = d.gmul(p, q);
                let (mp, mq) = (d.xi_target(m, p), d.xi_target(m, q));
                let lhs = d.delta_right(&mp, &mq, &d.xi(m, &pq, &x), &d.xi(m, q, &y));
                let t = d.delta_right(p, q, &x, &y);
                let t = d.map_first_leg(&t, |l| d.xi(m, p, &Lc::basis(*l, d.one())));
                let rhs = d.map_second_leg(&t, |l| d.xi(m, q, &Lc::basis(*l, d.one())));
                differ(lhs, rhs, |t: &CTensor| d.render_tensor(t))
            },
        ));

        out.push(ctx.check("xi counit", &[("m", Dom::G), ("q", Dom::G), ("x", Dom::X)], |k| {
            let (m, q, x) = (k.g(0), k.g(1), k.x(2));
            differ(d.counit(&d.xi(m, q, &x)), d.counit(&x), |s| s.to_string())
        }));
        out
    }
}
