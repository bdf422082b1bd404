//! Intertwining identities of the twisted canonical multiplier, and the coproduct
//! identities of `W` itself.

use super::{differ, AxiomReport, Context, Dom, Suite};
use crate::quasitri::{BCTensor, CATensor, Tensor3};

pub struct Intertwining;

impl Suite for Intertwining {
    fn name(&self) -> &'static str {
        "lemma42"
    }

    fn run(&self, ctx: &Context) -> Vec<AxiomReport> {
        let d = &ctx.double;
        let pr = d.pairing();
        let (ai, bi) = (pr.a(), pr.b());
        let mut out = vec![];

        out.push(ctx.check("w intertwines a", &[("p", Dom::G), ("a", Dom::A), ("x", Dom::C), ("a'", Dom::A)], |k| {
            let (l, r) = d.w_intertwines_a(k.g(0), &k.a(1), &k.c(2), &k.a(3));
            differ(l, r, |t: &CATensor| crate::linear::render(t, |(x, a)| format!("({})⊗{}", d.render_label(x), ai.fmt_label(a))))
        }));

        out.push(ctx.check(
            "w intertwines b",
            &[("p", Dom::G), ("q", Dom::G), ("b", Dom::B), ("u", Dom::B), ("y", Dom::C)],
            |k| {
                let (l, r) = d.w_intertwines_b(k.g(0), k.g(1), &k.b(2), &k.b(3), &k.c(4));
                differ(l, r, |t: &BCTensor| crate::linear::render(t, |(b, y)| format!("{}⊗({})", bi.fmt_label(b), d.render_label(y))))
            },
        ));

        let bba = |t: &Tensor3| {
            crate::linear::render(t, |(x, y, z)| format!("{}⊗{}⊗{}", bi.fmt_label(x), bi.fmt_label(y), ai.fmt_label(z)))
        };
        let baa = |t: &Tensor3| {
            crate::linear::render(t, |(x, y, z)| format!("{}⊗{}⊗{}", bi.fmt_label(x), ai.fmt_label(y), ai.fmt_label(z)))
        };
        out.push(ctx.check("w coproduct of b", &[("b", Dom::B), ("b'", Dom::B), ("a", Dom::A)], |k| {
            let (l, r) = d.w_identity_b(&k.b(0), &k.b(1), &k.a(2));
            differ(l, r, bba)
        }));
        out.push(ctx.check("w coproduct of a", &[("b", Dom::B), ("a", Dom::A), ("a'", Dom::A)], |k| {
            let (l, r) = d.w_identity_a(&k.b(0), &k.a(1), &k.a(2));
            differ(l, r, baa)
        }));
        out
    }
}
