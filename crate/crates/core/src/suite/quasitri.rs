//! The four quasitriangularity axioms of the generalized R-matrix, both sides.

use super::{differ, AxiomReport, Context, Dom, Suite};
use crate::aut::AutPair;
use crate::linear::CTensor;
use crate::pairing::Side;
use crate::quasitri::{BCTensor, CTensor3};

pub struct Quasitriangular;

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
    }
}

impl Suite for Quasitriangular {
    fn name(&self) -> &'static str {
        "quasitriangular"
    }

    fn run(&self, ctx: &Context) -> Vec<AxiomReport> {
        let d = &ctx.double;
        let show = |t: &CTensor| d.render_tensor(t);
        let show3 = |t: &CTensor3| {
            crate::linear::render(t, |(a, b, c)| {
                format!("({})⊗({})⊗({})", d.render_label(a), d.render_label(b), d.render_label(c))
            })
        };
        let g3c2 = [("m", Dom::G), ("p", Dom::G), ("q", Dom::G), ("x", Dom::C), ("y", Dom::C)];
        let g3c3 = [("p", Dom::G), ("q", Dom::G), ("n", Dom::G), ("x", Dom::C), ("y", Dom::C), ("z", Dom::C)];
        let g2xc2 = [("p", Dom::G), ("q", Dom::G), ("x", Dom::X), ("y", Dom::C), ("z", Dom::C)];
        let mut out = vec![];
        for side in [Side::Left, Side::Right] {
            let s = side_name(side);
            out.push(ctx.check(&format!("r xi invariance {s}"), &g3c2, |k| {
                let (l, r) = d.qt_xi_invariance(side, k.g(0), k.g(1), k.g(2), &k.c(3), &k.c(4));
                differ(l, r, show)
            }));
            out.push(ctx.check(&format!("r coproduct first leg {s}"), &g3c3, |k| {
                let (l, r) = d.qt_coproduct_first(side, k.g(0), k.g(1), k.g(2), &k.c(3), &k.c(4), &k.c(5));
                differ(l, r, show3)
            }));
            out.push(ctx.check(&format!("r coproduct second leg {s}"), &g3c3, |k| {
                let (l, r) = d.qt_coproduct_second(side, k.g(0), k.g(1), k.g(2), &k.c(3), &k.c(4), &k.c(5));
                differ(l, r, show3)
            }));
            out.push(ctx.check(&format!("r intertwines coproduct {s}"), &g2xc2, |k| {
                let (l, r) = d.qt_intertwines_coproduct(side, k.g(0), k.g(1), &k.x(2), &k.c(3), &k.c(4));
                differ(l, r, show)
            }));
        }
        // applied R also sees α through the product of A⋈B_(α,β); its coefficients do not
        out.push(ctx.check("r depends on beta only", &[("p", Dom::G), ("p'", Dom::G), ("y", Dom::C)], |k| {
            let (p, p2) = (k.g(0), k.g(1));
            let mixed = AutPair::new(p2.first.clone(), p.second.clone());
            let y = k.c(2);
            let bi = d.pairing().b();
            differ(d.r_coefficients(p, &y), d.r_coefficients(&mixed, &y), |t: &BCTensor| {
                crate::linear::render(t, |(b, l)| format!("{}⊗({})", bi.fmt_label(b), d.render_label(l)))
            })
        }));
        out
    }
}
