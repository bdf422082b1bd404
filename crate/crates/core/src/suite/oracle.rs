//! Agreement with closed forms written in group arithmetic.

use super::{differ, AxiomReport, Context, Dom, Family, Suite};
use crate::aut::{AutKind, AutPair, Automorphism};
use crate::group::{Elt, Group};
use crate::linear::{CElem, CLabel, CTensor};
use crate::oracle::{double_celem, group_celem, group_ctensor, DoubleOracle, GroupOracle, Pt};

pub struct Oracle;

fn pt(l: CLabel) -> Pt {
    (l.0 .0, l.1 .0)
}

fn dpt(l: CLabel) -> (Pt, Pt) {
    ((l.0 .0, l.0 .1), (l.1 .0, l.1 .1))
}

/// `g` with `aut = conj(g)`, when there is one.
fn inner_elt(group: &Group, aut: &Automorphism) -> Option<Elt> {
    match aut.kind() {
        AutKind::Identity => Some(group.identity()),
        AutKind::Inner(g) => Some(*g),
        _ => {
            let els = group.elements()?;
            els.iter().copied().find(|&g| els.iter().all(|&x| aut.apply(x).ok() == Some(group.conj(g, x))))
        }
    }
}

fn double_oracle<'a>(group: &'a Group, p: &AutPair) -> Option<DoubleOracle<'a>> {
    Some(DoubleOracle { group, alpha: inner_elt(group, &p.first)?, beta: inner_elt(group, &p.second)? })
}

impl Suite for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn run(&self, ctx: &Context) -> Vec<AxiomReport> {
        match &ctx.family {
            Family::Group(g) | Family::GroupAlgebra(g) => group_forms(ctx, g),
            Family::DrinfeldDouble(g) => double_forms(ctx, g, false),
            Family::FiniteDim => vec![],
        }
    }
}

fn group_forms(ctx: &Context, group: &Group) -> Vec<AxiomReport> {
    let d = &ctx.double;
    let f = d.pairing().field();
    let o = GroupOracle { group };
    let showe = |x: &CElem| d.render(x);
    let show = |t: &CTensor| d.render_tensor(t);
    let mut out = vec![];
    out.push(ctx.check("closed form product", &[("p", Dom::G), ("x", Dom::X), ("y", Dom::X)], |k| {
        let (p, x, y) = (k.g(0), k.x_label(1), k.x_label(2));
        let want = o.mul(p, pt(x), pt(y)).map_or_else(CElem::zero, |z| group_celem(z, f));
        differ(d.mul(p, &k.x(1), &k.x(2)), want, showe)
    }));
    out.push(ctx.check("closed form comultiplication", &[("p", Dom::G), ("q", Dom::G), ("x", Dom::X), ("y", Dom::C)], |k| {
        let (p, q, x, y) = (k.g(0), k.g(1), k.x_label(2), k.c(3));
        let mut want = CTensor::zero();
        for (l, c) in y.iter() {
            let (a, b) = o.delta_right(p, q, pt(x), pt(*l));
            want.add_scaled(c, &group_ctensor(a, b, f));
        }
        differ(d.delta_right(p, q, &k.x(2), &y), want, show)
    }));
    out.push(ctx.check("closed form counit", &[("x", Dom::X)], |k| {
        let want = if o.counit(pt(k.x_label(0))) { f.one() } else { f.zero() };
        differ(d.counit(&k.x(0)), want, |s| s.to_string())
    }));
    out.push(ctx.check("closed form antipode", &[("p", Dom::G), ("x", Dom::X)], |k| {
        let p = k.g(0);
        differ(d.antipode(p, &k.x(1)), group_celem(o.antipode(p, pt(k.x_label(1))), f), showe)
    }));
    out.push(ctx.check("closed form xi", &[("m", Dom::G), ("q", Dom::G), ("x", Dom::X)], |k| {
        let (m, q) = (k.g(0), k.g(1));
        differ(d.xi(m, q, &k.x(2)), group_celem(o.xi(m, q, pt(k.x_label(2))), f), showe)
    }));
    out.push(ctx.check("closed form r", &[("p", Dom::G), ("x", Dom::X), ("y", Dom::X)], |k| {
        let p = k.g(0);
        let (l, r) = o.r_left(p, pt(k.x_label(1)), pt(k.x_label(2)));
        differ(d.r_left(p, &k.x(1), &k.x(2)), group_ctensor(l, r, f), show)
    }));
    out
}

fn double_forms(ctx: &Context, group: &Group, literal: bool) -> Vec<AxiomReport> {
    let d = &ctx.double;
    let f = d.pairing().field();
    let showe = |x: &CElem| d.render(x);
    let tag = if literal { "literal" } else { "closed form" };
    let mut out = vec![];
    out.push(ctx.check(&format!("{tag} double product"), &[("p", Dom::G), ("x", Dom::X), ("y", Dom::X)], |k| {
        let p = k.g(0);
        let o = double_oracle(group, p)?;
        let want = o.mul(dpt(k.x_label(1)), dpt(k.x_label(2)), literal).map_or_else(CElem::zero, |z| double_celem(z, f));
        differ(d.mul(p, &k.x(1), &k.x(2)), want, showe)
    }));
    out.push(ctx.check(&format!("{tag} double antipode"), &[("p", Dom::G), ("x", Dom::X)], |k| {
        let p = k.g(0);
        let o = double_oracle(group, p)?;
        let x = dpt(k.x_label(1));
        let want = if literal { o.antipode_literal(x) } else { o.antipode(x) };
        differ(d.antipode(p, &k.x(1)), double_celem(want, f), showe)
    }));
    if !literal {
        out.push(ctx.check("closed form double r", &[("p", Dom::G), ("x", Dom::X), ("y", Dom::X)], |k| {
            let p = k.g(0);
            let shown = d.r_left_double_closed(p, &k.x(1), &k.x(2))?;
            differ(d.r_left(p, &k.x(1), &k.x(2)), shown, |t: &CTensor| d.render_tensor(t))
        }));
    }
    out
}

/// The literal Drinfeld-double product and antipode, compared with the
/// construction. Disagreement here is informational; the oracle suite checks the
/// corrected forms.
pub fn literal_comparison(ctx: &Context) -> Vec<AxiomReport> {
    match &ctx.family {
        Family::DrinfeldDouble(g) => double_forms(ctx, g, true),
        _ => vec![],
    }
}
