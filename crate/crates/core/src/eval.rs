//! One-off evaluation of the structure maps on literal arguments.
//!
//! Arguments are JSON values: gradings as pairs `[α, β]`, elements as term lists
//! (see [`Session::element`]). Results are rendered as text.

use serde_json::Value;

use crate::aut::AutPair;
use crate::error::{input, Result};
use crate::linear::CElem;
use crate::session::Session;

/// Operation names with their argument kinds: `g` a grading, `x` an element.
pub const OPS: &[(&str, &str)] = &[
    ("gmul", "gg"),
    ("ginv", "g"),
    ("mul", "gxx"),
    ("delta", "ggxx"),
    ("delta-left", "ggxx"),
    ("delta-tilde", "ggxx"),
    ("counit", "x"),
    ("antipode", "gx"),
    ("antipode-inv", "gx"),
    ("xi", "ggx"),
    ("r", "gxx"),
    ("r-right", "ggxx"),
];

enum Arg {
    G(AutPair),
    X(CElem),
}

pub fn eval(session: &Session, op: &str, args: &[Value]) -> Result<String> {
    let Some((_, sig)) = OPS.iter().find(|(name, _)| *name == op) else {
        let known: Vec<_> = OPS.iter().map(|(n, _)| *n).collect();
        return input(format!("unknown operation {op:?}; known: {}", known.join(", ")));
    };
    if args.len() != sig.len() {
        return input(format!("{op} takes {} arguments ({sig}), got {}", sig.len(), args.len()));
    }
    let d = &session.double;
    let mut parsed = vec![];
    for (kind, v) in sig.chars().zip(args) {
        parsed.push(if kind == 'g' {
            let p = session.autos.pair(v)?;
            d.check_grading(&p)?;
            Arg::G(p)
        } else {
            Arg::X(session.element(v)?)
        });
    }
    let g = |i: usize| match &parsed[i] {
        Arg::G(p) => p,
        Arg::X(_) => unreachable!("signature checked"),
    };
    let x = |i: usize| match &parsed[i] {
        Arg::X(x) => x,
        Arg::G(_) => unreachable!("signature checked"),
    };
    Ok(match op {
        "gmul" => d.gmul(g(0), g(1)).to_string(),
        "ginv" => d.ginv(g(0)).to_string(),
        "mul" => d.render(&d.mul(g(0), x(1), x(2))),
        "delta" => d.render_tensor(&d.delta_right(g(0), g(1), x(2), x(3))),
        "delta-left" => d.render_tensor(&d.delta_left(g(0), g(1), x(2), x(3))),
        "delta-tilde" => d.render_tensor(&d.delta_tilde_right(g(0), g(1), x(2), x(3))),
        "counit" => d.counit(x(0)).to_string(),
        "antipode" => d.render(&d.antipode(g(0), x(1))),
        "antipode-inv" => d.render(&d.antipode_inv(g(0), x(1))),
        "xi" => d.render(&d.xi(g(0), g(1), x(2))),
        "r" => d.render_tensor(&d.r_left(g(0), x(1), x(2))),
        "r-right" => d.render_tensor(&d.r_right(g(0), g(1), x(2), x(3))),
        _ => unreachable!("op table checked"),
    })
}
