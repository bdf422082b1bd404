//! Group backends: explicit tables, permutation groups closed into tables, and ℤ.
//!
//! Elements are `i64`: an index into the element list for finite groups, the
//! integer itself for ℤ. Permutations compose right to left, `(στ)(x) = σ(τ(x))`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde_json::Value;

use crate::error::{input, Result};

pub type Elt = i64;

/// Largest permutation group we are willing to close into a table.
pub const MAX_ORDER: usize = 1024;

pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<u32>,
    inverse: Vec<u32>,
    identity: u32,
    /// Images of `0..degree` for each element, when built from permutations.
    perms: Option<Vec<Vec<u32>>>,
    generators: Vec<Elt>,
    by_name: HashMap<String, u32>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.names.len())
    }
}

#[derive(Clone, Debug)]
pub enum Group {
    Finite(Arc<FiniteGroup>),
    Integers,
}

impl PartialEq for Group {
    fn eq(&self, other: &Group) -> bool {
        match (self, other) {
            (Group::Finite(a), Group::Finite(b)) => Arc::ptr_eq(a, b) || a.table == b.table,
            (Group::Integers, Group::Integers) => true,
            _ => false,
        }
    }
}

impl FiniteGroup {
    fn from_table(names: Vec<String>, table: Vec<u32>, perms: Option<Vec<Vec<u32>>>, generators: Vec<Elt>) -> Result<FiniteGroup> {
        let n = names.len();
        if n == 0 {
            return input("group has no elements");
        }
        let at = |i: usize, j: usize| table[i * n + j] as usize;
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x)) else {
            return input("multiplication table has no identity element");
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return input(format!(
                            "multiplication table is not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        ));
                    }
                }
            }
        }
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            match (0..n).find(|&b| at(a, b) == identity) {
                Some(b) if at(b, a) == identity => inverse[a] = b as u32,
                _ => return input(format!("element {} has no inverse", names[a])),
            }
        }
        let mut by_name = HashMap::new();
        for (i, s) in names.iter().enumerate() {
            if by_name.insert(s.clone(), i as u32).is_some() {
                return input(format!("duplicate element name {s:?}"));
            }
        }
        Ok(FiniteGroup {
            names,
            table,
            inverse,
            identity: identity as u32,
            perms,
            generators,
            by_name,
        })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }
}

fn cycle_name(p: &[u32]) -> String {
    let n = p.len();
    let sep = if n > 9 { "," } else { "" };
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cyc = vec![];
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push((x + 1).to_string());
            x = p[x] as usize;
        }
        out.push_str(&format!("({})", cyc.join(sep)));
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// Parses cycle notation with 1-based points, e.g. `"(123)(45)"` or `"(1,10)"`.
fn parse_cycles(s: &str, degree: usize) -> Result<Vec<u32>> {
    let mut p: Vec<u32> = (0..degree as u32).collect();
    let s = s.trim();
    if s == "e" || s == "()" {
        return Ok(p);
    }
    let mut rest = s;
    // cycles are applied right to left like any other product
    let mut cycles = vec![];
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return input(format!("malformed cycle notation {s:?}"));
        };
        let Some(end) = body.find(')') else {
            return input(format!("malformed cycle notation {s:?}"));
        };
        let inner = &body[..end];
        let pts: Option<Vec<usize>> = if inner.contains(',') {
            inner.split(',').map(|t| t.trim().parse().ok()).collect()
        } else if inner.contains(' ') {
            inner.split_whitespace().map(|t| t.parse().ok()).collect()
        } else {
            inner.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let Some(pts) = pts else {
            return input(format!("malformed cycle notation {s:?}"));
        };
        if pts.iter().any(|&x| x == 0 || x > degree) {
            return input(format!("cycle point out of range in {s:?}"));
        }
        cycles.push(pts);
        rest = body[end + 1..].trim_start();
    }
    for cyc in cycles.iter().rev() {
        let mut c: Vec<u32> = (0..degree as u32).collect();
        for w in 0..cyc.len() {
            c[cyc[w] - 1] = (cyc[(w + 1) % cyc.len()] - 1) as u32;
        }
        p = p.iter().map(|&x| c[x as usize]).collect();
    }
    Ok(p)
}

fn parse_perm(v: &Value, degree: usize) -> Result<Vec<u32>> {
    match v {
        Value::String(s) => parse_cycles(s, degree),
        Value::Array(xs) => {
            let imgs: Option<Vec<i64>> = xs.iter().map(|x| x.as_i64()).collect();
            let Some(imgs) = imgs else {
                return input("permutation images must be integers");
            };
            if imgs.len() != degree {
                return input(format!("permutation has {} images, degree is {degree}", imgs.len()));
            }
            // image lists may be 0-based or 1-based
            let base = if imgs.contains(&0) { 0 } else { 1 };
            let p: Vec<u32> = imgs.iter().map(|&x| (x - base) as u32).collect();
            let mut seen = vec![false; degree];
            for &x in &p {
                if x as usize >= degree || std::mem::replace(&mut seen[x as usize], true) {
                    return input(format!("{v} is not a permutation of degree {degree}"));
                }
            }
            Ok(p)
        }
        _ => input(format!("cannot read permutation from {v}")),
    }
}

impl Group {
    pub fn integers() -> Group {
        Group::Integers
    }

    /// Builds a group from an explicit table: `mul` lists `[i, j, k]` meaning `g_i g_j = g_k`.
    pub fn from_table(names: Vec<String>, mul: &[[usize; 3]]) -> Result<Group> {
        let n = names.len();
        let mut table = vec![u32::MAX; n * n];
        for &[i, j, k] in mul {
            if i >= n || j >= n || k >= n {
                return input(format!("table entry [{i}, {j}, {k}] out of range"));
            }
            if table[i * n + j] != u32::MAX {
                return input(format!("table entry for ({i}, {j}) given twice"));
            }
            table[i * n + j] = k as u32;
        }
        if let Some(pos) = table.iter().position(|&x| x == u32::MAX) {
            return input(format!("table entry for ({}, {}) missing", pos / n, pos % n));
        }
        Ok(Group::Finite(Arc::new(FiniteGroup::from_table(names, table, None, vec![])?)))
    }

    /// Closes permutation generators of the given degree into a group.
    pub fn from_permutations(degree: usize, generators: &[Vec<u32>]) -> Result<Group> {
        let id: Vec<u32> = (0..degree as u32).collect();
        let compose = |a: &[u32], b: &[u32]| -> Vec<u32> { b.iter().map(|&x| a[x as usize]).collect() };
        let mut seen: BTreeMap<Vec<u32>, ()> = BTreeMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = compose(&x, g);
                if !seen.contains_key(&y) {
                    if seen.len() >= MAX_ORDER {
                        return input(format!("permutation generators do not close into a group of order ≤ {MAX_ORDER}"));
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        // lexicographic order of image lists puts the identity first
        let elems: Vec<Vec<u32>> = seen.into_keys().collect();
        let index: HashMap<&[u32], u32> = elems.iter().enumerate().map(|(i, p)| (p.as_slice(), i as u32)).collect();
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = index[compose(&elems[i], &elems[j]).as_slice()];
            }
        }
        let names = elems.iter().map(|p| cycle_name(p)).collect();
        let gens = generators.iter().map(|g| index[g.as_slice()] as Elt).collect();
        Ok(Group::Finite(Arc::new(FiniteGroup::from_table(names, table, Some(elems), gens)?)))
    }

    pub fn cyclic(n: usize) -> Group {
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32)).collect();
        let gens = if n > 1 { vec![1] } else { vec![] };
        Group::Finite(Arc::new(FiniteGroup::from_table(names, table, None, gens).expect("cyclic table is a group")))
    }

    /// The symmetric group on `1..=n`, generated by `(12)` and `(12…n)`.
    pub fn symmetric(n: usize) -> Group {
        let mut gens = vec![];
        if n >= 2 {
            let mut t: Vec<u32> = (0..n as u32).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n as u32).map(|i| (i + 1) % n as u32).collect());
        }
        Group::from_permutations(n.max(1), &gens).expect("symmetric group closes")
    }

    pub fn from_json(v: &Value) -> Result<Group> {
        let kind = v.get("kind").and_then(Value::as_str);
        match kind {
            Some("int") => Ok(Group::Integers),
            Some("cyclic") => {
                let Some(n) = v.get("order").and_then(Value::as_u64).filter(|&n| n >= 1) else {
                    return input("group.order must be a positive integer");
                };
                Ok(Group::cyclic(n as usize))
            }
            Some("symmetric") => {
                let Some(n) = v.get("degree").and_then(Value::as_u64).filter(|&n| (1..=6).contains(&n)) else {
                    return input("group.degree must be between 1 and 6");
                };
                Ok(Group::symmetric(n as usize))
            }
            Some("table") => {
                let Some(elems) = v.get("elements").and_then(Value::as_array) else {
                    return input("group.elements must be an array");
                };
                let names: Vec<String> = elems
                    .iter()
                    .map(|e| match e {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect();
                let Some(rows) = v.get("mul").and_then(Value::as_array) else {
                    return input("group.mul must be an array of [i, j, k] triples");
                };
                let mut mul = vec![];
                for r in rows {
                    let t: Option<Vec<usize>> = r.as_array().map(|a| a.iter().filter_map(|x| x.as_u64().map(|x| x as usize)).collect());
                    match t {
                        Some(t) if t.len() == 3 && r.as_array().unwrap().len() == 3 => mul.push([t[0], t[1], t[2]]),
                        _ => return input(format!("group.mul entry {r} is not an [i, j, k] triple")),
                    }
                }
                Group::from_table(names, &mul)
            }
            Some("perm") => {
                let Some(degree) = v.get("degree").and_then(Value::as_u64).filter(|&d| d >= 1) else {
                    return input("group.degree must be a positive integer");
                };
                let Some(gens) = v.get("generators").and_then(Value::as_array) else {
                    return input("group.generators must be an array");
                };
                let gens = gens.iter().map(|g| parse_perm(g, degree as usize)).collect::<Result<Vec<_>>>()?;
                Group::from_permutations(degree as usize, &gens)
            }
            _ => input("group.kind must be one of \"table\", \"perm\", \"int\", \"cyclic\", \"symmetric\""),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Group::Finite(_))
    }

    pub fn order(&self) -> Option<usize> {
        match self {
            Group::Finite(g) => Some(g.order()),
            Group::Integers => None,
        }
    }

    pub fn elements(&self) -> Option<Vec<Elt>> {
        self.order().map(|n| (0..n as Elt).collect())
    }

    /// Finite groups: all elements. ℤ: the integers in `[-radius, radius]`.
    pub fn window(&self, radius: i64) -> Vec<Elt> {
        match self {
            Group::Finite(g) => (0..g.order() as Elt).collect(),
            Group::Integers => (-radius..=radius).collect(),
        }
    }

    pub fn identity(&self) -> Elt {
        match self {
            Group::Finite(g) => g.identity as Elt,
            Group::Integers => 0,
        }
    }

    pub fn contains(&self, x: Elt) -> bool {
        match self {
            Group::Finite(g) => x >= 0 && (x as usize) < g.order(),
            Group::Integers => true,
        }
    }

    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        match self {
            Group::Finite(g) => g.table[a as usize * g.order() + b as usize] as Elt,
            Group::Integers => a.checked_add(b).expect("integer overflow in ℤ backend"),
        }
    }

    pub fn inv(&self, a: Elt) -> Elt {
        match self {
            Group::Finite(g) => g.inverse[a as usize] as Elt,
            Group::Integers => -a,
        }
    }

    /// `g x g⁻¹`.
    pub fn conj(&self, g: Elt, x: Elt) -> Elt {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Product of a sequence, left to right.
    pub fn prod(&self, xs: &[Elt]) -> Elt {
        xs.iter().fold(self.identity(), |acc, &x| self.mul(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            Group::Integers => true,
            Group::Finite(g) => {
                let n = g.order() as Elt;
                (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
            }
        }
    }

    /// Generators used to describe automorphisms; all elements if none are recorded.
    pub fn generators(&self) -> Vec<Elt> {
        match self {
            Group::Finite(g) if !g.generators.is_empty() => g.generators.clone(),
            Group::Finite(g) => (0..g.order() as Elt).collect(),
            Group::Integers => vec![1],
        }
    }

    pub fn name(&self, x: Elt) -> String {
        match self {
            Group::Finite(g) => g.names[x as usize].clone(),
            Group::Integers => x.to_string(),
        }
    }

    /// Reads an element: a name, an integer (ℤ or an index), or a permutation.
    pub fn parse(&self, v: &Value) -> Result<Elt> {
        match (self, v) {
            (Group::Integers, Value::Number(n)) => n.as_i64().map_or_else(|| input(format!("{v} is not an integer")), Ok),
            (Group::Integers, Value::String(s)) => s.trim().parse().or_else(|_| input(format!("{s:?} is not an integer"))),
            (Group::Finite(g), Value::String(s)) => {
                if let Some(&i) = g.by_name.get(s.trim()) {
                    return Ok(i as Elt);
                }
                if let Some(perms) = &g.perms {
                    let p = parse_cycles(s, perms[0].len())?;
                    if let Some(i) = perms.iter().position(|q| *q == p) {
                        return Ok(i as Elt);
                    }
                }
                input(format!("{s:?} is not an element of the group"))
            }
            (Group::Finite(g), Value::Array(_)) if g.perms.is_some() => {
                let perms = g.perms.as_ref().unwrap();
                let p = parse_perm(v, perms[0].len())?;
                perms.iter().position(|q| *q == p).map(|i| i as Elt).map_or_else(|| input(format!("{v} is not in the group")), Ok)
            }
            (Group::Finite(g), Value::Number(n)) => match n.as_u64() {
                Some(i) if (i as usize) < g.order() && g.perms.is_none() && !g.by_name.contains_key(&i.to_string()) => Ok(i as Elt),
                _ => g.by_name.get(&n.to_string()).map(|&i| i as Elt).map_or_else(|| input(format!("{v} is not an element of the group")), Ok),
            },
            _ => input(format!("cannot read a group element from {v}")),
        }
    }

    pub fn parse_str(&self, s: &str) -> Result<Elt> {
        self.parse(&Value::String(s.to_string()))
    }

    /// Permutation images (0-based) of an element of a permutation group.
    pub fn permutation(&self, x: Elt) -> Option<&[u32]> {
        match self {
            Group::Finite(g) => g.perms.as_ref().map(|p| p[x as usize].as_slice()),
            Group::Integers => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_closes_with_identity_first() {
        let s3 = Group::symmetric(3);
        assert_eq!(s3.order(), Some(6));
        assert_eq!(s3.identity(), 0);
        assert_eq!(s3.name(0), "e");
        assert!(!s3.is_abelian());
    }

    #[test]
    fn right_to_left_products() {
        let s3 = Group::symmetric(3);
        let c = s3.parse_str("(123)").unwrap();
        let t = s3.parse_str("(12)").unwrap();
        // conjugating (12) by (123) gives (23)
        assert_eq!(s3.name(s3.conj(c, t)), "(23)");
        // (12)(123): 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
        assert_eq!(s3.name(s3.mul(t, c)), "(23)");
        assert_eq!(s3.parse_str("(12)(123)").unwrap(), s3.mul(t, c));
        assert_eq!(s3.name(s3.inv(c)), "(132)");
    }

    #[test]
    fn table_validation() {
        let names = vec!["a".to_string(), "b".to_string()];
        let bad = [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 1]];
        assert!(Group::from_table(names.clone(), &bad).is_err());
        let good = [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]];
        assert!(Group::from_table(names.clone(), &good).is_ok());
        assert!(Group::from_table(names, &good[..3]).is_err());
    }

    #[test]
    fn json_specs() {
        let g = Group::from_json(&serde_json::json!({"kind":"perm","degree":3,"generators":[[2,1,3],[2,3,1]]})).unwrap();
        assert_eq!(g.order(), Some(6));
        let z = Group::from_json(&serde_json::json!({"kind":"int"})).unwrap();
        assert_eq!(z.mul(3, -5), -2);
        let big = serde_json::json!({"kind":"perm","degree":8,"generators":[[2,1,3,4,5,6,7,8],[2,3,4,5,6,7,8,1]]});
        assert!(Group::from_json(&big).is_err());
        let t = Group::from_json(&serde_json::json!({"kind":"table","elements":["e","u"],"mul":[[0,0,0],[0,1,1],[1,0,1],[1,1,0]]})).unwrap();
        assert_eq!(t.parse(&serde_json::json!("u")).unwrap(), 1);
    }
}
