//! Abstract syntax of the betweenness formula language.
//!
//! Terms are variables only. After macro expansion and resolution every
//! variable carries a slot index into the evaluation environment.

use num_bigint::BigUint;
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Var {
    pub name: String,
    pub(crate) slot: u32,
}

impl Var {
    pub fn new(name: impl Into<String>) -> Var {
        Var { name: name.into(), slot: u32::MAX }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Between(Var, Var, Var),
    Edge(Var, Var),
    Equal(Var, Var),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(Var, Box<Formula>),
    Exists(Var, Box<Formula>),
}

/// Quantifier rank, width, and size of a formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Analysis {
    /// Nesting depth of quantifiers.
    pub qr: u32,
    /// Maximum number of free variables of any subformula.
    pub width: u32,
    /// Node count of the expanded syntax tree.
    pub size: u64,
}

impl Formula {
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }
    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }
    pub fn forall(v: impl Into<String>, f: Formula) -> Formula {
        Formula::Forall(Var::new(v), Box::new(f))
    }
    pub fn exists(v: impl Into<String>, f: Formula) -> Formula {
        Formula::Exists(Var::new(v), Box::new(f))
    }

    /// Conjunction of a non-empty list.
    pub fn all(mut fs: Vec<Formula>) -> Formula {
        let mut acc = fs.pop().expect("non-empty conjunction");
        while let Some(f) = fs.pop() {
            acc = Formula::and(f, acc);
        }
        acc
    }

    /// Disjunction of a non-empty list.
    pub fn any(mut fs: Vec<Formula>) -> Formula {
        let mut acc = fs.pop().expect("non-empty disjunction");
        while let Some(f) = fs.pop() {
            acc = Formula::or(f, acc);
        }
        acc
    }

    fn vars_mut(&mut self) -> Vec<&mut Var> {
        match self {
            Formula::Between(a, b, c) => vec![a, b, c],
            Formula::Edge(a, b) | Formula::Equal(a, b) => vec![a, b],
            _ => vec![],
        }
    }

    /// Rename free occurrences per `map` (used for macro substitution).
    pub(crate) fn substitute(&mut self, map: &HashMap<String, String>) {
        match self {
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                // bound names never collide with substitution sources: macro
                // bodies are alpha-renamed with reserved names before this
                debug_assert!(!map.contains_key(&v.name));
                f.substitute(map);
            }
            Formula::Not(f) => f.substitute(map),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.substitute(map);
                b.substitute(map);
            }
            atom => {
                for v in atom.vars_mut() {
                    if let Some(new) = map.get(&v.name) {
                        v.name = new.clone();
                    }
                }
            }
        }
    }

    /// Rename every bound variable to a fresh reserved name.
    pub(crate) fn freshen(&mut self, counter: &mut u64, scope: &mut HashMap<String, Vec<String>>) {
        match self {
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                *counter += 1;
                let fresh = format!("{}${}", v.name, counter);
                scope.entry(v.name.clone()).or_default().push(fresh.clone());
                let original = std::mem::replace(&mut v.name, fresh);
                f.freshen(counter, scope);
                scope.get_mut(&original).unwrap().pop();
            }
            Formula::Not(f) => f.freshen(counter, scope),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.freshen(counter, scope);
                b.freshen(counter, scope);
            }
            atom => {
                for v in atom.vars_mut() {
                    if let Some(stack) = scope.get(&v.name) {
                        if let Some(fresh) = stack.last() {
                            v.name = fresh.clone();
                        }
                    }
                }
            }
        }
    }

    /// Assign slot indices; free variables get slots from `free` (appending
    /// new ones in first-appearance order). Returns total slot count.
    pub(crate) fn resolve(&mut self, free: &mut Vec<String>) -> u32 {
        fn walk(
            f: &mut Formula,
            scope: &mut Vec<(String, u32)>,
            free: &mut Vec<String>,
            next: &mut u32,
        ) {
            match f {
                Formula::Forall(v, body) | Formula::Exists(v, body) => {
                    v.slot = *next;
                    *next += 1;
                    scope.push((v.name.clone(), v.slot));
                    walk(body, scope, free, next);
                    scope.pop();
                }
                Formula::Not(body) => walk(body, scope, free, next),
                Formula::And(a, b)
                | Formula::Or(a, b)
                | Formula::Implies(a, b)
                | Formula::Iff(a, b) => {
                    walk(a, scope, free, next);
                    walk(b, scope, free, next);
                }
                atom => {
                    for v in atom.vars_mut() {
                        if let Some(&(_, slot)) =
                            scope.iter().rev().find(|(name, _)| *name == v.name)
                        {
                            v.slot = slot;
                        } else if let Some(idx) = free.iter().position(|n| *n == v.name) {
                            v.slot = idx as u32;
                        } else {
                            free.push(v.name.clone());
                            v.slot = (free.len() - 1) as u32;
                        }
                    }
                }
            }
        }
        // assign free-variable slots first so quantifier slots come after
        let mut names = Vec::new();
        collect_free(self, &mut Vec::new(), &mut names);
        for name in names {
            if !free.contains(&name) {
                free.push(name);
            }
        }
        let mut next = free.len() as u32;
        walk(self, &mut Vec::new(), free, &mut next);
        next
    }

    /// Names of free variables in first-appearance order.
    pub fn free_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        collect_free(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn analyze(&self) -> Analysis {
        fn walk(f: &Formula) -> (u32, u32, u64, Vec<String>) {
            // returns (qr, width, size, free vars)
            match f {
                Formula::Between(a, b, c) => {
                    let mut fv = vec![a.name.clone()];
                    for v in [b, c] {
                        if !fv.contains(&v.name) {
                            fv.push(v.name.clone());
                        }
                    }
                    (0, fv.len() as u32, 1, fv)
                }
                Formula::Edge(a, b) | Formula::Equal(a, b) => {
                    let mut fv = vec![a.name.clone()];
                    if !fv.contains(&b.name) {
                        fv.push(b.name.clone());
                    }
                    (0, fv.len() as u32, 1, fv)
                }
                Formula::Not(g) => {
                    let (qr, w, s, fv) = walk(g);
                    (qr, w.max(fv.len() as u32), s + 1, fv)
                }
                Formula::And(a, b)
                | Formula::Or(a, b)
                | Formula::Implies(a, b)
                | Formula::Iff(a, b) => {
                    let (qa, wa, sa, fa) = walk(a);
                    let (qb, wb, sb, fb) = walk(b);
                    let mut fv = fa;
                    for v in fb {
                        if !fv.contains(&v) {
                            fv.push(v);
                        }
                    }
                    let w = wa.max(wb).max(fv.len() as u32);
                    (qa.max(qb), w, sa + sb + 1, fv)
                }
                Formula::Forall(v, g) | Formula::Exists(v, g) => {
                    let (qr, w, s, mut fv) = walk(g);
                    fv.retain(|n| *n != v.name);
                    (qr + 1, w.max(fv.len() as u32), s + 1, fv)
                }
            }
        }
        let (qr, width, size, _) = walk(self);
        Analysis { qr, width, size }
    }
}

fn collect_free(f: &Formula, bound: &mut Vec<String>, out: &mut Vec<String>) {
    match f {
        Formula::Forall(v, body) | Formula::Exists(v, body) => {
            bound.push(v.name.clone());
            collect_free(body, bound, out);
            bound.pop();
        }
        Formula::Not(body) => collect_free(body, bound, out),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            collect_free(a, bound, out);
            collect_free(b, bound, out);
        }
        Formula::Between(a, b, c) => {
            for v in [a, b, c] {
                if !bound.contains(&v.name) && !out.contains(&v.name) {
                    out.push(v.name.clone());
                }
            }
        }
        Formula::Edge(a, b) | Formula::Equal(a, b) => {
            for v in [a, b] {
                if !bound.contains(&v.name) && !out.contains(&v.name) {
                    out.push(v.name.clone());
                }
            }
        }
    }
}

/// Predicted evaluation effort: size * (n + 1 + n^3)^width.
pub fn cost_estimate(analysis: &Analysis, n: usize) -> BigUint {
    let n = BigUint::from(n);
    let enc = &n + 1u32 + &n * &n * &n;
    BigUint::from(analysis.size) * enc.pow(analysis.width)
}

impl std::fmt::Display for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Formula::Between(a, b, c) => write!(f, "B({},{},{})", a.name, b.name, c.name),
            Formula::Edge(a, b) => write!(f, "E({},{})", a.name, b.name),
            Formula::Equal(a, b) => write!(f, "{} = {}", a.name, b.name),
            Formula::Not(g) => write!(f, "!({g})"),
            Formula::And(a, b) => write!(f, "({a} & {b})"),
            Formula::Or(a, b) => write!(f, "({a} | {b})"),
            Formula::Implies(a, b) => write!(f, "({a} -> {b})"),
            Formula::Iff(a, b) => write!(f, "({a} <-> {b})"),
            Formula::Forall(v, g) => write!(f, "forall {} {g}", v.name),
            Formula::Exists(v, g) => write!(f, "exists {} {g}", v.name),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_analysis() {
        let f = Formula::Between(Var::new("x"), Var::new("y"), Var::new("z"));
        let a = f.analyze();
        assert_eq!((a.qr, a.width, a.size), (0, 3, 1));
    }

    #[test]
    fn negation_preserves_qr() {
        let f = Formula::not(Formula::forall(
            "x",
            Formula::Edge(Var::new("x"), Var::new("y")),
        ));
        assert_eq!(f.analyze().qr, 1);
    }

    #[test]
    fn nested_quantifiers() {
        let f = Formula::forall(
            "x",
            Formula::exists("y", Formula::Edge(Var::new("x"), Var::new("y"))),
        );
        let a = f.analyze();
        assert_eq!(a.qr, 2);
        assert_eq!(a.width, 2);
    }

    #[test]
    fn cost_matches_hand_values() {
        let a = Analysis { qr: 2, width: 2, size: 1 };
        assert_eq!(cost_estimate(&a, 10), BigUint::from(1011u32 * 1011u32));
        let b = Analysis { qr: 0, width: 0, size: 7 };
        assert_eq!(cost_estimate(&b, 10), BigUint::from(7u32));
        let c = Analysis { qr: 3, width: 3, size: 1 };
        assert_eq!(cost_estimate(&c, 20), BigUint::from(8021u64).pow(3));
    }
}
