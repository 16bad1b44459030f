//! Model checking: standard first-order semantics with B interpreted as the
//! betweenness of the model and E as the derived edge predicate.
//!
//! Quantifiers iterate vertices in index order with short-circuiting, which
//! makes reported witnesses the lexicographically least along the outermost
//! same-kind quantifier prefix.

use super::ast::Formula;
use crate::error::{Error, Result};
use crate::metric::MetricOracle;

/// Anything exposing a universe with a ternary betweenness and derived edges.
pub trait BetweennessModel {
    fn universe(&self) -> usize;
    fn between(&self, u: usize, x: usize, v: usize) -> bool;
    fn edge(&self, u: usize, v: usize) -> bool;
}

impl BetweennessModel for MetricOracle {
    fn universe(&self) -> usize {
        self.n()
    }
    fn between(&self, u: usize, x: usize, v: usize) -> bool {
        MetricOracle::between(self, u, x, v)
    }
    fn edge(&self, u: usize, v: usize) -> bool {
        MetricOracle::edge(self, u, v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub value: bool,
    /// Assignment of the outermost same-kind quantifier prefix that decides
    /// the sentence: falsifying for a universal prefix, satisfying for an
    /// existential one.
    pub witness: Option<Vec<(String, usize)>>,
}

fn eval(f: &Formula, m: &dyn BetweennessModel, env: &mut Vec<usize>) -> bool {
    match f {
        Formula::Between(a, b, c) => m.between(
            env[a.slot as usize],
            env[b.slot as usize],
            env[c.slot as usize],
        ),
        Formula::Edge(a, b) => m.edge(env[a.slot as usize], env[b.slot as usize]),
        Formula::Equal(a, b) => env[a.slot as usize] == env[b.slot as usize],
        Formula::Not(g) => !eval(g, m, env),
        Formula::And(a, b) => eval(a, m, env) && eval(b, m, env),
        Formula::Or(a, b) => eval(a, m, env) || eval(b, m, env),
        Formula::Implies(a, b) => !eval(a, m, env) || eval(b, m, env),
        Formula::Iff(a, b) => eval(a, m, env) == eval(b, m, env),
        Formula::Forall(v, g) => {
            let slot = v.slot as usize;
            (0..m.universe()).all(|x| {
                env[slot] = x;
                eval(g, m, env)
            })
        }
        Formula::Exists(v, g) => {
            let slot = v.slot as usize;
            (0..m.universe()).any(|x| {
                env[slot] = x;
                eval(g, m, env)
            })
        }
    }
}

/// Evaluate a formula under an assignment of its free variables.
pub fn evaluate(f: &Formula, m: &dyn BetweennessModel, env: &[(&str, usize)]) -> Result<bool> {
    let mut f = f.clone();
    let mut free: Vec<String> = env.iter().map(|(n, _)| n.to_string()).collect();
    let bound_count = free.len();
    let slots = f.resolve(&mut free);
    if free.len() > bound_count {
        return Err(Error::UnboundVariable(free[bound_count].clone()));
    }
    let mut slots_env = vec![usize::MAX; slots as usize];
    for (i, &(name, vertex)) in env.iter().enumerate() {
        if vertex >= m.universe() {
            return Err(Error::VertexRange(vertex, m.universe()));
        }
        let _ = name;
        slots_env[i] = vertex;
    }
    Ok(eval(&f, m, &mut slots_env))
}

/// Evaluate a closed formula and report the deciding prefix assignment.
pub fn evaluate_sentence(f: &Formula, m: &dyn BetweennessModel) -> Result<Outcome> {
    let mut f = f.clone();
    let mut free = Vec::new();
    let slots = f.resolve(&mut free);
    if let Some(name) = free.first() {
        return Err(Error::UnboundVariable(name.clone()));
    }
    let mut env = vec![usize::MAX; slots as usize];

    enum Kind {
        All,
        Any,
    }
    // peel the maximal same-kind quantifier prefix
    let mut prefix: Vec<(String, usize)> = Vec::new();
    let (kind, body) = {
        let mut cur = &f;
        let kind = match cur {
            Formula::Forall(_, _) => Kind::All,
            Formula::Exists(_, _) => Kind::Any,
            _ => {
                let value = eval(cur, m, &mut env);
                return Ok(Outcome { value, witness: None });
            }
        };
        loop {
            match (&kind, cur) {
                (Kind::All, Formula::Forall(v, g)) | (Kind::Any, Formula::Exists(v, g)) => {
                    prefix.push((v.name.clone(), v.slot as usize));
                    cur = g;
                }
                _ => break,
            }
        }
        (kind, cur.clone())
    };

    let deciding = matches!(kind, Kind::Any);
    let mut assignment = vec![0usize; prefix.len()];
    let found = search(&body, m, &mut env, &prefix, 0, deciding, &mut assignment);
    let witness = if found {
        Some(
            prefix
                .iter()
                .zip(&assignment)
                .map(|((name, _), &v)| (clean_name(name), v))
                .collect(),
        )
    } else {
        None
    };
    Ok(Outcome { value: if deciding { found } else { !found }, witness })
}

/// Find the least prefix assignment making the body equal `target`.
fn search(
    body: &Formula,
    m: &dyn BetweennessModel,
    env: &mut Vec<usize>,
    prefix: &[(String, usize)],
    depth: usize,
    target: bool,
    assignment: &mut Vec<usize>,
) -> bool {
    if depth == prefix.len() {
        return eval(body, m, env) == target;
    }
    let slot = prefix[depth].1;
    for x in 0..m.universe() {
        env[slot] = x;
        assignment[depth] = x;
        if search(body, m, env, prefix, depth + 1, target, assignment) {
            return true;
        }
    }
    false
}

/// Strip the internal alpha-renaming suffix from a variable name.
fn clean_name(name: &str) -> String {
    match name.find('$') {
        Some(i) => name[..i].to_string(),
        None => name.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::formula::parser::Parser;
    use crate::formula::prelude::Prelude;

    fn oracle(g: crate::graph::Graph) -> MetricOracle {
        MetricOracle::new(g).unwrap()
    }

    fn sentence(text: &str) -> Formula {
        let p = Prelude::empty();
        Parser::new(text, &p).unwrap().parse_formula().unwrap()
    }

    const BIPARTITE: &str = "forall u forall v forall x E(u,v) -> (B(x,u,v) | B(x,v,u))";

    #[test]
    fn bipartite_on_triangle_with_witness() {
        let m = oracle(families::complete(3).unwrap());
        let out = evaluate_sentence(&sentence(BIPARTITE), &m).unwrap();
        assert!(!out.value);
        let w = out.witness.unwrap();
        assert_eq!(
            w,
            vec![("u".to_string(), 0), ("v".to_string(), 1), ("x".to_string(), 2)]
        );
    }

    #[test]
    fn bipartite_on_even_cycle() {
        let m = oracle(families::cycle(6).unwrap());
        let out = evaluate_sentence(&sentence(BIPARTITE), &m).unwrap();
        assert!(out.value);
        assert!(out.witness.is_none());
    }

    #[test]
    fn existential_witness_is_least() {
        let m = oracle(families::path(3).unwrap());
        let out =
            evaluate_sentence(&sentence("exists x exists y (E(x,y) & !(x = y))"), &m).unwrap();
        assert!(out.value);
        assert_eq!(
            out.witness.unwrap(),
            vec![("x".to_string(), 0), ("y".to_string(), 1)]
        );
    }

    #[test]
    fn free_variables_require_bindings() {
        let m = oracle(families::path(3).unwrap());
        let f = sentence("E(x,y)");
        assert!(matches!(
            evaluate_sentence(&f, &m),
            Err(Error::UnboundVariable(_))
        ));
        assert!(evaluate(&f, &m, &[("x", 0), ("y", 1)]).unwrap());
        assert!(!evaluate(&f, &m, &[("x", 0), ("y", 2)]).unwrap());
        assert!(matches!(
            evaluate(&f, &m, &[("x", 0)]),
            Err(Error::UnboundVariable(_))
        ));
    }

    #[test]
    fn de_morgan_duality_on_samples() {
        let m = oracle(families::cycle(5).unwrap());
        let a = sentence("!(forall x exists y (E(x,y) & B(x,y,y)))");
        let b = sentence("exists x !(exists y (E(x,y) & B(x,y,y)))");
        assert_eq!(
            evaluate_sentence(&a, &m).unwrap().value,
            evaluate_sentence(&b, &m).unwrap().value
        );
    }
}
