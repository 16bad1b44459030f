//! Axiom checker for candidate betweenness relations.
//!
//! A ternary relation B on a finite set is the betweenness of a connected
//! graph exactly when it satisfies the axioms IB1..IB7 below (with E the
//! edge predicate derived from B). `check_axioms` verifies each axiom by
//! exhaustive quantification and reports the least violating tuple.

use crate::error::{Error, Result};
use crate::metric::MetricOracle;

/// A candidate ternary relation over universe `0..m`. Deliberately carries
/// no invariants: it may violate every axiom.
#[derive(Clone, Debug)]
pub struct TernaryRelation {
    m: usize,
    bits: Vec<u64>,
}

impl TernaryRelation {
    pub fn new(m: usize, triples: &[(usize, usize, usize)]) -> Result<TernaryRelation> {
        if m == 0 {
            return Err(Error::InvalidGraph("universe must be non-empty".into()));
        }
        let mut rel = TernaryRelation { m, bits: vec![0; (m * m * m).div_ceil(64)] };
        for &(u, x, v) in triples {
            for i in [u, x, v] {
                if i >= m {
                    return Err(Error::VertexRange(i, m));
                }
            }
            rel.set(u, x, v);
        }
        Ok(rel)
    }

    /// Materialize the betweenness of a graph metric.
    pub fn from_metric(m: &MetricOracle) -> TernaryRelation {
        let n = m.n();
        let mut rel = TernaryRelation { m: n, bits: vec![0; (n * n * n).div_ceil(64)] };
        for u in 0..n {
            for x in 0..n {
                for v in 0..n {
                    if m.between(u, x, v) {
                        rel.set(u, x, v);
                    }
                }
            }
        }
        rel
    }

    fn set(&mut self, u: usize, x: usize, v: usize) {
        let i = (u * self.m + x) * self.m + v;
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn holds(&self, u: usize, x: usize, v: usize) -> bool {
        let i = (u * self.m + x) * self.m + v;
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn universe(&self) -> usize {
        self.m
    }

    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.m {
            for x in 0..self.m {
                for v in 0..self.m {
                    if self.holds(u, x, v) {
                        out.push((u, x, v));
                    }
                }
            }
        }
        out
    }

    /// Edge predicate derived from the relation: distinct u,v whose
    /// "interval" contains only u and v.
    pub fn derived_edges(&self) -> Vec<Vec<bool>> {
        let m = self.m;
        let mut e = vec![vec![false; m]; m];
        for u in 0..m {
            for v in 0..m {
                e[u][v] = u != v
                    && (0..m).all(|x| !self.holds(u, x, v) || x == u || x == v);
            }
        }
        e
    }
}

/// Axioms of a graphic interval structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    IB1,
    IB2,
    IB3,
    IB4,
    IB5,
    IB6,
    IB7,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// Lexicographically least tuple falsifying the axiom, in the order
    /// the variables are quantified.
    pub witness: Vec<usize>,
}

/// Check IB1..IB7 exactly as quantified; for each violated axiom report the
/// least witness tuple. Empty result means `r` is a graphic interval
/// structure (the betweenness of a connected graph).
pub fn check_axioms(r: &TernaryRelation) -> Vec<Violation> {
    let m = r.universe();
    let e = r.derived_edges();
    let b = |u: usize, x: usize, v: usize| r.holds(u, x, v);
    let mut out = Vec::new();

    // IB1: B(u,u,v)
    'ib1: for u in 0..m {
        for v in 0..m {
            if !b(u, u, v) {
                out.push(Violation { axiom: Axiom::IB1, witness: vec![u, v] });
                break 'ib1;
            }
        }
    }
    // IB2: B(u,x,v) -> B(v,x,u)
    'ib2: for u in 0..m {
        for v in 0..m {
            for x in 0..m {
                if b(u, x, v) && !b(v, x, u) {
                    out.push(Violation { axiom: Axiom::IB2, witness: vec![u, v, x] });
                    break 'ib2;
                }
            }
        }
    }
    // IB3: B(u,x,u) -> x = u
    'ib3: for u in 0..m {
        for x in 0..m {
            if b(u, x, u) && x != u {
                out.push(Violation { axiom: Axiom::IB3, witness: vec![u, x] });
                break 'ib3;
            }
        }
    }
    // IB4: B(u,w,v) & B(u,x,w) -> B(u,x,v)
    'ib4: for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                for x in 0..m {
                    if b(u, w, v) && b(u, x, w) && !b(u, x, v) {
                        out.push(Violation { axiom: Axiom::IB4, witness: vec![u, v, w, x] });
                        break 'ib4;
                    }
                }
            }
        }
    }
    // IB5: B(u,v,x) & B(u,w,x) & B(u,v,w) -> B(v,w,x)
    'ib5: for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                for x in 0..m {
                    if b(u, v, x) && b(u, w, x) && b(u, v, w) && !b(v, w, x) {
                        out.push(Violation { axiom: Axiom::IB5, witness: vec![u, v, w, x] });
                        break 'ib5;
                    }
                }
            }
        }
    }
    // IB6: E(u,u') & E(v,v') & B(u',u,v') & B(u,u',v) & B(u,v',v) -> B(u',v,v')
    'ib6: for u in 0..m {
        for up in 0..m {
            for v in 0..m {
                for vp in 0..m {
                    if e[u][up]
                        && e[v][vp]
                        && b(up, u, vp)
                        && b(u, up, v)
                        && b(u, vp, v)
                        && !b(up, v, vp)
                    {
                        out.push(Violation { axiom: Axiom::IB6, witness: vec![u, up, v, vp] });
                        break 'ib6;
                    }
                }
            }
        }
    }
    // IB7: E(u,u') & E(v,v') & B(u,u',v) & !B(u,v',v) & !B(u',v,v') -> B(u,u',v')
    'ib7: for u in 0..m {
        for up in 0..m {
            for v in 0..m {
                for vp in 0..m {
                    if e[u][up]
                        && e[v][vp]
                        && b(u, up, v)
                        && !b(u, vp, v)
                        && !b(up, v, vp)
                        && !b(u, up, vp)
                    {
                        out.push(Violation { axiom: Axiom::IB7, witness: vec![u, up, v, vp] });
                        break 'ib7;
                    }
                }
            }
        }
    }
    out
}

/// Parse a relation file: first line the universe size, then one `u x v`
/// triple per line; `#` comments allowed.
pub fn parse_relation(text: &str) -> Result<TernaryRelation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines
        .next()
        .ok_or(Error::RelationFormat { line: 0, msg: "empty input".into() })?;
    let m: usize = header
        .parse()
        .map_err(|_| Error::RelationFormat { line, msg: "expected universe size".into() })?;
    let mut triples = Vec::new();
    for (line, l) in lines {
        let toks: Vec<usize> = l
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::RelationFormat { line, msg: format!("bad token `{t}`") })
            })
            .collect::<Result<_>>()?;
        if toks.len() != 3 {
            return Err(Error::RelationFormat { line, msg: "expected `u x v`".into() });
        }
        triples.push((toks[0], toks[1], toks[2]));
    }
    TernaryRelation::new(m, &triples)
}
