//! Exact solver for bounded back-and-forth games on finite structures with
//! one ternary relation.
//!
//! The game is solved by minimax over all runs: the first player picks an
//! element of either structure, the second answers in the other one; after
//! r rounds the second player has won if the picked pairs form a partial
//! isomorphism. Positions are memoized on the raw pick vectors.

use crate::axioms::TernaryRelation;
use crate::error::{Error, Result};
use crate::formula::{evaluate_sentence, BetweennessModel, Formula};
use crate::metric::MetricOracle;
use std::collections::HashMap;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// A finite structure with one ternary relation and its derived edges.
#[derive(Clone)]
pub struct RelStructure {
    rel: TernaryRelation,
    edges: Vec<Vec<bool>>,
}

impl RelStructure {
    pub fn new(rel: TernaryRelation) -> RelStructure {
        let edges = rel.derived_edges();
        RelStructure { rel, edges }
    }

    pub fn from_graph_metric(m: &MetricOracle) -> RelStructure {
        RelStructure::new(TernaryRelation::from_metric(m))
    }

    pub fn len(&self) -> usize {
        self.rel.universe()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn relation(&self) -> &TernaryRelation {
        &self.rel
    }
}

impl BetweennessModel for RelStructure {
    fn universe(&self) -> usize {
        self.rel.universe()
    }
    fn between(&self, u: usize, x: usize, v: usize) -> bool {
        self.rel.holds(u, x, v)
    }
    fn edge(&self, u: usize, v: usize) -> bool {
        self.edges[u][v]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Winner {
    Duplicator,
    Spoiler,
}

impl std::fmt::Display for Winner {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Winner::Duplicator => write!(f, "Duplicator"),
            Winner::Spoiler => write!(f, "Spoiler"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct GameOutcome {
    pub winner: Winner,
    pub moves: usize,
    /// A first move of a winning strategy when the Spoiler wins.
    pub spoiler_first_move: Option<(Side, usize)>,
}

struct Solver<'a> {
    a: &'a RelStructure,
    b: &'a RelStructure,
    r: usize,
    memo: HashMap<(Vec<u16>, Vec<u16>), bool>,
    nodes: u64,
    budget: u64,
}

impl<'a> Solver<'a> {
    /// The mapping stays a partial isomorphism after appending the pair
    /// (na, nb); earlier pairs are assumed consistent.
    fn extension_consistent(&self, pa: &[u16], pb: &[u16], na: u16, nb: u16) -> bool {
        for i in 0..pa.len() {
            if (pa[i] == na) != (pb[i] == nb) {
                return false;
            }
        }
        let k = pa.len();
        let get_a = |i: usize| if i == k { na } else { pa[i] } as usize;
        let get_b = |i: usize| if i == k { nb } else { pb[i] } as usize;
        for i in 0..=k {
            for j in 0..=k {
                for l in 0..=k {
                    if i != k && j != k && l != k {
                        continue;
                    }
                    if self.a.rel.holds(get_a(i), get_a(j), get_a(l))
                        != self.b.rel.holds(get_b(i), get_b(j), get_b(l))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True when the Duplicator wins from this position.
    fn duplicator_wins(&mut self, pa: Vec<u16>, pb: Vec<u16>) -> Result<bool> {
        if pa.len() == self.r {
            return Ok(true);
        }
        if let Some(&hit) = self.memo.get(&(pa.clone(), pb.clone())) {
            return Ok(hit);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceBudgetExceeded(self.nodes));
        }
        let mut dup_wins = true;
        'spoiler: for side in [Side::Left, Side::Right] {
            let (own, own_struct) = match side {
                Side::Left => (&pa, self.a),
                Side::Right => (&pb, self.b),
            };
            for pick in 0..own_struct.len() as u16 {
                // repeating an earlier pick is never better for the Spoiler:
                // the Duplicator mirrors the matching earlier answer
                if own.contains(&pick) {
                    continue;
                }
                let mut answered = false;
                let other_len = match side {
                    Side::Left => self.b.len(),
                    Side::Right => self.a.len(),
                } as u16;
                for reply in 0..other_len {
                    let (na, nb) = match side {
                        Side::Left => (pick, reply),
                        Side::Right => (reply, pick),
                    };
                    if !self.extension_consistent(&pa, &pb, na, nb) {
                        continue;
                    }
                    let mut npa = pa.clone();
                    let mut npb = pb.clone();
                    npa.push(na);
                    npb.push(nb);
                    if self.duplicator_wins(npa, npb)? {
                        answered = true;
                        break;
                    }
                }
                if !answered {
                    dup_wins = false;
                    break 'spoiler;
                }
            }
        }
        self.memo.insert((pa, pb), dup_wins);
        Ok(dup_wins)
    }

    /// The Spoiler's first winning move, if the Spoiler wins.
    fn spoiler_first_move(&mut self) -> Result<Option<(Side, usize)>> {
        for side in [Side::Left, Side::Right] {
            let own_len = match side {
                Side::Left => self.a.len(),
                Side::Right => self.b.len(),
            } as u16;
            let other_len = match side {
                Side::Left => self.b.len(),
                Side::Right => self.a.len(),
            } as u16;
            for pick in 0..own_len {
                let mut answered = false;
                for reply in 0..other_len {
                    let (na, nb) = match side {
                        Side::Left => (pick, reply),
                        Side::Right => (reply, pick),
                    };
                    if !self.extension_consistent(&[], &[], na, nb) {
                        continue;
                    }
                    if self.duplicator_wins(vec![na], vec![nb])? {
                        answered = true;
                        break;
                    }
                }
                if !answered {
                    return Ok(Some((side, pick as usize)));
                }
            }
        }
        Ok(None)
    }
}

/// Solve the r-move game exactly.
pub fn play(a: &RelStructure, b: &RelStructure, r: usize) -> Result<GameOutcome> {
    play_with_budget(a, b, r, DEFAULT_NODE_BUDGET)
}

pub fn play_with_budget(
    a: &RelStructure,
    b: &RelStructure,
    r: usize,
    budget: u64,
) -> Result<GameOutcome> {
    if a.len().max(b.len()) > u16::MAX as usize {
        return Err(Error::VertexRange(a.len().max(b.len()), u16::MAX as usize));
    }
    let mut solver = Solver { a, b, r, memo: HashMap::new(), nodes: 0, budget };
    let dup = solver.duplicator_wins(Vec::new(), Vec::new())?;
    let spoiler_first_move = if dup { None } else { solver.spoiler_first_move()? };
    Ok(GameOutcome {
        winner: if dup { Winner::Duplicator } else { Winner::Spoiler },
        moves: r,
        spoiler_first_move,
    })
}

/// Least r <= r_max where the Spoiler wins, if any.
pub fn distinguishing_rank(
    a: &RelStructure,
    b: &RelStructure,
    r_max: usize,
) -> Result<Option<usize>> {
    for r in 0..=r_max {
        if play(a, b, r)?.winner == Winner::Spoiler {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// When the Duplicator wins the r-move game, all supplied sentences of
/// quantifier rank at most r must agree on the two structures. Returns the
/// names of any sentences that disagree (must be none).
pub fn agreement_check(
    a: &RelStructure,
    b: &RelStructure,
    r: usize,
    sentences: &[(String, Formula)],
) -> Result<Vec<String>> {
    if play(a, b, r)?.winner != Winner::Duplicator {
        return Ok(Vec::new());
    }
    let mut violations = Vec::new();
    for (name, f) in sentences {
        if f.analyze().qr as usize > r {
            continue;
        }
        let va = evaluate_sentence(f, a)?.value;
        let vb = evaluate_sentence(f, b)?.value;
        if va != vb {
            violations.push(name.clone());
        }
    }
    Ok(violations)
}

/// Parse a relation file or build the betweenness structure of a graph.
pub fn structure_from_text(text: &str) -> Result<RelStructure> {
    // relation files start with a single integer line
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.split_whitespace().count() == 1 && first.parse::<usize>().is_ok() {
        Ok(RelStructure::new(crate::axioms::parse_relation(text)?))
    } else {
        let g = crate::families::graph_from_text(text)?;
        Ok(RelStructure::from_graph_metric(&MetricOracle::new(g)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn b_structure(g: crate::graph::Graph) -> RelStructure {
        RelStructure::from_graph_metric(&MetricOracle::new(g).unwrap())
    }

    #[test]
    fn identical_structures_never_lose() {
        let s = b_structure(families::cycle(5).unwrap());
        for r in 0..=3 {
            assert_eq!(play(&s, &s, r).unwrap().winner, Winner::Duplicator);
        }
    }

    #[test]
    fn k2_vs_p3() {
        let a = b_structure(families::path(2).unwrap());
        let b = b_structure(families::path(3).unwrap());
        assert_eq!(play(&a, &b, 2).unwrap().winner, Winner::Duplicator);
        let out = play(&a, &b, 3).unwrap();
        assert_eq!(out.winner, Winner::Spoiler);
        assert!(out.spoiler_first_move.is_some());
        assert_eq!(distinguishing_rank(&a, &b, 5).unwrap(), Some(3));
    }

    #[test]
    fn symmetry_of_the_game() {
        let a = b_structure(families::cycle(4).unwrap());
        let b = b_structure(families::cycle(5).unwrap());
        for r in 0..=3 {
            assert_eq!(
                play(&a, &b, r).unwrap().winner,
                play(&b, &a, r).unwrap().winner
            );
        }
    }

    #[test]
    fn spoiler_win_is_monotone() {
        let a = b_structure(families::path(2).unwrap());
        let b = b_structure(families::path(3).unwrap());
        assert_eq!(play(&a, &b, 3).unwrap().winner, Winner::Spoiler);
        assert_eq!(play(&a, &b, 4).unwrap().winner, Winner::Spoiler);
    }

    #[test]
    fn euler_fixture_round_one() {
        let a = b_structure(families::euler_a(1).unwrap());
        let b = b_structure(families::euler_b(1).unwrap());
        assert_eq!(play(&a, &b, 1).unwrap().winner, Winner::Duplicator);
        assert_eq!(play(&a, &b, 2).unwrap().winner, Winner::Duplicator);
        assert_eq!(play(&a, &b, 3).unwrap().winner, Winner::Spoiler);
    }

    #[test]
    fn budget_is_respected() {
        let a = b_structure(families::cycle(8).unwrap());
        let b = b_structure(families::cycle(9).unwrap());
        match play_with_budget(&a, &b, 4, 10) {
            Err(Error::ResourceBudgetExceeded(_)) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn relation_text_detection() {
        let rel = structure_from_text("2\n0 0 0\n0 0 1\n").unwrap();
        assert_eq!(rel.len(), 2);
        let g = structure_from_text("cycle(4)").unwrap();
        assert_eq!(g.len(), 4);
    }
}
