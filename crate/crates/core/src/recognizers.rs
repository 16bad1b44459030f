//! The class catalog: each registered class pairs a prelude sentence with a
//! direct decision procedure built from the metric predicates and subgraph
//! searches. The two routes are cross-checked exhaustively in the tests;
//! here only the direct route runs.

use crate::data::ForbiddenLists;
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::metric::MetricOracle;
use crate::predicates as p;
use crate::subgraph::{contains_isometric, find_induced};
use once_cell::sync::Lazy;
use std::collections::BTreeMap;

pub struct Ctx<'a> {
    pub oracle: &'a MetricOracle,
    pub lists: &'a ForbiddenLists,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    True,
    False,
    NotAvailable(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Name of the violated conjunct of the direct checker.
    pub conjunct: String,
    /// Falsifying tuple or embedding (image vertices in pattern order).
    pub tuple: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub value: Value,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn holds() -> Verdict {
        Verdict { value: Value::True, witness: None }
    }
    fn fails(conjunct: &str, tuple: Vec<usize>) -> Verdict {
        Verdict {
            value: Value::False,
            witness: Some(Witness { conjunct: conjunct.into(), tuple }),
        }
    }
    fn unavailable(reason: String) -> Verdict {
        Verdict { value: Value::NotAvailable(reason), witness: None }
    }
    pub fn as_bool(&self) -> Option<bool> {
        match self.value {
            Value::True => Some(true),
            Value::False => Some(false),
            Value::NotAvailable(_) => None,
        }
    }
}

type CheckFn = Box<dyn Fn(&Ctx) -> Result<Option<Vec<usize>>> + Send + Sync>;
type VerifyFn = Box<dyn Fn(&Ctx, &[usize]) -> bool + Send + Sync>;

pub struct Conjunct {
    pub name: &'static str,
    check: CheckFn,
    verify: VerifyFn,
}

impl Conjunct {
    /// Re-evaluate a reported witness: true means the tuple indeed
    /// falsifies this conjunct.
    pub fn verify_witness(&self, ctx: &Ctx, tuple: &[usize]) -> bool {
        (self.verify)(ctx, tuple)
    }
    pub fn check(&self, ctx: &Ctx) -> Result<Option<Vec<usize>>> {
        (self.check)(ctx)
    }
}

pub struct ClassSpec {
    /// Stable snake_case identifier; also the prelude sentence name.
    pub id: &'static str,
    pub data_deps: &'static [&'static str],
    pub conjuncts: Vec<Conjunct>,
}

fn cond(
    name: &'static str,
    check: impl Fn(&MetricOracle) -> Option<Vec<usize>> + Send + Sync + Copy + 'static,
    verify: impl Fn(&MetricOracle, &[usize]) -> bool + Send + Sync + 'static,
) -> Conjunct {
    Conjunct {
        name,
        check: Box::new(move |ctx| Ok(check(ctx.oracle))),
        verify: Box::new(move |ctx, t| verify(ctx.oracle, t)),
    }
}

fn no_induced(name: &'static str, pattern: Graph) -> Conjunct {
    let pat2 = pattern.clone();
    Conjunct {
        name,
        check: Box::new(move |ctx| Ok(find_induced(ctx.oracle.graph(), &pattern))),
        verify: Box::new(move |ctx, emb| embedding_is_induced(ctx.oracle.graph(), &pat2, emb)),
    }
}

fn no_isometric(name: &'static str, pattern: Graph) -> Conjunct {
    let pat2 = pattern.clone();
    Conjunct {
        name,
        check: Box::new(move |ctx| contains_isometric(ctx.oracle, &pattern)),
        verify: Box::new(move |ctx, emb| embedding_is_isometric(ctx.oracle, &pat2, emb)),
    }
}

fn embedding_is_induced(g: &Graph, h: &Graph, emb: &[usize]) -> bool {
    if emb.len() != h.n() {
        return false;
    }
    for i in 0..h.n() {
        for j in 0..h.n() {
            if i != j && h.adjacent(i, j) != g.adjacent(emb[i], emb[j]) {
                return false;
            }
        }
    }
    true
}

fn embedding_is_isometric(g: &MetricOracle, h: &Graph, emb: &[usize]) -> bool {
    let hm = match MetricOracle::new(h.clone()) {
        Ok(m) => m,
        Err(_) => return false,
    };
    emb.len() == h.n()
        && (0..h.n())
            .all(|i| (0..h.n()).all(|j| g.dist(emb[i], emb[j]) == hm.dist(i, j)))
}

// ----- shared conjunct constructors -----

fn c_bipartite() -> Conjunct {
    fn check(m: &MetricOracle) -> Option<Vec<usize>> {
        for (u, v) in m.graph().edges() {
            for x in 0..m.n() {
                if m.dist(x, u) == m.dist(x, v) {
                    return Some(vec![u, v, x]);
                }
            }
        }
        None
    }
    cond("bipartite", check, |m, t| {
        m.edge(t[0], t[1]) && m.dist(t[2], t[0]) == m.dist(t[2], t[1])
    })
}

fn c_acyclic() -> Conjunct {
    Conjunct {
        name: "acyclic",
        check: Box::new(|ctx| {
            if ctx.oracle.graph().has_cycle() {
                // any non-tree edge closes a cycle; report the graph itself
                Ok(Some(vec![]))
            } else {
                Ok(None)
            }
        }),
        verify: Box::new(|ctx, _| ctx.oracle.graph().has_cycle()),
    }
}

fn c_tc() -> Conjunct {
    cond("triangle_condition", p::tc, |m, t| {
        let (v, x, y) = (t[0], t[1], t[2]);
        m.edge(x, y)
            && m.dist(v, x) == m.dist(v, y)
            && !(0..m.n()).any(|z| {
                m.edge(x, z) && m.edge(y, z) && m.between(x, z, v) && m.between(y, z, v)
            })
    })
}

fn c_qc() -> Conjunct {
    cond("quadrangle_condition", p::qc, |m, t| {
        let (v, x, y, u) = (t[0], t[1], t[2], t[3]);
        x != y
            && !m.edge(x, y)
            && m.edge(u, x)
            && m.edge(u, y)
            && m.dist(v, x) == m.dist(v, y)
            && m.dist(v, u) == m.dist(v, x) + 1
            && !(0..m.n()).any(|z| {
                z != u
                    && m.edge(x, z)
                    && m.edge(y, z)
                    && !m.edge(u, z)
                    && m.between(x, z, v)
                    && m.between(y, z, v)
            })
    })
}

fn c_metric_triangles_degenerate() -> Conjunct {
    fn check(m: &MetricOracle) -> Option<Vec<usize>> {
        for x in 0..m.n() {
            for y in 0..m.n() {
                for z in 0..m.n() {
                    if p::is_metric_triangle(m, x, y, z)
                        && m.dist(x, y).max(m.dist(x, z)).max(m.dist(y, z)) > 1
                    {
                        return Some(vec![x, y, z]);
                    }
                }
            }
        }
        None
    }
    cond("metric_triangles_of_size_at_most_one", check, |m, t| {
        p::is_metric_triangle(m, t[0], t[1], t[2])
            && m.dist(t[0], t[1]).max(m.dist(t[0], t[2])).max(m.dist(t[1], t[2])) > 1
    })
}

fn c_meshed_condition() -> Conjunct {
    cond("relaxed_quadrangle_condition", p::qc_minus, |m, t| {
        let (v, x, y) = (t[0], t[1], t[2]);
        m.dist(x, y) == 2
            && !(0..m.n()).any(|z| {
                m.edge(x, z) && m.edge(y, z) && 2 * m.dist(v, z) <= m.dist(v, x) + m.dist(v, y)
            })
    })
}

fn c_median_existence() -> Conjunct {
    fn check(m: &MetricOracle) -> Option<Vec<usize>> {
        for x in 0..m.n() {
            for y in 0..m.n() {
                for z in 0..m.n() {
                    if p::medians(m, x, y, z).is_empty() {
                        return Some(vec![x, y, z]);
                    }
                }
            }
        }
        None
    }
    cond("every_triple_has_a_median", check, |m, t| {
        p::medians(m, t[0], t[1], t[2]).is_empty()
    })
}

fn c_ball_convexity() -> Conjunct {
    cond("convex_balls", p::convex_balls, |m, t| {
        let ball: Vec<usize> = (0..m.n()).filter(|&x| m.dist(t[0], x) <= t[1]).collect();
        !p::is_convex(m, &ball)
    })
}

fn c_clique_helly() -> Conjunct {
    cond("clique_helly_triangles", p::clique_helly, |m, t| {
        crate::predicates::helly::clique_helly_fails_at(m, t[0], t[1], t[2])
    })
}

fn c_c4w4() -> Conjunct {
    cond("squares_extend_to_wheels", p::c4w4, |m, t| {
        crate::predicates::conditions::is_square(m, t[0], t[1], t[2], t[3])
            && !(0..m.n()).any(|u| {
                m.edge(u, t[0]) && m.edge(u, t[1]) && m.edge(u, t[2]) && m.edge(u, t[3])
            })
    })
}

fn c_thick() -> Conjunct {
    cond("thick_2_intervals", p::is_thick, |m, t| {
        let (u, v) = (t[0], t[1]);
        let interior: Vec<usize> = (0..m.n())
            .filter(|&x| x != u && x != v && m.between(u, x, v))
            .collect();
        m.dist(u, v) == 2
            && !interior
                .iter()
                .enumerate()
                .any(|(i, &x)| interior[i + 1..].iter().any(|&y| !m.edge(x, y)))
    })
}

fn c_positioning() -> Conjunct {
    cond("positioning_condition", p::positioning_condition, |m, t| {
        let (v, w, x, y, z) = (t[0], t[1], t[2], t[3], t[4]);
        crate::predicates::conditions::is_square(m, w, x, y, z)
            && m.dist(v, w) + m.dist(v, y) != m.dist(v, x) + m.dist(v, z)
    })
}

fn c_2ic3() -> Conjunct {
    cond("two_interval_shapes_3", p::two_interval_condition_3, |m, t| {
        m.dist(t[0], t[1]) == 2
            && !crate::predicates::matroid::two_interval_shape_ok_3(m, t[0], t[1])
    })
}

fn c_2ic4() -> Conjunct {
    cond("two_interval_shapes_4", p::two_interval_condition_4, |m, t| {
        m.dist(t[0], t[1]) == 2
            && !crate::predicates::matroid::two_interval_shape_ok_4(m, t[0], t[1])
    })
}

fn c_link_condition() -> Conjunct {
    Conjunct {
        name: "link_condition",
        check: Box::new(|ctx| p::link_condition(ctx.oracle, ctx.lists)),
        verify: Box::new(|ctx, emb| {
            ctx.lists
                .get("beineke_f_primed")
                .map(|gs| {
                    gs.iter().any(|f| embedding_is_induced(ctx.oracle.graph(), f, emb))
                })
                .unwrap_or(false)
        }),
    }
}

fn c_halfspace_convexity() -> Conjunct {
    fn check(m: &MetricOracle) -> Option<Vec<usize>> {
        p::halfspace::partial_cube_witness(m)
    }
    cond("convex_halfspaces", check, |m, t| {
        let h = p::halfspaces(m, t[0], t[1]).or_else(|_| p::halfspaces(m, t[1], t[0]));
        match h {
            Ok(h) => !p::is_convex(m, &h.w_uv) || !p::is_convex(m, &h.w_vu),
            Err(_) => false,
        }
    })
}

fn c_hamming_halfspaces() -> Conjunct {
    fn sides_convex(m: &MetricOracle, u: usize, v: usize) -> bool {
        let h = p::halfspaces(m, u, v).expect("edge");
        let complement = |s: &[usize]| -> Vec<usize> {
            (0..m.n()).filter(|x| !s.contains(x)).collect()
        };
        for side in [&h.w_uv, &h.w_vu, &h.w_eq] {
            if !p::is_convex(m, side) || !p::is_convex(m, &complement(side)) {
                return false;
            }
        }
        true
    }
    fn check(m: &MetricOracle) -> Option<Vec<usize>> {
        for (u, v) in m.graph().edges() {
            if !sides_convex(m, u, v) {
                return Some(vec![u, v]);
            }
        }
        None
    }
    cond("hamming_halfspaces", check, |m, t| !sides_convex(m, t[0], t[1]))
}

fn c_antipodal_intervals_gated() -> Conjunct {
    fn check(m: &MetricOracle) -> Option<Vec<usize>> {
        for u in 0..m.n() {
            for v in 0..m.n() {
                if p::antipodal_interval(m, u, v) && !p::gated_interval(m, u, v) {
                    return Some(vec![u, v]);
                }
            }
        }
        None
    }
    cond("antipodal_intervals_gated", check, |m, t| {
        p::antipodal_interval(m, t[0], t[1]) && !p::gated_interval(m, t[0], t[1])
    })
}

fn c_antipodal_intervals_cube() -> Conjunct {
    fn check(m: &MetricOracle) -> Option<Vec<usize>> {
        for u in 0..m.n() {
            for v in 0..m.n() {
                if p::antipodal_interval(m, u, v) && !p::cube_interval(m, u, v) {
                    return Some(vec![u, v]);
                }
            }
        }
        None
    }
    cond("antipodal_intervals_cube", check, |m, t| {
        p::antipodal_interval(m, t[0], t[1]) && !p::cube_interval(m, t[0], t[1])
    })
}

fn c_antipodal() -> Conjunct {
    cond("every_vertex_has_an_antipode", p::is_antipodal_graph, |m, t| {
        !(0..m.n()).any(|y| (0..m.n()).all(|z| m.between(t[0], z, y)))
    })
}

fn c_pasch() -> Conjunct {
    cond("pasch_axiom", p::pasch, |m, t| {
        let (u, v, w, x, y) = (t[0], t[1], t[2], t[3], t[4]);
        m.between(u, x, w)
            && m.between(v, y, w)
            && !(0..m.n()).any(|z| m.between(u, z, y) && m.between(v, z, x))
    })
}

fn c_peano() -> Conjunct {
    cond("peano_axiom", p::peano, |m, t| {
        let (u, v, w, x, y) = (t[0], t[1], t[2], t[3], t[4]);
        m.between(v, x, w)
            && m.between(u, y, x)
            && !(0..m.n()).any(|z| m.between(u, z, v) && m.between(w, y, z))
    })
}

fn c_sand_glass() -> Conjunct {
    cond("sand_glass_axiom", p::sand_glass, |m, t| {
        let (u, v, up, vp, x, y) = (t[0], t[1], t[2], t[3], t[4], t[5]);
        m.between(u, y, up)
            && m.between(v, y, vp)
            && m.between(u, x, v)
            && !(0..m.n()).any(|xp| m.between(up, xp, vp) && m.between(x, y, xp))
    })
}

fn c_convex_intervals() -> Conjunct {
    cond("convex_intervals", p::convex_intervals, |m, t| {
        m.between(t[0], t[2], t[1])
            && m.between(t[0], t[3], t[1])
            && m.between(t[2], t[4], t[3])
            && !m.between(t[0], t[4], t[1])
    })
}

fn c_triangle_hulls_flat() -> Conjunct {
    cond("triangle_hulls_flat", p::triangle_hulls_flat, |m, t| {
        let hull = p::conv_hull(m, &[t[0], t[1], t[2]]);
        let flat: Vec<usize> = (0..m.n())
            .filter(|&z| {
                m.between(t[0], z, t[1]) || m.between(t[1], z, t[2]) || m.between(t[2], z, t[0])
            })
            .collect();
        hull != flat
    })
}

fn c_boundaries_isometric() -> Conjunct {
    fn check(m: &MetricOracle) -> Option<Vec<usize>> {
        for (u, v) in m.graph().edges() {
            for (a, b) in [(u, v), (v, u)] {
                if !p::boundary_isometric(m, a, b).expect("partial cube checked earlier") {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }
    cond("isometric_boundaries", check, |m, t| {
        !p::boundary_isometric(m, t[0], t[1]).unwrap_or(true)
    })
}

fn c_netlike_boundaries() -> Conjunct {
    fn check(m: &MetricOracle) -> Option<Vec<usize>> {
        for (u, v) in m.graph().edges() {
            for (a, b) in [(u, v), (v, u)] {
                let ok = p::ph_stable(m, a, b).expect("partial cube checked earlier")
                    && p::degree3_convex(m, a, b).expect("partial cube checked earlier");
                if !ok {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }
    cond("ph_stable_degree3_convex_boundaries", check, |m, t| {
        !(p::ph_stable(m, t[0], t[1]).unwrap_or(true)
            && p::degree3_convex(m, t[0], t[1]).unwrap_or(true))
    })
}

fn c_blocks_complete() -> Conjunct {
    fn check(m: &MetricOracle) -> Option<Vec<usize>> {
        for block in m.graph().blocks() {
            for (i, &x) in block.iter().enumerate() {
                for &y in &block[i + 1..] {
                    if !m.edge(x, y) {
                        return Some(vec![x, y]);
                    }
                }
            }
        }
        None
    }
    cond("blocks_are_complete", check, |m, t| {
        !m.edge(t[0], t[1])
            && m.graph().blocks().iter().any(|b| b.contains(&t[0]) && b.contains(&t[1]))
    })
}

fn c_delta_le_half() -> Conjunct {
    fn check(m: &MetricOracle) -> Option<Vec<usize>> {
        let n = m.n();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let s = p::distance_sums(m, a, b, c, d);
                        if s[0] - s[1] > 1 {
                            return Some(vec![a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }
    cond("four_point_gap_at_most_one", check, |m, t| {
        let s = p::distance_sums(m, t[0], t[1], t[2], t[3]);
        s[0] - s[1] > 1
    })
}

fn c_ptolemaic_inequality() -> Conjunct {
    cond("ptolemaic_inequality", p::ptolemaic_inequality, |m, t| {
        m.dist(t[0], t[1]) * m.dist(t[2], t[3])
            > m.dist(t[0], t[2]) * m.dist(t[1], t[3]) + m.dist(t[0], t[3]) * m.dist(t[1], t[2])
    })
}

fn c_alpha1_inequality() -> Conjunct {
    fn check(m: &MetricOracle) -> Option<Vec<usize>> {
        p::alpha_metric_check(m, 1)
    }
    cond("alpha_1_inequality", check, |m, t| {
        let (v, w, u, x) = (t[0], t[1], t[2], t[3]);
        m.edge(v, w)
            && m.between(u, v, w)
            && m.between(v, w, x)
            && m.dist(u, x) + 1 < m.dist(u, v) + m.dist(w, x) + 1
    })
}

fn c_no_long_induced_cycle() -> Conjunct {
    Conjunct {
        name: "no_long_induced_cycle",
        check: Box::new(|ctx| {
            let n = ctx.oracle.n();
            for k in 5..=n {
                let ck = families::cycle(k).expect("k >= 3");
                if let Some(emb) = find_induced(ctx.oracle.graph(), &ck) {
                    return Ok(Some(emb));
                }
            }
            Ok(None)
        }),
        verify: Box::new(|ctx, emb| {
            emb.len() >= 5
                && families::cycle(emb.len())
                    .map(|ck| embedding_is_induced(ctx.oracle.graph(), &ck, emb))
                    .unwrap_or(false)
        }),
    }
}

fn class(id: &'static str, data_deps: &'static [&'static str], conjuncts: Vec<Conjunct>) -> ClassSpec {
    ClassSpec { id, data_deps, conjuncts }
}

fn h_list_conjuncts() -> Vec<Conjunct> {
    // data-backed: loaded lazily inside the check so missing data never
    // panics (recognize() refuses earlier via data_deps)
    static NAMES: [&'static str; 4] = ["no_induced_h1", "no_induced_h2", "no_induced_h3", "no_induced_h4"];
    NAMES
        .iter()
        .enumerate()
        .map(|(i, name)| Conjunct {
            name,
            check: Box::new(move |ctx| {
                let h = &ctx.lists.get("pseudo_median_h")?[i];
                Ok(find_induced(ctx.oracle.graph(), h))
            }),
            verify: Box::new(move |ctx, emb| {
                ctx.lists
                    .get("pseudo_median_h")
                    .map(|gs| embedding_is_induced(ctx.oracle.graph(), &gs[i], emb))
                    .unwrap_or(false)
            }),
        })
        .collect()
}

/// The registered classes, in id order.
pub fn registry() -> &'static [ClassSpec] {
    static REGISTRY: Lazy<Vec<ClassSpec>> = Lazy::new(build_registry);
    &REGISTRY
}

fn build_registry() -> Vec<ClassSpec> {
    let k23 = || families::complete_bipartite(2, 3).unwrap();
    let c4 = || families::cycle(4).unwrap();
    let c5 = || families::cycle(5).unwrap();
    let mut classes = vec![
        class("bipartite", &[], vec![c_bipartite()]),
        class("tree", &[], vec![c_acyclic()]),
        class("weakly_modular", &[], vec![c_tc(), c_qc()]),
        class("modular", &[], vec![c_bipartite(), c_tc(), c_qc()]),
        class("pseudo_modular", &[], vec![c_metric_triangles_degenerate()]),
        class(
            "quasi_modular",
            &[],
            vec![c_tc(), c_qc(), no_induced("no_induced_k4_minus", families::k4_minus())],
        ),
        class("meshed", &[], vec![c_meshed_condition()]),
        class(
            "median",
            &[],
            vec![c_median_existence(), no_induced("no_induced_k23", k23())],
        ),
        class(
            "quasi_median",
            &[],
            vec![
                c_tc(),
                c_qc(),
                no_induced("no_induced_k4_minus", families::k4_minus()),
                no_induced("no_induced_k23", k23()),
            ],
        ),
        class("pseudo_median", &["pseudo_median_h"], {
            let mut v = vec![c_metric_triangles_degenerate()];
            v.extend(h_list_conjuncts());
            v
        }),
        class("weakly_median", &["pseudo_median_h"], {
            let mut v = vec![c_tc(), c_qc()];
            v.extend(h_list_conjuncts());
            v
        }),
        class(
            "bridged",
            &[],
            vec![
                c_tc(),
                c_qc(),
                no_induced("no_induced_c4", c4()),
                no_induced("no_induced_c5", c5()),
            ],
        ),
        class(
            "weakly_bridged",
            &[],
            vec![c_tc(), c_qc(), no_induced("no_induced_c4", c4())],
        ),
        class("convex_balls", &[], vec![c_ball_convexity()]),
        class(
            "bucolic",
            &[],
            vec![
                c_tc(),
                c_qc(),
                no_induced("no_induced_k23", k23()),
                no_induced("no_induced_w4", families::wheel(4).unwrap()),
                no_induced("no_induced_w4_minus", families::almost_wheel(4).unwrap()),
            ],
        ),
        class("clique_helly", &[], vec![c_clique_helly()]),
        class("helly", &[], vec![c_clique_helly(), c_tc(), c_qc(), c_c4w4()]),
        class("thick", &[], vec![c_thick()]),
        class(
            "dual_polar",
            &[],
            vec![
                c_tc(),
                c_qc(),
                c_thick(),
                no_isometric("no_isometric_k4_minus", families::k4_minus()),
                no_isometric("no_isometric_k33_minus", families::k33_minus()),
            ],
        ),
        class(
            "strongly_modular",
            &[],
            vec![
                c_bipartite(),
                c_tc(),
                c_qc(),
                no_isometric("no_isometric_k4_minus", families::k4_minus()),
                no_isometric("no_isometric_k33_minus", families::k33_minus()),
            ],
        ),
        class(
            "sweakly_modular",
            &[],
            vec![
                c_tc(),
                c_qc(),
                no_isometric("no_isometric_k4_minus", families::k4_minus()),
                no_isometric("no_isometric_k33_minus", families::k33_minus()),
            ],
        ),
        class("matroid_basis", &[], vec![c_2ic3(), c_positioning()]),
        class(
            "delta_matroid_basis",
            &["beineke_f_primed"],
            vec![c_2ic4(), c_positioning(), c_link_condition()],
        ),
        class("partial_cube", &[], vec![c_bipartite(), c_halfspace_convexity()]),
        class("partial_hamming", &[], vec![c_hamming_halfspaces()]),
        class("antipodal", &[], vec![c_antipodal()]),
        class(
            "com",
            &[],
            vec![c_bipartite(), c_halfspace_convexity(), c_antipodal_intervals_gated()],
        ),
        class(
            "ample",
            &[],
            vec![
                c_bipartite(),
                c_halfspace_convexity(),
                c_antipodal_intervals_gated(),
                c_antipodal_intervals_cube(),
            ],
        ),
        class(
            "oriented_matroid",
            &[],
            vec![
                c_bipartite(),
                c_halfspace_convexity(),
                c_antipodal_intervals_gated(),
                c_antipodal(),
            ],
        ),
        class("pasch", &[], vec![c_pasch()]),
        class("peano", &[], vec![c_peano()]),
        class("jhc", &[], vec![c_peano()]),
        class("sand_glass", &[], vec![c_sand_glass()]),
        class("pasch_peano", &[], vec![c_pasch(), c_peano()]),
        class(
            "bipartite_pasch",
            &[],
            vec![c_pasch(), c_bipartite(), c_halfspace_convexity()],
        ),
        class(
            "bipartite_peano",
            &[],
            vec![c_peano(), c_bipartite(), c_halfspace_convexity()],
        ),
        class("convex_intervals", &[], vec![c_convex_intervals()]),
        class("cellular", &[], vec![c_bipartite(), c_triangle_hulls_flat()]),
        class(
            "almost_median",
            &[],
            vec![c_bipartite(), c_halfspace_convexity(), c_boundaries_isometric()],
        ),
        class(
            "netlike_partial_cube",
            &[],
            vec![c_bipartite(), c_halfspace_convexity(), c_netlike_boundaries()],
        ),
        class("block_graph", &[], vec![c_blocks_complete()]),
        class("half_hyperbolic", &["half_hyperbolic_h"], vec![c_delta_le_half()]),
        class(
            "distance_hereditary",
            &[],
            vec![
                no_induced("no_induced_house", families::house()),
                no_induced("no_induced_fan3", families::fan3()),
                no_induced("no_induced_domino", families::domino()),
                c_no_long_induced_cycle(),
            ],
        ),
        class("ptolemaic", &[], vec![c_ptolemaic_inequality()]),
        class("alpha_one", &["half_hyperbolic_h"], vec![c_alpha1_inequality()]),
    ];
    classes.sort_by_key(|c| c.id);
    classes
}

pub fn class_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

pub fn find_class(id: &str) -> Result<&'static ClassSpec> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClass(id.into()))
}

/// Run the direct decision procedure for one class.
pub fn recognize(id: &str, g: &Graph, lists: &ForbiddenLists) -> Result<Verdict> {
    let oracle = MetricOracle::new(g.clone())?;
    recognize_with(id, &oracle, lists)
}

pub fn recognize_with(id: &str, oracle: &MetricOracle, lists: &ForbiddenLists) -> Result<Verdict> {
    let spec = find_class(id)?;
    for dep in spec.data_deps {
        if let Err(e) = lists.get(dep) {
            return Ok(Verdict::unavailable(e.to_string()));
        }
    }
    let ctx = Ctx { oracle, lists };
    for conjunct in &spec.conjuncts {
        if let Some(tuple) = conjunct.check(&ctx)? {
            return Ok(Verdict::fails(conjunct.name, tuple));
        }
    }
    Ok(Verdict::holds())
}

/// Run every registered class; output ordered by class id.
pub fn classify_all(g: &Graph, lists: &ForbiddenLists) -> Result<BTreeMap<&'static str, Verdict>> {
    let oracle = MetricOracle::new(g.clone())?;
    let mut out = BTreeMap::new();
    for spec in registry() {
        out.insert(spec.id, recognize_with(spec.id, &oracle, lists)?);
    }
    Ok(out)
}

/// The fixed table of class containments checked by the audit.
pub const IMPLICATIONS: &[(&str, &str)] = &[
    ("median", "modular"),
    ("modular", "weakly_modular"),
    ("weakly_modular", "meshed"),
    ("median", "partial_cube"),
    ("ample", "com"),
    ("oriented_matroid", "com"),
    ("bridged", "weakly_bridged"),
    ("weakly_bridged", "convex_balls"),
    ("ptolemaic", "distance_hereditary"),
    ("bipartite_pasch", "partial_cube"),
    ("quasi_median", "partial_hamming"),
    ("median", "pasch"),
];

#[derive(Clone, Debug)]
pub struct ImplicationViolation {
    pub graph_index: usize,
    pub premise: &'static str,
    pub conclusion: &'static str,
}

/// Check the implication table on every corpus graph; the result must be
/// empty. NotAvailable verdicts skip the pair.
pub fn implication_audit(corpus: &[Graph], lists: &ForbiddenLists) -> Result<Vec<ImplicationViolation>> {
    let mut violations = Vec::new();
    for (idx, g) in corpus.iter().enumerate() {
        let oracle = MetricOracle::new(g.clone())?;
        let mut cache: BTreeMap<&'static str, Option<bool>> = BTreeMap::new();
        for &(premise, conclusion) in IMPLICATIONS {
            for id in [premise, conclusion] {
                if !cache.contains_key(id) {
                    let v = recognize_with(id, &oracle, lists)?;
                    cache.insert(id, v.as_bool());
                }
            }
            if let (Some(true), Some(false)) = (cache[premise], cache[conclusion]) {
                violations.push(ImplicationViolation { graph_index: idx, premise, conclusion });
            }
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists() -> ForbiddenLists {
        ForbiddenLists::bundled()
    }

    fn should_be(id: &str, g: &Graph, expected: bool) {
        let v = recognize(id, g, &lists()).unwrap();
        assert_eq!(v.as_bool(), Some(expected), "{id} on {g:?}: {v:?}");
    }

    #[test]
    fn ground_truth_spot_checks() {
        should_be("median", &families::hypercube(3).unwrap(), true);
        should_be("median", &families::complete_bipartite(2, 3).unwrap(), false);
        should_be("modular", &families::complete_bipartite(2, 3).unwrap(), true);
        should_be("bridged", &families::cycle(4).unwrap(), false);
        should_be("bridged", &families::complete(3).unwrap(), true);
        should_be("weakly_modular", &families::cycle(5).unwrap(), false);
        should_be("convex_balls", &families::cycle(5).unwrap(), true);
        should_be("partial_cube", &families::cycle(6).unwrap(), true);
        should_be("median", &families::cycle(6).unwrap(), false);
        should_be("netlike_partial_cube", &families::cycle(6).unwrap(), true);
        should_be("block_graph", &families::random_tree(7, 9).unwrap(), true);
    }

    #[test]
    fn median_rejection_carries_k23_embedding() {
        let k23 = families::complete_bipartite(2, 3).unwrap();
        let v = recognize("median", &k23, &lists()).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.conjunct, "no_induced_k23");
        assert_eq!(w.tuple.len(), 5);
    }

    #[test]
    fn disconnected_graphs_are_rejected() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            recognize("median", &g, &lists()),
            Err(Error::DisconnectedGraph(_))
        ));
    }

    #[test]
    fn unknown_class_is_an_error() {
        let g = families::cycle(4).unwrap();
        assert!(matches!(
            recognize("nosuch", &g, &lists()),
            Err(Error::UnknownClass(_))
        ));
    }

    #[test]
    fn missing_data_degrades_to_not_available() {
        let withheld = lists().without("pseudo_median_h");
        let g = families::cycle(4).unwrap();
        let v = recognize("pseudo_median", &g, &withheld).unwrap();
        assert!(matches!(v.value, Value::NotAvailable(_)));
        // unaffected classes still answer
        let v = recognize("median", &g, &withheld).unwrap();
        assert!(v.as_bool().is_some());
    }

    #[test]
    fn classify_all_on_k1_is_mostly_true() {
        let g = families::complete(1).unwrap();
        let table = classify_all(&g, &lists()).unwrap();
        for id in ["tree", "median", "helly", "partial_cube", "ample", "antipodal", "thick"] {
            assert_eq!(table[id].as_bool(), Some(true), "{id}");
        }
    }

    #[test]
    fn classify_c5() {
        let table = classify_all(&families::cycle(5).unwrap(), &lists()).unwrap();
        assert_eq!(table["weakly_modular"].as_bool(), Some(false));
        assert_eq!(table["convex_balls"].as_bool(), Some(true));
        assert_eq!(table["half_hyperbolic"].as_bool(), Some(true));
    }

    #[test]
    fn classify_q4() {
        let table = classify_all(&families::hypercube(4).unwrap(), &lists()).unwrap();
        for id in ["median", "partial_cube", "ample", "com", "modular", "antipodal"] {
            assert_eq!(table[id].as_bool(), Some(true), "{id}");
        }
    }

    #[test]
    fn audit_small_corpus_is_clean() {
        let corpus: Vec<Graph> = crate::corpus::connected_up_to_iso(5);
        let violations = implication_audit(&corpus, &lists()).unwrap();
        assert!(violations.is_empty(), "{violations:?}");
    }

    #[test]
    fn witnesses_reverify() {
        let lists = lists();
        for g in crate::corpus::connected_up_to_iso(5) {
            let oracle = MetricOracle::new(g.clone()).unwrap();
            let ctx = Ctx { oracle: &oracle, lists: &lists };
            for spec in registry() {
                let v = recognize_with(spec.id, &oracle, &lists).unwrap();
                if let (Some(false), Some(w)) = (v.as_bool(), &v.witness) {
                    let conjunct = spec
                        .conjuncts
                        .iter()
                        .find(|c| c.name == w.conjunct)
                        .expect("witness names a conjunct");
                    assert!(
                        conjunct.verify_witness(&ctx, &w.tuple),
                        "{} witness {:?} failed re-check on {:?}",
                        spec.id,
                        w,
                        g
                    );
                }
            }
        }
    }
}
