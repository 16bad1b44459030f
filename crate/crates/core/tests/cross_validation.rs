//! The cross-validation backbone: every prelude macro agrees with its
//! direct implementation, and every registered class sentence agrees with
//! its direct recognizer, over exhaustive small corpora and seeded random
//! graphs.

use folb_core::corpus;
use folb_core::data::ForbiddenLists;
use folb_core::formula::{evaluate, evaluate_sentence, Prelude};
use folb_core::metric::MetricOracle;
use folb_core::predicates as p;
use folb_core::recognizers::{recognize_with, registry, Ctx};

fn test_graphs() -> Vec<folb_core::Graph> {
    let mut graphs = corpus::connected_up_to_iso(5);
    graphs.extend(corpus::random_corpus(40, 7, 0xC0FFEE));
    graphs
}

fn whole_graph_macro_agrees(
    name: &str,
    direct: impl Fn(&MetricOracle) -> Option<Vec<usize>>,
) {
    let lists = ForbiddenLists::bundled();
    let prelude = Prelude::paper(&lists).unwrap();
    let sentence = prelude.sentence(name).unwrap();
    for g in test_graphs() {
        let m = MetricOracle::new(g.clone()).unwrap();
        let formula = evaluate_sentence(&sentence, &m).unwrap().value;
        let direct_holds = direct(&m).is_none();
        assert_eq!(
            formula, direct_holds,
            "macro `{name}` disagrees with direct implementation on {g:?}"
        );
    }
}

#[test]
fn tc_twin() {
    whole_graph_macro_agrees("tc", p::tc);
}

#[test]
fn qc_twin() {
    whole_graph_macro_agrees("qc", p::qc);
}

#[test]
fn tpc_twin() {
    whole_graph_macro_agrees("tpc", p::tpc);
}

#[test]
fn inc_twin() {
    whole_graph_macro_agrees("inc", p::inc);
}

#[test]
fn aqc_twin() {
    whole_graph_macro_agrees("aqc", p::aqc);
}

#[test]
fn meshed_twin() {
    // the direct side is the relaxed quadrangle condition from the
    // definition; the sentence goes through the metric-triangle reduction
    whole_graph_macro_agrees("meshed", p::qc_minus);
}

#[test]
fn pasch_peano_sand_glass_twins() {
    whole_graph_macro_agrees("pasch", p::pasch);
    whole_graph_macro_agrees("peano", p::peano);
    whole_graph_macro_agrees("sand_glass", p::sand_glass);
}

#[test]
fn convex_intervals_twin() {
    whole_graph_macro_agrees("convex_intervals", p::convex_intervals);
}

#[test]
fn thick_twin() {
    whole_graph_macro_agrees("thick", p::is_thick);
}

#[test]
fn antipodal_twin() {
    whole_graph_macro_agrees("antipodal", p::is_antipodal_graph);
}

#[test]
fn c4w4_and_clique_helly_twins() {
    whole_graph_macro_agrees("c4w4", p::c4w4);
    whole_graph_macro_agrees("clique_helly", p::clique_helly);
}

#[test]
fn positioning_twin() {
    whole_graph_macro_agrees("positioning_condition", p::positioning_condition);
}

#[test]
fn two_interval_twins() {
    whole_graph_macro_agrees("two_interval_condition_3", p::two_interval_condition_3);
    whole_graph_macro_agrees("two_interval_condition_4", p::two_interval_condition_4);
}

#[test]
fn dh_interval_condition_twin() {
    whole_graph_macro_agrees("dh_interval_condition", p::distance_hereditary_intervals);
}

#[test]
fn strongly_equilateral_formulation_matches_weakly_modular() {
    let lists = ForbiddenLists::bundled();
    let prelude = Prelude::paper(&lists).unwrap();
    let wm = prelude.sentence("weakly_modular").unwrap();
    let se = prelude.sentence("strongly_equilateral_triangles").unwrap();
    for g in test_graphs() {
        let m = MetricOracle::new(g.clone()).unwrap();
        assert_eq!(
            evaluate_sentence(&wm, &m).unwrap().value,
            evaluate_sentence(&se, &m).unwrap().value,
            "the two weakly-modular formulations disagree on {g:?}"
        );
    }
}

#[test]
fn weakly_bridged_inc_formulation_agrees() {
    let lists = ForbiddenLists::bundled();
    let prelude = Prelude::paper(&lists).unwrap();
    let a = prelude.sentence("weakly_bridged").unwrap();
    let wm = prelude.sentence("weakly_modular").unwrap();
    let inc = prelude.sentence("inc").unwrap();
    for g in test_graphs() {
        let m = MetricOracle::new(g.clone()).unwrap();
        let wb = evaluate_sentence(&a, &m).unwrap().value;
        let alt = evaluate_sentence(&wm, &m).unwrap().value
            && evaluate_sentence(&inc, &m).unwrap().value;
        assert_eq!(wb, alt, "weakly bridged vs WM & INC on {g:?}");
    }
}

#[test]
fn modular_median_existence_route_agrees() {
    let lists = ForbiddenLists::bundled();
    let prelude = Prelude::paper(&lists).unwrap();
    let a = prelude.sentence("modular").unwrap();
    let b = prelude.sentence("modular_medians").unwrap();
    for g in test_graphs() {
        let m = MetricOracle::new(g.clone()).unwrap();
        assert_eq!(
            evaluate_sentence(&a, &m).unwrap().value,
            evaluate_sentence(&b, &m).unwrap().value,
            "modular formulations disagree on {g:?}"
        );
    }
}

#[test]
fn block_graph_routes_agree() {
    let lists = ForbiddenLists::bundled();
    let prelude = Prelude::paper(&lists).unwrap();
    let a = prelude.sentence("block_graph").unwrap();
    let b = prelude.sentence("block_graph_alt").unwrap();
    for g in test_graphs() {
        let m = MetricOracle::new(g.clone()).unwrap();
        assert_eq!(
            evaluate_sentence(&a, &m).unwrap().value,
            evaluate_sentence(&b, &m).unwrap().value,
            "block graph formulations disagree on {g:?}"
        );
    }
}

#[test]
fn almost_median_boundary_route_agrees() {
    let lists = ForbiddenLists::bundled();
    let prelude = Prelude::paper(&lists).unwrap();
    let a = prelude.sentence("almost_median").unwrap();
    let b = prelude.sentence("almost_median_bd").unwrap();
    for g in test_graphs() {
        let m = MetricOracle::new(g.clone()).unwrap();
        assert_eq!(
            evaluate_sentence(&a, &m).unwrap().value,
            evaluate_sentence(&b, &m).unwrap().value,
            "almost median formulations disagree on {g:?}"
        );
    }
}

#[test]
fn parameterized_macros_agree_pointwise() {
    let lists = ForbiddenLists::bundled();
    let prelude = Prelude::paper(&lists).unwrap();
    let convw = prelude.expand("convw", &["u".into(), "v".into()]).unwrap();
    let gated = prelude.expand("gated", &["u".into(), "v".into()]).unwrap();
    let anti = prelude.expand("antipodaluv", &["u".into(), "v".into()]).unwrap();
    let cube = prelude.expand("cube", &["u".into(), "v".into()]).unwrap();
    let iincl = prelude
        .expand("int_incl", &["u".into(), "v".into(), "w".into()])
        .unwrap();
    for g in corpus::connected_up_to_iso(5) {
        let m = MetricOracle::new(g.clone()).unwrap();
        for u in 0..g.n() {
            for v in 0..g.n() {
                if g.adjacent(u, v) {
                    let h = p::halfspaces(&m, u, v).unwrap();
                    assert_eq!(
                        evaluate(&convw, &m, &[("u", u), ("v", v)]).unwrap(),
                        p::is_convex(&m, &h.w_uv),
                        "convw on {g:?} at ({u},{v})"
                    );
                }
                assert_eq!(
                    evaluate(&gated, &m, &[("u", u), ("v", v)]).unwrap(),
                    p::gated_interval(&m, u, v),
                    "gated on {g:?} at ({u},{v})"
                );
                assert_eq!(
                    evaluate(&anti, &m, &[("u", u), ("v", v)]).unwrap(),
                    p::antipodal_interval(&m, u, v),
                    "antipodaluv on {g:?} at ({u},{v})"
                );
                assert_eq!(
                    evaluate(&cube, &m, &[("u", u), ("v", v)]).unwrap(),
                    p::cube_interval(&m, u, v),
                    "cube on {g:?} at ({u},{v})"
                );
                for w in 0..g.n() {
                    assert_eq!(
                        evaluate(&iincl, &m, &[("u", u), ("v", v), ("w", w)]).unwrap(),
                        p::interval_inclusion(&m, u, v, w),
                        "int_incl on {g:?} at ({u},{v},{w})"
                    );
                }
            }
        }
    }
}

#[test]
fn boundary_macros_agree_on_partial_cubes() {
    let lists = ForbiddenLists::bundled();
    let prelude = Prelude::paper(&lists).unwrap();
    let phs = prelude.expand("ph_stable", &["u".into(), "v".into()]).unwrap();
    let d3c = prelude.expand("deg3_convex", &["u".into(), "v".into()]).unwrap();
    let bd = prelude
        .expand("boundary", &["u".into(), "v".into(), "z".into()])
        .unwrap();
    for g in corpus::connected_up_to_iso(6) {
        let m = MetricOracle::new(g.clone()).unwrap();
        if !p::is_partial_cube(&m) {
            continue;
        }
        for (u, v) in g.edges() {
            let h = p::halfspaces(&m, u, v).unwrap();
            for z in 0..g.n() {
                assert_eq!(
                    evaluate(&bd, &m, &[("u", u), ("v", v), ("z", z)]).unwrap(),
                    h.u_uv.contains(&z),
                    "boundary on {g:?} at ({u},{v},{z})"
                );
            }
            assert_eq!(
                evaluate(&phs, &m, &[("u", u), ("v", v)]).unwrap(),
                p::ph_stable(&m, u, v).unwrap(),
                "ph_stable on {g:?} at ({u},{v})"
            );
            assert_eq!(
                evaluate(&d3c, &m, &[("u", u), ("v", v)]).unwrap(),
                p::degree3_convex(&m, u, v).unwrap(),
                "deg3_convex on {g:?} at ({u},{v})"
            );
        }
    }
}

/// Every registered class: prelude sentence verdict == direct verdict, on
/// graphs up to 5 vertices plus random ones (the n <= 6 exhaustive run is
/// the acceptance suite's second criterion).
#[test]
fn class_sentences_agree_with_direct_recognizers() {
    let lists = ForbiddenLists::bundled();
    let prelude = Prelude::paper(&lists).unwrap();
    for g in test_graphs() {
        let m = MetricOracle::new(g.clone()).unwrap();
        for spec in registry() {
            let direct = recognize_with(spec.id, &m, &lists).unwrap();
            let Some(direct_value) = direct.as_bool() else {
                continue;
            };
            let sentence = prelude.sentence(spec.id).unwrap();
            let formula = evaluate_sentence(&sentence, &m).unwrap().value;
            assert_eq!(
                formula, direct_value,
                "class `{}`: formula {formula} vs direct {direct_value} on {g:?} edges {:?}",
                spec.id,
                g.edges()
            );
        }
    }
}

/// The quasi-median uniqueness definitions agree with the registered
/// forbidden-subgraph routes.
#[test]
fn unique_quasi_median_definitions() {
    let lists = ForbiddenLists::bundled();
    for g in corpus::connected_up_to_iso(6) {
        let m = MetricOracle::new(g.clone()).unwrap();
        let ctx = Ctx { oracle: &m, lists: &lists };
        let _ = &ctx;
        let wm = recognize_with("weakly_modular", &m, &lists).unwrap().as_bool().unwrap();
        if !wm {
            continue;
        }
        let unique = (0..g.n()).all(|x| {
            (x..g.n()).all(|y| {
                (y..g.n()).all(|z| p::count_quasi_medians(&m, x, y, z) == 1)
            })
        });
        let weakly_median =
            recognize_with("weakly_median", &m, &lists).unwrap().as_bool().unwrap();
        assert_eq!(unique, weakly_median, "unique quasi-medians vs class on {g:?}");
        // median graphs: unique medians
        let median = recognize_with("median", &m, &lists).unwrap().as_bool().unwrap();
        let unique_medians = (0..g.n()).all(|x| {
            (0..g.n()).all(|y| (0..g.n()).all(|z| p::medians(&m, x, y, z).len() == 1))
        });
        assert_eq!(median, unique_medians, "median uniqueness on {g:?}");
    }
}

#[test]
fn tree_verdict_matches_cycle_detection() {
    let lists = ForbiddenLists::bundled();
    for g in test_graphs() {
        let m = MetricOracle::new(g.clone()).unwrap();
        let verdict = recognize_with("tree", &m, &lists).unwrap().as_bool().unwrap();
        assert_eq!(verdict, !g.has_cycle(), "{g:?}");
    }
}
