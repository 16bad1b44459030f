//! Direct algorithmic implementations of the named metric predicates. Each
//! whole-graph condition mirrors a macro of the bundled prelude and is
//! cross-checked against it in the test suite.

pub mod conditions;
pub mod halfspace;
pub mod helly;
pub mod hyperbolicity;
pub mod intervals;
pub mod matroid;
pub mod triangles;

pub use conditions::{aqc, conv_hull, convex_balls, inc, is_convex, qc, qc_minus, tc, tpc};
pub use halfspace::{
    boundary_connected, boundary_isometric, degree3_convex, halfspaces, is_partial_cube,
    ph_stable, theta_classes, theta_related, HalfspaceDecomposition,
};
pub use helly::{c4w4, clique_helly};
pub use hyperbolicity::{
    alpha_metric_check, delta_star, distance_sums, interval_delta_slim, HalfInt,
};
pub use intervals::{
    antipodal_interval, convex_intervals, cube_interval, distance_hereditary_intervals,
    gated_interval, interval_inclusion, is_antipodal_graph, is_thick, pasch, peano,
    ptolemaic_inequality, sand_glass, triangle_hulls_flat,
};
pub use matroid::{
    link_condition, positioning_condition, two_interval_condition_3, two_interval_condition_4,
};
pub use triangles::{
    count_quasi_medians, is_metric_triangle, is_strongly_equilateral, max_metric_triangle_size,
    medians, metric_triangle_report, quasi_median, MetricTriangleReport,
};
