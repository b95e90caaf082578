//! Curvature, the approximation guarantee, and property checkers.

mod bound;
mod curvature;
pub mod properties;

pub use bound::{
    g_curve, greedy_curvature_factor, theorem1_bound, BoundBranch, BoundReport, KAPPA_TOL,
    KAPPA_ZERO,
};
pub use curvature::{compute_curvature, CurvatureReport, CURVATURE_DIAGNOSTIC_TOL, DEGENERATE_EPS};
pub use properties::{
    check_diminishing_returns, check_lemma1, check_lemma2, check_monotone,
    check_union_submodularity, property_sweep, Check, Lemma2Outcome, PropertyReport, Tally,
    CHECK_TOL,
};
