use crate::error::{Error, Result};
use crate::oracle::ObjectiveOracle;
use crate::subset::Subset;

/// Singleton values at or below this are treated as zero.
pub const DEGENERATE_EPS: f64 = 1e-12;

/// Raw curvature may stray this far outside `[0, 1]` before it is reported
/// as a non-submodular objective instead of being clamped.
pub const CURVATURE_DIAGNOSTIC_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureReport {
    pub kappa: f64,
    /// Element attaining the minimum ratio (smallest index on ties).
    pub argmin_element: usize,
    /// `(f(V) − f(V∖{v})) / f({v})` for each element `v`.
    pub per_element_ratios: Vec<f64>,
    pub eval_count_used: u64,
}

/// Total curvature `κ = 1 − min_v (f(V) − f(V∖{v})) / f({v})`.
///
/// Uses exactly `2m + 1` evaluations: `f(V)`, every singleton, and every
/// leave-one-out set.
pub fn compute_curvature<O: ObjectiveOracle + ?Sized>(oracle: &O) -> Result<CurvatureReport> {
    let start = oracle.eval_count();
    let m = oracle.ground_size();
    let full = Subset::full(m);

    let mut singles = Vec::with_capacity(m);
    for v in 0..m {
        let fv = oracle.evaluate(&Subset::singleton(v, m)?);
        if fv.is_nan() || fv <= DEGENERATE_EPS {
            return Err(Error::DegenerateElement {
                element: v,
                value: fv,
            });
        }
        singles.push(fv);
    }

    let f_full = oracle.evaluate(&full);
    let ratios: Vec<f64> = singles
        .iter()
        .enumerate()
        .map(|(v, fv)| {
            let rest = full.without(v).expect("v < m");
            (f_full - oracle.evaluate(&rest)) / fv
        })
        .collect();

    let mut argmin = 0;
    for (v, &r) in ratios.iter().enumerate() {
        if r < ratios[argmin] {
            argmin = v;
        }
    }
    let raw = 1.0 - ratios[argmin];
    if !(-CURVATURE_DIAGNOSTIC_TOL..=1.0 + CURVATURE_DIAGNOSTIC_TOL).contains(&raw) {
        return Err(Error::NotSubmodular { raw });
    }

    Ok(CurvatureReport {
        kappa: raw.clamp(0.0, 1.0),
        argmin_element: argmin,
        per_element_ratios: ratios,
        eval_count_used: oracle.eval_count() - start,
    })
}
