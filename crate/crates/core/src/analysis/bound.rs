use std::fmt;

use crate::error::{Error, Result};

/// Below this curvature the `κ → 0` limits are used.
pub const KAPPA_ZERO: f64 = 1e-12;

/// Curvatures this far outside `[0, 1]` are rejected; smaller excursions are clamped.
pub const KAPPA_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundBranch {
    /// `1 − κ` attained the max (ties resolve here).
    OneMinusKappa,
    /// `1 / (β + 1)` attained the max.
    InverseBetaPlusOne,
}

impl BoundBranch {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundBranch::OneMinusKappa => "one_minus_kappa",
            BoundBranch::InverseBetaPlusOne => "inverse_beta_plus_one",
        }
    }
}

impl fmt::Display for BoundBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub kappa: f64,
    pub beta: usize,
    pub bound: f64,
    pub branch: BoundBranch,
}

impl BoundReport {
    /// `kappa,beta,bound,branch`
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.kappa, self.beta, self.bound, self.branch
        )
    }
}

fn check_kappa(kappa: f64) -> Result<f64> {
    if !(-KAPPA_TOL..=1.0 + KAPPA_TOL).contains(&kappa) {
        return Err(Error::invalid(format!("curvature {kappa} outside [0, 1]")));
    }
    Ok(kappa.clamp(0.0, 1.0))
}

/// `(1 − e^{−κ}) / κ`, with value 1 at `κ → 0`.
pub fn greedy_curvature_factor(kappa: f64) -> f64 {
    if kappa < KAPPA_ZERO {
        1.0
    } else {
        -(-kappa).exp_m1() / kappa
    }
}

/// Worst-case ratio of the resilient greedy's residual value to the optimum:
/// `max(1 − κ, 1/(β+1)) · (1 − e^{−κ}) / κ`.
pub fn theorem1_bound(kappa: f64, beta: usize) -> Result<BoundReport> {
    let k = check_kappa(kappa)?;
    let linear = 1.0 - k;
    let inverse = 1.0 / (beta as f64 + 1.0);
    let (lead, branch) = if linear >= inverse {
        (linear, BoundBranch::OneMinusKappa)
    } else {
        (inverse, BoundBranch::InverseBetaPlusOne)
    };
    Ok(BoundReport {
        kappa: k,
        beta,
        bound: lead * greedy_curvature_factor(k),
        branch,
    })
}

/// `g(κ) = (1 − κ)/κ · (1 − e^{−κ})`, the bound's value when `β` is large.
///
/// Below [`KAPPA_ZERO`] this returns the analytic limit `lim_{κ→0} g(κ) = 1`.
pub fn g_curve(kappa: f64) -> Result<f64> {
    let k = check_kappa(kappa)?;
    Ok((1.0 - k) * greedy_curvature_factor(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const E: f64 = std::f64::consts::E;

    #[test]
    fn zero_curvature_is_exact() {
        for beta in [0, 1, 3, 100] {
            let r = theorem1_bound(0.0, beta).unwrap();
            assert_eq!(r.bound, 1.0);
            assert_eq!(r.branch, BoundBranch::OneMinusKappa);
        }
        assert_eq!(
            theorem1_bound(0.0, 3).unwrap().csv_row(),
            "0,3,1,one_minus_kappa"
        );
    }

    #[test]
    fn unit_curvature_values() {
        let r = theorem1_bound(1.0, 1).unwrap();
        assert!((r.bound - (1.0 - 1.0 / E) / 2.0).abs() < 1e-12);
        assert!((r.bound - 0.316_060_279_414_278_6).abs() < 1e-12);
        assert_eq!(r.branch, BoundBranch::InverseBetaPlusOne);
        let r0 = theorem1_bound(1.0, 0).unwrap();
        assert!((r0.bound - (1.0 - 1.0 / E)).abs() < 1e-12);
    }

    #[test]
    fn beta_six_at_unit_curvature() {
        // (1/7)(1 − 1/e)
        let r = theorem1_bound(1.0, 6).unwrap();
        assert!((r.bound - 0.090_302_936_975_508_2).abs() < 1e-12);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(theorem1_bound(1.1, 1).is_err());
        assert!(theorem1_bound(-0.01, 1).is_err());
        assert!(theorem1_bound(f64::NAN, 1).is_err());
        assert!(g_curve(2.0).is_err());
        assert_eq!(theorem1_bound(1.0 + 1e-10, 0).unwrap().kappa, 1.0);
    }

    #[test]
    fn g_curve_values() {
        assert_eq!(g_curve(1.0).unwrap(), 0.0);
        assert!((g_curve(0.5).unwrap() - (1.0 - (-0.5f64).exp())).abs() < 1e-15);
        assert!((g_curve(0.5).unwrap() - 0.393_469_340_287_366_6).abs() < 1e-12);
    }

    #[test]
    fn g_curve_near_zero_approaches_one() {
        // Direct series: g(κ) = (1−κ)(1 − κ/2 + κ²/6 − ...)
        for k in [1e-4, 1e-6, 1e-9, 1e-11] {
            let series = (1.0 - k) * (1.0 - k / 2.0 + k * k / 6.0);
            assert!((g_curve(k).unwrap() - series).abs() < 1e-12);
        }
        assert!((g_curve(1e-13).unwrap() - 1.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn bound_non_increasing_in_beta(k in 0.0f64..=1.0, beta in 0usize..50) {
            let a = theorem1_bound(k, beta).unwrap().bound;
            let b = theorem1_bound(k, beta + 1).unwrap().bound;
            prop_assert!(b <= a + 1e-15);
            prop_assert!(b > 0.0);
            prop_assert!(a <= 1.0);
        }

        #[test]
        fn g_curve_decreasing(a in 1e-9f64..1.0, b in 1e-9f64..1.0) {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            prop_assume!(hi - lo > 1e-9);
            prop_assert!(g_curve(lo).unwrap() > g_curve(hi).unwrap());
        }

        #[test]
        fn bound_dominates_g(k in 0.0f64..=1.0, beta in 0usize..20) {
            prop_assert!(theorem1_bound(k, beta).unwrap().bound >= g_curve(k).unwrap() - 1e-15);
        }
    }
}
