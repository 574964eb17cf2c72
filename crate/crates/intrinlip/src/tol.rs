//! Tolerance bundle used by every check.
//!
//! Three regimes, reflecting how much floating-point headroom each kind of
//! assertion has:
//!
//! * `exact` (1e-9): algebraic residuals — group-law identities, projection
//!   round trips, translated-map identities. These are compositions of a few
//!   arithmetic operations, so double precision leaves ~6 digits of slack.
//! * `metric` (1e-7): metric-axiom checks on transcendental distance
//!   formulas (`acosh`, fourth roots), where cancellation near equality
//!   costs precision.
//! * `inf` (1e-6): accuracy of the one-dimensional infimum search used for
//!   distances to subgroups.
//!
//! Per-suite sampled-supremum comparisons additionally use [`tau_sample`],
//! which scales with the estimate being compared.

use serde::Serialize;

/// Absolute tolerances for the three check regimes.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Tolerances {
    /// Algebraic residual tolerance.
    pub exact: f64,
    /// Metric-axiom tolerance.
    pub metric: f64,
    /// Infimum-search accuracy.
    pub inf: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { exact: 1e-9, metric: 1e-7, inf: 1e-6 }
    }
}

impl Tolerances {
    /// Tolerances with `exact` overridden, keeping the other regimes.
    pub fn with_exact(exact: f64) -> Self {
        Tolerances { exact, ..Tolerances::default() }
    }
}

/// Slack for comparing sampled suprema: relative in the size of the estimate.
pub fn tau_sample(estimate: f64) -> f64 {
    1e-6 * (1.0 + estimate)
}
