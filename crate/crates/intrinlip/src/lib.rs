//! Intrinsic Lipschitz analysis on semidirect-product metric groups.
//!
//! A *metric group* here is a group carrying a left-invariant distance. When
//! the group splits as `G = N ⋊ H` (or with the other factor normal), every
//! element factors uniquely as `g = π_N(g)·π_H(g)`, and a map `φ: E ⊆ N → H`
//! has an intrinsic graph `Γ_φ = {n·φ(n)}`. This crate implements, on a small
//! zoo of concrete groups:
//!
//! * the graphing map `Φ`, translated maps `φ_q`, and super/subgraphs along a
//!   one-dimensional geodesic axis ([`graphs`]);
//! * axis cones `X_H(α)` and split cones `C_{N,H}(α)` with their left/right
//!   and half variants ([`cones`]);
//! * intrinsic Lipschitz constants — the FSSC two-point ratio and its
//!   equivalent base-point conditions, cone separation, half-cone
//!   characterization, projection bounds, and limit stability ([`lipschitz`]);
//! * the map-induced quasi-distance `d_φ` with its quasi-triangle and
//!   graph-equivalence constants ([`quasidist`]);
//! * exact identity families for graphs that are subgroups ([`subgroup`]);
//! * property suites producing machine-readable reports ([`suites`]).
//!
//! Every quantitative claim is checked either exactly (finite groups, word
//! metrics) or as a sampled supremum over a deterministic low-discrepancy
//! sample, so runs are reproducible given a seed.

pub mod cones;
pub mod graphs;
pub mod group;
pub mod lipschitz;
pub mod quasidist;
pub mod report;
pub mod sampling;
pub mod search;
pub mod subgroup;
pub mod suites;
pub mod tol;
pub mod zoo;

pub use group::{MetricGroup, NormalSide, SplitGroup};
pub use tol::Tolerances;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Projections of a group element do not recompose to it.
    #[error("decomposition failure: recomposition residual {residual:e} exceeds tolerance")]
    DecompositionFailure { residual: f64 },
    /// The infimum search did not converge within its iteration budget.
    #[error("infimum search budget exceeded")]
    SearchBudgetExceeded,
    /// Every sampled denominator vanished; no ratio can be formed.
    #[error("degenerate sample: all denominators below tolerance")]
    DegenerateSample,
    /// A point was evaluated outside the map domain.
    #[error("point outside the map domain")]
    OutsideDomain,
    /// The operation needs a one-dimensional geodesic axis on H.
    #[error("no one-dimensional axis is registered for this splitting")]
    AxisMissing,
    /// A group, map, or suite specification failed to parse or validate.
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    /// The operation requires the other factor of the splitting to be normal.
    #[error("operation requires {required} to be a normal subgroup")]
    WrongNormalSide { required: &'static str },
    /// The graph failed the subgroup closure precondition.
    #[error("graph is not closed under the group operation (residual {residual:e})")]
    NotASubgroup { residual: f64 },
    /// The premise inequality of a conditional bound failed on the sample.
    #[error("premise failed at sample point: {witness}")]
    PremiseFailed { witness: String },
    /// A map sequence has not stabilized at the largest index.
    #[error("sequence has not converged on the sample (residual {residual:e})")]
    NotConverged { residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
