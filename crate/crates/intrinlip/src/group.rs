//! Metric groups with a semidirect splitting.
//!
//! [`MetricGroup`] is the bare contract: identity, product, inverse, and a
//! left-invariant distance. [`SplitGroup`] adds a designated pair of
//! subgroups `(N, H)` with `N ∩ H = {1}` and unique decomposition
//! `g = π_N(g)·π_H(g)` — the base factor always multiplies on the left, for
//! either normal side. `NormalSide` records which factor is normal; when `N`
//! is normal `π_H` is a homomorphism, when `H` is normal `π_N` is.
//!
//! Chart methods expose instance-specific real coordinates so that sampling,
//! table-backed maps, and CSV export can stay generic. Finite groups opt out
//! of charts by providing full enumeration instead.

use crate::sampling::{Halton, SampleBox};
use crate::search::{minimize_on_window, InfSearch};
use crate::tol::Tolerances;
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

/// Which factor of the splitting is a normal subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NormalSide {
    /// The base `N` (domain side) is normal: `G = N ⋊ H`.
    N,
    /// The fiber `H` (codomain side) is normal: `G = N ⋉ H`.
    H,
    /// Both factors are normal (direct products).
    Both,
}

impl NormalSide {
    pub fn n_is_normal(self) -> bool {
        matches!(self, NormalSide::N | NormalSide::Both)
    }
    pub fn h_is_normal(self) -> bool {
        matches!(self, NormalSide::H | NormalSide::Both)
    }
}

impl fmt::Display for NormalSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalSide::N => write!(f, "N"),
            NormalSide::H => write!(f, "H"),
            NormalSide::Both => write!(f, "both"),
        }
    }
}

/// A group with a left-invariant distance.
pub trait MetricGroup {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    /// Left-invariant distance `d(a, b)`.
    fn dist(&self, a: &Self::Elem, b: &Self::Elem) -> f64;
    /// Instance name with parameters, e.g. `dihedral:4`.
    fn name(&self) -> String;
    /// Coordinate residual `max_i |chart(a)_i - chart(b)_i|`; exact groups
    /// return 0/1. Used for algebraic identity checks, where distance
    /// formulas with fractional powers would amplify float noise.
    fn elem_residual(&self, a: &Self::Elem, b: &Self::Elem) -> f64;

    /// `d(1, g)`.
    fn norm(&self, g: &Self::Elem) -> f64 {
        self.dist(&self.identity(), g)
    }

    /// Conjugation `C_g(x) = g·x·g⁻¹`.
    fn conjugate(&self, g: &Self::Elem, x: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(g, x), &self.inverse(g))
    }
}

/// A metric group with a semidirect splitting `(N, H)`.
pub trait SplitGroup: MetricGroup {
    fn normal_side(&self) -> NormalSide;

    /// Base component of the unique decomposition `g = π_N(g)·π_H(g)`.
    fn project_n(&self, g: &Self::Elem) -> Self::Elem;
    /// Fiber component of the unique decomposition.
    fn project_h(&self, g: &Self::Elem) -> Self::Elem;

    /// Chart dimension of the whole group (0 for purely finite instances).
    fn group_dim(&self) -> usize;
    /// Chart dimension of the base subgroup.
    fn n_dim(&self) -> usize;
    /// Chart dimension of the fiber subgroup.
    fn h_dim(&self) -> usize;

    fn elem_chart(&self, g: &Self::Elem) -> Vec<f64>;
    fn elem_from_chart(&self, c: &[f64]) -> Self::Elem;
    fn n_chart(&self, n: &Self::Elem) -> Vec<f64>;
    fn n_from_chart(&self, c: &[f64]) -> Self::Elem;
    fn h_chart(&self, h: &Self::Elem) -> Vec<f64>;
    fn h_from_chart(&self, c: &[f64]) -> Self::Elem;

    /// Restrict a group-chart box to the base-subgroup chart.
    fn n_box(&self, group_box: &SampleBox) -> SampleBox;
    /// Restrict a group-chart box to the fiber-subgroup chart.
    fn h_box(&self, group_box: &SampleBox) -> SampleBox;

    /// Map a unit-cube point into the group through the box.
    fn sample_elem(&self, u: &[f64], bx: &SampleBox) -> Self::Elem {
        self.elem_from_chart(&bx.lerp(u))
    }
    /// Map a unit-cube point into the base subgroup through the box.
    fn sample_n(&self, u: &[f64], bx: &SampleBox) -> Self::Elem {
        self.n_from_chart(&self.n_box(bx).lerp(u))
    }

    /// All elements, for finite instances.
    fn enumerate(&self) -> Option<Vec<Self::Elem>> {
        None
    }
    fn enumerate_n(&self) -> Option<Vec<Self::Elem>> {
        None
    }
    fn enumerate_h(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// Deterministic extremal points (axis points, equal-norm diagonals)
    /// that sharpen sampled suprema; empty by default.
    fn structured_elems(&self, _bx: &SampleBox) -> Vec<Self::Elem> {
        Vec::new()
    }

    /// Point of the one-dimensional geodesic axis `h(t)`, if the fiber has
    /// one (then `d(1, h(t)) = |t|` and `h(t)·h(s) = h(t+s)`).
    fn axis_point(&self, _t: f64) -> Option<Self::Elem> {
        None
    }
    /// Axis parameter of a fiber element.
    fn axis_param(&self, _h: &Self::Elem) -> Option<f64> {
        None
    }
    fn has_axis(&self) -> bool {
        self.axis_point(1.0).is_some()
    }

    /// Membership in the base subgroup, up to `tol.exact`.
    fn in_n(&self, g: &Self::Elem, tol: &Tolerances) -> bool {
        self.elem_residual(&self.project_h(g), &self.identity()) <= tol.exact
    }
    /// Membership in the fiber subgroup, up to `tol.exact`.
    fn in_h(&self, g: &Self::Elem, tol: &Tolerances) -> bool {
        self.elem_residual(&self.project_n(g), &self.identity()) <= tol.exact
    }
}

/// Split `g` into `(n, h)` with `g = n·h`, validating the recomposition.
pub fn decompose<G: SplitGroup>(
    g: &G,
    x: &G::Elem,
    tol: &Tolerances,
) -> Result<(G::Elem, G::Elem)> {
    let n = g.project_n(x);
    let h = g.project_h(x);
    let residual = g.elem_residual(&g.mul(&n, &h), x);
    if residual > tol.exact {
        return Err(Error::DecompositionFailure { residual });
    }
    Ok((n, h))
}

/// A subgroup a distance can be taken to.
pub enum Subgroup<'a, G: SplitGroup> {
    /// The fiber `H` of the splitting (enumerated if finite, axis otherwise).
    Fiber,
    /// An explicit finite list of elements.
    Finite(&'a [G::Elem]),
}

/// `dist(g, S) = inf { d(1, g·q) : q ∈ S }`.
///
/// By left invariance this is the distance from the point `g⁻¹` to the set
/// `S`. Finite subgroups give the exact minimum; one-dimensional fibers are
/// scanned along the axis and refined by golden section, so the returned
/// value is within `search.tol` of the true infimum.
pub fn dist_to_subgroup<G: SplitGroup>(
    g: &G,
    sub: Subgroup<'_, G>,
    x: &G::Elem,
    search: &InfSearch,
) -> Result<f64> {
    match sub {
        Subgroup::Finite(elems) => Ok(dist_to_finite(g, elems, x)),
        Subgroup::Fiber => {
            if let Some(elems) = g.enumerate_h() {
                return Ok(dist_to_finite(g, &elems, x));
            }
            if !g.has_axis() {
                return Err(Error::AxisMissing);
            }
            let window = 2.0 * (g.norm(x) + 1.0);
            let objective = |t: f64| {
                let h = g.axis_point(t).expect("axis checked above");
                g.norm(&g.mul(x, &h))
            };
            let (_, v) = minimize_on_window(objective, window, search)?;
            Ok(v)
        }
    }
}

fn dist_to_finite<G: MetricGroup>(g: &G, elems: &[G::Elem], x: &G::Elem) -> f64 {
    let one = g.identity();
    elems
        .iter()
        .map(|q| g.dist(&one, &g.mul(x, q)))
        .fold(f64::INFINITY, f64::min)
}

/// Sampled suprema for the five equivalent splitting-Lipschitz conditions.
///
/// * `c1`: `d(π_H(g), π_H(p)) / d(g, p)` over pairs;
/// * `c2`: `(d(1,π_H(g)) + d(1,π_N(g))) / d(1,g)`;
/// * `c3`: `d(1,π_N(g)) / d(1,g)`;
/// * `c4`: `d(1,π_H(g)) / d(1,g)`;
/// * `c5`: `d(1,π_N(g)) / dist(g⁻¹, H)`.
///
/// Each is a supremum over points with nonzero denominator; ratios at the
/// identity are skipped and counted.
#[derive(Debug, Clone, Serialize)]
pub struct SplittingConstants {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
    pub c5: f64,
    pub sample_count: usize,
    pub skipped: usize,
    pub sample_box: String,
}

impl SplittingConstants {
    pub fn as_array(&self) -> [f64; 5] {
        [self.c1, self.c2, self.c3, self.c4, self.c5]
    }
}

/// Estimate the five splitting constants over a box, deterministically in
/// the seed. Finite groups with `exhaustive` use every element (and every
/// pair for `c1`).
pub fn estimate_splitting_constants<G: SplitGroup>(
    g: &G,
    bx: &SampleBox,
    n_samples: usize,
    seed: u64,
    exhaustive: bool,
    tol: &Tolerances,
    search: &InfSearch,
) -> Result<SplittingConstants> {
    if n_samples < 2 {
        return Err(Error::InvalidSpec("need at least 2 samples".into()));
    }
    let one = g.identity();

    let singles: Vec<G::Elem> = match (exhaustive, g.enumerate()) {
        (true, Some(all)) => all,
        _ => {
            let mut h = Halton::new(g.group_dim().max(1), seed);
            let mut v: Vec<G::Elem> =
                (0..n_samples).map(|_| g.sample_elem(&h.next_point(), bx)).collect();
            v.extend(g.structured_elems(bx));
            v
        }
    };

    let pairs: Vec<(G::Elem, G::Elem)> = match (exhaustive, g.enumerate()) {
        (true, Some(all)) => {
            let mut p = Vec::with_capacity(all.len() * all.len());
            for a in &all {
                for b in &all {
                    p.push((a.clone(), b.clone()));
                }
            }
            p
        }
        _ => {
            let dim = g.group_dim().max(1);
            let mut h = Halton::new(2 * dim, seed.wrapping_add(1));
            let mut v: Vec<(G::Elem, G::Elem)> = (0..n_samples)
                .map(|_| {
                    let u = h.next_point();
                    (g.sample_elem(&u[..dim], bx), g.sample_elem(&u[dim..], bx))
                })
                .collect();
            // Fiber pairs realize the projection-Lipschitz supremum exactly.
            let st = g.structured_elems(bx);
            for a in &st {
                let ha = g.project_h(a);
                for b in &st {
                    v.push((ha.clone(), g.project_h(b)));
                }
            }
            v
        }
    };

    let mut c = [0.0f64; 5];
    let mut skipped = 0usize;
    let mut any = false;

    for x in &singles {
        let dn = g.dist(&one, &g.project_n(x));
        let dh = g.dist(&one, &g.project_h(x));
        let dg = g.dist(&one, x);
        if dg > tol.exact {
            c[1] = c[1].max((dh + dn) / dg);
            c[2] = c[2].max(dn / dg);
            c[3] = c[3].max(dh / dg);
            any = true;
        } else {
            skipped += 1;
        }
        let dist_h = dist_to_subgroup(g, Subgroup::Fiber, &g.inverse(x), search)?;
        if dist_h > tol.exact {
            c[4] = c[4].max(dn / dist_h);
            any = true;
        } else {
            skipped += 1;
        }
    }

    for (a, b) in &pairs {
        let den = g.dist(a, b);
        if den > tol.exact {
            c[0] = c[0].max(g.dist(&g.project_h(a), &g.project_h(b)) / den);
            any = true;
        } else {
            skipped += 1;
        }
    }

    if !any {
        return Err(Error::DegenerateSample);
    }
    Ok(SplittingConstants {
        c1: c[0],
        c2: c[1],
        c3: c[2],
        c4: c[3],
        c5: c[4],
        sample_count: singles.len() + pairs.len(),
        skipped,
        sample_box: bx.describe(),
    })
}
