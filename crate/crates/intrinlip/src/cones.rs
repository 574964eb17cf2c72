//! Intrinsic cones: axis cones and split cones, with vertex translation,
//! half variants along a one-dimensional axis, and minimal openings.
//!
//! With vertex `1` and opening `α ≥ 0`:
//!
//! * split left cone: `d(1, π_N(w)) ≤ α·d(1, π_H(w))`;
//! * split right cone: same inequality for the reversed factorization
//!   `w = π_H(w)·π̃_N(w)`, where `π̃_N(w) = C_{π_H(w)⁻¹}(π_N(w))`;
//! * axis cone: `dist(w⁻¹, H) ≤ α·d(1, w)` (non-strict, with infimum slack);
//! * strict axis cone: `dist(1, wH) < α·d(1, w)`.
//!
//! Here `dist(g, H) = inf_q d(1, g·q)`. A cone with vertex `p` contains `x`
//! iff the vertex-`1` cone contains `w = p⁻¹·x`; vertex translation is never
//! applied to sample sets. Half cones intersect with the halfspace of the
//! sign of the axis parameter of `π_H(w)` before translating, so the
//! halfspace moves with the vertex.

use crate::group::{dist_to_subgroup, SplitGroup, Subgroup};
use crate::search::InfSearch;
use crate::tol::Tolerances;
use crate::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConeFamily {
    /// `X_H(α)` with `dist(w⁻¹, H)` and non-strict comparison.
    Axis,
    /// The strict variant with `dist(1, wH)`.
    AxisStrict,
    /// `C_{N,H}(α)` for the `N`-first factorization.
    SplitLeft,
    /// `C^r_{N,H}(α)` for the `H`-first factorization.
    SplitRight,
}

impl ConeFamily {
    pub const ALL: [ConeFamily; 4] =
        [ConeFamily::Axis, ConeFamily::AxisStrict, ConeFamily::SplitLeft, ConeFamily::SplitRight];

    pub fn label(&self) -> &'static str {
        match self {
            ConeFamily::Axis => "axis",
            ConeFamily::AxisStrict => "axis-strict",
            ConeFamily::SplitLeft => "split-left",
            ConeFamily::SplitRight => "split-right",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Half {
    Full,
    /// Axis parameter of `π_H(p⁻¹x)` nonnegative.
    Plus,
    /// Axis parameter nonpositive.
    Minus,
}

/// A cone with family, half, opening, and vertex.
#[derive(Debug, Clone)]
pub struct ConeSpec<E> {
    pub family: ConeFamily,
    pub half: Half,
    pub opening: f64,
    pub vertex: E,
}

impl<E> ConeSpec<E> {
    pub fn new(family: ConeFamily, half: Half, opening: f64, vertex: E) -> Self {
        ConeSpec { family, half, opening, vertex }
    }
}

/// Numerator and denominator of the defining inequality at `w = p⁻¹x`.
fn cone_sides<G: SplitGroup>(
    g: &G,
    family: ConeFamily,
    w: &G::Elem,
    search: &InfSearch,
) -> Result<(f64, f64)> {
    let one = g.identity();
    Ok(match family {
        ConeFamily::SplitLeft => {
            (g.dist(&one, &g.project_n(w)), g.dist(&one, &g.project_h(w)))
        }
        ConeFamily::SplitRight => {
            let h = g.project_h(w);
            let tilde_n = g.conjugate(&g.inverse(&h), &g.project_n(w));
            (g.dist(&one, &tilde_n), g.dist(&one, &h))
        }
        ConeFamily::Axis => {
            (dist_to_subgroup(g, Subgroup::Fiber, &g.inverse(w), search)?, g.norm(w))
        }
        ConeFamily::AxisStrict => {
            (dist_to_subgroup(g, Subgroup::Fiber, w, search)?, g.norm(w))
        }
    })
}

fn in_half<G: SplitGroup>(g: &G, half: Half, w: &G::Elem, tol: &Tolerances) -> Result<bool> {
    match half {
        Half::Full => Ok(true),
        Half::Plus | Half::Minus => {
            let t = g
                .axis_param(&g.project_h(w))
                .ok_or(Error::AxisMissing)?;
            Ok(match half {
                Half::Plus => t >= -tol.exact,
                Half::Minus => t <= tol.exact,
                Half::Full => unreachable!(),
            })
        }
    }
}

/// Cone membership of `x`.
pub fn cone_contains<G: SplitGroup>(
    g: &G,
    cone: &ConeSpec<G::Elem>,
    x: &G::Elem,
    tol: &Tolerances,
    search: &InfSearch,
) -> Result<bool> {
    let w = g.mul(&g.inverse(&cone.vertex), x);
    if !in_half(g, cone.half, &w, tol)? {
        return Ok(false);
    }
    let (num, den) = cone_sides(g, cone.family, &w, search)?;
    Ok(match cone.family {
        // The numerator is an approximate infimum; allow it slack.
        ConeFamily::Axis => num <= cone.opening * den + tol.inf,
        ConeFamily::AxisStrict => num < cone.opening * den,
        _ => num <= cone.opening * den,
    })
}

/// Signed inclusion margin `α·den − num` of `x` at the vertex-translated
/// cone; positive means strictly inside. Returns `-∞` outside the half.
pub fn cone_margin<G: SplitGroup>(
    g: &G,
    cone: &ConeSpec<G::Elem>,
    x: &G::Elem,
    tol: &Tolerances,
    search: &InfSearch,
) -> Result<f64> {
    let w = g.mul(&g.inverse(&cone.vertex), x);
    if !in_half(g, cone.half, &w, tol)? {
        return Ok(f64::NEG_INFINITY);
    }
    let (num, den) = cone_sides(g, cone.family, &w, search)?;
    Ok(cone.opening * den - num)
}

/// Smallest opening for which `x` belongs to the cone, or `+∞` when the
/// denominator vanishes and the numerator does not. Points outside a half
/// cone's halfspace have no opening at all, also reported as `+∞`.
pub fn minimal_opening<G: SplitGroup>(
    g: &G,
    family: ConeFamily,
    half: Half,
    vertex: &G::Elem,
    x: &G::Elem,
    tol: &Tolerances,
    search: &InfSearch,
) -> Result<f64> {
    let w = g.mul(&g.inverse(vertex), x);
    if !in_half(g, half, &w, tol)? {
        return Ok(f64::INFINITY);
    }
    let (num, den) = cone_sides(g, family, &w, search)?;
    if num <= tol.exact {
        return Ok(0.0);
    }
    if den <= tol.exact {
        return Ok(f64::INFINITY);
    }
    Ok(num / den)
}

/// Opening that contains `p^k` whenever `p` is in the cone of opening `α`:
/// `k² + k(α − 1)`.
pub fn power_cone_bound(alpha: f64, k: u32) -> f64 {
    let kf = k as f64;
    kf * kf + kf * (alpha - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{AbelianPlane, Dihedral, DihedralElem};
    use crate::MetricGroup;

    fn setup() -> (AbelianPlane, Tolerances, InfSearch) {
        (AbelianPlane::new(1, 1).unwrap(), Tolerances::default(), InfSearch::default())
    }

    #[test]
    fn split_left_membership() {
        let (g, tol, search) = setup();
        let spec = ConeSpec::new(ConeFamily::SplitLeft, Half::Full, 0.75, g.identity());
        assert!(cone_contains(&g, &spec, &vec![3.0, 4.0], &tol, &search).unwrap());
        let spec = ConeSpec::new(ConeFamily::SplitLeft, Half::Full, 0.5, g.identity());
        assert!(!cone_contains(&g, &spec, &vec![3.0, 4.0], &tol, &search).unwrap());
    }

    #[test]
    fn dihedral_membership_is_exact() {
        let g = Dihedral::new(4).unwrap();
        let (tol, search) = (Tolerances::default(), InfSearch::default());
        let rs = DihedralElem { rot: 1, flip: true };
        let spec = ConeSpec::new(ConeFamily::SplitLeft, Half::Full, 1.0, g.identity());
        assert!(cone_contains(&g, &spec, &rs, &tol, &search).unwrap());
    }

    #[test]
    fn minimal_openings() {
        let (g, tol, search) = setup();
        let alpha = minimal_opening(
            &g,
            ConeFamily::SplitLeft,
            Half::Full,
            &g.identity(),
            &vec![3.0, 4.0],
            &tol,
            &search,
        )
        .unwrap();
        assert!((alpha - 0.75).abs() < 1e-12);
        // Points on the axis have opening 0, pure-base points +∞.
        for family in ConeFamily::ALL {
            let a = minimal_opening(&g, family, Half::Full, &g.identity(), &vec![0.0, 2.0], &tol, &search)
                .unwrap();
            assert!(a.abs() < 2e-6, "{family:?} axis point got {a}");
        }
        let inf = minimal_opening(
            &g,
            ConeFamily::SplitLeft,
            Half::Full,
            &g.identity(),
            &vec![2.0, 0.0],
            &tol,
            &search,
        )
        .unwrap();
        assert!(inf.is_infinite());
    }

    #[test]
    fn power_bound_values() {
        assert_eq!(power_cone_bound(1.0, 2), 4.0);
        assert_eq!(power_cone_bound(0.0, 2), 2.0);
        assert_eq!(power_cone_bound(3.0, 3), 15.0);
    }

    #[test]
    fn vertex_translation_and_half_cones() {
        let (g, tol, search) = setup();
        let vertex = vec![1.0, 1.0];
        let plus = ConeSpec::new(ConeFamily::SplitLeft, Half::Plus, 1.0, vertex.clone());
        let minus = ConeSpec::new(ConeFamily::SplitLeft, Half::Minus, 1.0, vertex);
        // (1.5, 2.0) sits 0.5 right / 1.0 above the vertex: in the plus half.
        assert!(cone_contains(&g, &plus, &vec![1.5, 2.0], &tol, &search).unwrap());
        assert!(!cone_contains(&g, &minus, &vec![1.5, 2.0], &tol, &search).unwrap());
        assert!(cone_contains(&g, &minus, &vec![1.5, 0.0], &tol, &search).unwrap());
    }

    #[test]
    fn axis_cone_uses_infimum_distance() {
        let (g, tol, search) = setup();
        // For the abelian plane, dist(w⁻¹, H) is the |x|-distance to the axis.
        let spec = ConeSpec::new(ConeFamily::Axis, Half::Full, 0.6001, g.identity());
        assert!(cone_contains(&g, &spec, &vec![3.0, 4.0], &tol, &search).unwrap());
        let spec = ConeSpec::new(ConeFamily::Axis, Half::Full, 0.5999, g.identity());
        assert!(!cone_contains(&g, &spec, &vec![3.0, 4.0], &tol, &search).unwrap());
    }
}
