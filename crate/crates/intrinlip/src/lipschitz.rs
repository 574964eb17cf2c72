//! Intrinsic Lipschitz constants and their equivalent characterizations.
//!
//! The two-point (FSSC) constant of `φ` is the supremum over graph pairs
//! `x, x' ∈ Γ_φ` of `d(1, π_H(x⁻¹x')) / d(1, π_N(x⁻¹x'))`. At a base point
//! `m` with `p = m·φ(m)`, six conditions bound the same behavior:
//!
//! 1. `d(1, φ_{p⁻¹}(n)) ≤ L·d(1, n)`;
//! 2. `d(φ(m), φ(n)) ≤ L·d(1, π_N(p⁻¹q))` for `q = n·φ(n)`;
//! 3. `d(φ(π_N(p)), φ(π_N(p·n))) ≤ L·d(1, n)`;
//! 4. `d(1, q) ≤ L̃·d(1, π_N(q))` on the translated graph;
//! 5. `d(p, q) ≤ L̄·d(1, π_N(p⁻¹q))`;
//! 6. emptiness of `p·C_{N,H}(1/L̂) ∩ Γ_φ` away from the vertex.
//!
//! Conditions 1–3 are exact reparametrizations of one another (when `N` is
//! normal, `φ_{p⁻¹}(n₁) = φ(m)⁻¹·φ(m·C_{φ(m)}(n₁))`), so their estimators
//! share one underlying sample and must agree to float precision; 4 and 5
//! differ from them by at most an additive 1. All estimators are sampled
//! suprema and say nothing global — reports carry the sample description.

use crate::cones::{cone_margin, ConeFamily, ConeSpec, Half};
use crate::graphs::{classify_point, IntrinsicMap, PointClass};
use crate::group::SplitGroup;
use crate::sampling::Halton;
use crate::search::InfSearch;
use crate::tol::{tau_sample, Tolerances};
use crate::{Error, Result};
use serde::Serialize;

/// A sampled supremum for one condition.
#[derive(Debug, Clone, Serialize)]
pub struct LipschitzEstimate {
    pub condition: String,
    pub value: f64,
    pub samples: usize,
    pub skipped: usize,
}

fn finish_estimate(
    condition: &str,
    sup: f64,
    used: usize,
    skipped: usize,
) -> Result<LipschitzEstimate> {
    if used == 0 {
        return Err(Error::DegenerateSample);
    }
    Ok(LipschitzEstimate { condition: condition.into(), value: sup, samples: used, skipped })
}

/// Two-point intrinsic Lipschitz constant over a pair sample.
pub fn fssc_constant<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    pairs: &[(G::Elem, G::Elem)],
    tol: &Tolerances,
) -> Result<LipschitzEstimate> {
    let g = phi.group();
    let one = g.identity();
    let mut sup = 0.0f64;
    let mut used = 0;
    let mut skipped = 0;
    for (a, b) in pairs {
        let (xa, xb) = match (phi.graph_point(a), phi.graph_point(b)) {
            (Ok(xa), Ok(xb)) => (xa, xb),
            _ => {
                skipped += 1;
                continue;
            }
        };
        let w = g.mul(&g.inverse(&xa.point), &xb.point);
        let den = g.dist(&one, &g.project_n(&w));
        if den <= tol.exact {
            skipped += 1;
            continue;
        }
        sup = sup.max(g.dist(&one, &g.project_h(&w)) / den);
        used += 1;
    }
    finish_estimate("fssc", sup, used, skipped)
}

/// Shared sample for the base-point conditions: each entry is interpreted
/// per condition so that 1–3 range over literally the same configurations.
pub fn condition_constant<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    id: u8,
    m: &G::Elem,
    sample: &[G::Elem],
    opening: Option<f64>,
    tol: &Tolerances,
    search: &InfSearch,
) -> Result<LipschitzEstimate> {
    let g = phi.group();
    let one = g.identity();
    let p = phi.graph_point(m)?.point;
    let phi_m = phi.eval(m)?;
    let name = format!("cond{id}");

    if id == 6 {
        let alpha = opening.ok_or_else(|| {
            Error::InvalidSpec("condition 6 needs a cone opening".into())
        })?;
        let outcome = cone_separation_test(
            phi,
            m,
            1.0 / alpha,
            ConeFamily::SplitLeft,
            None,
            sample,
            true,
            tol,
            search,
        )?;
        return Ok(LipschitzEstimate {
            condition: name,
            value: if outcome.separated { 0.0 } else { f64::INFINITY },
            samples: outcome.samples,
            skipped: outcome.skipped,
        });
    }

    let translated = phi.translate(&g.inverse(&p));
    let mut sup = 0.0f64;
    let mut used = 0;
    let mut skipped = 0;
    for n1 in sample {
        let outcome: Result<Option<f64>> = (|| {
            Ok(match id {
                1 => {
                    let den = g.dist(&one, n1);
                    if den <= tol.exact {
                        return Ok(None);
                    }
                    Some(g.dist(&one, &translated.eval(n1)?) / den)
                }
                2 => {
                    let n = g.mul(m, &g.conjugate(&phi_m, n1));
                    let q = phi.graph_point(&n)?.point;
                    let den = g.dist(&one, &g.project_n(&g.mul(&g.inverse(&p), &q)));
                    if den <= tol.exact {
                        return Ok(None);
                    }
                    Some(g.dist(&phi_m, &phi.eval(&n)?) / den)
                }
                3 => {
                    let den = g.dist(&one, n1);
                    if den <= tol.exact {
                        return Ok(None);
                    }
                    let lhs = phi.eval(&g.project_n(&p))?;
                    let rhs = phi.eval(&g.project_n(&g.mul(&p, n1)))?;
                    Some(g.dist(&lhs, &rhs) / den)
                }
                4 => {
                    let q = translated.graph_point(n1)?.point;
                    let den = g.dist(&one, &g.project_n(&q));
                    if den <= tol.exact {
                        return Ok(None);
                    }
                    Some(g.dist(&one, &q) / den)
                }
                5 => {
                    let n = g.mul(m, &g.conjugate(&phi_m, n1));
                    let q = phi.graph_point(&n)?.point;
                    let den = g.dist(&one, &g.project_n(&g.mul(&g.inverse(&p), &q)));
                    if den <= tol.exact {
                        return Ok(None);
                    }
                    Some(g.dist(&p, &q) / den)
                }
                _ => return Err(Error::InvalidSpec(format!("unknown condition id {id}"))),
            })
        })();
        match outcome {
            Ok(Some(ratio)) => {
                sup = sup.max(ratio);
                used += 1;
            }
            Ok(None) | Err(Error::OutsideDomain) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    finish_estimate(&name, sup, used, skipped)
}

/// Result of a cone-separation scan of the graph.
#[derive(Debug, Clone)]
pub struct SeparationOutcome<E> {
    pub separated: bool,
    /// Deepest strictly-inside graph point and its inclusion margin.
    pub witness: Option<(E, f64)>,
    pub samples: usize,
    pub skipped: usize,
}

/// Scan graph points against the cone of opening `1/L` (split families) or
/// `1/((k+1)·L)` (axis families, `k` the base-projection constant) at vertex
/// `p = m·φ(m)`. A witness must lie strictly inside: beyond `tol.exact` for
/// the exact split predicates, beyond `2·tol.inf` for axis predicates whose
/// numerator is an approximate infimum. The vertex itself is excluded unless
/// `exclude_vertex` is false.
#[allow(clippy::too_many_arguments)]
pub fn cone_separation_test<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    m: &G::Elem,
    l: f64,
    family: ConeFamily,
    k_split: Option<f64>,
    graph_bases: &[G::Elem],
    exclude_vertex: bool,
    tol: &Tolerances,
    search: &InfSearch,
) -> Result<SeparationOutcome<G::Elem>> {
    if l <= 0.0 {
        return Err(Error::InvalidSpec("separation needs a positive constant".into()));
    }
    let g = phi.group();
    let p = phi.graph_point(m)?.point;
    let opening = match family {
        ConeFamily::SplitLeft | ConeFamily::SplitRight => 1.0 / l,
        ConeFamily::Axis | ConeFamily::AxisStrict => {
            let k = k_split.ok_or_else(|| {
                Error::InvalidSpec("axis separation needs the projection constant k".into())
            })?;
            1.0 / ((k + 1.0) * l)
        }
    };
    let strict = match family {
        ConeFamily::Axis | ConeFamily::AxisStrict => 2.0 * tol.inf,
        _ => tol.exact,
    };
    let cone = ConeSpec::new(family, Half::Full, opening, p.clone());
    let mut witness: Option<(G::Elem, f64)> = None;
    let mut samples = 0;
    let mut skipped = 0;
    for n in graph_bases {
        let q = match phi.graph_point(n) {
            Ok(gp) => gp.point,
            Err(Error::OutsideDomain) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        if exclude_vertex && g.elem_residual(&q, &p) <= tol.exact {
            skipped += 1;
            continue;
        }
        samples += 1;
        let margin = cone_margin(g, &cone, &q, tol, search)?;
        if margin > strict && witness.as_ref().map_or(true, |(_, best)| margin > *best) {
            witness = Some((q, margin));
        }
    }
    Ok(SeparationOutcome { separated: witness.is_none(), witness, samples, skipped })
}

/// Result of the half-cone containment scan.
#[derive(Debug, Clone)]
pub struct HalfconeOutcome<E> {
    pub contained: bool,
    /// Cone point misclassified against the closed super/subgraph, with how
    /// far past the graph it landed.
    pub witness: Option<(E, f64)>,
    pub samples: usize,
    pub skipped: usize,
}

/// Check `m·φ(m)·C±(1/L) ⊆` closed super/subgraph at each sampled base
/// point. Cone points are generated as `n·h(±t)` with `t = d(1,n)/(α·u)`,
/// which sweeps every depth of the cone; points needing `t` beyond `t_max`
/// are skipped and counted.
pub fn halfcone_graph_test<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    l: f64,
    bases: &[G::Elem],
    samples_per_base: usize,
    t_max: f64,
    seed: u64,
    tol: &Tolerances,
) -> Result<HalfconeOutcome<G::Elem>> {
    let g = phi.group();
    if !g.has_axis() {
        return Err(Error::AxisMissing);
    }
    if l <= 0.0 {
        return Err(Error::InvalidSpec("half-cone test needs a positive constant".into()));
    }
    let alpha = 1.0 / l;
    let nd = g.n_dim().max(1);
    let mut halton = Halton::new(nd + 1, seed);
    let mut witness: Option<(G::Elem, f64)> = None;
    let mut samples = 0;
    let mut skipped = 0;
    for m in bases {
        let p = match phi.graph_point(m) {
            Ok(gp) => gp.point,
            Err(Error::OutsideDomain) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        for _ in 0..samples_per_base {
            let u = halton.next_point();
            let n0 = g.n_from_chart(&phi.region().lerp(&u[..nd]));
            let depth = u[nd].max(1e-3); // relative depth in (0, 1]
            let r0 = g.norm(&n0);
            let t = if r0 <= tol.exact { 0.5 * depth * t_max } else { r0 / (alpha * depth) };
            if t > t_max {
                skipped += 1;
                continue;
            }
            for sign in [1.0f64, -1.0] {
                let h = g.axis_point(sign * t).expect("axis checked above");
                let x = g.mul(&p, &g.mul(&n0, &h));
                samples += 1;
                let class = match classify_point(phi, &x, tol) {
                    Ok(c) => c,
                    Err(Error::OutsideDomain) => {
                        skipped += 1;
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                let bad = matches!(
                    (sign > 0.0, class),
                    (true, PointClass::Subgraph) | (false, PointClass::Supergraph)
                );
                if bad {
                    let n_x = g.project_n(&x);
                    let t_x = g.axis_param(&g.project_h(&x)).ok_or(Error::AxisMissing)?;
                    let f_x = g.axis_param(&phi.eval(&n_x)?).ok_or(Error::AxisMissing)?;
                    let depth = (f_x - t_x).abs();
                    if witness.as_ref().map_or(true, |(_, best)| depth > *best) {
                        witness = Some((x.clone(), depth));
                    }
                }
            }
        }
    }
    Ok(HalfconeOutcome { contained: witness.is_none(), witness, samples, skipped })
}

/// Sampled supremum of `d(1, π_H(p)) / d(1, p)` over the translated graph
/// `Γ_{φ_{q⁻¹}}` inside the ball of the given radius. For maps with
/// intrinsic constant `α < 1` this stays below `α/(1−α)`.
pub fn graph_projection_constant<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    alpha: f64,
    q: &G::Elem,
    radius: f64,
    count: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<LipschitzEstimate> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidSpec("projection bound needs alpha in [0,1)".into()));
    }
    let g = phi.group();
    let one = g.identity();
    let translated = phi.translate(&g.inverse(q));
    let mut sup = 0.0f64;
    let mut used = 0;
    let mut skipped = 0;
    for n in translated.domain_points(count, seed) {
        let point = match translated.graph_point(&n) {
            Ok(gp) => gp.point,
            Err(Error::OutsideDomain) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let dp = g.dist(&one, &point);
        if dp <= tol.exact || dp > radius {
            skipped += 1;
            continue;
        }
        sup = sup.max(g.dist(&one, &g.project_h(&point)) / dp);
        used += 1;
    }
    finish_estimate("graph-projection", sup, used, skipped)
}

/// Pointwise-limit stability: every `φ_h` must satisfy the two-point bound
/// with constant `l` on the pair sample, the last map must agree with the
/// limit within `stab_tol` on the sampled bases, and then the limit is
/// checked against `l + τ_sample(l)`.
pub fn limit_stability_check<G: SplitGroup>(
    maps: &[IntrinsicMap<G>],
    limit: &IntrinsicMap<G>,
    l: f64,
    pairs: &[(G::Elem, G::Elem)],
    stab_tol: f64,
    tol: &Tolerances,
) -> Result<bool> {
    let last = maps.last().ok_or_else(|| Error::InvalidSpec("empty map sequence".into()))?;
    let g = limit.group();
    for (h, map) in maps.iter().enumerate() {
        let est = fssc_constant(map, pairs, tol)?;
        if est.value > l + tau_sample(l) {
            return Err(Error::PremiseFailed {
                witness: format!("map #{h} has sampled constant {:.6} > {l}", est.value),
            });
        }
    }
    let mut residual = 0.0f64;
    for (a, b) in pairs {
        for n in [a, b] {
            residual = residual.max(g.dist(&last.eval(n)?, &limit.eval(n)?));
        }
    }
    if residual > stab_tol {
        return Err(Error::NotConverged { residual });
    }
    let est = fssc_constant(limit, pairs, tol)?;
    Ok(est.value <= l + tau_sample(l))
}

/// Sampled intrinsic and metric Lipschitz constants of the graphing map on
/// a splitting whose fiber is normal. Each bounds the other plus 1.
pub fn metric_vs_intrinsic<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    pairs: &[(G::Elem, G::Elem)],
    tol: &Tolerances,
) -> Result<(f64, f64)> {
    let g = phi.group();
    if !g.normal_side().h_is_normal() {
        return Err(Error::WrongNormalSide { required: "H" });
    }
    let l_intr = fssc_constant(phi, pairs, tol)?.value;
    let mut l_metric = 0.0f64;
    let mut used = 0;
    for (a, b) in pairs {
        let den = g.dist(a, b);
        if den <= tol.exact {
            continue;
        }
        let (xa, xb) = match (phi.graph_point(a), phi.graph_point(b)) {
            (Ok(xa), Ok(xb)) => (xa, xb),
            _ => continue,
        };
        l_metric = l_metric.max(g.dist(&xa.point, &xb.point) / den);
        used += 1;
    }
    if used == 0 {
        return Err(Error::DegenerateSample);
    }
    Ok((l_intr, l_metric))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::SampleBox;
    use crate::zoo::{AbelianPlane, Dihedral, DihedralElem};
    use crate::MetricGroup;
    use std::sync::Arc;

    fn abelian_pairs(n: usize) -> Vec<(Vec<f64>, Vec<f64>)> {
        let mut h = Halton::new(2, 3);
        (0..n)
            .map(|_| {
                let u = h.next_point();
                (vec![2.0 * u[0] - 1.0, 0.0], vec![2.0 * u[1] - 1.0, 0.0])
            })
            .collect()
    }

    #[test]
    fn fssc_linear_and_const() {
        let g = Arc::new(AbelianPlane::new(1, 1).unwrap());
        let tol = Tolerances::default();
        let pairs = abelian_pairs(200);
        let lin = IntrinsicMap::linear(Arc::clone(&g), 2.0, SampleBox::unit(1));
        let est = fssc_constant(&lin, &pairs, &tol).unwrap();
        assert!((est.value - 2.0).abs() < 1e-9, "got {}", est.value);
        let konst =
            IntrinsicMap::constant(Arc::clone(&g), g.identity(), SampleBox::unit(1), "const:0");
        let est = fssc_constant(&konst, &pairs, &tol).unwrap();
        assert_eq!(est.value, 0.0);
    }

    #[test]
    fn fssc_dihedral_partial_exact() {
        let g = Arc::new(Dihedral::new(4).unwrap());
        let tol = Tolerances::default();
        let phi = IntrinsicMap::table(
            Arc::clone(&g),
            vec![vec![0.0], vec![2.0]],
            vec![DihedralElem::rotation(0), DihedralElem::reflection(0)],
            true,
            "partial",
        )
        .unwrap();
        let dom = phi.enumerate_domain().unwrap();
        let mut pairs = Vec::new();
        for a in &dom {
            for b in &dom {
                pairs.push((*a, *b));
            }
        }
        let est = fssc_constant(&phi, &pairs, &tol).unwrap();
        // d(1, s) / d(1, r²) = 1/2 on the single nontrivial pair.
        assert_eq!(est.value, 0.5);
    }

    #[test]
    fn conditions_two_and_five_closed_forms() {
        let g = Arc::new(AbelianPlane::new(1, 1).unwrap());
        let tol = Tolerances::default();
        let search = InfSearch::default();
        let lam = 1.5;
        let phi = IntrinsicMap::linear(Arc::clone(&g), lam, SampleBox::unit(1));
        let sample: Vec<Vec<f64>> = (1..40).map(|i| vec![i as f64 / 20.0 - 1.0, 0.0]).collect();
        let m = vec![0.25, 0.0];
        let c2 = condition_constant(&phi, 2, &m, &sample, None, &tol, &search).unwrap();
        assert!((c2.value - lam).abs() < 1e-9);
        let c5 = condition_constant(&phi, 5, &m, &sample, None, &tol, &search).unwrap();
        let expect = (1.0 + lam * lam).sqrt();
        assert!((c5.value - expect).abs() < 1e-9, "cond5 {} vs {}", c5.value, expect);
        assert!(c5.value <= 1.0 + lam);
    }

    #[test]
    fn separation_thresholds_around_the_constant() {
        let g = Arc::new(AbelianPlane::new(1, 1).unwrap());
        let tol = Tolerances::default();
        let search = InfSearch::default();
        let lam = 2.0;
        let phi = IntrinsicMap::linear(Arc::clone(&g), lam, SampleBox::unit(1));
        let bases: Vec<Vec<f64>> = (0..60).map(|i| vec![i as f64 / 30.0 - 1.0, 0.0]).collect();
        let m = vec![0.1, 0.0];
        let tight = cone_separation_test(
            &phi, &m, lam * 1.001, ConeFamily::SplitLeft, None, &bases, true, &tol, &search,
        )
        .unwrap();
        assert!(tight.separated);
        let loose = cone_separation_test(
            &phi, &m, lam * 0.5, ConeFamily::SplitLeft, None, &bases, true, &tol, &search,
        )
        .unwrap();
        assert!(!loose.separated);
        assert!(loose.witness.is_some());
    }

    #[test]
    fn halfcone_witnesses_for_steep_maps() {
        let g = Arc::new(AbelianPlane::new(1, 1).unwrap());
        let tol = Tolerances::default();
        let phi = IntrinsicMap::linear(Arc::clone(&g), 2.0, SampleBox::unit(1));
        let bases: Vec<Vec<f64>> = (0..10).map(|i| vec![i as f64 / 5.0 - 1.0, 0.0]).collect();
        let ok = halfcone_graph_test(&phi, 2.0 + 1e-9, &bases, 200, 4.0, 5, &tol).unwrap();
        assert!(ok.contained, "L = λ should contain the half cones");
        let bad = halfcone_graph_test(&phi, 1.0, &bases, 200, 4.0, 5, &tol).unwrap();
        assert!(!bad.contained, "L = λ/2 should produce a witness");
    }

    #[test]
    fn projection_constant_bound() {
        let g = Arc::new(AbelianPlane::new(1, 1).unwrap());
        let tol = Tolerances::default();
        for (lam, bound) in [(0.5, 1.0), (0.25, 1.0 / 3.0)] {
            let phi = IntrinsicMap::linear(Arc::clone(&g), lam, SampleBox::unit(1));
            let q = phi.graph_point(&vec![0.3, 0.0]).unwrap().point;
            let est =
                graph_projection_constant(&phi, lam, &q, 2.0, 400, 11, &tol).unwrap();
            assert!(est.value <= bound + 1e-6, "λ={lam}: {} > {bound}", est.value);
        }
    }

    #[test]
    fn limit_stability_and_divergence() {
        let g = Arc::new(AbelianPlane::new(1, 1).unwrap());
        let tol = Tolerances::default();
        let lam = 1.0;
        let pairs = abelian_pairs(100);
        let maps: Vec<_> = (0..8)
            .map(|j| {
                let h = 10f64.powi(j);
                IntrinsicMap::linear(Arc::clone(&g), lam * (1.0 + 1.0 / h), SampleBox::unit(1))
            })
            .collect();
        let limit = IntrinsicMap::linear(Arc::clone(&g), lam, SampleBox::unit(1));
        let ok =
            limit_stability_check(&maps, &limit, 2.0 * lam, &pairs, 1e-5, &tol).unwrap();
        assert!(ok);
        // A sequence still far from its claimed limit is flagged.
        let err = limit_stability_check(&maps[..2], &limit, 2.0 * lam, &pairs, 1e-5, &tol)
            .unwrap_err();
        assert!(matches!(err, Error::NotConverged { .. }));
    }

    #[test]
    fn metric_vs_intrinsic_closed_form() {
        let g = Arc::new(AbelianPlane::new(1, 1).unwrap());
        let tol = Tolerances::default();
        let lam = 1.5;
        let phi = IntrinsicMap::linear(Arc::clone(&g), lam, SampleBox::unit(1));
        let pairs = abelian_pairs(300);
        let (l_intr, l_metric) = metric_vs_intrinsic(&phi, &pairs, &tol).unwrap();
        assert!((l_metric - (1.0 + lam * lam).sqrt()).abs() < 1e-9);
        assert!(l_metric <= 1.0 + l_intr + 1e-9);
        assert!(l_intr <= 1.0 + l_metric + 1e-9);
    }
}
