//! Graph translation laws: `q·Γ_φ = Γ_{φ_q}` pointwise (and as exact sets on
//! finite groups, over every map `φ: N → H` in exhaustive mode), the
//! composition law for repeated translations, boundary approximation along
//! the axis, and the graph distance bound with its realizing witness.

use super::{elems, resolve_box, roster_maps, SuiteParams};
use crate::graphs::{classify_point, graph_distance_bound, IntrinsicMap, PointClass};
use crate::group::SplitGroup;
use crate::report::CheckRecord;
use crate::tol::tau_sample;
use crate::Result;
use std::sync::Arc;

pub fn run<G: SplitGroup>(g: &Arc<G>, params: &SuiteParams) -> Result<Vec<CheckRecord>> {
    let bx = resolve_box(g, params)?;
    let tol = &params.tols;
    let mut records = Vec::new();

    let maps = all_maps(g, &bx, params)?;
    let q_count = (params.samples / 100).clamp(20, 400);
    let pt_count = (params.samples / 10).clamp(100, 4_000);
    let qs = elems(g, &bx, q_count, params.seed, params.exhaustive);
    let finite = g.enumerate().is_some();

    let mut pointwise =
        CheckRecord::new("translation-identity", "n*phi_q(n) == q*Phi(pi_N(q^-1 n)) on E_q");
    let mut sets = CheckRecord::new("translation-graph-sets", "q*graph(phi) == graph(phi_q)");
    let mut composition = CheckRecord::new("translation-composition", "(phi_p)_q == phi_{q*p}");
    let mut inverse_rt = CheckRecord::new("translation-inverse", "(phi_p)_{p^-1} == phi");
    let mut origin = CheckRecord::new("translation-origin", "q in graph(phi) => phi_{q^-1}(1) == 1");

    for phi in &maps {
        for (qi, q) in qs.iter().enumerate() {
            let phi_q = phi.translate(q);
            for n in phi_q.domain_points(pt_count / q_count.max(1), params.seed ^ qi as u64) {
                let lhs = match phi_q.graph_point(&n) {
                    Ok(gp) => gp.point,
                    Err(_) => {
                        pointwise.skip(1);
                        continue;
                    }
                };
                let inner = g.project_n(&g.mul(&g.inverse(q), &n));
                match phi.graph_point(&inner) {
                    Ok(gp) => {
                        let rhs = g.mul(q, &gp.point);
                        pointwise.tally(g.elem_residual(&lhs, &rhs) - tol.exact);
                    }
                    Err(_) => pointwise.skip(1),
                }
            }
            if finite {
                let lhs: Vec<G::Elem> = phi
                    .enumerate_domain()
                    .unwrap_or_default()
                    .iter()
                    .filter_map(|n| phi.graph_point(n).ok())
                    .map(|gp| g.mul(q, &gp.point))
                    .collect();
                let rhs: Vec<G::Elem> = phi_q
                    .enumerate_domain()
                    .unwrap_or_default()
                    .iter()
                    .filter_map(|n| phi_q.graph_point(n).ok())
                    .map(|gp| gp.point)
                    .collect();
                sets.require(same_elements(g, &lhs, &rhs));
            }
        }

        // Composition and inverse laws on sampled (p, q, n).
        let trans_pts = phi.domain_points(64, params.seed.wrapping_add(5));
        for (pi, p) in qs.iter().take(20).enumerate() {
            let phi_p = phi.translate(p);
            for q in qs.iter().skip(1).take(20) {
                let lhs_map = phi_p.translate(q);
                let rhs_map = phi.translate(&g.mul(q, p));
                for n in trans_pts.iter().take(8) {
                    match (lhs_map.eval(n), rhs_map.eval(n)) {
                        (Ok(a), Ok(b)) => composition.tally(g.elem_residual(&a, &b) - tol.exact),
                        (Err(_), Err(_)) => composition.skip(1),
                        _ => composition.require(false),
                    }
                }
            }
            let back = phi_p.translate(&g.inverse(p));
            for n in trans_pts.iter().take(8) {
                match (back.eval(n), phi.eval(n)) {
                    (Ok(a), Ok(b)) => inverse_rt.tally(g.elem_residual(&a, &b) - tol.exact),
                    (Err(_), Err(_)) => inverse_rt.skip(1),
                    _ => inverse_rt.require(false),
                }
            }
            let _ = pi;
        }

        // Translating a graph point to the origin fixes the identity.
        for n in trans_pts.iter().take(32) {
            let Ok(gp) = phi.graph_point(n) else {
                origin.skip(1);
                continue;
            };
            let back = phi.translate(&g.inverse(&gp.point));
            match back.eval(&g.identity()) {
                Ok(v) => origin.tally(g.elem_residual(&v, &g.identity()) - tol.exact),
                Err(_) => origin.require(false),
            }
        }
    }
    records.push(pointwise);
    if finite {
        records.push(sets);
    }
    records.push(composition);
    records.push(inverse_rt);
    records.push(origin);

    if g.has_axis() {
        let mut rec = CheckRecord::new(
            "boundary-approximation",
            "d(n*h(f(n) -/+ 1/k), Phi(n)) == 1/k, classified sub/super",
        );
        for phi in &maps {
            for n in phi.domain_points(32, params.seed.wrapping_add(7)) {
                let Ok(gp) = phi.graph_point(&n) else {
                    rec.skip(1);
                    continue;
                };
                let Some(f) = g.axis_param(&gp.value) else {
                    rec.require(false);
                    continue;
                };
                for k in 1..=10u32 {
                    let step = 1.0 / k as f64;
                    for (sign, want) in [(-1.0, PointClass::Subgraph), (1.0, PointClass::Supergraph)]
                    {
                        let h = g.axis_point(f + sign * step).expect("axis present");
                        let x = g.mul(&n, &h);
                        rec.tally((g.dist(&x, &gp.point) - step).abs() - tol.exact);
                        match classify_point(phi, &x, tol) {
                            Ok(class) => rec.require(class == want),
                            Err(_) => rec.require(false),
                        }
                    }
                }
            }
        }
        records.push(rec);
    }

    let mut rec = CheckRecord::new(
        "graph-distance-bound",
        "min_n d(p, Phi(n)) <= d(1, pi_H(p)^-1 phi(pi_N(p))) == d(p, witness)",
    );
    for phi in &maps {
        for p in elems(g, &bx, 64, params.seed.wrapping_add(11), params.exhaustive) {
            let (bound, witness) = match graph_distance_bound(phi, &p) {
                Ok(v) => v,
                Err(_) => {
                    rec.skip(1);
                    continue;
                }
            };
            // The witness realizes the bound by left invariance.
            rec.tally((g.dist(&p, &witness.point) - bound).abs() - tol.exact);
            let mut min = f64::INFINITY;
            for n in phi.domain_points(256, params.seed.wrapping_add(13)) {
                if let Ok(gp) = phi.graph_point(&n) {
                    min = min.min(g.dist(&p, &gp.point));
                }
            }
            min = min.min(g.dist(&p, &witness.point));
            rec.tally(min - bound - tau_sample(bound));
        }
    }
    records.push(rec);

    Ok(records)
}

/// Roster maps, plus — on small finite groups in exhaustive mode — the whole
/// universe of maps `N → H` as exact tables.
fn all_maps<G: SplitGroup>(
    g: &Arc<G>,
    bx: &crate::sampling::SampleBox,
    params: &SuiteParams,
) -> Result<Vec<IntrinsicMap<G>>> {
    let mut maps = roster_maps(g, bx, params)?;
    if params.exhaustive && params.map_spec.is_none() {
        if let (Some(n_elems), Some(h_elems)) = (g.enumerate_n(), g.enumerate_h()) {
            let n = n_elems.len();
            if h_elems.len() == 2 && n <= 12 {
                let keys: Vec<Vec<f64>> = (0..n).map(|i| vec![i as f64]).collect();
                for mask in 0u32..(1 << n) {
                    let values: Vec<G::Elem> = (0..n)
                        .map(|i| g.h_from_chart(&[f64::from(mask >> i & 1)]))
                        .collect();
                    maps.push(IntrinsicMap::table(
                        Arc::clone(g),
                        keys.clone(),
                        values,
                        true,
                        format!("table:mask{mask}"),
                    )?);
                }
            }
        }
    }
    Ok(maps)
}

fn same_elements<G: SplitGroup>(g: &Arc<G>, a: &[G::Elem], b: &[G::Elem]) -> bool {
    a.len() == b.len()
        && a.iter().all(|x| b.iter().any(|y| g.elem_residual(x, y) == 0.0))
        && b.iter().all(|y| a.iter().any(|x| g.elem_residual(x, y) == 0.0))
}
