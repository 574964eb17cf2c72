//! Quasi-distance behavior: symmetry and vanishing diagonal, the relaxed
//! triangle inequality with its `C₃(1+L)` constant, equivalence with the
//! graph metric inside the safe bounds `[1/C₃, 2(1+L)]` (the tighter pair is
//! measured and reported, never asserted), the Lipschitz behavior of `Φ` and
//! `φ` out of `(N, d_φ)`, and the collapse `d_φ = d` on fiber-normal
//! splittings.

use super::{base_pairs, base_triples, estimate_c3, resolve_box, roster_maps, SuiteParams};
use crate::group::SplitGroup;
use crate::lipschitz::fssc_constant;
use crate::quasidist::{
    graph_equivalence_constants, normal_case_identity, quasi_distance, quasi_distance_report,
};
use crate::report::CheckRecord;
use crate::tol::tau_sample;
use crate::Result;
use std::sync::Arc;

pub fn run<G: SplitGroup>(g: &Arc<G>, params: &SuiteParams) -> Result<Vec<CheckRecord>> {
    let bx = resolve_box(g, params)?;
    let tol = &params.tols;
    let mut records = Vec::new();

    let maps = roster_maps(g, &bx, params)?;
    let pairs = base_pairs(g, &bx, params.samples, params.seed, params.exhaustive);
    let triples =
        base_triples(g, &bx, params.samples, params.seed.wrapping_add(1), params.exhaustive);
    let c3 = estimate_c3(g, &bx, params.samples.min(4_000), params.seed.wrapping_add(2), tol);

    let mut sym = CheckRecord::new(
        "symmetry-diagonal",
        "d_phi(a, b) == d_phi(b, a) and d_phi(a, a) == 0",
    );
    let mut qt = CheckRecord::new(
        "quasi-triangle",
        "d_phi(n1,n2) <= C3(1+L)(d_phi(n1,n3) + d_phi(n3,n2))",
    );
    qt.constant("projection_c3", c3);
    let mut eq = CheckRecord::new(
        "graph-equivalence",
        "1/C3 <= d(q1,q2)/d_phi(n1,n2) <= 2(1+L)",
    );
    let mut phi_lip = CheckRecord::new(
        "map-metric-lipschitz",
        "d(phi(n), phi(m)) <= 2L*d_phi(n, m)",
    );
    let mut graphing = CheckRecord::new(
        "graphing-map-lipschitz",
        "sup d(Phi(n), Phi(m))/d_phi(n, m) == c_high",
    );

    for phi in &maps {
        for (a, b) in pairs.iter().take(2_000) {
            match (quasi_distance(phi, a, b), quasi_distance(phi, b, a)) {
                (Ok(ab), Ok(ba)) => sym.tally((ab - ba).abs() - tol.exact),
                _ => sym.skip(1),
            }
            if let Ok(aa) = quasi_distance(phi, a, a) {
                sym.tally(aa.abs() - tol.exact);
            }
        }

        let report = quasi_distance_report(phi, c3, &pairs, &triples, tol)?;
        let l = report.intrinsic_constant;
        qt.tally(report.quasi_triangle - report.quasi_triangle_bound - tau_sample(report.quasi_triangle));
        qt.constant(format!("quasi_triangle[{}]", phi.descriptor()), report.quasi_triangle);
        eq.tally(report.c_low_bound - report.c_low - tau_sample(report.c_low_bound));
        eq.tally(report.c_high - report.c_high_bound - tau_sample(report.c_high));
        eq.constant(format!("c_low[{}]", phi.descriptor()), report.c_low);
        eq.constant(format!("c_high[{}]", phi.descriptor()), report.c_high);
        eq.constant(
            format!("tight_pair_holds[{}]", phi.descriptor()),
            if report.tight_c1_holds && report.tight_c2_holds { 1.0 } else { 0.0 },
        );

        // Chart-linear maps on the abelian plane have the exact ratio
        // sqrt(1 + lambda^2) on both ends.
        if g.name().starts_with("abelian") {
            if let Some(lam) =
                phi.descriptor().strip_prefix("linear:").and_then(|s| s.parse::<f64>().ok())
            {
                let expect = (1.0 + lam * lam).sqrt();
                eq.tally((report.c_low - expect).abs() - 1e-9);
                eq.tally((report.c_high - expect).abs() - 1e-9);
            }
        }

        // φ is metric Lipschitz out of (N, d_phi) with constant 2L.
        let mut sup_phi = 0.0f64;
        let mut sup_graph = 0.0f64;
        for (a, b) in pairs.iter() {
            let Ok(dphi) = quasi_distance(phi, a, b) else {
                phi_lip.skip(1);
                continue;
            };
            if dphi <= tol.exact {
                phi_lip.skip(1);
                continue;
            }
            let (va, vb) = (phi.eval(a)?, phi.eval(b)?);
            sup_phi = sup_phi.max(g.dist(&va, &vb) / dphi);
            let (ga, gb) = (phi.graph_point(a)?.point, phi.graph_point(b)?.point);
            sup_graph = sup_graph.max(g.dist(&ga, &gb) / dphi);
        }
        phi_lip.tally(sup_phi - 2.0 * l - tau_sample(sup_phi));
        // Independent recomputation of the c_high route.
        let eq2 = graph_equivalence_constants(phi, &pairs, tol)?;
        graphing.tally((sup_graph - eq2.c_high).abs() - tau_sample(sup_graph));
    }
    records.push(sym);
    records.push(qt);
    records.push(eq);
    records.push(phi_lip);
    records.push(graphing);

    if g.normal_side().h_is_normal() {
        records.extend(normal_case_records(g, params)?);
    }

    Ok(records)
}

/// `d_φ == d` on splittings whose fiber is normal, independently of the map.
pub(super) fn normal_case_records<G: SplitGroup>(
    g: &Arc<G>,
    params: &SuiteParams,
) -> Result<Vec<CheckRecord>> {
    let bx = resolve_box(g, params)?;
    let tol = &params.tols;
    let mut rec = CheckRecord::new(
        "normal-case-identity",
        "d_phi(m, k) == d(m, k) when the fiber is normal",
    );
    let maps = roster_maps(g, &bx, params)?;
    let pairs = base_pairs(g, &bx, params.samples.min(4_000), params.seed.wrapping_add(3), false);
    for phi in &maps {
        let worst = normal_case_identity(phi, &pairs)?;
        rec.tally(worst - tol.exact);
        rec.constant(format!("residual[{}]", phi.descriptor()), worst);
        // The intrinsic constant itself is map-dependent; only d_phi is not.
        let _ = fssc_constant(phi, &pairs, tol);
    }
    Ok(vec![rec])
}
