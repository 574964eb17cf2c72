//! Per-instance metric hygiene: symmetry, inversion symmetry, the triangle
//! inequality, and the geodesic axis laws.
//!
//! The homogeneous gauge instance records triangle defects instead of
//! failing on them: the distance is downgraded to a quasi-metric label in
//! the report constants and every downstream suite carries its own
//! constants, so a defect is observable rather than hidden.

use super::{elem_pairs, elem_triples, elems, resolve_box, SuiteParams};
use crate::group::SplitGroup;
use crate::report::CheckRecord;
use crate::sampling::Halton;
use crate::Result;
use std::sync::Arc;

pub fn run<G: SplitGroup>(g: &Arc<G>, params: &SuiteParams) -> Result<Vec<CheckRecord>> {
    let bx = resolve_box(g, params)?;
    let tol = &params.tols;
    let one = g.identity();
    let mut records = Vec::new();

    let singles = elems(g, &bx, params.samples, params.seed, params.exhaustive);
    let mut rec = CheckRecord::new("norm-inverse-symmetry", "d(1, g) == d(1, g^-1)");
    let mut diag = CheckRecord::new("vanishing-diagonal", "d(g, g) == 0");
    for x in &singles {
        rec.tally((g.dist(&one, x) - g.dist(&one, &g.inverse(x))).abs() - tol.exact);
        diag.tally(g.dist(x, x).abs() - tol.exact);
    }
    records.push(rec);
    records.push(diag);

    let mut rec = CheckRecord::new("distance-symmetry", "d(g, p) == d(p, g)");
    for (a, b) in elem_pairs(g, &bx, params.samples, params.seed.wrapping_add(1), params.exhaustive)
    {
        rec.tally((g.dist(&a, &b) - g.dist(&b, &a)).abs() - tol.exact);
    }
    records.push(rec);

    // Homogeneous gauges may only be quasi-metrics; track, don't gate.
    let gauge_like = g.name() == "heisenberg";
    let mut rec = CheckRecord::new("triangle-inequality", "d(a, c) <= d(a, b) + d(b, c)");
    let mut worst = 0.0f64;
    let mut defects = 0u64;
    for (a, b, c) in
        elem_triples(g, &bx, params.samples, params.seed.wrapping_add(2), params.exhaustive)
    {
        let defect = g.dist(&a, &c) - g.dist(&a, &b) - g.dist(&b, &c);
        if defect > tol.metric {
            defects += 1;
            worst = worst.max(defect);
        }
        if gauge_like {
            rec.tally(-1.0);
        } else {
            rec.tally(defect - tol.metric);
        }
    }
    rec.constant("defects_beyond_tau", defects as f64)
        .constant("worst_defect", worst)
        .constant("is_metric_on_sample", if defects == 0 { 1.0 } else { 0.0 });
    records.push(rec);

    if g.has_axis() {
        let mut geo = CheckRecord::new("axis-geodesic", "d(1, h(t)) == |t|");
        let mut hom = CheckRecord::new("axis-homomorphism", "h(t)*h(s) == h(t+s)");
        let mut halton = Halton::new(2, params.seed.wrapping_add(3));
        for _ in 0..params.samples.min(2_000) {
            let u = halton.next_point();
            let (t, s) = (8.0 * u[0] - 4.0, 8.0 * u[1] - 4.0);
            let ht = g.axis_point(t).expect("axis present");
            let hs = g.axis_point(s).expect("axis present");
            geo.tally((g.dist(&one, &ht) - t.abs()).abs() - tol.exact);
            let hts = g.axis_point(t + s).expect("axis present");
            hom.tally(g.elem_residual(&g.mul(&ht, &hs), &hts) - tol.exact);
            // Axis parameter round trip.
            if let Some(back) = g.axis_param(&ht) {
                geo.tally((back - t).abs() - tol.exact);
            } else {
                geo.require(false);
            }
        }
        records.push(geo);
        records.push(hom);
    }

    Ok(records)
}
