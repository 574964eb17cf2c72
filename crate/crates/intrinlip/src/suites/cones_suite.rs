//! Cone geometry: opening monotonicity, the left/right comparability chain,
//! inverse symmetry, the axis/split comparison with its explicit constants,
//! power membership, and the half-cone shift along the axis.

use super::{elems, estimate_c1, resolve_box, SuiteParams};
use crate::cones::{cone_contains, cone_margin, power_cone_bound, ConeFamily, ConeSpec, Half};
use crate::group::{dist_to_subgroup, SplitGroup, Subgroup};
use crate::report::CheckRecord;
use crate::sampling::Halton;
use crate::Result;
use std::sync::Arc;

const ALPHA_GRID: [f64; 4] = [0.0, 0.5, 1.0, 3.0];

pub fn run<G: SplitGroup>(g: &Arc<G>, params: &SuiteParams) -> Result<Vec<CheckRecord>> {
    let bx = resolve_box(g, params)?;
    let tol = &params.tols;
    let search = &params.search;
    let one = g.identity();
    let mut records = Vec::new();

    // Factor pairs (n, h) drawn once; members of the various cones are the
    // pairs passing each opening's defining inequality.
    let pairs = factor_pairs(g, &bx, params);
    let grace = |den: f64| tol.exact * (1.0 + den);

    // --- opening monotonicity ------------------------------------------------
    let mut rec = CheckRecord::new(
        "opening-monotonicity",
        "alpha1 < alpha2 => C(alpha1) subset of C(alpha2)",
    );
    let pts = elems(g, &bx, params.samples, params.seed, params.exhaustive);
    let mut halton = Halton::new(2, params.seed.wrapping_add(2));
    for (i, x) in pts.iter().enumerate() {
        let u = halton.next_point();
        let a1 = 3.0 * u[0];
        let a2 = a1 + 3.0 * u[1] + 1e-12;
        for family in [ConeFamily::SplitLeft, ConeFamily::SplitRight] {
            let inner = ConeSpec::new(family, Half::Full, a1, one.clone());
            let outer = ConeSpec::new(family, Half::Full, a2, one.clone());
            let m1 = cone_contains(g, &inner, x, tol, search)?;
            let m2 = cone_contains(g, &outer, x, tol, search)?;
            rec.require(!(m1 && !m2));
        }
        // Axis memberships cost an infimum search each; thin them out.
        if i % 50 == 0 && (g.has_axis() || g.enumerate_h().is_some()) {
            for family in [ConeFamily::Axis, ConeFamily::AxisStrict] {
                let inner = ConeSpec::new(family, Half::Full, a1, one.clone());
                let outer = ConeSpec::new(family, Half::Full, a2, one.clone());
                let m1 = cone_contains(g, &inner, x, tol, search)?;
                let m2 = cone_contains(g, &outer, x, tol, search)?;
                rec.require(!(m1 && !m2));
            }
        }
    }
    records.push(rec);

    // --- left/right chain ----------------------------------------------------
    let vertices = elems(g, &bx, 4, params.seed.wrapping_add(3), false);
    let mut rec = CheckRecord::new(
        "left-right-chain",
        "C_l(a) subset of C_r(a+2) subset of C_l(a+4), any vertex",
    );
    for &alpha in &ALPHA_GRID {
        for (vi, (n, h)) in pairs.iter().enumerate() {
            let (dn, dh) = (g.dist(&one, n), g.dist(&one, h));
            let vertex = &vertices[vi % vertices.len()];
            // First link, on constructed members of C_l(alpha).
            if dn <= alpha * dh {
                let x = g.mul(vertex, &g.mul(n, h));
                let outer =
                    ConeSpec::new(ConeFamily::SplitRight, Half::Full, alpha + 2.0, vertex.clone());
                let margin = cone_margin(g, &outer, &x, tol, search)?;
                rec.tally(-margin - grace(dh));
            } else {
                rec.skip(1);
            }
            // Second link, on constructed members of C_r(alpha + 2).
            if dn <= (alpha + 2.0) * dh {
                let x = g.mul(vertex, &g.mul(h, n));
                let outer =
                    ConeSpec::new(ConeFamily::SplitLeft, Half::Full, alpha + 4.0, vertex.clone());
                let margin = cone_margin(g, &outer, &x, tol, search)?;
                rec.tally(-margin - grace(dh));
            } else {
                rec.skip(1);
            }
        }
    }
    records.push(rec);

    // --- inverse symmetry ----------------------------------------------------
    let mut rec = CheckRecord::new(
        "inverse-symmetry",
        "g in C_l(a) <=> g^-1 in C_r(a), with equal margins",
    );
    for x in pts.iter().take(params.samples.min(20_000)) {
        for alpha in [0.0, 0.5, 1.0, 2.0, 3.0] {
            let left = ConeSpec::new(ConeFamily::SplitLeft, Half::Full, alpha, one.clone());
            let right = ConeSpec::new(ConeFamily::SplitRight, Half::Full, alpha, one.clone());
            let ml = cone_margin(g, &left, x, tol, search)?;
            let mr = cone_margin(g, &right, &g.inverse(x), tol, search)?;
            rec.tally((ml - mr).abs() - grace(ml.abs()));
            let cl = cone_contains(g, &left, x, tol, search)?;
            let cr = cone_contains(g, &right, &g.inverse(x), tol, search)?;
            rec.require(cl == cr);
        }
    }
    records.push(rec);

    // --- axis/split comparison ------------------------------------------------
    if g.has_axis() || g.enumerate_h().is_some() {
        let c = estimate_c1(g, &bx, params.samples.min(4_000), params.seed.wrapping_add(4), tol);
        let mut rec = CheckRecord::new(
            "cone-comparison",
            "X(a1) subset of C(a1(C+1)/(1-a1(C+1))); C(b2) subset of X(b2*C)",
        );
        rec.constant("projection_c1", c);
        let candidates = near_axis_candidates(g, &bx, params);
        for frac in [0.1, 0.5] {
            let a1 = frac / (c + 1.0);
            let b1 = a1 * (c + 1.0) / (1.0 - a1 * (c + 1.0));
            let b2 = frac / c;
            let a2 = b2 * c;
            for x in &candidates {
                let norm_x = g.dist(&one, x);
                if norm_x <= tol.exact {
                    rec.skip(2);
                    continue;
                }
                let xdist = dist_to_subgroup(g, Subgroup::Fiber, x, search)?;
                let (dn, dh) =
                    (g.dist(&one, &g.project_n(x)), g.dist(&one, &g.project_h(x)));
                // Axis members must satisfy the split inequality.
                if xdist <= a1 * norm_x + tol.inf {
                    rec.tally(dn - b1 * dh - 2.0 * tol.inf);
                } else {
                    rec.skip(1);
                }
                // Split members must satisfy the axis inequality.
                if dn <= b2 * dh {
                    rec.tally(xdist - a2 * norm_x - 2.0 * tol.inf);
                } else {
                    rec.skip(1);
                }
            }
        }
        records.push(rec);
    }

    // --- power membership ------------------------------------------------------
    let mut rec = CheckRecord::new(
        "power-membership",
        "g in C(a) => g^k in C(k^2 + k(a-1)), k in {2,3}",
    );
    for &alpha in &ALPHA_GRID[1..] {
        for (n, h) in pairs.iter().take(params.samples.min(20_000)) {
            let (dn, dh) = (g.dist(&one, n), g.dist(&one, h));
            if dn > alpha * dh {
                rec.skip(1);
                continue;
            }
            let x = g.mul(n, h);
            let mut power = x.clone();
            for k in 2..=3u32 {
                power = g.mul(&power, &x);
                let bound = power_cone_bound(alpha, k);
                let (pn, ph) =
                    (g.dist(&one, &g.project_n(&power)), g.dist(&one, &g.project_h(&power)));
                rec.tally(pn - bound * ph - grace(ph));
            }
        }
    }
    records.push(rec);

    // --- half-cone shift --------------------------------------------------------
    if g.has_axis() {
        let mut rec = CheckRecord::new(
            "halfcone-shift",
            "h(t)*C_plus(a) subset of C_plus(a+2) for t > 0, mirrored for minus",
        );
        let h_extent = g
            .h_box(&bx)
            .dims
            .iter()
            .map(|(lo, hi)| lo.abs().max(hi.abs()))
            .fold(1.0f64, f64::max);
        let t_max = 4.0 * h_extent;
        let nd = g.n_dim().max(1);
        let mut halton = Halton::new(nd + 2, params.seed.wrapping_add(6));
        for &alpha in &ALPHA_GRID[1..] {
            for _ in 0..params.samples.min(10_000) {
                let u = halton.next_point();
                let n0 = g.n_from_chart(&g.n_box(&bx).lerp(&u[..nd]));
                let depth = u[nd].max(1e-3);
                let r0 = g.dist(&one, &n0);
                let s = if r0 <= tol.exact { 0.5 * depth * t_max } else { r0 / (alpha * depth) };
                if s > t_max {
                    rec.skip(2);
                    continue;
                }
                let t = u[nd + 1].max(1e-3) * t_max;
                for sign in [1.0f64, -1.0] {
                    let w = g.mul(&n0, &g.axis_point(sign * s).expect("axis present"));
                    let x = g.mul(&g.axis_point(sign * t).expect("axis present"), &w);
                    // Stays in the halfspace and in the widened cone.
                    let t_x =
                        g.axis_param(&g.project_h(&x)).expect("axis present") * sign;
                    rec.tally(-t_x - tol.exact);
                    let (dn, dh) =
                        (g.dist(&one, &g.project_n(&x)), g.dist(&one, &g.project_h(&x)));
                    rec.tally(dn - (alpha + 2.0) * dh - grace(dh));
                }
            }
        }
        records.push(rec);
    }

    Ok(records)
}

/// `(n, h)` factor pairs used to construct cone members, with a few pure
/// fiber points so zero openings stay non-vacuous.
fn factor_pairs<G: SplitGroup>(
    g: &Arc<G>,
    bx: &crate::sampling::SampleBox,
    params: &SuiteParams,
) -> Vec<(G::Elem, G::Elem)> {
    if let (Some(ns), Some(hs)) = (g.enumerate_n(), g.enumerate_h()) {
        let mut out = Vec::new();
        for n in &ns {
            for h in &hs {
                out.push((n.clone(), h.clone()));
            }
        }
        return out;
    }
    let nd = g.n_dim().max(1);
    let hd = g.h_dim().max(1);
    let mut halton = Halton::new(nd + hd, params.seed.wrapping_add(1));
    let mut out: Vec<(G::Elem, G::Elem)> = (0..params.samples)
        .map(|_| {
            let u = halton.next_point();
            (g.sample_n(&u[..nd], bx), g.h_from_chart(&g.h_box(bx).lerp(&u[nd..])))
        })
        .collect();
    for e in g.structured_elems(bx) {
        out.push((g.identity(), g.project_h(&e)));
    }
    out
}

/// Candidates biased toward the fiber axis (shrunken base charts), where
/// small-opening cones have mass.
fn near_axis_candidates<G: SplitGroup>(
    g: &Arc<G>,
    bx: &crate::sampling::SampleBox,
    params: &SuiteParams,
) -> Vec<G::Elem> {
    if let Some(all) = g.enumerate() {
        return all;
    }
    let nd = g.n_dim().max(1);
    let hd = g.h_dim().max(1);
    let count = params.samples.min(10_000);
    let mut halton = Halton::new(nd + hd + 1, params.seed.wrapping_add(5));
    (0..count)
        .map(|_| {
            let u = halton.next_point();
            let shrink = u[nd + hd] * u[nd + hd];
            let mut n_chart = g.n_box(bx).lerp(&u[..nd]);
            n_chart.iter_mut().for_each(|v| *v *= shrink);
            let n = g.n_from_chart(&n_chart);
            let h = g.h_from_chart(&g.h_box(bx).lerp(&u[nd..nd + hd]));
            g.mul(&n, &h)
        })
        .collect()
}
