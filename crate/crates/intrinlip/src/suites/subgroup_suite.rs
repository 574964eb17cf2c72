//! Subgroup graphs: closure of shipped examples with a negative control,
//! the full identity families for products of graph points (both normal
//! sides where applicable), the unique base solution of `π_N(h·m) = n`, and
//! the power-premise Lipschitz corollary.

use super::{base_pairs, base_points, resolve_box, subgroup_roster, SuiteParams};
use crate::graphs::{Domain, IntrinsicMap};
use crate::group::SplitGroup;
use crate::report::CheckRecord;
use crate::sampling::Halton;
use crate::subgroup::{identity_residuals, power_bound_check, subgroup_closure_check};
use crate::tol::Tolerances;
use crate::Result;
use std::sync::Arc;

pub fn run<G: SplitGroup>(g: &Arc<G>, params: &SuiteParams) -> Result<Vec<CheckRecord>> {
    let bx = resolve_box(g, params)?;
    let tol = &params.tols;
    let mut records = Vec::new();

    let maps = subgroup_roster(g, &bx)?;
    let mut closure = CheckRecord::new(
        "closure",
        "Phi(n)*Phi(m) and Phi(n)^-1 stay on graph(phi)",
    );
    let mut identities = CheckRecord::new(
        "identity-residuals",
        "components of graph-point products expressed through phi and conjugation",
    );

    for phi in &maps {
        let pairs = pair_sample(phi, params);
        let out = subgroup_closure_check(phi, &pairs, tol)?;
        closure.tally(out.residual - tol.exact);
        closure.constant(format!("residual[{}]", phi.descriptor()), out.residual);

        let report = identity_residuals(phi, &pairs, tol)?;
        for (id, residual) in &report.residuals {
            identities.tally(residual - tol.exact);
            identities.constant(format!("{id}[{}]", phi.descriptor()), *residual);
        }
    }
    records.push(closure);
    records.push(identities);

    // Negative control: a non-homomorphic map must be caught.
    let mut control = CheckRecord::new(
        "closure-detects-nonsubgroup",
        "a non-subgroup graph yields a closure witness",
    );
    let bad = nonsubgroup_example(g, &bx);
    let pairs = pair_sample(&bad, params);
    let out = subgroup_closure_check(&bad, &pairs, tol)?;
    control.require(!out.closed && out.witness.is_some());
    records.push(control);

    if g.normal_side().n_is_normal() {
        let mut rec = CheckRecord::new(
            "unique-base-solution",
            "pi_N(h * pi_N(h^-1 n)) == n",
        );
        let ns = base_points(g, &bx, params.samples, params.seed.wrapping_add(31), params.exhaustive);
        let hs = fiber_points(g, &bx, params);
        for (i, n) in ns.iter().enumerate() {
            let h = &hs[i % hs.len()];
            let m = g.project_n(&g.mul(&g.inverse(h), n));
            rec.tally(g.elem_residual(&g.project_n(&g.mul(h, &m)), n) - tol.exact);
        }
        records.push(rec);
    }

    records.push(power_bound_records(g, &bx, params, &maps)?);

    Ok(records)
}

fn pair_sample<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    params: &SuiteParams,
) -> Vec<(G::Elem, G::Elem)> {
    if let Some(dom) = phi.enumerate_domain() {
        let mut pairs = Vec::new();
        for a in &dom {
            for b in &dom {
                pairs.push((a.clone(), b.clone()));
            }
        }
        return pairs;
    }
    let count = params.samples.clamp(100, 20_000);
    let a = phi.domain_points(count, params.seed.wrapping_add(32));
    let b = phi.domain_points(count, params.seed.wrapping_add(33));
    a.into_iter().zip(b).collect()
}

/// A map whose graph is certain not to be a subgroup: quadratic in the first
/// base-chart coordinate on real charts, the nontrivial constant on finite
/// fibers.
fn nonsubgroup_example<G: SplitGroup>(
    g: &Arc<G>,
    bx: &crate::sampling::SampleBox,
) -> IntrinsicMap<G> {
    if g.enumerate().is_some() {
        return IntrinsicMap::constant(
            Arc::clone(g),
            g.h_from_chart(&vec![1.0; g.h_dim()]),
            g.n_box(bx),
            "const:1",
        );
    }
    let group = Arc::clone(g);
    let hd = g.h_dim();
    IntrinsicMap::custom(
        Arc::clone(g),
        move |n| {
            let q = group.n_chart(n)[0];
            group.h_from_chart(&vec![q * q + 0.5; hd])
        },
        Domain::All,
        g.n_box(bx),
        "custom:quadratic",
    )
}

fn fiber_points<G: SplitGroup>(
    g: &Arc<G>,
    bx: &crate::sampling::SampleBox,
    params: &SuiteParams,
) -> Vec<G::Elem> {
    if let Some(all) = g.enumerate_h() {
        return all;
    }
    let hd = g.h_dim().max(1);
    let mut halton = Halton::new(hd, params.seed.wrapping_add(34));
    (0..64).map(|_| g.h_from_chart(&g.h_box(bx).lerp(&halton.next_point()))).collect()
}

fn power_bound_records<G: SplitGroup>(
    g: &Arc<G>,
    bx: &crate::sampling::SampleBox,
    params: &SuiteParams,
    maps: &[IntrinsicMap<G>],
) -> Result<CheckRecord> {
    let tol = &params.tols;
    let mut rec = CheckRecord::new(
        "power-bound",
        "d(1, phi(n)) <= C*d(1, n^k) on the sample => intrinsic constant <= C*k",
    );
    let one = g.identity();
    for phi in maps {
        let bases = phi.domain_points(params.samples.min(2_000), params.seed.wrapping_add(35));
        let pairs = pair_sample(phi, params);
        // Smallest premise constant supported by the sample, for k = 1.
        let mut c = 0.0f64;
        let mut any = false;
        for n in &bases {
            let Ok(v) = phi.eval(n) else { continue };
            let den = g.dist(&one, n);
            if den > tol.exact {
                c = c.max(g.dist(&one, &v) / den);
                any = true;
            }
        }
        if !any {
            rec.skip(1);
            continue;
        }
        match power_bound_check(phi, c + tol.exact, 1, &bases, &pairs, tol) {
            Ok(ok) => rec.require(ok),
            Err(e) => return Err(e),
        }
        rec.constant(format!("premise_c[{}]", phi.descriptor()), c);
        // Identity-valued constants satisfy the premise with C = 0, any k.
        if phi.descriptor().starts_with("const") && c <= tol.exact {
            rec.require(power_bound_check(phi, 0.0, 2, &bases, &pairs, tol)?);
        }
    }
    Ok(rec)
}

/// Identity families on a fiber-normal companion splitting, including the
/// two-point reflection graph `{1, s·r^k}`.
pub(super) fn swapped_identity_records<G: SplitGroup>(
    g: &Arc<G>,
    params: &SuiteParams,
) -> Result<Vec<CheckRecord>> {
    let bx = resolve_box(g, params)?;
    let tol = Tolerances::default();
    let mut rec = CheckRecord::new(
        "identity-residuals-fiber-normal",
        "fiber-normal identity family on reflection graphs",
    );
    let mut maps = Vec::new();
    if let Ok(m) = crate::graphs::parse_map_spec(g, "const:0", &bx) {
        maps.push(m);
    }
    if let Some(h_elems) = g.enumerate_h() {
        if h_elems.len() >= 2 {
            // phi(1) = 1, phi(s) = r: the graph {1, s*r} is a subgroup.
            if let Ok(m) = IntrinsicMap::table(
                Arc::clone(g),
                vec![vec![0.0], vec![1.0]],
                vec![g.h_from_chart(&[0.0]), g.h_from_chart(&[1.0])],
                true,
                "table:reflection",
            ) {
                maps.push(m);
            }
        }
    }
    for phi in &maps {
        let pairs = pair_sample(phi, params);
        let report = identity_residuals(phi, &pairs, &tol)?;
        for (id, residual) in &report.residuals {
            rec.tally(residual - tol.exact);
            rec.constant(format!("{id}[{}]", phi.descriptor()), *residual);
        }
    }
    Ok(vec![rec])
}
