//! Core splitting contract: left-invariance, projection homomorphisms,
//! unique decomposition, trivial intersection, and the five splitting
//! constants with their relational bounds.

use super::{elem_pairs, elem_triples, elems, resolve_box, SuiteParams};
use crate::group::{decompose, estimate_splitting_constants, SplitGroup};
use crate::report::CheckRecord;
use crate::Result;
use std::sync::Arc;

pub fn run<G: SplitGroup>(g: &Arc<G>, params: &SuiteParams) -> Result<Vec<CheckRecord>> {
    let bx = resolve_box(g, params)?;
    let tol = &params.tols;
    let mut records = Vec::new();

    let mut rec = CheckRecord::new("left-invariance", "|d(p*g, p*q) - d(g, q)| <= tau_metric");
    for (p, a, b) in elem_triples(g, &bx, params.samples, params.seed, params.exhaustive) {
        let lhs = g.dist(&g.mul(&p, &a), &g.mul(&p, &b));
        rec.tally((lhs - g.dist(&a, &b)).abs() - tol.metric);
    }
    records.push(rec);

    let pairs = elem_pairs(g, &bx, params.samples, params.seed.wrapping_add(1), params.exhaustive);
    let side = g.normal_side();
    if side.n_is_normal() {
        let mut rec =
            CheckRecord::new("fiber-projection-homomorphism", "pi_H(g*g') == pi_H(g)*pi_H(g')");
        for (a, b) in &pairs {
            let lhs = g.project_h(&g.mul(a, b));
            let rhs = g.mul(&g.project_h(a), &g.project_h(b));
            rec.tally(g.elem_residual(&lhs, &rhs) - tol.exact);
        }
        records.push(rec);
    }
    if side.h_is_normal() {
        let mut rec =
            CheckRecord::new("base-projection-homomorphism", "pi_N(g*g') == pi_N(g)*pi_N(g')");
        for (a, b) in &pairs {
            let lhs = g.project_n(&g.mul(a, b));
            let rhs = g.mul(&g.project_n(a), &g.project_n(b));
            rec.tally(g.elem_residual(&lhs, &rhs) - tol.exact);
        }
        records.push(rec);
    }

    let singles = elems(g, &bx, params.samples, params.seed.wrapping_add(2), params.exhaustive);
    let mut rec = CheckRecord::new("decompose-recompose", "pi_N(g)*pi_H(g) == g");
    let mut trivial = CheckRecord::new("trivial-intersection", "g in N and g in H => g == 1");
    let one = g.identity();
    for x in &singles {
        match decompose(g, x, tol) {
            Ok((n, h)) => {
                rec.tally(g.elem_residual(&g.mul(&n, &h), x) - tol.exact);
                // Projections land in their subgroups.
                rec.tally(if g.in_n(&n, tol) && g.in_h(&h, tol) { -1.0 } else { 1.0 });
            }
            Err(_) => rec.require(false),
        }
        if g.in_n(x, tol) && g.in_h(x, tol) {
            trivial.tally(g.elem_residual(x, &one) - tol.exact);
        } else {
            trivial.skip(1);
        }
    }
    records.push(rec);
    records.push(trivial);

    let constants = estimate_splitting_constants(
        g,
        &bx,
        params.samples,
        params.seed.wrapping_add(3),
        params.exhaustive,
        tol,
        &params.search,
    )?;
    let mut rec = CheckRecord::new(
        "splitting-constants",
        "C1..C5 finite; C3 <= C2 and C4 <= C2 on the same sample",
    );
    rec.constant("c1", constants.c1)
        .constant("c2", constants.c2)
        .constant("c3", constants.c3)
        .constant("c4", constants.c4)
        .constant("c5", constants.c5);
    rec.skip(constants.skipped as u64);
    for c in constants.as_array() {
        rec.require(c.is_finite());
    }
    rec.tally(constants.c3 - constants.c2);
    rec.tally(constants.c4 - constants.c2);
    records.push(rec);

    Ok(records)
}
