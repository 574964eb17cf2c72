//! Graphs that are subgroups: closure testing and the exact identity
//! families relating `Φ`-products to `φ`-values.
//!
//! When `Γ_φ` is closed under the group operation, both components of any
//! product of graph points are themselves expressible through `φ` and
//! conjugations. Which identities apply depends on the normal side; ids
//! `N1..N5, Na..Nd` assume the base is normal, `H1..H4, Ha..Hd` the fiber.
//! On a direct product both families apply. All residuals are coordinate
//! residuals, exact (0/1) on finite groups.

use crate::graphs::IntrinsicMap;
use crate::group::SplitGroup;
use crate::lipschitz::fssc_constant;
use crate::tol::{tau_sample, Tolerances};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;

/// Outcome of a closure scan of the graph.
#[derive(Debug, Clone)]
pub struct ClosureOutcome<E> {
    pub closed: bool,
    /// Worst residual between `π_H` of a product and `φ(π_N)` of it.
    pub residual: f64,
    /// A pair whose product (or an element whose inverse) left the graph.
    pub witness: Option<E>,
    pub pairs: usize,
}

/// Test whether `Φ(n)·Φ(m)` and `Φ(n)⁻¹` stay on the graph for sampled
/// pairs: the product's base projection must lie in the domain and its fiber
/// projection must equal `φ` there.
pub fn subgroup_closure_check<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    pairs: &[(G::Elem, G::Elem)],
    tol: &Tolerances,
) -> Result<ClosureOutcome<G::Elem>> {
    let g = phi.group();
    let mut worst = 0.0f64;
    let mut witness = None;
    let mut count = 0;
    let mut check = |point: &G::Elem, origin: &G::Elem, worst: &mut f64, witness: &mut Option<G::Elem>| {
        let n = g.project_n(point);
        match phi.eval(&n) {
            Ok(value) => {
                let r = g.elem_residual(&g.project_h(point), &value);
                if r > *worst {
                    *worst = r;
                    if r > tol.exact {
                        *witness = Some(origin.clone());
                    }
                }
            }
            Err(Error::OutsideDomain) => {
                *worst = f64::INFINITY;
                *witness = Some(origin.clone());
            }
            Err(_) => {
                *worst = f64::INFINITY;
                *witness = Some(origin.clone());
            }
        }
    };
    for (a, b) in pairs {
        let (xa, xb) = match (phi.graph_point(a), phi.graph_point(b)) {
            (Ok(xa), Ok(xb)) => (xa, xb),
            _ => continue,
        };
        count += 1;
        check(&g.mul(&xa.point, &xb.point), a, &mut worst, &mut witness);
        check(&g.inverse(&xa.point), a, &mut worst, &mut witness);
    }
    Ok(ClosureOutcome { closed: worst <= tol.exact, residual: worst, witness, pairs: count })
}

/// Per-identity maximal residuals over a pair sample.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityResidualReport {
    pub residuals: BTreeMap<String, f64>,
    pub closure_residual: f64,
    pub pairs: usize,
}

impl IdentityResidualReport {
    pub fn worst(&self) -> f64 {
        self.residuals.values().cloned().fold(0.0, f64::max)
    }
}

/// Evaluate both sides of every identity applicable to the splitting's
/// normal side; requires the closure check to pass on the same sample.
pub fn identity_residuals<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    pairs: &[(G::Elem, G::Elem)],
    tol: &Tolerances,
) -> Result<IdentityResidualReport> {
    let closure = subgroup_closure_check(phi, pairs, tol)?;
    if !closure.closed {
        return Err(Error::NotASubgroup { residual: closure.residual });
    }
    let g = phi.group();
    let side = g.normal_side();
    let mut residuals: BTreeMap<String, f64> = BTreeMap::new();
    let mut bump = |key: &str, value: f64| {
        let slot = residuals.entry(key.to_string()).or_insert(0.0);
        if value > *slot {
            *slot = value;
        }
    };

    let mut count = 0;
    for (n, m) in pairs {
        let (gn, gm) = match (phi.graph_point(n), phi.graph_point(m)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        count += 1;
        let (pn, pm) = (&gn.point, &gm.point);
        let (fn_, fm) = (&gn.value, &gm.value);
        let inv = |x: &G::Elem| g.inverse(x);
        let mul = |a: &G::Elem, b: &G::Elem| g.mul(a, b);

        if side.n_is_normal() {
            // Products of graph points, written through base conjugations.
            let c1 = mul(&g.conjugate(&inv(fn_), &mul(&inv(n), m)), &mul(&inv(fn_), fm));
            bump("N1", g.elem_residual(&mul(&inv(pn), pm), &c1));

            let c2 = mul(
                &mul(n, &g.conjugate(&mul(fn_, &inv(fm)), &inv(m))),
                &mul(fn_, &inv(fm)),
            );
            bump("N2", g.elem_residual(&mul(pn, &inv(pm)), &c2));

            let c3 = mul(&mul(n, &g.conjugate(fn_, m)), &mul(fn_, fm));
            bump("N3", g.elem_residual(&mul(pn, pm), &c3));

            let c4 = mul(
                &mul(
                    &g.conjugate(&inv(fm), &inv(m)),
                    &g.conjugate(&inv(&mul(fn_, fm)), &inv(n)),
                ),
                &inv(&mul(fn_, fm)),
            );
            bump("N4", g.elem_residual(&inv(&mul(pn, pm)), &c4));

            // The same component equations expressed through φ alone.
            bump(
                "N5",
                g.elem_residual(
                    &phi_of(phi, &mul(n, m))?,
                    &mul(fn_, &phi_of(phi, &g.conjugate(&inv(fn_), m))?),
                ),
            );
            bump(
                "Na",
                g.elem_residual(
                    &phi_of(phi, &g.conjugate(&inv(fn_), &mul(&inv(n), m)))?,
                    &mul(&inv(fn_), fm),
                ),
            );
            bump(
                "Nb",
                g.elem_residual(
                    &phi_of(phi, &mul(n, &g.conjugate(&mul(fn_, &inv(fm)), &inv(m))))?,
                    &mul(fn_, &inv(fm)),
                ),
            );
            bump(
                "Nc",
                g.elem_residual(&phi_of(phi, &mul(n, &g.conjugate(fn_, m)))?, &mul(fn_, fm)),
            );
            bump(
                "Nd",
                g.elem_residual(
                    &phi_of(
                        phi,
                        &mul(
                            &g.conjugate(&inv(fm), &inv(m)),
                            &g.conjugate(&inv(&mul(fn_, fm)), &inv(n)),
                        ),
                    )?,
                    &inv(&mul(fn_, fm)),
                ),
            );
        }

        if side.h_is_normal() {
            let c1 = mul(
                &mul(&inv(n), m),
                &mul(&g.conjugate(&mul(&inv(m), n), &inv(fn_)), fm),
            );
            bump("H1", g.elem_residual(&mul(&inv(pn), pm), &c1));

            let c2 = mul(&mul(n, &inv(m)), &g.conjugate(m, &mul(fn_, &inv(fm))));
            bump("H2", g.elem_residual(&mul(pn, &inv(pm)), &c2));

            let c3 = mul(&mul(n, m), &mul(&g.conjugate(&inv(m), fn_), fm));
            bump("H3", g.elem_residual(&mul(pn, pm), &c3));

            let c4 = mul(
                &inv(&mul(n, m)),
                &mul(&g.conjugate(&mul(n, m), &inv(fm)), &g.conjugate(n, &inv(fn_))),
            );
            bump("H4", g.elem_residual(&inv(&mul(pn, pm)), &c4));

            bump(
                "Ha",
                g.elem_residual(
                    &phi_of(phi, &mul(&inv(n), m))?,
                    &mul(&g.conjugate(&mul(&inv(m), n), &inv(fn_)), fm),
                ),
            );
            bump(
                "Hb",
                g.elem_residual(
                    &phi_of(phi, &mul(n, &inv(m)))?,
                    &g.conjugate(m, &mul(fn_, &inv(fm))),
                ),
            );
            bump(
                "Hc",
                g.elem_residual(
                    &phi_of(phi, &mul(n, m))?,
                    &mul(&g.conjugate(&inv(m), fn_), fm),
                ),
            );
            bump(
                "Hd",
                g.elem_residual(
                    &phi_of(phi, &inv(&mul(n, m)))?,
                    &mul(&g.conjugate(&mul(n, m), &inv(fm)), &g.conjugate(n, &inv(fn_))),
                ),
            );
        }
    }

    Ok(IdentityResidualReport {
        residuals,
        closure_residual: closure.residual,
        pairs: count,
    })
}

fn phi_of<G: SplitGroup>(phi: &IntrinsicMap<G>, n: &G::Elem) -> Result<G::Elem> {
    match phi.eval(n) {
        Ok(v) => Ok(v),
        Err(Error::OutsideDomain) => Err(Error::NotASubgroup { residual: f64::INFINITY }),
        Err(e) => Err(e),
    }
}

/// Verify `d(1, φ(n)) ≤ C·d(1, nᵏ)` on the sampled base points, then check
/// that the sampled intrinsic constant stays below `C·k`.
pub fn power_bound_check<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    c: f64,
    k: u32,
    bases: &[G::Elem],
    pairs: &[(G::Elem, G::Elem)],
    tol: &Tolerances,
) -> Result<bool> {
    let g = phi.group();
    let one = g.identity();
    for n in bases {
        let value = match phi.eval(n) {
            Ok(v) => v,
            Err(Error::OutsideDomain) => continue,
            Err(e) => return Err(e),
        };
        let mut power = one.clone();
        for _ in 0..k {
            power = g.mul(&power, n);
        }
        let lhs = g.dist(&one, &value);
        let rhs = c * g.dist(&one, &power);
        if lhs > rhs + tol.exact {
            return Err(Error::PremiseFailed {
                witness: format!("d(1,phi(n)) = {lhs} > C d(1,n^k) = {rhs} at {n:?}"),
            });
        }
    }
    let est = fssc_constant(phi, pairs, tol)?;
    Ok(est.value <= c * k as f64 + tau_sample(est.value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{Halton, SampleBox};
    use crate::zoo::{AbelianPlane, Dihedral, DihedralElem, Heisenberg};
    use crate::graphs::Domain;
    use crate::MetricGroup;
    use std::sync::Arc;

    fn abelian_pairs(n: usize) -> Vec<(Vec<f64>, Vec<f64>)> {
        let mut h = Halton::new(2, 21);
        (0..n)
            .map(|_| {
                let u = h.next_point();
                (vec![2.0 * u[0] - 1.0, 0.0], vec![2.0 * u[1] - 1.0, 0.0])
            })
            .collect()
    }

    #[test]
    fn linear_graphs_are_closed_quadratic_are_not() {
        let g = Arc::new(AbelianPlane::new(1, 1).unwrap());
        let tol = Tolerances::default();
        let pairs = abelian_pairs(100);
        let lin = IntrinsicMap::linear(Arc::clone(&g), 2.0, SampleBox::unit(1));
        let out = subgroup_closure_check(&lin, &pairs, &tol).unwrap();
        assert!(out.closed && out.residual <= 1e-12);

        let quad = IntrinsicMap::custom(
            Arc::clone(&g),
            |n: &Vec<f64>| vec![0.0, n[0] * n[0]],
            Domain::All,
            SampleBox::unit(1),
            "x^2",
        );
        let out = subgroup_closure_check(&quad, &pairs, &tol).unwrap();
        assert!(!out.closed);
        assert!(out.witness.is_some());
    }

    #[test]
    fn abelian_identities_vanish_both_families() {
        let g = Arc::new(AbelianPlane::new(1, 1).unwrap());
        let tol = Tolerances::default();
        let lin = IntrinsicMap::linear(Arc::clone(&g), 0.5, SampleBox::unit(1));
        let report = identity_residuals(&lin, &abelian_pairs(100), &tol).unwrap();
        assert_eq!(report.residuals.len(), 17, "N and H families both apply");
        assert!(report.worst() <= 1e-12, "worst {}", report.worst());
    }

    #[test]
    fn dihedral_partial_subgroup_identities_exact() {
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
        let report = identity_residuals(&phi, &pairs, &tol).unwrap();
        assert_eq!(report.worst(), 0.0);
    }

    #[test]
    fn heisenberg_identity_map_collapses() {
        let g = Arc::new(Heisenberg::new());
        let tol = Tolerances::default();
        let phi =
            IntrinsicMap::constant(Arc::clone(&g), g.identity(), SampleBox::unit(2), "const:0");
        let mut h = Halton::new(4, 3);
        let pairs: Vec<_> = (0..200)
            .map(|_| {
                let u = h.next_point();
                (
                    g.n_from_chart(&[2.0 * u[0] - 1.0, 2.0 * u[1] - 1.0]),
                    g.n_from_chart(&[2.0 * u[2] - 1.0, 2.0 * u[3] - 1.0]),
                )
            })
            .collect();
        let report = identity_residuals(&phi, &pairs, &tol).unwrap();
        assert!(report.worst() <= 1e-12);
    }

    #[test]
    fn nonsubgroup_is_rejected() {
        let g = Arc::new(AbelianPlane::new(1, 1).unwrap());
        let tol = Tolerances::default();
        let quad = IntrinsicMap::custom(
            Arc::clone(&g),
            |n: &Vec<f64>| vec![0.0, n[0] * n[0]],
            Domain::All,
            SampleBox::unit(1),
            "x^2",
        );
        assert!(matches!(
            identity_residuals(&quad, &abelian_pairs(50), &tol),
            Err(Error::NotASubgroup { .. })
        ));
    }

    #[test]
    fn power_bound_examples() {
        let g = Arc::new(AbelianPlane::new(1, 1).unwrap());
        let tol = Tolerances::default();
        let pairs = abelian_pairs(100);
        let bases: Vec<_> = pairs.iter().map(|p| p.0.clone()).collect();
        let lam = 1.5;
        let lin = IntrinsicMap::linear(Arc::clone(&g), lam, SampleBox::unit(1));
        assert!(power_bound_check(&lin, lam, 1, &bases, &pairs, &tol).unwrap());
        let konst =
            IntrinsicMap::constant(Arc::clone(&g), g.identity(), SampleBox::unit(1), "const:0");
        assert!(power_bound_check(&konst, 0.0, 2, &bases, &pairs, &tol).unwrap());
        // Premise failure carries a witness.
        assert!(matches!(
            power_bound_check(&lin, lam * 0.4, 1, &bases, &pairs, &tol),
            Err(Error::PremiseFailed { .. })
        ));
    }
}
