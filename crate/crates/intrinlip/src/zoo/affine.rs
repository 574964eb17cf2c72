//! The affine group of the line, `{b + a·x : a > 0}`.
//!
//! Elements `(b, a)` with `a > 0`, product `(b,a)·(b',a') = (b + a b', a a')`
//! and identity `(0, 1)`. The distance is the hyperbolic metric of the upper
//! half-plane under `(b, a) ↔ b + i a`:
//!
//! ```text
//! d((b₁,a₁), (b₂,a₂)) = arccosh(1 + ((b₁−b₂)² + (a₁−a₂)²) / (2 a₁ a₂))
//! ```
//!
//! which is exactly left-invariant because left translation acts as
//! `z ↦ a₀ z + b₀`, an isometry of the half-plane. Translations
//! `N = {(b, 1)}` are normal; dilations `H = {(0, e^s)}` form a geodesic
//! axis with `d(1, (0, e^s)) = |s|`. Charts use `(b, s = ln a)`, so sample
//! boxes automatically respect `a > 0`.

use crate::group::{MetricGroup, NormalSide, SplitGroup};
use crate::sampling::SampleBox;

/// Element of the affine group: `x ↦ b + a·x`, stored as `(b, a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffinePt {
    pub b: f64,
    pub a: f64,
}

fn hyperbolic_dist(p: &AffinePt, q: &AffinePt) -> f64 {
    let db = p.b - q.b;
    let da = p.a - q.a;
    let arg = 1.0 + (db * db + da * da) / (2.0 * p.a * q.a);
    arg.max(1.0).acosh()
}

#[derive(Debug, Default)]
pub struct Affine;

impl Affine {
    pub fn new() -> Self {
        Affine
    }
}

impl MetricGroup for Affine {
    type Elem = AffinePt;

    fn identity(&self) -> AffinePt {
        AffinePt { b: 0.0, a: 1.0 }
    }

    fn mul(&self, p: &AffinePt, q: &AffinePt) -> AffinePt {
        AffinePt { b: p.b + p.a * q.b, a: p.a * q.a }
    }

    fn inverse(&self, p: &AffinePt) -> AffinePt {
        AffinePt { b: -p.b / p.a, a: 1.0 / p.a }
    }

    fn dist(&self, p: &AffinePt, q: &AffinePt) -> f64 {
        hyperbolic_dist(p, q)
    }

    fn name(&self) -> String {
        "affine".into()
    }

    fn elem_residual(&self, p: &AffinePt, q: &AffinePt) -> f64 {
        (p.b - q.b).abs().max((p.a.ln() - q.a.ln()).abs())
    }
}

impl SplitGroup for Affine {
    fn normal_side(&self) -> NormalSide {
        NormalSide::N
    }

    fn project_n(&self, g: &AffinePt) -> AffinePt {
        AffinePt { b: g.b, a: 1.0 }
    }

    fn project_h(&self, g: &AffinePt) -> AffinePt {
        AffinePt { b: 0.0, a: g.a }
    }

    fn group_dim(&self) -> usize {
        2
    }

    fn n_dim(&self) -> usize {
        1
    }

    fn h_dim(&self) -> usize {
        1
    }

    fn elem_chart(&self, g: &AffinePt) -> Vec<f64> {
        vec![g.b, g.a.ln()]
    }

    fn elem_from_chart(&self, c: &[f64]) -> AffinePt {
        AffinePt { b: c[0], a: c[1].exp() }
    }

    fn n_chart(&self, n: &AffinePt) -> Vec<f64> {
        vec![n.b]
    }

    fn n_from_chart(&self, c: &[f64]) -> AffinePt {
        AffinePt { b: c[0], a: 1.0 }
    }

    fn h_chart(&self, h: &AffinePt) -> Vec<f64> {
        vec![h.a.ln()]
    }

    fn h_from_chart(&self, c: &[f64]) -> AffinePt {
        AffinePt { b: 0.0, a: c[0].exp() }
    }

    fn n_box(&self, group_box: &SampleBox) -> SampleBox {
        group_box.slice(0..1)
    }

    fn h_box(&self, group_box: &SampleBox) -> SampleBox {
        group_box.slice(1..2)
    }

    fn structured_elems(&self, bx: &SampleBox) -> Vec<AffinePt> {
        let s = bx
            .dims
            .iter()
            .map(|(lo, hi)| lo.abs().max(hi.abs()))
            .fold(f64::INFINITY, f64::min)
            * 0.5;
        vec![
            AffinePt { b: s, a: 1.0 },
            AffinePt { b: 0.0, a: s.exp() },
            AffinePt { b: 0.0, a: (-s).exp() },
            AffinePt { b: s, a: s.exp() },
        ]
    }

    fn axis_point(&self, t: f64) -> Option<AffinePt> {
        Some(AffinePt { b: 0.0, a: t.exp() })
    }

    fn axis_param(&self, h: &AffinePt) -> Option<f64> {
        Some(h.a.ln())
    }
}

/// The affine group with the roles of the factors exchanged: base `N` = the
/// dilations, fiber `H` = the translations (the normal factor). The unique
/// decomposition `(b, a) = (0, a)·(b/a, 1)` makes `π_N` a homomorphism.
#[derive(Debug, Default)]
pub struct AffineSwapped {
    inner: Affine,
}

impl AffineSwapped {
    pub fn new() -> Self {
        AffineSwapped { inner: Affine }
    }
}

impl MetricGroup for AffineSwapped {
    type Elem = AffinePt;

    fn identity(&self) -> AffinePt {
        self.inner.identity()
    }

    fn mul(&self, p: &AffinePt, q: &AffinePt) -> AffinePt {
        self.inner.mul(p, q)
    }

    fn inverse(&self, p: &AffinePt) -> AffinePt {
        self.inner.inverse(p)
    }

    fn dist(&self, p: &AffinePt, q: &AffinePt) -> f64 {
        self.inner.dist(p, q)
    }

    fn name(&self) -> String {
        "affine-swapped".into()
    }

    fn elem_residual(&self, p: &AffinePt, q: &AffinePt) -> f64 {
        self.inner.elem_residual(p, q)
    }
}

impl SplitGroup for AffineSwapped {
    fn normal_side(&self) -> NormalSide {
        NormalSide::H
    }

    fn project_n(&self, g: &AffinePt) -> AffinePt {
        AffinePt { b: 0.0, a: g.a }
    }

    fn project_h(&self, g: &AffinePt) -> AffinePt {
        AffinePt { b: g.b / g.a, a: 1.0 }
    }

    fn group_dim(&self) -> usize {
        2
    }

    fn n_dim(&self) -> usize {
        1
    }

    fn h_dim(&self) -> usize {
        1
    }

    fn elem_chart(&self, g: &AffinePt) -> Vec<f64> {
        self.inner.elem_chart(g)
    }

    fn elem_from_chart(&self, c: &[f64]) -> AffinePt {
        self.inner.elem_from_chart(c)
    }

    fn n_chart(&self, n: &AffinePt) -> Vec<f64> {
        vec![n.a.ln()]
    }

    fn n_from_chart(&self, c: &[f64]) -> AffinePt {
        AffinePt { b: 0.0, a: c[0].exp() }
    }

    fn h_chart(&self, h: &AffinePt) -> Vec<f64> {
        vec![h.b]
    }

    fn h_from_chart(&self, c: &[f64]) -> AffinePt {
        AffinePt { b: c[0], a: 1.0 }
    }

    fn n_box(&self, group_box: &SampleBox) -> SampleBox {
        group_box.slice(1..2)
    }

    fn h_box(&self, group_box: &SampleBox) -> SampleBox {
        group_box.slice(0..1)
    }

    // No axis: translations are horocyclic, not geodesic, in this metric.
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol::Tolerances;
    use crate::SplitGroup;

    #[test]
    fn unit_speed_dilations() {
        let g = Affine::new();
        // d((0,1),(0,e)) = arccosh(cosh 1) = 1.
        let e = AffinePt { b: 0.0, a: std::f64::consts::E };
        assert!((g.dist(&g.identity(), &e) - 1.0).abs() < 1e-12);
        for t in [-1.7, 0.4, 2.0] {
            let h = g.axis_point(t).unwrap();
            assert!((g.norm(&h) - t.abs()).abs() < 1e-12);
        }
    }

    #[test]
    fn translations_are_normal() {
        let g = Affine::new();
        let tol = Tolerances::default();
        let p = AffinePt { b: 0.7, a: 2.5 };
        let n = AffinePt { b: -1.2, a: 1.0 };
        assert!(g.in_n(&g.conjugate(&p, &n), &tol));
    }

    #[test]
    fn swapped_projection_recomposes() {
        let g = AffineSwapped::new();
        let x = AffinePt { b: 1.4, a: 0.6 };
        let n = g.project_n(&x);
        let h = g.project_h(&x);
        assert!(g.elem_residual(&g.mul(&n, &h), &x) < 1e-12);
        // π_N is a homomorphism when the fiber is normal.
        let y = AffinePt { b: -0.3, a: 3.0 };
        let lhs = g.project_n(&g.mul(&x, &y));
        let rhs = g.mul(&g.project_n(&x), &g.project_n(&y));
        assert!(g.elem_residual(&lhs, &rhs) < 1e-12);
    }
}
