//! The first Heisenberg group.
//!
//! Coordinates `(x, y, t)` with product
//! `(x,y,t)·(x',y',t') = (x+x', y+y', t+t'+½(xy'−yx'))` and the homogeneous
//! gauge `‖(x,y,t)‖ = ((x²+y²)² + t²)^{1/4}`, `d(g,p) = ‖g⁻¹p‖`. The gauge
//! is symmetric under inversion and scales like the anisotropic dilation
//! `(x,y,t) ↦ (cx, cy, c²t)`; the sampled triangle-inequality suite tracks
//! whether it behaves as a metric on the box and downgrades the label to
//! quasi-metric if it finds violations, rather than hiding the defect.
//!
//! Splitting: `N = {(0,y,t)}` (normal, the vertical plane), `H = {(x,0,0)}`
//! (the horizontal axis, geodesic since `d(1,(x,0,0)) = |x|`). For
//! `g = (x,y,t)` the unique factors are `π_N(g) = (0, y, t + xy/2)` and
//! `π_H(g) = (x, 0, 0)`.

use crate::group::{MetricGroup, NormalSide, SplitGroup};
use crate::sampling::SampleBox;

#[derive(Debug, Default)]
pub struct Heisenberg;

impl Heisenberg {
    pub fn new() -> Self {
        Heisenberg
    }

    pub fn gauge(&self, g: &[f64; 3]) -> f64 {
        let r2 = g[0] * g[0] + g[1] * g[1];
        (r2 * r2 + g[2] * g[2]).sqrt().sqrt()
    }
}

impl MetricGroup for Heisenberg {
    type Elem = [f64; 3];

    fn identity(&self) -> [f64; 3] {
        [0.0; 3]
    }

    fn mul(&self, a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
        [
            a[0] + b[0],
            a[1] + b[1],
            a[2] + b[2] + 0.5 * (a[0] * b[1] - a[1] * b[0]),
        ]
    }

    fn inverse(&self, a: &[f64; 3]) -> [f64; 3] {
        [-a[0], -a[1], -a[2]]
    }

    fn dist(&self, a: &[f64; 3], b: &[f64; 3]) -> f64 {
        self.gauge(&self.mul(&self.inverse(a), b))
    }

    fn name(&self) -> String {
        "heisenberg".into()
    }

    fn elem_residual(&self, a: &[f64; 3], b: &[f64; 3]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }
}

impl SplitGroup for Heisenberg {
    fn normal_side(&self) -> NormalSide {
        NormalSide::N
    }

    fn project_n(&self, g: &[f64; 3]) -> [f64; 3] {
        [0.0, g[1], g[2] + 0.5 * g[0] * g[1]]
    }

    fn project_h(&self, g: &[f64; 3]) -> [f64; 3] {
        [g[0], 0.0, 0.0]
    }

    fn group_dim(&self) -> usize {
        3
    }

    fn n_dim(&self) -> usize {
        2
    }

    fn h_dim(&self) -> usize {
        1
    }

    fn elem_chart(&self, g: &[f64; 3]) -> Vec<f64> {
        g.to_vec()
    }

    fn elem_from_chart(&self, c: &[f64]) -> [f64; 3] {
        [c[0], c[1], c[2]]
    }

    fn n_chart(&self, n: &[f64; 3]) -> Vec<f64> {
        vec![n[1], n[2]]
    }

    fn n_from_chart(&self, c: &[f64]) -> [f64; 3] {
        [0.0, c[0], c[1]]
    }

    fn h_chart(&self, h: &[f64; 3]) -> Vec<f64> {
        vec![h[0]]
    }

    fn h_from_chart(&self, c: &[f64]) -> [f64; 3] {
        [c[0], 0.0, 0.0]
    }

    fn n_box(&self, group_box: &SampleBox) -> SampleBox {
        group_box.slice(1..3)
    }

    fn h_box(&self, group_box: &SampleBox) -> SampleBox {
        group_box.slice(0..1)
    }

    fn structured_elems(&self, bx: &SampleBox) -> Vec<[f64; 3]> {
        let s = bx
            .dims
            .iter()
            .map(|(lo, hi)| lo.abs().max(hi.abs()))
            .fold(f64::INFINITY, f64::min)
            * 0.5;
        vec![
            [s, 0.0, 0.0],
            [0.0, s, 0.0],
            [0.0, 0.0, s],
            [s, s, 0.0],
            [s, 0.0, s],
            [s, -s, 0.5 * s],
        ]
    }

    fn axis_point(&self, t: f64) -> Option<[f64; 3]> {
        Some([t, 0.0, 0.0])
    }

    fn axis_param(&self, h: &[f64; 3]) -> Option<f64> {
        Some(h[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::decompose;
    use crate::tol::Tolerances;

    #[test]
    fn gauge_values() {
        let g = Heisenberg::new();
        assert!((g.norm(&[1.0, 0.0, 0.0]) - 1.0).abs() < 1e-15);
        assert!((g.norm(&[0.0, 0.0, 1.0]) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn conjugation_example() {
        let g = Heisenberg::new();
        let c = g.conjugate(&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]);
        assert!(g.elem_residual(&c, &[0.0, 1.0, 1.0]) < 1e-15);
    }

    #[test]
    fn decompose_example() {
        let g = Heisenberg::new();
        let tol = Tolerances::default();
        let (n, h) = decompose(&g, &[1.0, 2.0, 3.0], &tol).unwrap();
        assert!(g.elem_residual(&n, &[0.0, 2.0, 4.0]) < 1e-15);
        assert!(g.elem_residual(&h, &[1.0, 0.0, 0.0]) < 1e-15);
        // Re-multiplication closes the loop.
        assert!(g.elem_residual(&g.mul(&n, &h), &[1.0, 2.0, 3.0]) < 1e-15);
    }

    #[test]
    fn vertical_plane_is_normal() {
        let g = Heisenberg::new();
        let tol = Tolerances::default();
        let p = [0.3, -1.2, 0.7];
        let n = [0.0, 2.0, -0.4];
        assert!(g.in_n(&g.conjugate(&p, &n), &tol));
    }

    #[test]
    fn gauge_symmetric_under_inversion() {
        let g = Heisenberg::new();
        let p = [0.4, -0.9, 1.3];
        assert!((g.norm(&p) - g.norm(&g.inverse(&p))).abs() < 1e-15);
    }
}
