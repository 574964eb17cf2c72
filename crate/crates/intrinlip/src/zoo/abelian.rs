//! The abelian plane `ℝ^m × ℝ^k` with Euclidean distance.
//!
//! Both factors are normal and every projection is an orthogonal one, so
//! closed forms exist for all constants: `C₂ = √2`, `C₁ = C₃ = C₄ = 1`.

use crate::group::{MetricGroup, NormalSide, SplitGroup};
use crate::sampling::SampleBox;
use crate::{Error, Result};

#[derive(Debug)]
pub struct AbelianPlane {
    m: usize,
    k: usize,
}

impl AbelianPlane {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if m == 0 || k == 0 {
            return Err(Error::InvalidSpec("abelian factors must have dimension >= 1".into()));
        }
        if m + k > 8 {
            return Err(Error::InvalidSpec("abelian plane limited to total dimension 8".into()));
        }
        Ok(AbelianPlane { m, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn dim(&self) -> usize {
        self.m + self.k
    }
}

impl MetricGroup for AbelianPlane {
    type Elem = Vec<f64>;

    fn identity(&self) -> Vec<f64> {
        vec![0.0; self.dim()]
    }

    fn mul(&self, a: &Vec<f64>, b: &Vec<f64>) -> Vec<f64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn inverse(&self, a: &Vec<f64>) -> Vec<f64> {
        a.iter().map(|x| -x).collect()
    }

    fn dist(&self, a: &Vec<f64>, b: &Vec<f64>) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
    }

    fn name(&self) -> String {
        format!("abelian:{},{}", self.m, self.k)
    }

    fn elem_residual(&self, a: &Vec<f64>, b: &Vec<f64>) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }
}

impl SplitGroup for AbelianPlane {
    fn normal_side(&self) -> NormalSide {
        NormalSide::Both
    }

    fn project_n(&self, g: &Vec<f64>) -> Vec<f64> {
        let mut out = g.clone();
        out[self.m..].iter_mut().for_each(|v| *v = 0.0);
        out
    }

    fn project_h(&self, g: &Vec<f64>) -> Vec<f64> {
        let mut out = g.clone();
        out[..self.m].iter_mut().for_each(|v| *v = 0.0);
        out
    }

    fn group_dim(&self) -> usize {
        self.dim()
    }

    fn n_dim(&self) -> usize {
        self.m
    }

    fn h_dim(&self) -> usize {
        self.k
    }

    fn elem_chart(&self, g: &Vec<f64>) -> Vec<f64> {
        g.clone()
    }

    fn elem_from_chart(&self, c: &[f64]) -> Vec<f64> {
        c.to_vec()
    }

    fn n_chart(&self, n: &Vec<f64>) -> Vec<f64> {
        n[..self.m].to_vec()
    }

    fn n_from_chart(&self, c: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim()];
        out[..self.m].copy_from_slice(&c[..self.m]);
        out
    }

    fn h_chart(&self, h: &Vec<f64>) -> Vec<f64> {
        h[self.m..].to_vec()
    }

    fn h_from_chart(&self, c: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim()];
        out[self.m..].copy_from_slice(&c[..self.k]);
        out
    }

    fn n_box(&self, group_box: &SampleBox) -> SampleBox {
        group_box.slice(0..self.m)
    }

    fn h_box(&self, group_box: &SampleBox) -> SampleBox {
        group_box.slice(self.m..self.dim())
    }

    fn structured_elems(&self, bx: &SampleBox) -> Vec<Vec<f64>> {
        let scale = bx
            .dims
            .iter()
            .map(|(lo, hi)| lo.abs().max(hi.abs()))
            .fold(f64::INFINITY, f64::min)
            * 0.5;
        let mut out = Vec::new();
        // Pure base, pure fiber, and an equal-norm diagonal (the C₂ extremum).
        let mut n_pt = vec![0.0; self.dim()];
        n_pt[0] = scale;
        let mut h_pt = vec![0.0; self.dim()];
        h_pt[self.m] = scale;
        let diag = self.mul(&n_pt, &h_pt);
        out.push(n_pt);
        out.push(h_pt);
        out.push(diag);
        out
    }

    fn axis_point(&self, t: f64) -> Option<Vec<f64>> {
        if self.k != 1 {
            return None;
        }
        let mut out = vec![0.0; self.dim()];
        out[self.m] = t;
        Some(out)
    }

    fn axis_param(&self, h: &Vec<f64>) -> Option<f64> {
        if self.k != 1 {
            return None;
        }
        Some(h[self.m])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::decompose;
    use crate::tol::Tolerances;

    #[test]
    fn group_laws_and_projections() {
        let g = AbelianPlane::new(1, 1).unwrap();
        let a = vec![3.0, 4.0];
        assert_eq!(g.mul(&a, &g.inverse(&a)), g.identity());
        assert_eq!(g.project_n(&a), vec![3.0, 0.0]);
        assert_eq!(g.project_h(&a), vec![0.0, 4.0]);
        let tol = Tolerances::default();
        let (n, h) = decompose(&g, &a, &tol).unwrap();
        assert_eq!(g.mul(&n, &h), a);
    }

    #[test]
    fn conjugation_is_trivial() {
        let g = AbelianPlane::new(1, 1).unwrap();
        let p = vec![0.7, -2.0];
        let n = vec![1.0, 0.0];
        assert_eq!(g.conjugate(&p, &n), n);
    }

    #[test]
    fn axis_is_geodesic() {
        let g = AbelianPlane::new(2, 1).unwrap();
        for t in [-2.5, 0.0, 1.25] {
            let h = g.axis_point(t).unwrap();
            assert!((g.norm(&h) - t.abs()).abs() < 1e-12);
            assert_eq!(g.axis_param(&h), Some(t));
        }
        assert!(AbelianPlane::new(1, 2).unwrap().axis_point(1.0).is_none());
    }
}
