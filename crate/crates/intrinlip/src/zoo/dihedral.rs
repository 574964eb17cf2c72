//! Dihedral groups `D_n = Z_n ⋊ Z_2` under a word metric.
//!
//! Elements `r^i s^j` are stored as `(i, j)`; the relations `s r s = r⁻¹`,
//! `s² = 1`, `r^n = 1` give `(i,j)·(k,l) = (i + (−1)^j k mod n, j ⊕ l)`.
//! The metric is the word metric of the symmetric generator set
//! `{r, r⁻¹, s}`, tabulated once by breadth-first search; every distance is
//! an exact small integer, which makes `D_n` the brute-force oracle for all
//! sampled checks.

use crate::group::{MetricGroup, NormalSide, SplitGroup};
use crate::sampling::SampleBox;
use crate::{Error, Result};
use std::collections::VecDeque;

/// `r^rot · s^flip`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElem {
    pub rot: u32,
    pub flip: bool,
}

impl DihedralElem {
    pub fn rotation(i: u32) -> Self {
        DihedralElem { rot: i, flip: false }
    }

    pub fn reflection(i: u32) -> Self {
        DihedralElem { rot: i, flip: true }
    }
}

#[derive(Debug)]
pub struct Dihedral {
    n: u32,
    /// Word length of each element, indexed by `rot + n·flip`.
    lengths: Vec<u32>,
}

impl Dihedral {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec("dihedral order must be >= 2".into()));
        }
        if n > 4096 {
            return Err(Error::InvalidSpec("dihedral order limited to 4096".into()));
        }
        let mut d = Dihedral { n, lengths: Vec::new() };
        d.lengths = d.build_word_lengths();
        Ok(d)
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    fn index(&self, e: &DihedralElem) -> usize {
        e.rot as usize + if e.flip { self.n as usize } else { 0 }
    }

    fn generators(&self) -> Vec<DihedralElem> {
        let mut gens = vec![DihedralElem::rotation(1), DihedralElem::reflection(0)];
        if self.n > 2 {
            gens.push(DihedralElem::rotation(self.n - 1));
        }
        gens
    }

    fn build_word_lengths(&self) -> Vec<u32> {
        let size = 2 * self.n as usize;
        let mut lengths = vec![u32::MAX; size];
        let mut queue = VecDeque::new();
        lengths[0] = 0;
        queue.push_back(DihedralElem::rotation(0));
        let gens = self.generators();
        while let Some(g) = queue.pop_front() {
            let dg = lengths[self.index(&g)];
            for gen in &gens {
                let next = self.mul(&g, gen);
                let idx = self.index(&next);
                if lengths[idx] == u32::MAX {
                    lengths[idx] = dg + 1;
                    queue.push_back(next);
                }
            }
        }
        lengths
    }

    /// Exact word length of `g⁻¹·p`.
    pub fn word_distance(&self, g: &DihedralElem, p: &DihedralElem) -> u32 {
        self.lengths[self.index(&self.mul(&self.inverse(g), p))]
    }
}

impl MetricGroup for Dihedral {
    type Elem = DihedralElem;

    fn identity(&self) -> DihedralElem {
        DihedralElem::rotation(0)
    }

    fn mul(&self, a: &DihedralElem, b: &DihedralElem) -> DihedralElem {
        let k = if a.flip { (self.n - b.rot % self.n) % self.n } else { b.rot % self.n };
        DihedralElem { rot: (a.rot + k) % self.n, flip: a.flip ^ b.flip }
    }

    fn inverse(&self, a: &DihedralElem) -> DihedralElem {
        if a.flip {
            *a
        } else {
            DihedralElem::rotation((self.n - a.rot % self.n) % self.n)
        }
    }

    fn dist(&self, a: &DihedralElem, b: &DihedralElem) -> f64 {
        self.word_distance(a, b) as f64
    }

    fn name(&self) -> String {
        format!("dihedral:{}", self.n)
    }

    fn elem_residual(&self, a: &DihedralElem, b: &DihedralElem) -> f64 {
        if a == b {
            0.0
        } else {
            1.0
        }
    }
}

impl SplitGroup for Dihedral {
    fn normal_side(&self) -> NormalSide {
        if self.n <= 2 {
            NormalSide::Both
        } else {
            NormalSide::N
        }
    }

    fn project_n(&self, g: &DihedralElem) -> DihedralElem {
        DihedralElem::rotation(g.rot)
    }

    fn project_h(&self, g: &DihedralElem) -> DihedralElem {
        DihedralElem { rot: 0, flip: g.flip }
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

    fn elem_chart(&self, g: &DihedralElem) -> Vec<f64> {
        vec![g.rot as f64, if g.flip { 1.0 } else { 0.0 }]
    }

    fn elem_from_chart(&self, c: &[f64]) -> DihedralElem {
        let rot = (c[0].round().rem_euclid(self.n as f64)) as u32 % self.n;
        DihedralElem { rot, flip: c[1].round() as i64 % 2 != 0 }
    }

    fn n_chart(&self, n: &DihedralElem) -> Vec<f64> {
        vec![n.rot as f64]
    }

    fn n_from_chart(&self, c: &[f64]) -> DihedralElem {
        DihedralElem::rotation((c[0].round().rem_euclid(self.n as f64)) as u32 % self.n)
    }

    fn h_chart(&self, h: &DihedralElem) -> Vec<f64> {
        vec![if h.flip { 1.0 } else { 0.0 }]
    }

    fn h_from_chart(&self, c: &[f64]) -> DihedralElem {
        DihedralElem { rot: 0, flip: c[0].round() as i64 % 2 != 0 }
    }

    fn n_box(&self, _group_box: &SampleBox) -> SampleBox {
        SampleBox::new(vec![(0.0, self.n as f64)])
    }

    fn h_box(&self, _group_box: &SampleBox) -> SampleBox {
        SampleBox::new(vec![(0.0, 2.0)])
    }

    fn sample_elem(&self, u: &[f64], _bx: &SampleBox) -> DihedralElem {
        let size = 2 * self.n;
        let idx = ((u[0] * size as f64) as u32).min(size - 1);
        DihedralElem { rot: idx % self.n, flip: idx >= self.n }
    }

    fn enumerate(&self) -> Option<Vec<DihedralElem>> {
        let mut out = Vec::with_capacity(2 * self.n as usize);
        for flip in [false, true] {
            for i in 0..self.n {
                out.push(DihedralElem { rot: i, flip });
            }
        }
        Some(out)
    }

    fn enumerate_n(&self) -> Option<Vec<DihedralElem>> {
        Some((0..self.n).map(DihedralElem::rotation).collect())
    }

    fn enumerate_h(&self) -> Option<Vec<DihedralElem>> {
        Some(vec![DihedralElem::rotation(0), DihedralElem::reflection(0)])
    }

    fn structured_elems(&self, _bx: &SampleBox) -> Vec<DihedralElem> {
        self.enumerate().unwrap()
    }
}

/// `D_n` with the factors exchanged: base `N = {1, s}`, fiber `H = Z_n` (the
/// normal factor). Decomposition `r^i s^j = s^j · r^{(−1)^j i}`.
#[derive(Debug)]
pub struct DihedralSwapped {
    inner: Dihedral,
}

impl DihedralSwapped {
    pub fn new(n: u32) -> Result<Self> {
        Ok(DihedralSwapped { inner: Dihedral::new(n)? })
    }

    pub fn order(&self) -> u32 {
        self.inner.order()
    }
}

impl MetricGroup for DihedralSwapped {
    type Elem = DihedralElem;

    fn identity(&self) -> DihedralElem {
        self.inner.identity()
    }

    fn mul(&self, a: &DihedralElem, b: &DihedralElem) -> DihedralElem {
        self.inner.mul(a, b)
    }

    fn inverse(&self, a: &DihedralElem) -> DihedralElem {
        self.inner.inverse(a)
    }

    fn dist(&self, a: &DihedralElem, b: &DihedralElem) -> f64 {
        self.inner.dist(a, b)
    }

    fn name(&self) -> String {
        format!("dihedral-swapped:{}", self.inner.n)
    }

    fn elem_residual(&self, a: &DihedralElem, b: &DihedralElem) -> f64 {
        self.inner.elem_residual(a, b)
    }
}

impl SplitGroup for DihedralSwapped {
    fn normal_side(&self) -> NormalSide {
        if self.inner.n <= 2 {
            NormalSide::Both
        } else {
            NormalSide::H
        }
    }

    fn project_n(&self, g: &DihedralElem) -> DihedralElem {
        DihedralElem { rot: 0, flip: g.flip }
    }

    fn project_h(&self, g: &DihedralElem) -> DihedralElem {
        let n = self.inner.n;
        let rot = if g.flip { (n - g.rot % n) % n } else { g.rot };
        DihedralElem::rotation(rot)
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

    fn elem_chart(&self, g: &DihedralElem) -> Vec<f64> {
        self.inner.elem_chart(g)
    }

    fn elem_from_chart(&self, c: &[f64]) -> DihedralElem {
        self.inner.elem_from_chart(c)
    }

    fn n_chart(&self, n: &DihedralElem) -> Vec<f64> {
        vec![if n.flip { 1.0 } else { 0.0 }]
    }

    fn n_from_chart(&self, c: &[f64]) -> DihedralElem {
        DihedralElem { rot: 0, flip: c[0].round() as i64 % 2 != 0 }
    }

    fn h_chart(&self, h: &DihedralElem) -> Vec<f64> {
        vec![h.rot as f64]
    }

    fn h_from_chart(&self, c: &[f64]) -> DihedralElem {
        self.inner.n_from_chart(c)
    }

    fn n_box(&self, _group_box: &SampleBox) -> SampleBox {
        SampleBox::new(vec![(0.0, 2.0)])
    }

    fn h_box(&self, _group_box: &SampleBox) -> SampleBox {
        SampleBox::new(vec![(0.0, self.inner.n as f64)])
    }

    fn sample_elem(&self, u: &[f64], bx: &SampleBox) -> DihedralElem {
        self.inner.sample_elem(u, bx)
    }

    fn enumerate(&self) -> Option<Vec<DihedralElem>> {
        self.inner.enumerate()
    }

    fn enumerate_n(&self) -> Option<Vec<DihedralElem>> {
        self.inner.enumerate_h()
    }

    fn enumerate_h(&self) -> Option<Vec<DihedralElem>> {
        self.inner.enumerate_n()
    }

    fn structured_elems(&self, bx: &SampleBox) -> Vec<DihedralElem> {
        self.inner.structured_elems(bx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol::Tolerances;

    fn d4() -> Dihedral {
        Dihedral::new(4).unwrap()
    }

    #[test]
    fn word_lengths_match_hand_computation() {
        // {r, r⁻¹, s}: lengths 1,r,r²,r³ = 0,1,2,1 and s,rs,r²s,r³s = 1,2,3,2.
        let g = d4();
        let expect = [0, 1, 2, 1, 1, 2, 3, 2];
        for (idx, want) in expect.iter().enumerate() {
            let e = DihedralElem { rot: idx as u32 % 4, flip: idx >= 4 };
            assert_eq!(g.word_distance(&g.identity(), &e), *want, "element {e:?}");
        }
        assert_eq!(g.word_distance(&DihedralElem::rotation(1), &DihedralElem::rotation(1)), 0);
    }

    #[test]
    fn conjugation_flips_rotations() {
        let g = d4();
        let s = DihedralElem::reflection(0);
        let r = DihedralElem::rotation(1);
        assert_eq!(g.conjugate(&s, &r), DihedralElem::rotation(3));
    }

    #[test]
    fn decompose_r2s() {
        let g = d4();
        let x = DihedralElem::reflection(2);
        assert_eq!(g.project_n(&x), DihedralElem::rotation(2));
        assert_eq!(g.project_h(&x), DihedralElem::reflection(0));
        assert_eq!(g.mul(&g.project_n(&x), &g.project_h(&x)), x);
    }

    #[test]
    fn word_metric_is_symmetric_in_inverses() {
        let g = d4();
        let one = g.identity();
        for e in g.enumerate().unwrap() {
            assert_eq!(g.dist(&one, &e), g.dist(&one, &g.inverse(&e)));
        }
    }

    #[test]
    fn swapped_decomposition_recomposes_exactly() {
        let g = DihedralSwapped::new(4).unwrap();
        let tol = Tolerances::default();
        for e in g.enumerate().unwrap() {
            let n = g.project_n(&e);
            let h = g.project_h(&e);
            assert_eq!(g.mul(&n, &h), e);
            assert!(g.in_n(&n, &tol) && g.in_h(&h, &tol));
        }
    }

    #[test]
    fn group_order_two_has_both_sides_normal() {
        assert_eq!(Dihedral::new(2).unwrap().normal_side(), crate::NormalSide::Both);
        assert_eq!(d4().normal_side(), crate::NormalSide::N);
    }
}
