//! Intrinsic maps `φ: E ⊆ N → H` and their graphs.
//!
//! The graphing map is `Φ(n) = n·φ(n)`; its image `Γ_φ` is the intrinsic
//! graph. Left translation by `q` acts on graphs through the translated map
//!
//! ```text
//! φ_q(n) = (π_H(q⁻¹n))⁻¹ · φ(π_N(q⁻¹n)),    E_q = { n : π_N(q⁻¹n) ∈ E }
//! ```
//!
//! so that `q·Γ_φ = Γ_{φ_q}` pointwise. Translated domains are evaluated
//! lazily through that membership formula (`E_q` can be unbounded), and
//! translated maps compose: translating by `p` then `q` agrees with
//! translating by `q·p`.
//!
//! Builtin map kinds: constants, chart-linear maps (`linear:λ`), chart-matrix
//! homomorphisms (`hom:a,b,...`, validated as homomorphisms at construction),
//! the rotation-parity homomorphism on even dihedral groups (`hom:parity`),
//! and table-backed maps (`table:path`, nearest-sample lookup on real charts,
//! exact lookup on finite groups).

use crate::group::SplitGroup;
use crate::sampling::{Halton, SampleBox};
use crate::tol::Tolerances;
use crate::{Error, Result};
use std::sync::Arc;

/// A graph point `Φ(n) = n·φ(n)` together with its components.
#[derive(Debug, Clone)]
pub struct GraphPoint<E> {
    pub base: E,
    pub value: E,
    pub point: E,
}

/// Domain of an intrinsic map over `N`.
#[derive(Clone)]
pub enum Domain<E> {
    /// All of `N`.
    All,
    /// An explicit list of base points (finite groups, partial maps).
    FiniteSet(Vec<E>),
    /// Arbitrary membership predicate.
    Predicate(Arc<dyn Fn(&E) -> bool + Send + Sync>),
}

#[derive(Clone)]
enum MapKind<G: SplitGroup> {
    Const(G::Elem),
    /// `h_chart = λ · n_chart`, truncated or zero-padded to the fiber chart.
    Linear(f64),
    /// Row-major `h_dim × n_dim` matrix acting on the base chart.
    Hom(Vec<f64>),
    /// `φ(n) = h(⌊n_chart₀⌉ mod 2)` on finite groups with a 2-element fiber.
    HomParity,
    Table { keys: Vec<Vec<f64>>, values: Vec<G::Elem>, exact: bool },
    Translated { base: Box<IntrinsicMap<G>>, q: G::Elem },
    Custom(Arc<dyn Fn(&G::Elem) -> G::Elem + Send + Sync>),
}

/// A map `φ: E ⊆ N → H` over a fixed splitting.
#[derive(Clone)]
pub struct IntrinsicMap<G: SplitGroup> {
    group: Arc<G>,
    domain: Domain<G::Elem>,
    region: SampleBox,
    kind: MapKind<G>,
    desc: String,
}

impl<G: SplitGroup> IntrinsicMap<G> {
    pub fn group(&self) -> &Arc<G> {
        &self.group
    }

    pub fn descriptor(&self) -> &str {
        &self.desc
    }

    /// Sampling region for the base chart.
    pub fn region(&self) -> &SampleBox {
        &self.region
    }

    pub fn constant(group: Arc<G>, value: G::Elem, region: SampleBox, desc: impl Into<String>) -> Self {
        IntrinsicMap { group, domain: Domain::All, region, kind: MapKind::Const(value), desc: desc.into() }
    }

    pub fn linear(group: Arc<G>, lambda: f64, region: SampleBox) -> Self {
        let desc = format!("linear:{lambda}");
        IntrinsicMap { group, domain: Domain::All, region, kind: MapKind::Linear(lambda), desc }
    }

    /// Map defined by an arbitrary closure; test and suite plumbing, not
    /// reachable from the CLI grammar.
    pub fn custom(
        group: Arc<G>,
        f: impl Fn(&G::Elem) -> G::Elem + Send + Sync + 'static,
        domain: Domain<G::Elem>,
        region: SampleBox,
        desc: impl Into<String>,
    ) -> Self {
        IntrinsicMap { group, domain, region, kind: MapKind::Custom(Arc::new(f)), desc: desc.into() }
    }

    /// Table-backed map; `exact` demands exact key matches (finite groups).
    pub fn table(
        group: Arc<G>,
        keys: Vec<Vec<f64>>,
        values: Vec<G::Elem>,
        exact: bool,
        desc: impl Into<String>,
    ) -> Result<Self> {
        if keys.is_empty() || keys.len() != values.len() {
            return Err(Error::InvalidSpec("table needs matching, nonempty keys/values".into()));
        }
        let dim = keys[0].len();
        if keys.iter().any(|k| k.len() != dim) {
            return Err(Error::InvalidSpec("table rows have inconsistent arity".into()));
        }
        // Region: bounding box of the keys (degenerate dims get a margin).
        let region = SampleBox::new(
            (0..dim)
                .map(|d| {
                    let lo = keys.iter().map(|k| k[d]).fold(f64::INFINITY, f64::min);
                    let hi = keys.iter().map(|k| k[d]).fold(f64::NEG_INFINITY, f64::max);
                    if hi - lo < 1e-12 {
                        (lo - 0.5, hi + 0.5)
                    } else {
                        (lo, hi)
                    }
                })
                .collect(),
        );
        let domain = if exact {
            Domain::FiniteSet(keys.iter().map(|k| group.n_from_chart(k)).collect())
        } else {
            Domain::All
        };
        Ok(IntrinsicMap {
            group,
            domain,
            region,
            kind: MapKind::Table { keys, values, exact },
            desc: desc.into(),
        })
    }

    /// Domain membership, evaluated lazily through translations.
    pub fn contains(&self, n: &G::Elem) -> bool {
        match &self.kind {
            MapKind::Translated { base, q } => {
                let g = &self.group;
                let w = g.mul(&g.inverse(q), n);
                base.contains(&g.project_n(&w))
            }
            MapKind::Table { keys, exact: true, .. } => {
                let c = self.group.n_chart(n);
                keys.iter().any(|k| chart_dist2(k, &c) < 0.25)
            }
            _ => match &self.domain {
                Domain::All => true,
                Domain::FiniteSet(set) => set.iter().any(|e| e == n),
                Domain::Predicate(p) => p(n),
            },
        }
    }

    /// Evaluate `φ(n)`.
    pub fn eval(&self, n: &G::Elem) -> Result<G::Elem> {
        if !self.contains(n) {
            return Err(Error::OutsideDomain);
        }
        let g = &self.group;
        Ok(match &self.kind {
            MapKind::Const(v) => v.clone(),
            MapKind::Linear(lambda) => {
                let nc = g.n_chart(n);
                let mut hc = vec![0.0; g.h_dim()];
                for (i, slot) in hc.iter_mut().enumerate() {
                    if i < nc.len() {
                        *slot = lambda * nc[i];
                    }
                }
                g.h_from_chart(&hc)
            }
            MapKind::Hom(matrix) => {
                let nc = g.n_chart(n);
                let hd = g.h_dim();
                let hc: Vec<f64> = (0..hd)
                    .map(|j| nc.iter().enumerate().map(|(i, x)| matrix[j * nc.len() + i] * x).sum())
                    .collect();
                g.h_from_chart(&hc)
            }
            MapKind::HomParity => {
                let parity = self.group.n_chart(n)[0].round() as i64 % 2;
                g.h_from_chart(&[parity.unsigned_abs() as f64])
            }
            MapKind::Table { keys, values, .. } => {
                let c = g.n_chart(n);
                let (mut best, mut best_d) = (0usize, f64::INFINITY);
                for (i, k) in keys.iter().enumerate() {
                    let d = chart_dist2(k, &c);
                    if d < best_d {
                        best_d = d;
                        best = i;
                    }
                }
                values[best].clone()
            }
            MapKind::Translated { base, q } => {
                let w = g.mul(&g.inverse(q), n);
                let h_part = g.project_h(&w);
                let inner = base.eval(&g.project_n(&w))?;
                g.mul(&g.inverse(&h_part), &inner)
            }
            MapKind::Custom(f) => f(n),
        })
    }

    /// The graph point `Φ(n) = n·φ(n)`.
    pub fn graph_point(&self, n: &G::Elem) -> Result<GraphPoint<G::Elem>> {
        let value = self.eval(n)?;
        let point = self.group.mul(n, &value);
        Ok(GraphPoint { base: n.clone(), value, point })
    }

    /// The translated map `φ_q`, whose graph is `q·Γ_φ`.
    pub fn translate(&self, q: &G::Elem) -> IntrinsicMap<G> {
        IntrinsicMap {
            group: Arc::clone(&self.group),
            domain: Domain::All,
            region: self.region.clone(),
            desc: format!("translated({})", self.desc),
            kind: MapKind::Translated { base: Box::new(self.clone()), q: q.clone() },
        }
    }

    /// Deterministic domain sample. Translated maps push the base sample
    /// forward into `E_q`; finite domains are indexed directly.
    pub fn sample_domain_point(&self, u: &[f64]) -> G::Elem {
        match &self.kind {
            MapKind::Translated { base, q } => {
                let g = &self.group;
                let inner = base.sample_domain_point(u);
                g.project_n(&g.mul(q, &inner))
            }
            MapKind::Table { exact: true, .. } => match &self.domain {
                Domain::FiniteSet(set) => {
                    let idx = ((u[0] * set.len() as f64) as usize).min(set.len() - 1);
                    set[idx].clone()
                }
                _ => unreachable!("exact tables always carry a finite domain"),
            },
            _ => match &self.domain {
                Domain::FiniteSet(set) => {
                    let idx = ((u[0] * set.len() as f64) as usize).min(set.len() - 1);
                    set[idx].clone()
                }
                _ => self.group.n_from_chart(&self.region.lerp(u)),
            },
        }
    }

    /// Sample `count` domain points (enumerating instead when the domain is
    /// finite and small enough).
    pub fn domain_points(&self, count: usize, seed: u64) -> Vec<G::Elem> {
        if let Some(all) = self.enumerate_domain() {
            if all.len() <= count.max(1) * 4 {
                return all;
            }
        }
        let mut h = Halton::new(self.group.n_dim().max(1), seed);
        (0..count).map(|_| self.sample_domain_point(&h.next_point())).collect()
    }

    /// All domain points, when the domain is explicitly finite.
    pub fn enumerate_domain(&self) -> Option<Vec<G::Elem>> {
        match (&self.kind, &self.domain) {
            (MapKind::Translated { base, q }, _) => {
                let g = &self.group;
                base.enumerate_domain().map(|v| {
                    v.into_iter().map(|n| g.project_n(&g.mul(q, &n))).collect()
                })
            }
            (_, Domain::FiniteSet(set)) => Some(set.clone()),
            _ => self
                .group
                .enumerate_n()
                .map(|all| all.into_iter().filter(|n| self.contains(n)).collect()),
        }
    }
}

fn chart_dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Where a point lies relative to the graph along the axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    Supergraph,
    Subgraph,
    Graph,
}

/// `Φ(n) = n·φ(n)` with its components; fails outside the domain.
pub fn graphing_map<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    n: &G::Elem,
) -> Result<GraphPoint<G::Elem>> {
    phi.graph_point(n)
}

/// The translated map `φ_q`.
pub fn translate_map<G: SplitGroup>(phi: &IntrinsicMap<G>, q: &G::Elem) -> IntrinsicMap<G> {
    phi.translate(q)
}

/// Upper bound `d(1, π_H(p)⁻¹·φ(π_N(p)))` for `dist(p, Γ_φ)`, together with
/// the graph point `Φ(π_N(p))` that realizes it.
pub fn graph_distance_bound<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    p: &G::Elem,
) -> Result<(f64, GraphPoint<G::Elem>)> {
    let g = phi.group();
    let witness = phi.graph_point(&g.project_n(p))?;
    let bound = g.norm(&g.mul(&g.inverse(&g.project_h(p)), &witness.value));
    Ok((bound, witness))
}

/// Classify `p = n·h(t)` against the graph: super if `t > f(n) + τ`, sub if
/// `t < f(n) − τ`, graph inside the tie band.
pub fn classify_point<G: SplitGroup>(
    phi: &IntrinsicMap<G>,
    p: &G::Elem,
    tol: &Tolerances,
) -> Result<PointClass> {
    let g = phi.group();
    if !g.has_axis() {
        return Err(Error::AxisMissing);
    }
    let n = g.project_n(p);
    let t = g.axis_param(&g.project_h(p)).ok_or(Error::AxisMissing)?;
    let f = g.axis_param(&phi.eval(&n)?).ok_or(Error::AxisMissing)?;
    Ok(if t > f + tol.exact {
        PointClass::Supergraph
    } else if t < f - tol.exact {
        PointClass::Subgraph
    } else {
        PointClass::Graph
    })
}

/// Parse a map spec: `const:...` | `linear:λ` | `hom:...` | `table:path`.
///
/// `const` accepts either full group-chart coordinates (validated to lie in
/// the fiber) or fiber-chart coordinates. `hom` takes a row-major matrix on
/// the charts, or `parity` on finite groups, and is validated to be a
/// homomorphism on a deterministic sample of base pairs.
pub fn parse_map_spec<G: SplitGroup>(
    group: &Arc<G>,
    spec: &str,
    region: &SampleBox,
) -> Result<IntrinsicMap<G>> {
    let (kind, args) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidSpec(format!("map spec {spec:?} needs kind:args")))?;
    let n_region = region_for_base(group, region);
    match kind.trim() {
        "const" => {
            let vals = parse_floats(args)?;
            let value = if vals.len() == group.h_dim() {
                group.h_from_chart(&vals)
            } else if vals.len() == group.group_dim() {
                let e = group.elem_from_chart(&vals);
                if !group.in_h(&e, &Tolerances::default()) {
                    return Err(Error::InvalidSpec(format!(
                        "const value {args:?} is not in the fiber subgroup"
                    )));
                }
                e
            } else {
                return Err(Error::InvalidSpec(format!(
                    "const needs {} or {} coordinates",
                    group.h_dim(),
                    group.group_dim()
                )));
            };
            Ok(IntrinsicMap::constant(Arc::clone(group), value, n_region, format!("const:{args}")))
        }
        "linear" => {
            if group.enumerate().is_some() {
                return Err(Error::InvalidSpec("linear maps need real charts".into()));
            }
            let lambda: f64 = args
                .trim()
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad linear coefficient {args:?}")))?;
            Ok(IntrinsicMap::linear(Arc::clone(group), lambda, n_region))
        }
        "hom" => {
            let map = if args.trim() == "parity" {
                if group.enumerate().is_none() {
                    return Err(Error::InvalidSpec("hom:parity needs a finite group".into()));
                }
                IntrinsicMap {
                    group: Arc::clone(group),
                    domain: Domain::All,
                    region: n_region,
                    kind: MapKind::HomParity,
                    desc: "hom:parity".into(),
                }
            } else {
                if group.enumerate().is_some() {
                    return Err(Error::InvalidSpec(
                        "finite groups support only hom:parity".into(),
                    ));
                }
                let vals = parse_floats(args)?;
                if vals.len() != group.n_dim() * group.h_dim() {
                    return Err(Error::InvalidSpec(format!(
                        "hom matrix needs {} entries",
                        group.n_dim() * group.h_dim()
                    )));
                }
                IntrinsicMap {
                    group: Arc::clone(group),
                    domain: Domain::All,
                    region: n_region,
                    kind: MapKind::Hom(vals),
                    desc: format!("hom:{args}"),
                }
            };
            validate_homomorphism(&map)?;
            Ok(map)
        }
        "table" => {
            let text = std::fs::read_to_string(args.trim())
                .map_err(|e| Error::InvalidSpec(format!("cannot read table {args:?}: {e}")))?;
            parse_map_table(group, &text, args.trim())
        }
        other => Err(Error::InvalidSpec(format!("unknown map kind {other:?}"))),
    }
}

/// Build a table map from TSV text: per row, base-chart coordinates followed
/// by fiber-chart coordinates.
pub fn parse_map_table<G: SplitGroup>(
    group: &Arc<G>,
    text: &str,
    desc: &str,
) -> Result<IntrinsicMap<G>> {
    let nd = group.n_dim();
    let hd = group.h_dim();
    let mut keys = Vec::new();
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let vals: Vec<f64> = line
            .split_whitespace()
            .map(|p| {
                p.parse::<f64>()
                    .map_err(|_| Error::InvalidSpec(format!("table line {}: bad value {p:?}", lineno + 1)))
            })
            .collect::<Result<_>>()?;
        if vals.len() != nd + hd {
            return Err(Error::InvalidSpec(format!(
                "table line {}: expected {} values, got {}",
                lineno + 1,
                nd + hd,
                vals.len()
            )));
        }
        keys.push(vals[..nd].to_vec());
        values.push(group.h_from_chart(&vals[nd..]));
    }
    let exact = group.enumerate().is_some();
    IntrinsicMap::table(Arc::clone(group), keys, values, exact, format!("table:{desc}"))
}

fn region_for_base<G: SplitGroup>(group: &Arc<G>, region: &SampleBox) -> SampleBox {
    if region.len() == group.group_dim() {
        group.n_box(region)
    } else {
        region.clone()
    }
}

fn parse_floats(args: &str) -> Result<Vec<f64>> {
    args.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidSpec(format!("bad number {p:?}")))
        })
        .collect()
}

fn validate_homomorphism<G: SplitGroup>(map: &IntrinsicMap<G>) -> Result<()> {
    let g = map.group();
    let tol = Tolerances::default();
    let mut points = map.domain_points(24, 17);
    points.truncate(24);
    for a in &points {
        for b in &points {
            let lhs = map.eval(&g.mul(a, b))?;
            let rhs = g.mul(&map.eval(a)?, &map.eval(b)?);
            if g.elem_residual(&lhs, &rhs) > tol.exact {
                return Err(Error::InvalidSpec(format!(
                    "{} is not a homomorphism on this splitting",
                    map.descriptor()
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{AbelianPlane, Dihedral, DihedralElem, Heisenberg};

    fn abelian() -> Arc<AbelianPlane> {
        Arc::new(AbelianPlane::new(1, 1).unwrap())
    }

    #[test]
    fn graphing_map_identity_and_linear() {
        let g = abelian();
        let id_map =
            IntrinsicMap::constant(Arc::clone(&g), g.identity(), SampleBox::unit(1), "const:0");
        let n = vec![0.7, 0.0];
        let gp = graphing_map(&id_map, &n).unwrap();
        assert_eq!(gp.point, n);

        let lin = IntrinsicMap::linear(Arc::clone(&g), 2.0, SampleBox::unit(1));
        let gp = graphing_map(&lin, &vec![0.5, 0.0]).unwrap();
        assert_eq!(gp.point, vec![0.5, 1.0]);
    }

    #[test]
    fn heisenberg_linear_graph_point() {
        let g = Arc::new(Heisenberg::new());
        let lam = 0.75;
        let phi = IntrinsicMap::linear(Arc::clone(&g), lam, SampleBox::unit(2));
        let n = [0.0, 2.0, 0.5];
        let gp = phi.graph_point(&n).unwrap();
        // Φ(0,y,t) = (λy, y, t − λy²/2), and the projections recover it.
        let expect = [lam * 2.0, 2.0, 0.5 - lam * 4.0 / 2.0];
        assert!(g.elem_residual(&gp.point, &expect) < 1e-14);
        assert!(g.elem_residual(&g.project_n(&gp.point), &n) < 1e-14);
        assert!(g.elem_residual(&g.project_h(&gp.point), &gp.value) < 1e-14);
    }

    #[test]
    fn translated_map_closed_form() {
        // φ(x) = λx translated by q = (n_q, h_q): φ_q(n) = h_q + λ(n − n_q).
        let g = abelian();
        let lam = 2.0;
        let phi = IntrinsicMap::linear(Arc::clone(&g), lam, SampleBox::unit(1));
        let q = vec![0.3, -1.1];
        let phi_q = phi.translate(&q);
        for n in [-0.4f64, 0.0, 1.7] {
            let got = phi_q.eval(&vec![n, 0.0]).unwrap();
            let want = vec![0.0, -1.1 + lam * (n - 0.3)];
            assert!(g.elem_residual(&got, &want) < 1e-12);
        }
    }

    #[test]
    fn translation_by_graph_point_fixes_origin() {
        let g = Arc::new(Heisenberg::new());
        let phi = IntrinsicMap::linear(Arc::clone(&g), 0.5, SampleBox::unit(2));
        let p = phi.graph_point(&[0.0, 0.8, -0.3]).unwrap().point;
        let translated = phi.translate(&g.inverse(&p));
        let at_one = translated.eval(&g.identity()).unwrap();
        assert!(g.elem_residual(&at_one, &g.identity()) < 1e-12);
    }

    #[test]
    fn distance_bound_examples() {
        let g = abelian();
        let phi =
            IntrinsicMap::constant(Arc::clone(&g), g.identity(), SampleBox::unit(1), "const:0");
        let (bound, witness) = graph_distance_bound(&phi, &vec![3.0, -2.0]).unwrap();
        assert!((bound - 2.0).abs() < 1e-12);
        assert_eq!(witness.point, vec![3.0, 0.0]);
        // Points on the graph give bound zero.
        let lin = IntrinsicMap::linear(Arc::clone(&g), 2.0, SampleBox::unit(1));
        let p = lin.graph_point(&vec![1.0, 0.0]).unwrap().point;
        let (bound, _) = graph_distance_bound(&lin, &p).unwrap();
        assert!(bound.abs() < 1e-12);
    }

    #[test]
    fn classification_with_tie_band() {
        let g = abelian();
        let tol = Tolerances::default();
        let phi =
            IntrinsicMap::constant(Arc::clone(&g), g.identity(), SampleBox::unit(1), "const:0");
        assert_eq!(classify_point(&phi, &vec![1.0, 2.0], &tol).unwrap(), PointClass::Supergraph);
        assert_eq!(classify_point(&phi, &vec![1.0, -2.0], &tol).unwrap(), PointClass::Subgraph);
        assert_eq!(classify_point(&phi, &vec![1.0, 0.0], &tol).unwrap(), PointClass::Graph);
    }

    #[test]
    fn dihedral_partial_map_domain() {
        let g = Arc::new(Dihedral::new(4).unwrap());
        let phi = IntrinsicMap::table(
            Arc::clone(&g),
            vec![vec![0.0], vec![2.0]],
            vec![DihedralElem::rotation(0), DihedralElem::reflection(0)],
            true,
            "partial",
        )
        .unwrap();
        assert!(phi.contains(&DihedralElem::rotation(2)));
        assert!(!phi.contains(&DihedralElem::rotation(1)));
        assert_eq!(phi.eval(&DihedralElem::rotation(2)).unwrap(), DihedralElem::reflection(0));
        assert!(matches!(
            phi.eval(&DihedralElem::rotation(1)),
            Err(Error::OutsideDomain)
        ));
        assert_eq!(phi.enumerate_domain().unwrap().len(), 2);
    }

    #[test]
    fn parse_rejects_bad_specs() {
        let g = abelian();
        let bx = SampleBox::unit(2);
        assert!(parse_map_spec(&g, "linear:x", &bx).is_err());
        assert!(parse_map_spec(&g, "const:1,2,3", &bx).is_err());
        assert!(parse_map_spec(&g, "frobnicate:1", &bx).is_err());
        // const in group chart must lie in the fiber.
        assert!(parse_map_spec(&g, "const:1.0,0.5", &bx).is_err());
        assert!(parse_map_spec(&g, "const:0.0,0.5", &bx).is_ok());
        let d = Arc::new(Dihedral::new(4).unwrap());
        assert!(parse_map_spec(&d, "linear:1", &SampleBox::unit(2)).is_err());
        assert!(parse_map_spec(&d, "hom:parity", &SampleBox::unit(2)).is_ok());
        let d5 = Arc::new(Dihedral::new(5).unwrap());
        assert!(parse_map_spec(&d5, "hom:parity", &SampleBox::unit(2)).is_err());
    }
}
