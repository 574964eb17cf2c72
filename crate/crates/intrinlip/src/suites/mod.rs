//! Falsification suites, one per subsystem, producing [`CheckReport`]s.
//!
//! Every suite draws its samples deterministically from the seed, evaluates
//! each claimed identity or inequality over them, and tallies violations
//! with their worst excess. Exhaustive mode switches finite groups from
//! sampling to full enumeration (and, where feasible, full map universes).

mod cones_suite;
mod group_suite;
mod lipschitz_suite;
mod quasidist_suite;
mod subgroup_suite;
mod translation_suite;
mod zoo_suite;

use crate::cones::{minimal_opening, ConeFamily, Half};
use crate::graphs::{parse_map_spec, IntrinsicMap};
use crate::group::SplitGroup;
use crate::report::{CheckRecord, CheckReport};
use crate::sampling::{Halton, SampleBox};
use crate::search::InfSearch;
use crate::tol::Tolerances;
use crate::zoo::{AffineSwapped, AnyGroup, DihedralSwapped};
use crate::with_group;
use crate::{Error, Result};
use std::sync::Arc;
use std::time::Instant;

/// Which suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Group,
    Zoo,
    Translation,
    Cones,
    Lipschitz,
    Quasidistance,
    Subgroup,
}

impl SuiteName {
    pub const ALL: [SuiteName; 7] = [
        SuiteName::Group,
        SuiteName::Zoo,
        SuiteName::Translation,
        SuiteName::Cones,
        SuiteName::Lipschitz,
        SuiteName::Quasidistance,
        SuiteName::Subgroup,
    ];

    pub fn parse(s: &str) -> Result<SuiteName> {
        Ok(match s {
            "group" => SuiteName::Group,
            "zoo" => SuiteName::Zoo,
            "translation" => SuiteName::Translation,
            "cones" => SuiteName::Cones,
            "lipschitz" => SuiteName::Lipschitz,
            "quasidistance" => SuiteName::Quasidistance,
            "subgroup" => SuiteName::Subgroup,
            other => return Err(Error::InvalidSpec(format!("unknown suite {other:?}"))),
        })
    }

    pub fn label(&self) -> &'static str {
        match self {
            SuiteName::Group => "group",
            SuiteName::Zoo => "zoo",
            SuiteName::Translation => "translation",
            SuiteName::Cones => "cones",
            SuiteName::Lipschitz => "lipschitz",
            SuiteName::Quasidistance => "quasidistance",
            SuiteName::Subgroup => "subgroup",
        }
    }
}

/// Parameters shared by all suites.
#[derive(Debug, Clone)]
pub struct SuiteParams {
    pub samples: usize,
    pub seed: u64,
    pub exhaustive: bool,
    pub box_spec: Option<String>,
    pub map_spec: Option<String>,
    pub tols: Tolerances,
    pub search: InfSearch,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            samples: 10_000,
            seed: 0,
            exhaustive: false,
            box_spec: None,
            map_spec: None,
            tols: Tolerances::default(),
            search: InfSearch::default(),
        }
    }
}

impl SuiteParams {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidSpec("samples must be positive".into()));
        }
        Ok(())
    }
}

/// Run one suite against a parsed group.
pub fn run_suite(any: &AnyGroup, name: SuiteName, params: &SuiteParams) -> Result<CheckReport> {
    params.validate()?;
    let start = Instant::now();
    let mut checks = with_group!(any, |g| match name {
        SuiteName::Group => group_suite::run(g, params),
        SuiteName::Zoo => zoo_suite::run(g, params),
        SuiteName::Translation => translation_suite::run(g, params),
        SuiteName::Cones => cones_suite::run(g, params),
        SuiteName::Lipschitz => lipschitz_suite::run(g, params),
        SuiteName::Quasidistance => quasidist_suite::run(g, params),
        SuiteName::Subgroup => subgroup_suite::run(g, params),
    })?;

    // Splittings with a normal fiber live on companion instances for the
    // groups whose shipped orientation has the base normal.
    match (name, any) {
        (SuiteName::Quasidistance, AnyGroup::Affine(_)) => {
            let sw = Arc::new(AffineSwapped::new());
            checks.extend(quasidist_suite::normal_case_records(&sw, params)?);
        }
        (SuiteName::Quasidistance, AnyGroup::Dihedral(d)) => {
            let sw = Arc::new(DihedralSwapped::new(d.order())?);
            checks.extend(quasidist_suite::normal_case_records(&sw, params)?);
        }
        (SuiteName::Lipschitz, AnyGroup::Affine(_)) => {
            let sw = Arc::new(AffineSwapped::new());
            checks.extend(lipschitz_suite::metric_vs_intrinsic_records(&sw, params)?);
        }
        (SuiteName::Lipschitz, AnyGroup::Dihedral(d)) => {
            let sw = Arc::new(DihedralSwapped::new(d.order())?);
            checks.extend(lipschitz_suite::metric_vs_intrinsic_records(&sw, params)?);
        }
        (SuiteName::Subgroup, AnyGroup::Dihedral(d)) => {
            let sw = Arc::new(DihedralSwapped::new(d.order())?);
            checks.extend(subgroup_suite::swapped_identity_records(&sw, params)?);
        }
        _ => {}
    }

    let mut report = CheckReport {
        suite: name.label().to_string(),
        group: any.name(),
        map: params.map_spec.clone(),
        seed: params.seed,
        samples: params.samples as u64,
        exhaustive: params.exhaustive,
        sample_box: with_group!(any, |g| resolve_box(g, params)?.describe()),
        tolerances: params.tols,
        checks,
        violations_total: 0,
        wall_ms: start.elapsed().as_millis() as u64,
    };
    report.finalize();
    Ok(report)
}

/// Run every suite in order.
pub fn run_all(any: &AnyGroup, params: &SuiteParams) -> Result<Vec<CheckReport>> {
    SuiteName::ALL.iter().map(|name| run_suite(any, *name, params)).collect()
}

// ---------------------------------------------------------------------------
// Shared sampling helpers.

pub(crate) fn resolve_box<G: SplitGroup>(g: &Arc<G>, params: &SuiteParams) -> Result<SampleBox> {
    match &params.box_spec {
        Some(s) => SampleBox::parse(s, g.group_dim().max(1)).map_err(Error::InvalidSpec),
        None => Ok(SampleBox::unit(g.group_dim().max(1))),
    }
}

/// Group samples: enumeration when finite and exhaustive (or small), Halton
/// plus structured extremal points otherwise.
pub(crate) fn elems<G: SplitGroup>(
    g: &Arc<G>,
    bx: &SampleBox,
    count: usize,
    seed: u64,
    exhaustive: bool,
) -> Vec<G::Elem> {
    if let Some(all) = g.enumerate() {
        if exhaustive || all.len() <= count {
            return all;
        }
    }
    let mut h = Halton::new(g.group_dim().max(1), seed);
    let mut out: Vec<G::Elem> = (0..count).map(|_| g.sample_elem(&h.next_point(), bx)).collect();
    out.extend(g.structured_elems(bx));
    out
}

pub(crate) fn elem_pairs<G: SplitGroup>(
    g: &Arc<G>,
    bx: &SampleBox,
    count: usize,
    seed: u64,
    exhaustive: bool,
) -> Vec<(G::Elem, G::Elem)> {
    if let Some(all) = g.enumerate() {
        if exhaustive || all.len() * all.len() <= count {
            let mut out = Vec::with_capacity(all.len() * all.len());
            for a in &all {
                for b in &all {
                    out.push((a.clone(), b.clone()));
                }
            }
            return out;
        }
    }
    let dim = g.group_dim().max(1);
    let mut h = Halton::new(2 * dim, seed);
    (0..count)
        .map(|_| {
            let u = h.next_point();
            (g.sample_elem(&u[..dim], bx), g.sample_elem(&u[dim..], bx))
        })
        .collect()
}

pub(crate) fn elem_triples<G: SplitGroup>(
    g: &Arc<G>,
    bx: &SampleBox,
    count: usize,
    seed: u64,
    exhaustive: bool,
) -> Vec<(G::Elem, G::Elem, G::Elem)> {
    if let Some(all) = g.enumerate() {
        let cube = all.len() * all.len() * all.len();
        if exhaustive || cube <= count {
            let mut out = Vec::with_capacity(cube);
            for a in &all {
                for b in &all {
                    for c in &all {
                        out.push((a.clone(), b.clone(), c.clone()));
                    }
                }
            }
            return out;
        }
    }
    let dim = g.group_dim().max(1);
    let mut h = Halton::new(3 * dim, seed);
    (0..count)
        .map(|_| {
            let u = h.next_point();
            (
                g.sample_elem(&u[..dim], bx),
                g.sample_elem(&u[dim..2 * dim], bx),
                g.sample_elem(&u[2 * dim..], bx),
            )
        })
        .collect()
}

/// Base-subgroup samples.
pub(crate) fn base_points<G: SplitGroup>(
    g: &Arc<G>,
    bx: &SampleBox,
    count: usize,
    seed: u64,
    exhaustive: bool,
) -> Vec<G::Elem> {
    if let Some(all) = g.enumerate_n() {
        if exhaustive || all.len() <= count {
            return all;
        }
    }
    let dim = g.n_dim().max(1);
    let mut h = Halton::new(dim, seed);
    (0..count).map(|_| g.sample_n(&h.next_point(), bx)).collect()
}

pub(crate) fn base_pairs<G: SplitGroup>(
    g: &Arc<G>,
    bx: &SampleBox,
    count: usize,
    seed: u64,
    exhaustive: bool,
) -> Vec<(G::Elem, G::Elem)> {
    if let Some(all) = g.enumerate_n() {
        if exhaustive || all.len() * all.len() <= count {
            let mut out = Vec::new();
            for a in &all {
                for b in &all {
                    out.push((a.clone(), b.clone()));
                }
            }
            return out;
        }
    }
    let dim = g.n_dim().max(1);
    let mut h = Halton::new(2 * dim, seed);
    (0..count)
        .map(|_| {
            let u = h.next_point();
            (g.sample_n(&u[..dim], bx), g.sample_n(&u[dim..], bx))
        })
        .collect()
}

pub(crate) fn base_triples<G: SplitGroup>(
    g: &Arc<G>,
    bx: &SampleBox,
    count: usize,
    seed: u64,
    exhaustive: bool,
) -> Vec<(G::Elem, G::Elem, G::Elem)> {
    if let Some(all) = g.enumerate_n() {
        let cube = all.len().pow(3);
        if exhaustive || cube <= count {
            let mut out = Vec::new();
            for a in &all {
                for b in &all {
                    for c in &all {
                        out.push((a.clone(), b.clone(), c.clone()));
                    }
                }
            }
            return out;
        }
    }
    let dim = g.n_dim().max(1);
    let mut h = Halton::new(3 * dim, seed);
    (0..count)
        .map(|_| {
            let u = h.next_point();
            (
                g.sample_n(&u[..dim], bx),
                g.sample_n(&u[dim..2 * dim], bx),
                g.sample_n(&u[2 * dim..], bx),
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Map rosters.

fn const_zero_spec<G: SplitGroup>(g: &Arc<G>) -> String {
    format!("const:{}", vec!["0"; g.h_dim()].join(","))
}

/// Default maps exercised by the map-centric suites; `--map` overrides.
pub(crate) fn roster_maps<G: SplitGroup>(
    g: &Arc<G>,
    bx: &SampleBox,
    params: &SuiteParams,
) -> Result<Vec<IntrinsicMap<G>>> {
    if let Some(spec) = &params.map_spec {
        return Ok(vec![parse_map_spec(g, spec, bx)?]);
    }
    let name = g.name();
    let specs: Vec<String> = if name.starts_with("abelian") {
        vec![const_zero_spec(g), "linear:0.5".into(), "linear:2".into()]
    } else if name == "heisenberg" {
        vec![
            "const:0".into(),
            "const:0.75".into(),
            "linear:0.5".into(),
            "linear:2".into(),
            "hom:0.5,0.25".into(),
        ]
    } else if name.starts_with("affine-swapped") {
        vec!["const:0".into(), "const:0.4".into(), "hom:0.8".into()]
    } else if name.starts_with("affine") {
        vec!["const:0".into(), "const:0.7".into(), "linear:0.5".into()]
    } else if name.starts_with("dihedral-swapped") {
        vec!["const:0".into()]
    } else {
        vec!["const:0".into(), "const:1".into(), "hom:parity".into()]
    };
    let mut out = Vec::new();
    for spec in specs {
        match parse_map_spec(g, &spec, bx) {
            Ok(m) => out.push(m),
            // Rosters are best-effort: e.g. hom:parity only exists for even
            // rotation orders.
            Err(Error::InvalidSpec(_)) => {}
            Err(e) => return Err(e),
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidSpec(format!("no roster maps for {name}")));
    }
    Ok(out)
}

/// Maps whose graphs are subgroups, per instance.
pub(crate) fn subgroup_roster<G: SplitGroup>(
    g: &Arc<G>,
    bx: &SampleBox,
) -> Result<Vec<IntrinsicMap<G>>> {
    let name = g.name();
    let mut out = Vec::new();
    let mut push = |spec: &str| {
        if let Ok(m) = parse_map_spec(g, spec, bx) {
            out.push(m);
        }
    };
    if name.starts_with("abelian") {
        push(&const_zero_spec(g));
        push("linear:0.5");
        push("linear:2");
    } else if name == "heisenberg" {
        push("const:0");
        push("linear:0.75");
    } else if name.starts_with("dihedral") {
        push("const:0");
        push("hom:parity");
        if let Some(m) = dihedral_partial_half(g) {
            out.push(m);
        }
    } else {
        push("const:0");
    }
    if out.is_empty() {
        return Err(Error::InvalidSpec(format!("no subgroup examples for {name}")));
    }
    Ok(out)
}

/// The partial map `{1, r^(n/2)} → {1, s}` on even dihedral groups; its
/// graph is the two-element subgroup generated by `r^(n/2)·s`.
pub(crate) fn dihedral_partial_half<G: SplitGroup>(g: &Arc<G>) -> Option<IntrinsicMap<G>> {
    let n = g.enumerate_n()?.len();
    if n < 2 || n % 2 != 0 {
        return None;
    }
    IntrinsicMap::table(
        Arc::clone(g),
        vec![vec![0.0], vec![(n / 2) as f64]],
        vec![g.h_from_chart(&[0.0]), g.h_from_chart(&[1.0])],
        true,
        "table:partial-half",
    )
    .ok()
}

// ---------------------------------------------------------------------------
// Constant estimators shared by suites.

/// Sampled fiber-projection Lipschitz constant `sup d(π_H g, π_H p)/d(g,p)`,
/// sharpened with structured fiber pairs (where the ratio is exactly 1).
pub(crate) fn estimate_c1<G: SplitGroup>(
    g: &Arc<G>,
    bx: &SampleBox,
    count: usize,
    seed: u64,
    tol: &Tolerances,
) -> f64 {
    let mut sup = 0.0f64;
    let mut pairs = elem_pairs(g, bx, count, seed, false);
    let st = g.structured_elems(bx);
    for a in &st {
        for b in &st {
            pairs.push((g.project_h(a), g.project_h(b)));
            pairs.push((a.clone(), b.clone()));
        }
    }
    for (a, b) in &pairs {
        let den = g.dist(a, b);
        if den > tol.exact {
            sup = sup.max(g.dist(&g.project_h(a), &g.project_h(b)) / den);
        }
    }
    sup
}

/// Sampled base-projection constant `sup d(1, π_N g)/d(1, g)`; pure-base
/// structured points pin it at ≥ 1.
pub(crate) fn estimate_c3<G: SplitGroup>(
    g: &Arc<G>,
    bx: &SampleBox,
    count: usize,
    seed: u64,
    tol: &Tolerances,
) -> f64 {
    let one = g.identity();
    let mut sup = 0.0f64;
    let mut pts = elems(g, bx, count, seed, false);
    pts.extend(g.structured_elems(bx).iter().map(|e| g.project_n(e)));
    for x in &pts {
        let den = g.dist(&one, x);
        if den > tol.exact {
            sup = sup.max(g.dist(&one, &g.project_n(x)) / den);
        }
    }
    sup
}

// ---------------------------------------------------------------------------
// Cone sweep export.

/// One sampled element with its minimal opening per cone family.
pub struct SweepRow {
    pub coords: Vec<f64>,
    pub openings: [f64; 4],
}

/// Sample the group and record, per element, the minimal opening for every
/// cone family at vertex 1.
pub fn cone_sweep(any: &AnyGroup, params: &SuiteParams) -> Result<Vec<SweepRow>> {
    params.validate()?;
    with_group!(any, |g| {
        let bx = resolve_box(g, params)?;
        let pts = elems(g, &bx, params.samples, params.seed, params.exhaustive);
        let mut rows = Vec::with_capacity(pts.len());
        for x in &pts {
            let mut openings = [0.0f64; 4];
            for (i, family) in ConeFamily::ALL.iter().enumerate() {
                openings[i] = minimal_opening(
                    g,
                    *family,
                    Half::Full,
                    &g.identity(),
                    x,
                    &params.tols,
                    &params.search,
                )?;
            }
            rows.push(SweepRow { coords: g.elem_chart(x), openings });
        }
        Ok(rows)
    })
}

/// CSV text for a sweep: chart coordinates then one opening per family.
pub fn sweep_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::new();
    if let Some(first) = rows.first() {
        let mut header: Vec<String> =
            (0..first.coords.len()).map(|i| format!("x{i}")).collect();
        for family in ConeFamily::ALL {
            header.push(format!("alpha_{}", family.label()));
        }
        out.push_str(&header.join(","));
        out.push('\n');
    }
    for row in rows {
        let mut cells: Vec<String> = row.coords.iter().map(|v| format!("{v}")).collect();
        cells.extend(row.openings.iter().map(|v| format!("{v}")));
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Pushes a standard pass/fail record for a named scalar comparison.
pub(crate) fn bound_record(
    records: &mut Vec<CheckRecord>,
    id: &str,
    anchor: &str,
    lhs: f64,
    rhs: f64,
) {
    let mut rec = CheckRecord::new(id, anchor);
    rec.constant("lhs", lhs).constant("rhs", rhs);
    rec.tally(lhs - rhs);
    records.push(rec);
}
