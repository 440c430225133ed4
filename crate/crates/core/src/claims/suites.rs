//! Instance-level checks of the structural lemmas, grouped into suites.
//! Each check is exact; a suite passes when all its checks do.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{check_gadget_conditions, check_projection, classify_cut_case, y_component_profile, CutCase, QueryBudget, Verdict};
use crate::connectivity::{cyclic_edge_connectivity, enumerate_3_edge_cuts, is_cyclically_k_edge_connected, is_three_connected};
use crate::constructions::{
    base_graph, f_operator, r_s, splice, vertex_replacement, y_construction, BuildTree, FFamilyCert, FOperator,
    Gadget,
};
use crate::corpus::is_isomorphic;
use crate::error::ClaimError;
use crate::graph::{Edge, Graph};
use crate::packing::{
    enumerate_lambda_factors, enumerate_lambda_factors_limited, find_lambda_factor, find_lambda_factor_limited, FactorConstraint, FactorSearch,
    SearchLimits,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub checks: Vec<Check>,
    /// Observations that are reported but not asserted.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: SuiteId) -> SuiteReport {
        SuiteReport { suite, checks: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: Value) {
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteId {
    CutCases,
    YProfile,
    FFamily,
    RS,
    GXW,
    GPK,
    Projection,
}

impl SuiteId {
    pub const ALL: [SuiteId; 7] = [
        SuiteId::CutCases,
        SuiteId::YProfile,
        SuiteId::FFamily,
        SuiteId::RS,
        SuiteId::GXW,
        SuiteId::GPK,
        SuiteId::Projection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::CutCases => "cut-cases",
            SuiteId::YProfile => "y-profile",
            SuiteId::FFamily => "f-family",
            SuiteId::RS => "r-s",
            SuiteId::GXW => "g-x-w",
            SuiteId::GPK => "g-p-k",
            SuiteId::Projection => "projection",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = String;

    fn from_str(s: &str) -> Result<SuiteId, String> {
        let low = s.trim().to_ascii_lowercase().replace('_', "-");
        SuiteId::ALL.into_iter().find(|id| id.name() == low).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

fn no_factor(g: &Graph, c: &FactorConstraint) -> Result<bool, ClaimError> {
    Ok(find_lambda_factor(g, c)?.is_none())
}

fn sorted_tuple(e: Edge) -> [usize; 2] {
    [e.u, e.v]
}

/// The sides a random splice draws from.
pub const SPLICE_SIDES: [&str; 4] = ["K4", "prism", "K33", "cube"];

/// Random `A a σ b B` over [`SPLICE_SIDES`]; every factor of every
/// splice must fall in exactly one cut case.
pub fn cut_case_suite(samples: usize, seed: u64) -> Result<SuiteReport, ClaimError> {
    let mut rep = SuiteReport::new(SuiteId::CutCases);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sides: Vec<Graph> = SPLICE_SIDES.iter().map(|s| base_graph(s).expect("base graph")).collect();
    let mut counts: BTreeMap<CutCase, usize> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut factors = 0usize;
    let mut well_formed = true;
    for _ in 0..samples {
        let (ia, ib) = (rng.gen_range(0..sides.len()), rng.gen_range(0..sides.len()));
        let (a, b) = (&sides[ia], &sides[ib]);
        let (va, vb) = (rng.gen_range(0..a.n()), rng.gen_range(0..b.n()));
        let mut sigma = [0usize, 1, 2];
        sigma.shuffle(&mut rng);
        let (g, meta) = splice(a, va, b, vb, Some(sigma)).map_err(|e| ClaimError::LemmaViolation(e.to_string()))?;
        well_formed &= g.is_cubic() && is_three_connected(&g);
        let meta = if meta.residue_a == 2 { meta.swapped() } else { meta };
        let all = enumerate_lambda_factors(&g, &FactorConstraint::none(), usize::MAX)?;
        for p in &all.factors {
            factors += 1;
            match classify_cut_case(&g, &meta, p) {
                Ok(c) => *counts.entry(c).or_default() += 1,
                Err(e) => failures.push(json!({
                    "sides": [SPLICE_SIDES[ia], SPLICE_SIDES[ib]],
                    "vertices": [va, vb],
                    "sigma": sigma,
                    "factor": p,
                    "error": e.to_string(),
                })),
            }
        }
    }
    rep.check("splices are cubic and 3-connected", well_formed, Value::Null);
    rep.check(
        "every factor matches exactly one case",
        failures.is_empty() && factors > 0,
        json!({ "samples": samples, "factors": factors, "cases": counts, "failures": failures }),
    );
    Ok(rep)
}

/// All factors of `Y(prism, prism, prism)` have `cmp(P^i)` in `{1, 2}`.
pub fn y_profile_suite() -> Result<SuiteReport, ClaimError> {
    let mut rep = SuiteReport::new(SuiteId::YProfile);
    let prism = base_graph("prism").expect("base graph");
    let gad = || Some(Gadget::new(prism.clone(), 0));
    let (g, meta) = y_construction([gad(), gad(), gad()]).map_err(|e| ClaimError::LemmaViolation(e.to_string()))?;
    let all = enumerate_lambda_factors(&g, &FactorConstraint::none(), usize::MAX)?;
    let mut profiles: BTreeMap<String, usize> = BTreeMap::new();
    let mut bad = Vec::new();
    for p in &all.factors {
        let prof = y_component_profile(&meta, p);
        *profiles.entry(format!("{prof:?}")).or_default() += 1;
        if !prof.iter().all(|c| (1..=2).contains(c)) {
            bad.push(json!({ "factor": p, "profile": prof }));
        }
    }
    rep.check("Y(prism,prism,prism) has 18 vertices", g.n() == 18, Value::Null);
    rep.check("factor enumeration is exhaustive", all.complete, json!({ "factors": all.factors.len() }));
    rep.check(
        "every factor has each cmp(P^i) in {1,2}",
        bad.is_empty() && !all.factors.is_empty(),
        json!({ "profiles": profiles, "violations": bad }),
    );
    Ok(rep)
}

/// Family members used by the suite: `Y`, `Z`, `Z∘Y`, `Z∘Z`.
pub fn f_family_instances() -> Result<Vec<(String, FFamilyCert)>, ClaimError> {
    let compose = |a: BuildTree, t: [usize; 3], b: BuildTree| BuildTree::Compose { a: Box::new(a), triangle: t, b: Box::new(b) };
    let trees = [
        ("Y", BuildTree::BaseY),
        ("Z", BuildTree::BaseZ),
        ("Z.Y", compose(BuildTree::BaseZ, [0, 1, 2], BuildTree::BaseY)),
        ("Z.Z", compose(BuildTree::BaseZ, [9, 10, 11], BuildTree::BaseZ)),
    ];
    trees
        .into_iter()
        .map(|(name, t)| {
            FFamilyCert::from_tree(&t).map(|c| (name.to_string(), c)).map_err(|e| ClaimError::LemmaViolation(e.to_string()))
        })
        .collect()
}

/// Vertex sets `X` matched with `N(x)`: one neighbour outside `N[x]` for
/// each vertex of `N(x)`, all distinct.
pub fn matched_sets(g: &Graph, x: usize) -> Vec<[usize; 3]> {
    let nb = g.neighbors(x);
    let closed: BTreeSet<usize> = nb.iter().copied().chain([x]).collect();
    let outside = |u: usize| -> Vec<usize> { g.neighbors(u).iter().copied().filter(|w| !closed.contains(w)).collect() };
    let mut out = BTreeSet::new();
    for &w0 in &outside(nb[0]) {
        for &w1 in &outside(nb[1]) {
            for &w2 in &outside(nb[2]) {
                if w0 != w1 && w0 != w2 && w1 != w2 {
                    let mut s = [w0, w1, w2];
                    s.sort_unstable();
                    out.insert(s);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// No factor of `F`, and the stated outcomes for the three operators.
pub fn f_family_suite() -> Result<SuiteReport, ClaimError> {
    let mut rep = SuiteReport::new(SuiteId::FFamily);
    let op = |f: &FFamilyCert, o| f_operator(f, o).map_err(|e| ClaimError::LemmaViolation(e.to_string()));
    for (name, f) in f_family_instances()? {
        let g = &f.graph;
        rep.check(format!("{name}: certificate validates"), f.validate().is_ok(), Value::Null);
        rep.check(
            format!("{name}: v = 0 (mod 6) and no factor"),
            g.n() % 6 == 0 && no_factor(g, &FactorConstraint::none())?,
            json!({ "n": g.n() }),
        );

        let dot = op(&f, FOperator::Dot)?;
        let x = dot.special[0];
        let sets = matched_sets(&dot.graph, x);
        let mut with_factor = Vec::new();
        for s in &sets {
            let removed: Vec<usize> = dot.graph.neighbors(x).iter().copied().chain([x]).chain(s.iter().copied()).collect();
            if !no_factor(&dot.graph, &FactorConstraint::removing(removed))? {
                with_factor.push(*s);
            }
        }
        rep.check(
            format!("{name} dot: v = 4 (mod 6), cubic, 3-connected"),
            dot.graph.n() % 6 == 4 && dot.graph.is_cubic() && is_three_connected(&dot.graph),
            json!({ "n": dot.graph.n() }),
        );
        rep.check(
            format!("{name} dot: no factor after removing N[x] and a set matched with N(x)"),
            with_factor.is_empty(),
            json!({ "sets": sets.len(), "with_factor": with_factor }),
        );
        if sets.is_empty() {
            rep.notes.push(format!("{name} dot has no set matched with N(x); the statement is vacuous there"));
        }

        let bar = op(&f, FOperator::Bar)?;
        let t = &bar.special;
        let tri = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])].map(|(a, b)| Edge::new(a, b).expect("distinct"));
        rep.check(
            format!("{name} bar: v = 0 (mod 6), cubic, 3-connected"),
            bar.graph.n() % 6 == 0 && bar.graph.is_cubic() && is_three_connected(&bar.graph),
            json!({ "n": bar.graph.n() }),
        );
        rep.check(
            format!("{name} bar: no factor avoiding the leaf triangle"),
            no_factor(&bar.graph, &FactorConstraint::forbidding(tri))?,
            json!({ "triangle": t }),
        );
        if f.is_y() {
            let prism = base_graph("prism").expect("base graph");
            rep.check("Y bar is the prism", is_isomorphic(&bar.graph, &prism).unwrap_or(false), Value::Null);
        }

        let ddot = op(&f, FOperator::Ddot)?;
        let z = ddot.special[3];
        let removed: Vec<usize> = ddot.graph.neighbors(z).iter().copied().chain([z]).collect();
        rep.check(
            format!("{name} ddot: v = 4 (mod 6), cubic, 3-connected"),
            ddot.graph.n() % 6 == 4 && ddot.graph.is_cubic() && is_three_connected(&ddot.graph),
            json!({ "n": ddot.graph.n() }),
        );
        rep.check(
            format!("{name} ddot: no factor after removing N[z]"),
            no_factor(&ddot.graph, &FactorConstraint::removing(removed))?,
            Value::Null,
        );
    }
    Ok(rep)
}

/// `R_s` for `s` in `1..=max_s`: order, cyclic connectivity, and no
/// factor after removing two of `L_i, L_{i+s}, L_{i+2s}`.
pub fn r_s_suite(max_s: usize) -> Result<SuiteReport, ClaimError> {
    let mut rep = SuiteReport::new(SuiteId::RS);
    for s in 1..=max_s {
        let (g, paths) = r_s(s).map_err(|e| ClaimError::LemmaViolation(e.to_string()))?;
        rep.check(format!("R_{s}: cubic with {} vertices", 12 * s), g.is_cubic() && g.n() == 12 * s, json!({ "n": g.n() }));
        let conn = |k| is_cyclically_k_edge_connected(&g, k).map_err(|e| ClaimError::LemmaViolation(e.to_string()));
        if s == 1 {
            let exact = cyclic_edge_connectivity(&g, 7).map_err(|e| ClaimError::LemmaViolation(e.to_string()))?;
            rep.check("R_1: cyclically 5-connected", conn(5)?, json!({ "cyclic_edge_connectivity": exact }));
        } else {
            rep.check(format!("R_{s}: cyclically 6-connected"), conn(6)?, Value::Null);
        }
        let mut with_factor = Vec::new();
        let mut pairs = 0;
        for i in 0..s {
            let idx = [i, i + s, i + 2 * s];
            for (p, q) in [(0, 1), (0, 2), (1, 2)] {
                pairs += 1;
                let (l, l2) = (paths[idx[p]], paths[idx[q]]);
                let removed = l.vertices().into_iter().chain(l2.vertices());
                if !no_factor(&g, &FactorConstraint::removing(removed))? {
                    with_factor.push([idx[p], idx[q]]);
                }
            }
        }
        rep.check(
            format!("R_{s}: no factor after removing L and L'"),
            with_factor.is_empty(),
            json!({ "pairs": pairs, "with_factor": with_factor }),
        );
    }
    Ok(rep)
}

fn theta_composite(a1: &str, a2: &str) -> Result<(Graph, usize), ClaimError> {
    let side = |name: &str| Some(Gadget::new(base_graph(name).expect("base graph"), 0));
    let (g, meta) = y_construction([side(a1), side(a2), None]).map_err(|e| ClaimError::LemmaViolation(e.to_string()))?;
    Ok((g, meta.sides[2][0]))
}

/// `Y(A^1, A^2, θ)` where `θ` contributes the single vertex `x`.
pub fn g_x_w_suite() -> Result<SuiteReport, ClaimError> {
    let mut rep = SuiteReport::new(SuiteId::GXW);
    for (a1, a2) in [("prism", "prism"), ("prism", "K33"), ("K33", "K33")] {
        let (g, x) = theta_composite(a1, a2)?;
        let gc = check_gadget_conditions(&g, x, QueryBudget::unlimited())?;
        rep.check(
            format!("Y({a1},{a2},θ): v = 2 (mod 6), cubic, 3-connected"),
            g.n() % 6 == 2 && gc.cubic_three_connected,
            json!({ "n": g.n() }),
        );
        rep.check(
            format!("Y({a1},{a2},θ): no factor after removing N[x] and any y next to N(x)"),
            gc.h1 == Verdict::Holds && gc.h1_objects > 0,
            json!({ "objects": gc.h1_objects, "witness": gc.witness }),
        );
    }
    // as stated: v(A^1) = 2, v(A^2) = 4 (mod 6)
    for (a1, a2) in [("cube", "K4"), ("cube", "petersen")] {
        let (g, x) = theta_composite(a1, a2)?;
        let removed: Vec<usize> = g.neighbors(x).iter().copied().chain([x]).collect();
        rep.check(
            format!("Y({a1},{a2},θ): no factor after removing N[x]"),
            no_factor(&g, &FactorConstraint::removing(removed))?,
            json!({ "n": g.n() }),
        );
        rep.notes.push(format!(
            "Y({a1},{a2},θ) has v = {} = {} (mod 6), not 4; with v - 4 = {} (mod 3) the missing factor is forced by the order alone",
            g.n(),
            g.n() % 6,
            (g.n() - 4) % 3
        ));
    }
    // v(A^1) = 0, v(A^2) = 2 (mod 6): the residues that give v = 4
    for (a1, a2) in [("prism", "cube"), ("K33", "cube")] {
        let (g, x) = theta_composite(a1, a2)?;
        let removed: Vec<usize> = g.neighbors(x).iter().copied().chain([x]).collect();
        rep.check(
            format!("Y({a1},{a2},θ): v = 4 (mod 6) and no factor after removing N[x]"),
            g.n() % 6 == 4 && no_factor(&g, &FactorConstraint::removing(removed))?,
            json!({ "n": g.n() }),
        );
    }
    Ok(rep)
}

/// Graphs with `v = 0 (mod 6)` where every factor meets every 3-edge cut
/// in one or two edges.
pub fn g_p_k_suite() -> Result<SuiteReport, ClaimError> {
    let mut rep = SuiteReport::new(SuiteId::GPK);
    for s in [1, 2] {
        let (g, _) = r_s(s).map_err(|e| ClaimError::LemmaViolation(e.to_string()))?;
        let cuts = enumerate_3_edge_cuts(&g).map_err(|e| ClaimError::LemmaViolation(e.to_string()))?;
        let all = enumerate_lambda_factors(&g, &FactorConstraint::none(), usize::MAX)?;
        let mut bad = Vec::new();
        for p in &all.factors {
            let es = p.edges();
            for c in &cuts {
                let k = c.edges.iter().filter(|e| es.contains(e)).count();
                if !(1..=2).contains(&k) && bad.len() < 5 {
                    bad.push(json!({ "factor": p, "cut": c.edges.iter().map(|&e| sorted_tuple(e)).collect::<Vec<_>>() }));
                }
            }
        }
        rep.check(
            format!("R_{s}: v = 0 (mod 6), cubic, 3-connected, has a factor"),
            g.n() % 6 == 0 && g.is_cubic() && is_three_connected(&g) && !all.factors.is_empty(),
            json!({ "n": g.n(), "factors": all.factors.len(), "complete": all.complete }),
        );
        rep.check(
            format!("R_{s}: |E(P) ∩ K| in {{1,2}} for every factor P and 3-edge cut K"),
            all.complete && bad.is_empty(),
            json!({ "cuts": cuts.len(), "star_cuts": cuts.iter().filter(|c| c.star_center().is_some()).count(), "violations": bad }),
        );
    }
    Ok(rep)
}

/// Factors of the 78-vertex composite checked by default.
pub const PROJECTION_FACTORS: usize = 200;

/// Gadget `A = Y(prism, prism, θ)` rooted at the θ vertex: both gadget
/// conditions, then every vertex of the prism replaced by `A`. Each factor
/// found within `time` (at most `limit` of them) must pull back through
/// `α⁻¹` to a factor of the prism. Running out of time is reported as a
/// note, not a failure.
pub fn projection_suite(limit: usize, time: Duration) -> Result<SuiteReport, ClaimError> {
    let mut rep = SuiteReport::new(SuiteId::Projection);
    let (a, x) = theta_composite("prism", "prism")?;
    let gc = check_gadget_conditions(&a, x, QueryBudget::unlimited())?;
    rep.check(
        "gadget: v = 2 (mod 6), cubic, 3-connected",
        gc.residue_mod6 == 2 && gc.cubic_three_connected,
        json!({ "n": gc.order }),
    );
    rep.check("gadget: first condition", gc.h1 == Verdict::Holds, json!({ "objects": gc.h1_objects, "witness": gc.witness }));
    rep.check("gadget: second condition", gc.h2 == Verdict::Holds, json!({ "objects": gc.h2_objects, "witness": gc.witness }));

    let b = base_graph("prism").expect("base graph");
    let gadgets: BTreeMap<usize, Gadget> = (0..b.n()).map(|v| (v, Gadget::new(a.clone(), x))).collect();
    let (g, meta) = vertex_replacement(&b, &gadgets).map_err(|e| ClaimError::LemmaViolation(e.to_string()))?;
    rep.check("composite: cubic with 78 vertices", g.is_cubic() && g.n() == 78, json!({ "n": g.n() }));
    let found = enumerate_lambda_factors_limited(&g, &FactorConstraint::none(), limit, SearchLimits::until(Instant::now() + time))?;
    let mut bad = Vec::new();
    let mut images = BTreeSet::new();
    for p in &found.factors {
        let r = check_projection(&g, &meta, &b, p, gc.verified())?;
        match r.projected {
            Some(q) => {
                images.insert(q);
            }
            None => bad.push(json!({ "factor": p, "violation": r.violation })),
        }
    }
    // steer the search through each image edge, both ways
    let mut steered = 0;
    for &e in b.edges() {
        let ae = meta.alpha(e).ok_or_else(|| ClaimError::LemmaViolation(format!("no image for {e}")))?;
        for c in [FactorConstraint::requiring([ae]), FactorConstraint::forbidding([ae])] {
            if let FactorSearch::Found(p) = find_lambda_factor_limited(&g, &c, SearchLimits::until(Instant::now() + time))? {
                steered += 1;
                let r = check_projection(&g, &meta, &b, &p, gc.verified())?;
                match r.projected {
                    Some(q) => {
                        images.insert(q);
                    }
                    None => bad.push(json!({ "factor": p, "violation": r.violation })),
                }
            }
        }
    }
    rep.check(
        "composite: every factor found projects to a factor of the prism",
        bad.is_empty() && !found.factors.is_empty(),
        json!({ "factors": found.factors.len(), "steered": steered, "distinct_images": images.len(), "violations": bad }),
    );
    if !found.complete && found.factors.len() < limit {
        rep.notes.push(format!("search stopped after {:?} with {} factors", time, found.factors.len()));
    }
    Ok(rep)
}

pub fn run_suite(id: SuiteId, seed: u64) -> Result<SuiteReport, ClaimError> {
    match id {
        SuiteId::CutCases => cut_case_suite(200, seed),
        SuiteId::YProfile => y_profile_suite(),
        SuiteId::FFamily => f_family_suite(),
        SuiteId::RS => r_s_suite(2),
        SuiteId::GXW => g_x_w_suite(),
        SuiteId::GPK => g_p_k_suite(),
        SuiteId::Projection => projection_suite(PROJECTION_FACTORS, Duration::from_secs(600)),
    }
}
