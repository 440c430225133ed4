//! The nineteen Λ-factor claims about cubic 3-connected graphs, the cut
//! case classifier, Y-profile and projection checkers, and sweeps.

mod lemmas;
mod matrix;
pub mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::connectivity::vertex_connectivity;
use crate::error::ClaimError;
use crate::graph::{Edge, Graph};
use crate::packing::{
    brute_force_oracle, find_lambda_factor_limited, FactorConstraint, FactorSearch, Packing, SearchLimits,
    ORACLE_MAX_VERTICES,
};

pub use lemmas::{
    check_gadget_conditions, check_projection, classify_cut_case, y_component_profile, CutCase, GadgetCheck,
    ProjectionReport,
};
pub use matrix::{claim_matrix, corpus_claim_matrix, graph_id, ClaimMatrix, GraphRow, VerdictCounts};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimId {
    Z1,
    Z2,
    Z3,
    Z4,
    Z5,
    Z6,
    Z7,
    Z8,
    Z9,
    T1,
    T2,
    T3,
    T4,
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
}

impl ClaimId {
    pub const ALL: [ClaimId; 19] = [
        ClaimId::Z1,
        ClaimId::Z2,
        ClaimId::Z3,
        ClaimId::Z4,
        ClaimId::Z5,
        ClaimId::Z6,
        ClaimId::Z7,
        ClaimId::Z8,
        ClaimId::Z9,
        ClaimId::T1,
        ClaimId::T2,
        ClaimId::T3,
        ClaimId::T4,
        ClaimId::F1,
        ClaimId::F2,
        ClaimId::F3,
        ClaimId::F4,
        ClaimId::F5,
        ClaimId::F6,
    ];

    /// The `v(G) mod 6` the claim's hypothesis asks for.
    pub fn residue(self) -> usize {
        match self {
            ClaimId::Z1
            | ClaimId::Z2
            | ClaimId::Z3
            | ClaimId::Z4
            | ClaimId::Z5
            | ClaimId::Z6
            | ClaimId::Z7
            | ClaimId::Z8
            | ClaimId::Z9 => 0,
            ClaimId::T1 | ClaimId::T2 | ClaimId::T3 | ClaimId::T4 => 2,
            _ => 4,
        }
    }

    pub fn name(self) -> &'static str {
        const NAMES: [&str; 19] = [
            "z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9", "t1", "t2", "t3", "t4", "f1", "f2", "f3", "f4",
            "f5", "f6",
        ];
        NAMES[ClaimId::ALL.iter().position(|&c| c == self).expect("listed")]
    }

    /// `"all"`, or a comma-separated list such as `"z1,z8,f1"`. A bare
    /// family letter (`"z"`, `"t"`, `"f"`) selects the whole family.
    pub fn parse_set(text: &str) -> Result<Vec<ClaimId>, ClaimError> {
        let mut out = Vec::new();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok.to_ascii_lowercase().as_str() {
                "all" => out.extend(ClaimId::ALL),
                fam @ ("z" | "t" | "f") => {
                    out.extend(ClaimId::ALL.iter().filter(|c| c.name().starts_with(fam)));
                }
                _ => out.push(tok.parse()?),
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = ClaimError;

    fn from_str(s: &str) -> Result<ClaimId, ClaimError> {
        let low = s.trim().to_ascii_lowercase();
        ClaimId::ALL.into_iter().find(|c| c.name() == low).ok_or_else(|| ClaimError::UnknownClaim(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::NotApplicable => "not_applicable",
            Verdict::Skipped => "skipped",
        })
    }
}

/// Limits applied to every single factor query.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryBudget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
}

impl QueryBudget {
    pub fn unlimited() -> QueryBudget {
        QueryBudget::default()
    }

    pub fn millis(ms: u64) -> QueryBudget {
        QueryBudget { time: Some(Duration::from_millis(ms)), nodes: None }
    }

    pub fn nodes(n: u64) -> QueryBudget {
        QueryBudget { time: None, nodes: Some(n) }
    }

    pub fn limits(&self) -> SearchLimits {
        SearchLimits { max_nodes: self.nodes, deadline: self.time.map(|t| Instant::now() + t) }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClaimOptions {
    pub budget: QueryBudget,
    /// Fill `runtime_ms`. Off by default so reports are reproducible
    /// byte for byte.
    pub record_runtime: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub graph: String,
    pub claim: ClaimId,
    pub verdict: Verdict,
    /// Quantified objects fully decided.
    pub objects_checked: usize,
    pub queries: usize,
    /// `holds` on z1: the factor. `fails`: the object and the constraints
    /// with no factor. `skipped`: the first undecided object.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

enum Answer {
    Yes(Packing),
    No,
    Unknown,
}

enum Outcome {
    Ok,
    /// Constraints that were shown to have no factor.
    Fail(Vec<FactorConstraint>),
    Skip,
}

struct Eval<'a> {
    g: &'a Graph,
    budget: QueryBudget,
    queries: usize,
}

impl Eval<'_> {
    fn ask(&mut self, c: &FactorConstraint) -> Result<Answer, ClaimError> {
        self.queries += 1;
        Ok(match find_lambda_factor_limited(self.g, c, self.budget.limits())? {
            FactorSearch::Found(p) => Answer::Yes(p),
            FactorSearch::NoFactor => Answer::No,
            FactorSearch::Exhausted { .. } => Answer::Unknown,
        })
    }

    /// Whether at least `need` of the alternatives admit a factor.
    fn at_least(&mut self, need: usize, alts: Vec<FactorConstraint>) -> Result<Outcome, ClaimError> {
        let mut found = 0;
        let mut unknown = false;
        let total = alts.len();
        let mut failed = Vec::new();
        for (i, c) in alts.into_iter().enumerate() {
            match self.ask(&c)? {
                Answer::Yes(_) => {
                    found += 1;
                    if found >= need {
                        return Ok(Outcome::Ok);
                    }
                }
                Answer::No => failed.push(c),
                Answer::Unknown => unknown = true,
            }
            // remaining alternatives cannot reach `need`
            if found + (total - i - 1) < need && !unknown {
                break;
            }
        }
        Ok(if unknown { Outcome::Skip } else { Outcome::Fail(failed) })
    }

    fn exists(&mut self, alts: Vec<FactorConstraint>) -> Result<Outcome, ClaimError> {
        self.at_least(1, alts)
    }
}

fn others(nb: &[usize], skip: &[usize]) -> Vec<usize> {
    nb.iter().copied().filter(|w| !skip.contains(w)).collect()
}

fn e(a: usize, b: usize) -> Edge {
    Edge::new(a, b).expect("distinct ends")
}

fn removing(vs: &[usize]) -> FactorConstraint {
    FactorConstraint::removing(vs.iter().copied())
}

/// 5-vertex paths `p-a-x-b-q` centred at `x`, with `{a, b}` drawn from
/// `pairs`.
fn five_paths(g: &Graph, x: usize, pairs: &[(usize, usize)]) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for &(a, b) in pairs {
        for &p in &others(g.neighbors(a), &[x, b]) {
            for &q in &others(g.neighbors(b), &[x, a, p]) {
                out.push([p, a, x, b, q]);
            }
        }
    }
    out
}

fn neighbour_pairs(nb: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..nb.len() {
        for j in i + 1..nb.len() {
            out.push((nb[i], nb[j]));
        }
    }
    out
}

/// 4-vertex paths `a-x-b-c` with `x` inner.
fn four_paths_inner(g: &Graph, x: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for &a in g.neighbors(x) {
        for &b in &others(g.neighbors(x), &[a]) {
            for &c in &others(g.neighbors(b), &[x, a]) {
                out.push([a, x, b, c]);
            }
        }
    }
    out
}

/// The objects a claim quantifies over, in a fixed order.
fn objects(g: &Graph, id: ClaimId) -> Result<Vec<Value>, ClaimError> {
    let n = g.n();
    let verts = || (0..n).map(|x| json!({ "x": x }));
    let edges = || g.edges().iter().map(|e| json!({ "edge": [e.u, e.v] }));
    Ok(match id {
        ClaimId::Z1 => vec![Value::Null],
        ClaimId::Z2 | ClaimId::Z3 | ClaimId::Z6 | ClaimId::T2 | ClaimId::F5 => edges().collect(),
        ClaimId::Z4 | ClaimId::Z5 | ClaimId::T1 | ClaimId::T3 | ClaimId::F1 | ClaimId::F3 | ClaimId::F4 => {
            verts().collect()
        }
        ClaimId::Z7 => {
            let es = g.edges();
            let mut out = Vec::new();
            for i in 0..es.len() {
                for j in i + 1..es.len() {
                    out.push(json!({ "edges": [[es[i].u, es[i].v], [es[j].u, es[j].v]] }));
                }
            }
            out
        }
        ClaimId::Z8 => crate::packing::all_paths3(g)
            .into_iter()
            .map(|p| json!({ "path": p.vertices() }))
            .collect(),
        ClaimId::Z9 => {
            let cuts = crate::connectivity::enumerate_3_edge_cuts(g)
                .map_err(|err| ClaimError::LemmaViolation(err.to_string()))?;
            let mut out = Vec::new();
            for cut in cuts {
                for skip in 0..3 {
                    let k: Vec<[usize; 2]> = cut.edges.iter().map(|e| [e.u, e.v]).collect();
                    let s: Vec<[usize; 2]> =
                        k.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &p)| p).collect();
                    out.push(json!({ "cut": k, "s": s }));
                }
            }
            out
        }
        ClaimId::T4 => (0..n)
            .flat_map(|x| g.neighbors(x).iter().map(move |&y| json!({ "x": x, "y": y })))
            .collect(),
        ClaimId::F2 => (0..n)
            .flat_map(|x| g.edges().iter().map(move |e| json!({ "x": x, "edge": [e.u, e.v] })))
            .collect(),
        ClaimId::F6 => {
            let mut out = Vec::new();
            for z in 0..n {
                for &y in g.neighbors(z) {
                    for &x in &others(g.neighbors(y), &[z]) {
                        out.push(json!({ "z": z, "path": [x, y, z] }));
                    }
                }
            }
            out
        }
    })
}

fn num(v: &Value, key: &str) -> usize {
    v[key].as_u64().expect("object field") as usize
}

fn pair(v: &Value) -> Edge {
    e(v[0].as_u64().expect("end") as usize, v[1].as_u64().expect("end") as usize)
}

fn decide(ev: &mut Eval, id: ClaimId, obj: &Value) -> Result<Outcome, ClaimError> {
    let g = ev.g;
    match id {
        ClaimId::Z1 => ev.exists(vec![FactorConstraint::none()]),
        ClaimId::Z2 => ev.exists(vec![FactorConstraint::forbidding([pair(&obj["edge"])])]),
        ClaimId::Z3 => ev.exists(vec![FactorConstraint::requiring([pair(&obj["edge"])])]),
        ClaimId::Z4 | ClaimId::Z5 => {
            let x = num(obj, "x");
            let alts = neighbour_pairs(g.neighbors(x)).into_iter().map(|(a, b)| removing(&[a, x, b])).collect();
            ev.at_least(if id == ClaimId::Z4 { 1 } else { 2 }, alts)
        }
        ClaimId::Z6 => {
            let ed = pair(&obj["edge"]);
            let (x, y) = (ed.u, ed.v);
            let side_y = others(g.neighbors(y), &[x]).into_iter().map(|y2| removing(&[x, y, y2])).collect();
            let side_x = others(g.neighbors(x), &[y]).into_iter().map(|x2| removing(&[x2, x, y])).collect();
            match ev.exists(side_y)? {
                Outcome::Ok => ev.exists(side_x),
                Outcome::Fail(f) => Ok(Outcome::Fail(f)),
                Outcome::Skip => match ev.exists(side_x)? {
                    Outcome::Fail(f) => Ok(Outcome::Fail(f)),
                    _ => Ok(Outcome::Skip),
                },
            }
        }
        ClaimId::Z7 => {
            let es = obj["edges"].as_array().expect("two edges");
            ev.exists(vec![FactorConstraint::forbidding([pair(&es[0]), pair(&es[1])])])
        }
        ClaimId::Z8 => {
            let p: Vec<usize> = obj["path"].as_array().expect("path").iter().map(|v| v.as_u64().unwrap() as usize).collect();
            ev.exists(vec![removing(&p)])
        }
        ClaimId::Z9 => {
            let k: Vec<Edge> = obj["cut"].as_array().expect("cut").iter().map(pair).collect();
            let s: Vec<Edge> = obj["s"].as_array().expect("s").iter().map(pair).collect();
            let rest: Vec<Edge> = k.iter().copied().filter(|x| !s.contains(x)).collect();
            ev.exists(vec![FactorConstraint::requiring(s).forbid(rest)])
        }
        ClaimId::T1 => {
            let x = num(obj, "x");
            ev.exists(g.neighbors(x).iter().map(|&y| removing(&[x, y])).collect())
        }
        ClaimId::T2 => {
            let ed = pair(&obj["edge"]);
            ev.exists(vec![removing(&[ed.u, ed.v])])
        }
        ClaimId::T3 => {
            let x = num(obj, "x");
            let ws = five_paths(g, x, &neighbour_pairs(g.neighbors(x)));
            ev.exists(ws.iter().map(|w| removing(w)).collect())
        }
        ClaimId::T4 => {
            let (x, y) = (num(obj, "x"), num(obj, "y"));
            let rest = others(g.neighbors(x), &[y]);
            let ws = five_paths(g, x, &neighbour_pairs(&rest));
            ev.exists(ws.iter().map(|w| removing(w)).collect())
        }
        ClaimId::F1 => ev.exists(vec![removing(&[num(obj, "x")])]),
        ClaimId::F2 => {
            let x = num(obj, "x");
            let ed = pair(&obj["edge"]);
            let c = if ed.touches(x) { removing(&[x]) } else { removing(&[x]).forbid([ed]) };
            ev.exists(vec![c])
        }
        ClaimId::F3 => {
            let x = num(obj, "x");
            ev.exists(four_paths_inner(g, x).iter().map(|z| removing(z)).collect())
        }
        ClaimId::F4 => {
            let x = num(obj, "x");
            let mut alts = Vec::new();
            for &y in g.neighbors(x) {
                for z in four_paths_inner(g, x) {
                    let uses_xy = z.windows(2).any(|w| e(w[0], w[1]) == e(x, y));
                    if !uses_xy {
                        alts.push(removing(&z));
                    }
                }
            }
            ev.exists(alts)
        }
        ClaimId::F5 => {
            let ed = pair(&obj["edge"]);
            let (x, y) = (ed.u, ed.v);
            let mut alts = Vec::new();
            for &a in &others(g.neighbors(x), &[y]) {
                for &b in &others(g.neighbors(y), &[x, a]) {
                    alts.push(removing(&[a, x, y, b]));
                }
            }
            ev.exists(alts)
        }
        ClaimId::F6 => {
            let p: Vec<usize> = obj["path"].as_array().expect("path").iter().map(|v| v.as_u64().unwrap() as usize).collect();
            let (x, y, z) = (p[0], p[1], p[2]);
            let alts = others(g.neighbors(x), &[y, z]).into_iter().map(|w| removing(&[w, x, y, z])).collect();
            ev.exists(alts)
        }
    }
}

/// Fails unless `g` is cubic and 3-connected.
pub fn require_cubic_three_connected(g: &Graph) -> Result<(), ClaimError> {
    if !g.is_cubic() {
        return Err(ClaimError::NotCubic);
    }
    let k = vertex_connectivity(g).map_err(|err| ClaimError::LemmaViolation(err.to_string()))?;
    if k < 3 {
        return Err(ClaimError::NotThreeConnected(k));
    }
    Ok(())
}

/// Re-derives a no-factor result with the brute-force oracle when the
/// graph is small enough. `None` when it is not.
fn oracle_confirms(g: &Graph, failed: &[FactorConstraint]) -> Result<Option<bool>, ClaimError> {
    if g.n() > ORACLE_MAX_VERTICES {
        return Ok(None);
    }
    for c in failed {
        if !brute_force_oracle(g, c)?.factors.is_empty() {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

pub fn evaluate_claim(g: &Graph, id: ClaimId, options: &ClaimOptions) -> Result<ClaimReport, ClaimError> {
    require_cubic_three_connected(g)?;
    let start = Instant::now();
    let mut report = if g.n() % 6 == id.residue() {
        run_claim(g, id, options)?
    } else {
        ClaimReport {
            graph: graph_id(g),
            claim: id,
            verdict: Verdict::NotApplicable,
            objects_checked: 0,
            queries: 0,
            witness: None,
            runtime_ms: None,
        }
    };
    if options.record_runtime {
        report.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

/// The claim body alone: no input validation, no residue guard.
fn run_claim(g: &Graph, id: ClaimId, options: &ClaimOptions) -> Result<ClaimReport, ClaimError> {
    let mut report = ClaimReport {
        graph: graph_id(g),
        claim: id,
        verdict: Verdict::Holds,
        objects_checked: 0,
        queries: 0,
        witness: None,
        runtime_ms: None,
    };
    let mut ev = Eval { g, budget: options.budget, queries: 0 };
    for obj in objects(g, id)? {
        match decide(&mut ev, id, &obj)? {
            Outcome::Ok => report.objects_checked += 1,
            Outcome::Fail(failed) => {
                report.verdict = Verdict::Fails;
                let confirmed = oracle_confirms(g, &failed)?;
                report.witness = Some(json!({
                    "object": obj,
                    "no_factor": failed,
                    "oracle_confirmed": confirmed,
                }));
                break;
            }
            Outcome::Skip => {
                if report.verdict == Verdict::Holds {
                    report.witness = Some(json!({ "undecided": obj }));
                }
                report.verdict = Verdict::Skipped;
            }
        }
    }
    if report.verdict == Verdict::Holds && id == ClaimId::Z1 {
        if let Answer::Yes(p) = ev.ask(&FactorConstraint::none())? {
            report.witness = Some(json!({ "factor": p }));
        }
    }
    report.queries = ev.queries;
    Ok(report)
}

/// The z4 condition at `x` read through whole-graph factors: some factor
/// of `G` has `x` as a path centre. Exhaustive over all factors.
pub fn centre_in_some_factor(g: &Graph, x: usize) -> Result<bool, ClaimError> {
    let all = crate::packing::enumerate_lambda_factors(g, &FactorConstraint::none(), usize::MAX)?;
    Ok(all.factors.iter().any(|p| p.degree_of(x) == 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::base_graph;

    fn run(name: &str, id: ClaimId) -> ClaimReport {
        evaluate_claim(&base_graph(name).unwrap(), id, &ClaimOptions::default()).unwrap()
    }

    #[test]
    fn ids_parse() {
        assert_eq!(ClaimId::parse_set("all").unwrap().len(), 19);
        assert_eq!(ClaimId::parse_set("z1, F6,z1").unwrap(), vec![ClaimId::Z1, ClaimId::F6]);
        assert_eq!(ClaimId::parse_set("t").unwrap().len(), 4);
        assert!(matches!(ClaimId::parse_set("q7"), Err(ClaimError::UnknownClaim(_))));
        assert_eq!(serde_json::to_string(&ClaimId::T3).unwrap(), "\"t3\"");
    }

    #[test]
    fn small_examples() {
        let z1 = run("prism", ClaimId::Z1);
        assert_eq!(z1.verdict, Verdict::Holds);
        assert!(z1.witness.is_some());
        let f1 = run("petersen", ClaimId::F1);
        assert_eq!(f1.verdict, Verdict::Holds);
        assert_eq!(f1.objects_checked, 10);
        assert_eq!(run("prism", ClaimId::T1).verdict, Verdict::NotApplicable);
        assert!(matches!(
            evaluate_claim(&base_graph("y").unwrap(), ClaimId::Z1, &ClaimOptions::default()),
            Err(ClaimError::NotCubic)
        ));
    }

    #[test]
    fn fails_carries_a_witness() {
        let k4 = base_graph("K4").unwrap();
        let r = run_claim(&k4, ClaimId::Z1, &ClaimOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fails);
        let w = r.witness.unwrap();
        assert_eq!(w["oracle_confirmed"], json!(true));
        assert_eq!(w["no_factor"].as_array().unwrap().len(), 1);
        let prism = base_graph("prism").unwrap();
        assert_eq!(evaluate_claim(&prism, ClaimId::Z9, &ClaimOptions::default()).unwrap().verdict, Verdict::Holds);
    }

    #[test]
    fn budget_zero_skips() {
        let opts = ClaimOptions { budget: QueryBudget::nodes(0), record_runtime: false };
        let r = evaluate_claim(&base_graph("prism").unwrap(), ClaimId::Z2, &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
    }
}
