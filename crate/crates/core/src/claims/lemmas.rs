//! Per-factor structure checks: cut cases at a matching 3-edge cut,
//! component profiles of Y-composites, and projection through vertex
//! replacement.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{QueryBudget, Verdict};
use crate::connectivity::is_three_connected;
use crate::constructions::{ReplacementMeta, SpliceMeta, YMeta};
use crate::error::ClaimError;
use crate::graph::{Edge, Graph};
use crate::packing::{find_lambda_factor_limited, packing_from_edges, FactorConstraint, FactorSearch, Packing};

/// How a factor crosses the cut of `A a σ b B`. `A1_*` when
/// `v(A) = 0 (mod 3)`, `A2_*` when `v(A) = 1 (mod 3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutCase {
    /// One crossing path, two of its vertices in `A - a`.
    A1_1,
    /// Two crossing paths, one `A`-vertex each.
    A1_2,
    /// Three crossing paths: one with one `A`-vertex, two with two.
    A1_3,
    /// No crossing path.
    A2_1,
    /// Two crossing paths, one with one `A`-vertex, one with two.
    A2_2,
    /// Three crossing paths, all with one `A`-vertex or all with two.
    A2_3,
}

fn check_factor(g: &Graph, p: &Packing) -> Result<(), ClaimError> {
    p.validate_factor(g, &FactorConstraint::none()).map_err(ClaimError::NotAFactor)
}

pub fn classify_cut_case(g: &Graph, meta: &SpliceMeta, p: &Packing) -> Result<CutCase, ClaimError> {
    check_factor(g, p)?;
    if meta.residue_a == 2 {
        return Err(ClaimError::SideResidue);
    }
    let side_a: BTreeSet<usize> = meta.side_a.iter().copied().collect();
    let mut one = 0;
    let mut two = 0;
    for path in p.paths() {
        let crossing = meta.cut_edges.iter().filter(|&&e| path.has_edge(e)).count();
        if crossing == 0 {
            continue;
        }
        if crossing > 1 {
            return Err(ClaimError::LemmaViolation(format!("path {path} uses {crossing} cut edges")));
        }
        let in_a: Vec<usize> = path.vertices().into_iter().filter(|v| side_a.contains(v)).collect();
        match in_a.len() {
            1 => one += 1,
            2 if g.has_edge(in_a[0], in_a[1]) && path.has_edge(Edge::new(in_a[0], in_a[1]).expect("distinct")) => {
                two += 1
            }
            _ => return Err(ClaimError::LemmaViolation(format!("path {path} has A-side vertices {in_a:?}"))),
        }
    }
    let case = match (meta.residue_a, one, two) {
        (0, 0, 1) => CutCase::A1_1,
        (0, 2, 0) => CutCase::A1_2,
        (0, 1, 2) => CutCase::A1_3,
        (1, 0, 0) => CutCase::A2_1,
        (1, 1, 1) => CutCase::A2_2,
        (1, 3, 0) | (1, 0, 3) => CutCase::A2_3,
        _ => {
            return Err(ClaimError::LemmaViolation(format!(
                "v(A) = {} (mod 3) with {one} one-vertex and {two} two-vertex crossings",
                meta.residue_a
            )))
        }
    };
    Ok(case)
}

/// `cmp(P^i)`: the number of paths of `p` using an edge of `D^i`.
pub fn y_component_profile(meta: &YMeta, p: &Packing) -> [usize; 3] {
    std::array::from_fn(|i| p.paths().iter().filter(|path| meta.d_sets[i].iter().any(|&e| path.has_edge(e))).count())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionReport {
    /// `α⁻¹(E' ∩ E(P))`, sorted.
    pub pulled_back: Vec<Edge>,
    /// The pulled-back edges read as a packing of `B`, when they form one
    /// and it is a factor.
    pub projected: Option<Packing>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
    /// Set when the gadget conditions were not verified, so a violation
    /// would not contradict anything.
    pub conditional: bool,
}

impl ProjectionReport {
    pub fn projects(&self) -> bool {
        self.projected.is_some()
    }
}

pub fn check_projection(
    g: &Graph,
    meta: &ReplacementMeta,
    b: &Graph,
    p: &Packing,
    gadgets_verified: bool,
) -> Result<ProjectionReport, ClaimError> {
    check_factor(g, p)?;
    let pulled: Vec<Edge> = p.edges().into_iter().filter_map(|e| meta.alpha_inverse(e)).collect::<BTreeSet<_>>().into_iter().collect();
    let mut report = ProjectionReport { pulled_back: pulled.clone(), projected: None, violation: None, conditional: !gadgets_verified };
    match packing_from_edges(&pulled) {
        None => report.violation = Some("pulled-back edges do not split into 3-vertex paths".into()),
        Some(q) => match q.validate_factor(b, &FactorConstraint::none()) {
            Ok(()) => report.projected = Some(q),
            Err(msg) => report.violation = Some(msg),
        },
    }
    Ok(report)
}

/// Solver verdicts for the two gadget conditions at `(A, a)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GadgetCheck {
    pub order: usize,
    pub residue_mod6: usize,
    pub cubic_three_connected: bool,
    /// No factor of `A - (N(a) ∪ a ∪ y)` for each `y` outside `N[a]` next
    /// to `N(a)`.
    pub h1: Verdict,
    pub h1_objects: usize,
    /// `A - {a, z}` for each edge `az` and `A - W` for each 5-vertex path
    /// `W` centred at `a` have factors.
    pub h2: Verdict,
    pub h2_objects: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl GadgetCheck {
    pub fn verified(&self) -> bool {
        self.h1 == Verdict::Holds && self.h2 == Verdict::Holds
    }
}

fn merge(current: Verdict, next: Verdict) -> Verdict {
    match (current, next) {
        (Verdict::Fails, _) | (_, Verdict::Fails) => Verdict::Fails,
        (Verdict::Skipped, _) | (_, Verdict::Skipped) => Verdict::Skipped,
        _ => Verdict::Holds,
    }
}

pub fn check_gadget_conditions(a: &Graph, root: usize, budget: QueryBudget) -> Result<GadgetCheck, ClaimError> {
    if root >= a.n() || a.degree(root) != 3 {
        return Err(ClaimError::NotCubic);
    }
    let nb: Vec<usize> = a.neighbors(root).to_vec();
    let mut out = GadgetCheck {
        order: a.n(),
        residue_mod6: a.residue_mod6(),
        cubic_three_connected: a.is_cubic() && is_three_connected(a),
        h1: Verdict::Holds,
        h1_objects: 0,
        h2: Verdict::Holds,
        h2_objects: 0,
        witness: None,
    };
    let ask = |c: &FactorConstraint| find_lambda_factor_limited(a, c, budget.limits());

    let closed: BTreeSet<usize> = nb.iter().copied().chain([root]).collect();
    let ys: BTreeSet<usize> =
        nb.iter().flat_map(|&u| a.neighbors(u).iter().copied()).filter(|y| !closed.contains(y)).collect();
    for y in ys {
        let c = FactorConstraint::removing(closed.iter().copied().chain([y]));
        let v = match ask(&c)? {
            FactorSearch::NoFactor => Verdict::Holds,
            FactorSearch::Found(p) => {
                out.witness.get_or_insert_with(|| json!({ "h1_y": y, "factor": p }));
                Verdict::Fails
            }
            FactorSearch::Exhausted { .. } => Verdict::Skipped,
        };
        out.h1 = merge(out.h1, v);
        out.h1_objects += 1;
    }

    let mut removals: Vec<Vec<usize>> = nb.iter().map(|&z| vec![root, z]).collect();
    for i in 0..3 {
        for j in i + 1..3 {
            let (p, q) = (nb[i], nb[j]);
            for &p2 in a.neighbors(p).iter().filter(|&&w| w != root && w != q) {
                for &q2 in a.neighbors(q).iter().filter(|&&w| w != root && w != p && w != p2) {
                    removals.push(vec![p2, p, root, q, q2]);
                }
            }
        }
    }
    for r in removals {
        let v = match ask(&FactorConstraint::removing(r.iter().copied()))? {
            FactorSearch::Found(_) => Verdict::Holds,
            FactorSearch::NoFactor => {
                out.witness.get_or_insert_with(|| json!({ "h2_removed": r }));
                Verdict::Fails
            }
            FactorSearch::Exhausted { .. } => Verdict::Skipped,
        };
        out.h2 = merge(out.h2, v);
        out.h2_objects += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{base_graph, splice, y_construction, Gadget};
    use crate::packing::{enumerate_lambda_factors, Path3};

    fn p(a: usize, c: usize, b: usize) -> Path3 {
        Path3::new(a, c, b).unwrap()
    }

    #[test]
    fn prism_cut_cases() {
        let k4 = base_graph("K4").unwrap();
        let (g, meta) = splice(&k4, 0, &k4, 0, None).unwrap();
        assert_eq!(meta.residue_a, 1);
        let triangles = Packing::new(vec![p(0, 1, 2), p(3, 4, 5)]);
        assert_eq!(classify_cut_case(&g, &meta, &triangles).unwrap(), CutCase::A2_1);
        let all = enumerate_lambda_factors(&g, &FactorConstraint::none(), 100).unwrap();
        let cases: BTreeSet<CutCase> = all.factors.iter().map(|f| classify_cut_case(&g, &meta, f).unwrap()).collect();
        assert!(cases.contains(&CutCase::A2_2));
        assert!(cases.iter().all(|c| matches!(c, CutCase::A2_1 | CutCase::A2_2 | CutCase::A2_3)));
        let not_factor = Packing::new(vec![p(0, 1, 2)]);
        assert!(matches!(classify_cut_case(&g, &meta, &not_factor), Err(ClaimError::NotAFactor(_))));
    }

    #[test]
    fn side_residue_needs_swap() {
        let cube = base_graph("cube").unwrap();
        let (g2, meta2) = splice(&cube, 0, &base_graph("prism").unwrap(), 0, None).unwrap();
        assert_eq!(meta2.residue_a, 2);
        let f2 = crate::packing::find_lambda_factor(&g2, &FactorConstraint::none()).unwrap().unwrap();
        assert!(matches!(classify_cut_case(&g2, &meta2, &f2), Err(ClaimError::SideResidue)));
        assert!(classify_cut_case(&g2, &meta2.swapped(), &f2).is_ok());
    }

    #[test]
    fn y_profile_of_small_composite() {
        let prism = base_graph("prism").unwrap();
        let gad = || Some(Gadget::new(prism.clone(), 0));
        let (g, meta) = y_construction([gad(), gad(), gad()]).unwrap();
        let all = enumerate_lambda_factors(&g, &FactorConstraint::none(), usize::MAX).unwrap();
        assert!(all.complete && !all.factors.is_empty());
        for f in &all.factors {
            assert!(y_component_profile(&meta, f).iter().all(|&c| (1..=2).contains(&c)));
        }
    }

    #[test]
    fn gadget_y_prism_prism_theta() {
        let prism = base_graph("prism").unwrap();
        let (a, meta) =
            y_construction([Some(Gadget::new(prism.clone(), 0)), Some(Gadget::new(prism, 0)), None]).unwrap();
        let x = meta.sides[2][0];
        let check = check_gadget_conditions(&a, x, QueryBudget::unlimited()).unwrap();
        assert_eq!(check.residue_mod6, 2);
        assert!(check.cubic_three_connected);
        assert_eq!(check.h1, Verdict::Holds, "{:?}", check.witness);
        assert_eq!(check.h2, Verdict::Holds, "{:?}", check.witness);
        assert!(check.h1_objects > 0 && check.h2_objects > 3);
    }
}
