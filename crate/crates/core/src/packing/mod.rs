//! Λ-packings: 3-vertex paths, packings, constraints, the exact solver and
//! a brute-force oracle.

mod greedy;
mod oracle;
mod solver;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PackingError;
use crate::graph::{Edge, Graph};

pub use greedy::greedy_packing;
pub use oracle::{brute_force_oracle, OracleResult, ORACLE_MAX_VERTICES};
pub use solver::{
    enumerate_lambda_factors, enumerate_lambda_factors_limited, find_lambda_factor,
    find_lambda_factor_limited, max_lambda_packing, max_lambda_packing_constrained,
    FactorEnumeration, FactorSearch, SearchLimits,
};

/// A 3-vertex path `a - center - b`, stored with `a < b`.
///
/// Ordering is by `(a, center, b)`, which gives path sets a canonical
/// sorted form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path3 {
    a: usize,
    center: usize,
    b: usize,
}

impl Path3 {
    /// `None` if the three vertices are not distinct.
    pub fn new(end1: usize, center: usize, end2: usize) -> Option<Path3> {
        if end1 == end2 || end1 == center || end2 == center {
            return None;
        }
        Some(Path3 { a: end1.min(end2), center, b: end1.max(end2) })
    }

    pub(crate) fn of(end1: usize, center: usize, end2: usize) -> Path3 {
        Path3::new(end1, center, end2).expect("degenerate path")
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    /// `[end, center, end]`.
    pub fn vertices(&self) -> [usize; 3] {
        [self.a, self.center, self.b]
    }

    pub fn edges(&self) -> [Edge; 2] {
        [Edge::of(self.a, self.center), Edge::of(self.center, self.b)]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a == v || self.center == v || self.b == v
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges().contains(&e)
    }

    /// Both path edges exist in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.vertices().iter().all(|&v| v < g.n()) && self.edges().iter().all(|&e| g.contains_edge(e))
    }
}

impl fmt::Display for Path3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}-{}", self.a, self.center, self.b)
    }
}

impl Serialize for Path3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.vertices().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Path3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, c, b] = <[usize; 3]>::deserialize(d)?;
        Path3::new(a, c, b).ok_or_else(|| serde::de::Error::custom("path vertices must be distinct"))
    }
}

/// A set of vertex-disjoint [`Path3`]s, kept sorted.
///
/// Serialises as a JSON list of `[end, center, end]` triples.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Path3>", into = "Vec<Path3>")]
pub struct Packing {
    paths: Vec<Path3>,
}

impl Packing {
    pub fn new(mut paths: Vec<Path3>) -> Packing {
        paths.sort_unstable();
        Packing { paths }
    }

    pub fn paths(&self) -> &[Path3] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.paths.iter().flat_map(|p| p.vertices()).collect()
    }

    pub fn edges(&self) -> BTreeSet<Edge> {
        self.paths.iter().flat_map(|p| p.edges()).collect()
    }

    /// The path containing `v`, if any.
    pub fn path_of(&self, v: usize) -> Option<&Path3> {
        self.paths.iter().find(|p| p.contains(v))
    }

    /// Degree of `v` in the packing subgraph (0, 1 or 2).
    pub fn degree_of(&self, v: usize) -> usize {
        match self.path_of(v) {
            None => 0,
            Some(p) if p.center == v => 2,
            Some(_) => 1,
        }
    }

    /// Checks disjointness and that every path lives in `g`.
    pub fn validate_in(&self, g: &Graph) -> Result<(), String> {
        let mut seen = BTreeSet::new();
        for p in &self.paths {
            if !p.is_valid_in(g) {
                return Err(format!("path {p} is not a path of the graph"));
            }
            for v in p.vertices() {
                if !seen.insert(v) {
                    return Err(format!("vertex {v} is covered twice"));
                }
            }
        }
        Ok(())
    }

    /// Checks that the packing is a Λ-factor of `g` under `c`: it covers
    /// exactly the non-removed vertices, avoids forbidden edges, and uses
    /// every required edge.
    pub fn validate_factor(&self, g: &Graph, c: &FactorConstraint) -> Result<(), String> {
        self.validate_in(g)?;
        let covered = self.vertices();
        for v in 0..g.n() {
            match (c.removed.contains(&v), covered.contains(&v)) {
                (true, true) => return Err(format!("removed vertex {v} is covered")),
                (false, false) => return Err(format!("vertex {v} is not covered")),
                _ => {}
            }
        }
        let used = self.edges();
        if let Some(e) = c.forbidden.iter().find(|e| used.contains(e)) {
            return Err(format!("forbidden edge {e} is used"));
        }
        if let Some(e) = c.required.iter().find(|e| !used.contains(e)) {
            return Err(format!("required edge {e} is not used"));
        }
        Ok(())
    }
}

impl From<Vec<Path3>> for Packing {
    fn from(paths: Vec<Path3>) -> Packing {
        Packing::new(paths)
    }
}

impl From<Packing> for Vec<Path3> {
    fn from(p: Packing) -> Vec<Path3> {
        p.paths
    }
}

impl fmt::Display for Packing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.paths.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Removed vertices, forbidden edges and required edges for a constrained
/// factor query.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorConstraint {
    #[serde(default)]
    pub removed: BTreeSet<usize>,
    #[serde(default)]
    pub forbidden: BTreeSet<Edge>,
    #[serde(default)]
    pub required: BTreeSet<Edge>,
}

impl FactorConstraint {
    pub fn none() -> FactorConstraint {
        FactorConstraint::default()
    }

    pub fn removing(vs: impl IntoIterator<Item = usize>) -> FactorConstraint {
        FactorConstraint { removed: vs.into_iter().collect(), ..Default::default() }
    }

    pub fn forbidding(es: impl IntoIterator<Item = Edge>) -> FactorConstraint {
        FactorConstraint { forbidden: es.into_iter().collect(), ..Default::default() }
    }

    pub fn requiring(es: impl IntoIterator<Item = Edge>) -> FactorConstraint {
        FactorConstraint { required: es.into_iter().collect(), ..Default::default() }
    }

    pub fn remove(mut self, vs: impl IntoIterator<Item = usize>) -> Self {
        self.removed.extend(vs);
        self
    }

    pub fn forbid(mut self, es: impl IntoIterator<Item = Edge>) -> Self {
        self.forbidden.extend(es);
        self
    }

    pub fn require(mut self, es: impl IntoIterator<Item = Edge>) -> Self {
        self.required.extend(es);
        self
    }

    /// Number of vertices a factor must cover.
    pub fn remaining(&self, g: &Graph) -> usize {
        g.n() - self.removed.len()
    }

    pub fn check(&self, g: &Graph) -> Result<(), PackingError> {
        if let Some(&v) = self.removed.iter().find(|&&v| v >= g.n()) {
            return Err(PackingError::VertexOutOfRange(v));
        }
        for &e in self.forbidden.iter().chain(&self.required) {
            if !g.contains_edge(e) {
                return Err(PackingError::EdgeNotInGraph(e));
            }
        }
        if let Some(&e) = self.required.intersection(&self.forbidden).next() {
            return Err(PackingError::RequiredForbidden(e));
        }
        if let Some(&e) = self.required.iter().find(|e| self.removed.contains(&e.u) || self.removed.contains(&e.v)) {
            return Err(PackingError::RequiredTouchesRemoved(e));
        }
        Ok(())
    }
}

/// Every 3-vertex path of `g` (each once, in [`Path3`] order).
pub fn all_paths3(g: &Graph) -> Vec<Path3> {
    let mut out = Vec::new();
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                out.push(Path3::of(a, c, b));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Converts an edge set into a packing if it is a disjoint union of
/// 2-edge paths.
pub fn packing_from_edges(edges: &[Edge]) -> Option<Packing> {
    let mut by_vertex: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for e in edges {
        by_vertex.entry(e.u).or_default().push(e.v);
        by_vertex.entry(e.v).or_default().push(e.u);
    }
    let mut paths = Vec::new();
    let mut used = BTreeSet::new();
    for (&v, nb) in &by_vertex {
        match nb.len() {
            1 => {}
            2 => {
                let (a, b) = (nb[0], nb[1]);
                if by_vertex[&a].len() != 1 || by_vertex[&b].len() != 1 {
                    return None;
                }
                paths.push(Path3::new(a, v, b)?);
                used.extend([a, v, b]);
            }
            _ => return None,
        }
    }
    // every degree-1 vertex must hang off some center
    if by_vertex.keys().any(|v| !used.contains(v)) {
        return None;
    }
    Some(Packing::new(paths))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path3_canonical_and_json() {
        let p = Path3::new(5, 2, 1).unwrap();
        assert_eq!(p.vertices(), [1, 2, 5]);
        assert_eq!(p, Path3::new(1, 2, 5).unwrap());
        assert!(Path3::new(1, 1, 2).is_none());
        let pk = Packing::new(vec![Path3::of(3, 4, 5), Path3::of(2, 0, 1)]);
        assert_eq!(serde_json::to_string(&pk).unwrap(), "[[1,0,2],[3,4,5]]");
        let back: Packing = serde_json::from_str("[[3,4,5],[1,0,2]]").unwrap();
        assert_eq!(back, pk);
    }

    #[test]
    fn constraint_checks() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let e = Edge::of(0, 1);
        let c = FactorConstraint::requiring([e]).forbid([e]);
        assert_eq!(c.check(&g), Err(PackingError::RequiredForbidden(e)));
        let c = FactorConstraint::requiring([e]).remove([0]);
        assert_eq!(c.check(&g), Err(PackingError::RequiredTouchesRemoved(e)));
        let c = FactorConstraint::forbidding([Edge::of(0, 3)]);
        assert_eq!(c.check(&g), Err(PackingError::EdgeNotInGraph(Edge::of(0, 3))));
        assert_eq!(FactorConstraint::removing([9]).check(&g), Err(PackingError::VertexOutOfRange(9)));
    }

    #[test]
    fn edges_to_packing() {
        let p = packing_from_edges(&[Edge::of(0, 1), Edge::of(1, 2), Edge::of(4, 5), Edge::of(3, 4)]).unwrap();
        assert_eq!(p, Packing::new(vec![Path3::of(0, 1, 2), Path3::of(3, 4, 5)]));
        assert!(packing_from_edges(&[Edge::of(0, 1)]).is_none());
        assert!(packing_from_edges(&[Edge::of(0, 1), Edge::of(1, 2), Edge::of(2, 3)]).is_none());
        assert_eq!(packing_from_edges(&[]), Some(Packing::default()));
    }
}
