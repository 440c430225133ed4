//! Simple undirected graphs with dense vertex indices.
//!
//! A [`Graph`] has no loops and no parallel edges. Its edge set is kept
//! canonical (each pair stored smaller index first, sorted, no duplicates),
//! so two graphs compare equal exactly when they have the same order and
//! the same edge set. Vertex labels record construction provenance and are
//! ignored by equality.

mod edgelist;
mod graph6;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GraphError;

pub use edgelist::{edge_list_decode, edge_list_decode_many, edge_list_encode};
pub use graph6::{graph6_decode, graph6_encode};

/// An undirected edge `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the canonical edge for the pair, or `None` for a loop.
    pub fn new(a: usize, b: usize) -> Option<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    /// Like [`Edge::new`] but panics on a loop; for internal wiring where
    /// distinct endpoints are already guaranteed.
    pub(crate) fn of(a: usize, b: usize) -> Edge {
        Edge::new(a, b).expect("loop edge")
    }

    pub fn ends(&self) -> [usize; 2] {
        [self.u, self.v]
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite `x`, if `x` is an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(d)?;
        Edge::new(a, b).ok_or_else(|| serde::de::Error::custom(format!("loop edge {a}-{b}")))
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    labels: Vec<Option<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges.iter().map(|e| (e.u, e.v)).collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    labels: Vec<Option<String>>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let labels = if self.labels.iter().all(Option::is_none) {
            Vec::new()
        } else {
            self.labels.clone()
        };
        GraphRepr { n: self.n, edges: self.edges.clone(), labels }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        let pairs: Vec<(usize, usize)> = repr.edges.iter().map(|e| (e.u, e.v)).collect();
        let mut g = Graph::from_edge_list(repr.n, &pairs).map_err(serde::de::Error::custom)?;
        if !repr.labels.is_empty() {
            if repr.labels.len() != repr.n {
                return Err(serde::de::Error::custom("labels length differs from n"));
            }
            g.labels = repr.labels;
        }
        Ok(g)
    }
}

/// Degree, neighbourhood and component summary of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicQueries {
    pub degrees: Vec<usize>,
    pub neighbors: Vec<Vec<usize>>,
    pub is_cubic: bool,
    pub residue_mod6: usize,
    pub components: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n], labels: vec![None; n] }
    }

    /// Builds a graph from index pairs. Duplicate pairs collapse to one edge.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut set = BTreeSet::new();
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            set.insert(Edge::new(a, b).ok_or(GraphError::Loop(a))?);
        }
        Ok(Graph::from_canonical(n, set.into_iter().collect(), vec![None; n]))
    }

    /// Builds from in-range edges (any order, duplicates collapse) and a
    /// label table of length `n`.
    pub(crate) fn from_parts(n: usize, edges: impl IntoIterator<Item = Edge>, labels: Vec<Option<String>>) -> Graph {
        assert_eq!(labels.len(), n);
        let set: BTreeSet<Edge> = edges.into_iter().collect();
        debug_assert!(set.iter().all(|e| e.v < n));
        Graph::from_canonical(n, set.into_iter().collect(), labels)
    }

    /// Builds from a sorted duplicate-free edge vector with in-range endpoints.
    fn from_canonical(n: usize, edges: Vec<Edge>, labels: Vec<Option<String>>) -> Graph {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj, labels }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    /// `v(G) mod 6`, the residue every claim guard is keyed on.
    pub fn residue_mod6(&self) -> usize {
        self.n % 6
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels[v] = Some(label.into());
    }

    pub fn with_labels<I, S>(mut self, labels: I) -> Graph
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        for (v, l) in labels.into_iter().enumerate().take(self.n) {
            self.labels[v] = Some(l.into());
        }
        self
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_where(|_| true)
    }

    /// Components of the subgraph induced by the vertices where `keep` holds.
    pub fn components_where(&self, keep: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] || !keep(s) {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in &self.adj[x] {
                    if !seen[y] && keep(y) {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn basic_queries(&self) -> BasicQueries {
        BasicQueries {
            degrees: self.degrees(),
            neighbors: self.adj.clone(),
            is_cubic: self.is_cubic(),
            residue_mod6: self.residue_mod6(),
            components: self.components(),
        }
    }

    /// `D(X, G)`: edges with exactly one endpoint in `set`.
    pub fn boundary(&self, set: &[usize]) -> Vec<Edge> {
        let mut inside = vec![false; self.n];
        for &x in set {
            inside[x] = true;
        }
        self.edges.iter().copied().filter(|e| inside[e.u] != inside[e.v]).collect()
    }

    /// Two-colouring test.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if colour[y] == u8::MAX {
                        colour[y] = 1 - colour[x];
                        stack.push(y);
                    } else if colour[y] == colour[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Induced subgraph on `V(G) \ set` with compacted indices. The second
    /// value maps each old index to its new index (`None` if deleted).
    pub fn delete_vertices(&self, set: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut gone = vec![false; self.n];
        for &x in set {
            if x < self.n {
                gone[x] = true;
            }
        }
        let mut remap = vec![None; self.n];
        let mut next = 0;
        let mut labels = Vec::new();
        for v in 0..self.n {
            if !gone[v] {
                remap[v] = Some(next);
                labels.push(self.labels[v].clone());
                next += 1;
            }
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter_map(|e| match (remap[e.u], remap[e.v]) {
                (Some(a), Some(b)) => Some(Edge::of(a, b)),
                _ => None,
            })
            .collect();
        // remap is monotone, so the filtered edges stay sorted
        (Graph::from_canonical(next, edges, labels), remap)
    }

    /// The same vertex set without the given edges. Edges not in the graph
    /// are ignored.
    pub fn delete_edges(&self, remove: &[Edge]) -> Graph {
        let drop: BTreeSet<Edge> = remove.iter().copied().collect();
        let edges = self.edges.iter().copied().filter(|e| !drop.contains(e)).collect();
        Graph::from_canonical(self.n, edges, self.labels.clone())
    }

    /// Adds edges, rejecting loops, out-of-range endpoints and edges
    /// already present.
    pub fn add_edges(&self, add: &[Edge]) -> Result<Graph, GraphError> {
        let mut set: BTreeSet<Edge> = self.edges.iter().copied().collect();
        for &e in add {
            if e.v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: e.v, n: self.n });
            }
            if !set.insert(e) {
                return Err(GraphError::EdgeList(format!("edge {e} already present")));
            }
        }
        Ok(Graph::from_canonical(self.n, set.into_iter().collect(), self.labels.clone()))
    }

    /// Appends `count` isolated vertices.
    pub fn add_vertices(&self, count: usize) -> Graph {
        let mut labels = self.labels.clone();
        labels.extend(std::iter::repeat_n(None, count));
        Graph::from_canonical(self.n + count, self.edges.clone(), labels)
    }

    /// Replaces `e` by a path of length two through a fresh vertex, which
    /// gets index `n` and is returned alongside.
    pub fn subdivide_edge(&self, e: Edge) -> Result<(Graph, usize), GraphError> {
        if !self.contains_edge(e) {
            return Err(GraphError::MissingEdge(e));
        }
        let w = self.n;
        let mut set: BTreeSet<Edge> = self.edges.iter().copied().collect();
        set.remove(&e);
        set.insert(Edge::of(e.u, w));
        set.insert(Edge::of(e.v, w));
        let mut labels = self.labels.clone();
        labels.push(Some(format!("subdivides {e}")));
        Ok((Graph::from_canonical(self.n + 1, set.into_iter().collect(), labels), w))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut set = BTreeSet::new();
        for e in &self.edges {
            set.insert(Edge::of(perm[e.u], perm[e.v]));
        }
        let mut labels = vec![None; self.n];
        for v in 0..self.n {
            labels[perm[v]] = self.labels[v].clone();
        }
        Graph::from_canonical(self.n, set.into_iter().collect(), labels)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge::of(e.u + shift, e.v + shift)));
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Graph::from_canonical(self.n + other.n, edges, labels)
    }

    /// Checks every structural invariant; used by tests after each edit.
    pub fn validate(&self) -> Result<(), String> {
        if self.adj.len() != self.n || self.labels.len() != self.n {
            return Err("adjacency or label table length differs from n".into());
        }
        for w in self.edges.windows(2) {
            if w[0] >= w[1] {
                return Err(format!("edge list not strictly sorted at {} / {}", w[0], w[1]));
            }
        }
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            if e.u >= e.v {
                return Err(format!("edge {e} not canonical"));
            }
            if e.v >= self.n {
                return Err(format!("edge {e} out of range"));
            }
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        for v in 0..self.n {
            if self.adj[v].len() != deg[v] {
                return Err(format!("adjacency of {v} disagrees with edge list"));
            }
            if self.adj[v].windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {v} not sorted"));
            }
            if self.adj[v].iter().any(|&u| !self.contains_edge(Edge::of(u, v))) {
                return Err(format!("adjacency of {v} lists a non-edge"));
            }
        }
        Ok(())
    }
}
