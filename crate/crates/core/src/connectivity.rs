//! Vertex connectivity, 3-edge-cut enumeration and bounded cyclic edge
//! connectivity.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::ConnectivityError;
use crate::graph::{Edge, Graph};

/// An edge set whose removal disconnects the graph, with the resulting
/// vertex bipartition. `side_a` is the component holding the smallest
/// vertex; `side_b` is everything else (possibly several components).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub edges: Vec<Edge>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub component_count: usize,
}

impl EdgeCut {
    /// No two cut edges share an endpoint.
    pub fn is_matching(&self) -> bool {
        for (i, e) in self.edges.iter().enumerate() {
            if self.edges[i + 1..].iter().any(|f| e.shares_vertex(f)) {
                return false;
            }
        }
        true
    }

    /// The vertex `x` if the cut is exactly `D(x)`.
    pub fn star_center(&self) -> Option<usize> {
        if self.side_a.len() == 1 {
            Some(self.side_a[0])
        } else if self.side_b.len() == 1 {
            Some(self.side_b[0])
        } else {
            None
        }
    }
}

/// Disjoint-set forest used by the subset scans.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a] = b;
        }
    }
}

/// Calls `f` on every `k`-subset of `0..m` in lexicographic order until it
/// returns `false`. Returns `false` if stopped early.
pub(crate) fn for_each_combination(m: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > m {
        return true;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return false;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
            return true;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Unit-capacity flow network on the split-vertex graph.
struct FlowNet {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    next: Vec<usize>,
}

const NIL: usize = usize::MAX;

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet { head: vec![NIL; nodes], to: Vec::new(), cap: Vec::new(), next: Vec::new() }
    }

    fn arc(&mut self, a: usize, b: usize, c: u32) {
        for (x, y, cc) in [(a, b, c), (b, a, 0)] {
            self.to.push(y);
            self.cap.push(cc);
            self.next.push(self.head[x]);
            self.head[x] = self.to.len() - 1;
        }
    }

    /// Augments along BFS paths until `limit` units flow or none remain.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut pred = vec![NIL; self.head.len()];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = NIL);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                let mut a = self.head[x];
                while a != NIL {
                    let y = self.to[a];
                    if self.cap[a] > 0 && y != s && pred[y] == NIL {
                        pred[y] = a;
                        if y == t {
                            reached = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                    a = self.next[a];
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut y = t;
            while y != s {
                let a = pred[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths, capped at
/// `limit`. `s` and `t` must be distinct and non-adjacent.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.n();
    let big = n as u32 + 1;
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.arc(2 * v, 2 * v + 1, c);
    }
    for e in g.edges() {
        net.arc(2 * e.u + 1, 2 * e.v, 1);
        net.arc(2 * e.v + 1, 2 * e.u, 1);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Vertex connectivity: the minimum over non-adjacent pairs of the number
/// of vertex-disjoint paths; `n - 1` for complete graphs and 0 when the
/// graph is disconnected.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, ConnectivityError> {
    let n = g.n();
    if n < 2 {
        return Err(ConnectivityError::TooFewVertices(n));
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = g.degrees().into_iter().min().unwrap_or(0);
    if g.edge_count() == n * (n - 1) / 2 {
        return Ok(n - 1);
    }
    for s in 0..n {
        for t in s + 1..n {
            if best == 0 {
                return Ok(0);
            }
            if g.has_edge(s, t) {
                continue;
            }
            best = best.min(local_vertex_connectivity(g, s, t, best));
        }
    }
    Ok(best)
}

/// `vertex_connectivity(g) >= k`, with an early exit.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if k == 0 {
        return true;
    }
    // nothing on n vertices is more than (n-1)-connected
    if n <= k || !g.is_connected() {
        return false;
    }
    if g.degrees().into_iter().any(|d| d < k) {
        return false;
    }
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) && local_vertex_connectivity(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

pub fn is_three_connected(g: &Graph) -> bool {
    is_k_connected(g, 3)
}

fn components_without(g: &Graph, removed: &[usize]) -> Dsu {
    let mut dsu = Dsu::new(g.n());
    let mut skip = removed.iter().peekable();
    for (i, e) in g.edges().iter().enumerate() {
        if skip.peek() == Some(&&i) {
            skip.next();
            continue;
        }
        dsu.union(e.u, e.v);
    }
    dsu
}

/// Every 3-subset of `E(G)` whose removal disconnects `G`, ordered by edge
/// triple.
pub fn enumerate_3_edge_cuts(g: &Graph) -> Result<Vec<EdgeCut>, ConnectivityError> {
    if !g.is_connected() {
        return Err(ConnectivityError::Disconnected);
    }
    let edges = g.edges();
    let n = g.n();
    let mut out = Vec::new();
    for_each_combination(edges.len(), 3, |idx| {
        let mut dsu = components_without(g, idx);
        let root0 = dsu.find(0);
        let mut roots: Vec<usize> = (0..n).map(|v| dsu.find(v)).collect();
        let side_a: Vec<usize> = (0..n).filter(|&v| roots[v] == root0).collect();
        if side_a.len() < n {
            let side_b: Vec<usize> = (0..n).filter(|&v| roots[v] != root0).collect();
            roots.sort_unstable();
            roots.dedup();
            out.push(EdgeCut {
                edges: idx.iter().map(|&i| edges[i]).collect(),
                side_a,
                side_b,
                component_count: roots.len(),
            });
        }
        true
    });
    Ok(out)
}

/// Whether removing the edges at positions `idx` (into `g.edges()`)
/// leaves at least two components that each contain a cycle.
fn separates_two_cycles(g: &Graph, idx: &[usize]) -> bool {
    let n = g.n();
    let mut dsu = components_without(g, idx);
    let mut verts = vec![0usize; n];
    let mut edges_in = vec![0usize; n];
    for v in 0..n {
        verts[dsu.find(v)] += 1;
    }
    let mut skip = idx.iter().peekable();
    for (i, e) in g.edges().iter().enumerate() {
        if skip.peek() == Some(&&i) {
            skip.next();
            continue;
        }
        edges_in[dsu.find(e.u)] += 1;
    }
    (0..n).filter(|&r| verts[r] > 0 && edges_in[r] >= verts[r]).count() >= 2
}

/// Size of the smallest cyclic edge cut if it is below `max_k`, `None`
/// otherwise (including graphs without two disjoint cycles).
pub fn cyclic_edge_connectivity(g: &Graph, max_k: usize) -> Result<Option<usize>, ConnectivityError> {
    if max_k > 7 {
        return Err(ConnectivityError::KTooLarge(max_k));
    }
    if !g.is_connected() {
        return Err(ConnectivityError::Disconnected);
    }
    for size in 1..max_k {
        let clean = for_each_combination(g.edge_count(), size, |idx| !separates_two_cycles(g, idx));
        if !clean {
            return Ok(Some(size));
        }
    }
    Ok(None)
}

/// True iff no edge set of size `< k` separates `G` into two parts that
/// each contain a cycle.
pub fn is_cyclically_k_edge_connected(g: &Graph, k: usize) -> Result<bool, ConnectivityError> {
    Ok(cyclic_edge_connectivity(g, k)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn prism() -> Graph {
        let pairs = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];
        Graph::from_edge_list(6, &pairs).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    #[test]
    fn combinations_enumerate_binomials() {
        let mut count = 0;
        for_each_combination(6, 3, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 20);
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut zero = 0;
        for_each_combination(3, 0, |c| {
            assert!(c.is_empty());
            zero += 1;
            true
        });
        assert_eq!(zero, 1);
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&k4()), Ok(3));
        assert_eq!(vertex_connectivity(&prism()), Ok(3));
        assert_eq!(vertex_connectivity(&cycle(6)), Ok(2));
        assert_eq!(vertex_connectivity(&Graph::empty(1)), Err(ConnectivityError::TooFewVertices(1)));
        assert_eq!(vertex_connectivity(&Graph::empty(3)), Ok(0));
        let path = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(vertex_connectivity(&path), Ok(1));
        assert!(is_three_connected(&prism()));
        assert!(!is_three_connected(&cycle(6)));
    }

    #[test]
    fn three_edge_cut_examples() {
        let cuts = enumerate_3_edge_cuts(&k4()).unwrap();
        assert_eq!(cuts.len(), 4);
        assert!(cuts.iter().all(|c| c.star_center().is_some()));

        let cuts = enumerate_3_edge_cuts(&prism()).unwrap();
        assert_eq!(cuts.len(), 7);
        let matching: Vec<_> = cuts.iter().filter(|c| c.star_center().is_none()).collect();
        assert_eq!(matching.len(), 1);
        assert_eq!(matching[0].edges, vec![Edge::of(0, 3), Edge::of(1, 4), Edge::of(2, 5)]);
        assert!(matching[0].is_matching());
        assert_eq!(matching[0].side_a, vec![0, 1, 2]);

        assert_eq!(enumerate_3_edge_cuts(&cycle(6)).unwrap().len(), 20);
        assert_eq!(
            enumerate_3_edge_cuts(&Graph::empty(2)),
            Err(ConnectivityError::Disconnected)
        );
    }

    #[test]
    fn cyclic_examples() {
        for k in 1..=7 {
            assert_eq!(is_cyclically_k_edge_connected(&k4(), k), Ok(true));
        }
        assert_eq!(is_cyclically_k_edge_connected(&prism(), 4), Ok(false));
        assert_eq!(is_cyclically_k_edge_connected(&prism(), 3), Ok(true));
        assert_eq!(cyclic_edge_connectivity(&prism(), 7), Ok(Some(3)));
        assert_eq!(is_cyclically_k_edge_connected(&prism(), 8), Err(ConnectivityError::KTooLarge(8)));
    }
}
