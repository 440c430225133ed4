//! The recursive family of almost-cubic graphs with three leaves, built
//! from `Y` and `Z` by triangle replacement, and its three closures.

use serde::{Deserialize, Serialize};

use super::{base_graph, find_triangles, provenance};
use crate::error::ConstructionError;
use crate::graph::{Edge, Graph};

/// How a family member was built. Triangle indices refer to the graph
/// produced by the `a` subtree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BuildTree {
    BaseY,
    BaseZ,
    Compose { a: Box<BuildTree>, triangle: [usize; 3], b: Box<BuildTree> },
}

/// A family member together with its ordered leaves and build tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FFamilyCert {
    pub graph: Graph,
    pub leaves: [usize; 3],
    pub tree: BuildTree,
}

impl FFamilyCert {
    pub fn y_base() -> FFamilyCert {
        let graph = base_graph("Y_base").expect("static");
        FFamilyCert { graph, leaves: [3, 4, 5], tree: BuildTree::BaseY }
    }

    pub fn z_base() -> FFamilyCert {
        let graph = base_graph("Z_base").expect("static");
        FFamilyCert { graph, leaves: [21, 22, 23], tree: BuildTree::BaseZ }
    }

    /// Replays a build tree.
    pub fn from_tree(tree: &BuildTree) -> Result<FFamilyCert, ConstructionError> {
        match tree {
            BuildTree::BaseY => Ok(FFamilyCert::y_base()),
            BuildTree::BaseZ => Ok(FFamilyCert::z_base()),
            BuildTree::Compose { a, triangle, b } => {
                f_compose(&FFamilyCert::from_tree(a)?, *triangle, &FFamilyCert::from_tree(b)?)
            }
        }
    }

    /// The 6-vertex member `Y` (the only one with 6 vertices).
    pub fn is_y(&self) -> bool {
        self.graph.n() == 6
    }

    /// Checks the structural invariants: three leaves matching the
    /// recorded ones, all other degrees 3, order divisible by 6, the
    /// build tree replays to this graph, and (unless this is `Y`) every
    /// triangle has three independent outside neighbours, a matching
    /// boundary, and a unique 6-cycle witness.
    pub fn validate(&self) -> Result<(), ConstructionError> {
        let g = &self.graph;
        let leaves: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
        if leaves.len() != 3 {
            return Err(ConstructionError::LeafCount(leaves.len()));
        }
        let mut recorded = self.leaves;
        recorded.sort_unstable();
        if leaves != recorded {
            return Err(ConstructionError::InvalidCertificate(format!(
                "recorded leaves {:?} but degree-1 vertices are {leaves:?}",
                self.leaves
            )));
        }
        if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 1 && g.degree(v) != 3) {
            return Err(ConstructionError::NotDegreeThree { vertex: v, degree: g.degree(v) });
        }
        if !g.n().is_multiple_of(6) {
            return Err(ConstructionError::InvalidCertificate(format!("order {} is not 0 mod 6", g.n())));
        }
        let replay = FFamilyCert::from_tree(&self.tree)?;
        if replay.graph != *g || replay.leaves != self.leaves {
            return Err(ConstructionError::InvalidCertificate("build tree does not reproduce the graph".into()));
        }
        if !self.is_y() {
            let triangles = find_triangles(g);
            if triangles.is_empty() {
                return Err(ConstructionError::InvalidCertificate("no triangles".into()));
            }
            for t in triangles {
                let (outside, boundary) = triangle_neighbourhood(g, t)?;
                if outside.iter().enumerate().any(|(i, &p)| outside[i + 1..].iter().any(|&q| g.has_edge(p, q))) {
                    return Err(ConstructionError::InvalidCertificate(format!(
                        "neighbours of triangle {t:?} are not independent"
                    )));
                }
                if !is_matching(&boundary) {
                    return Err(ConstructionError::NotMatchingCut(boundary));
                }
                t_cycle_and_cut(self, t)?;
            }
        }
        Ok(())
    }
}

fn is_matching(edges: &[Edge]) -> bool {
    edges.iter().enumerate().all(|(i, e)| edges[i + 1..].iter().all(|f| !e.shares_vertex(f)))
}

/// For a triangle `t = [t_1, t_2, t_3]` (sorted): the outside neighbour of
/// each corner, in corner order, and `D(T)`. Fails unless each corner has
/// exactly one outside neighbour and the three are distinct.
fn triangle_neighbourhood(g: &Graph, t: [usize; 3]) -> Result<([usize; 3], Vec<Edge>), ConstructionError> {
    let mut t = t;
    t.sort_unstable();
    if t.iter().any(|&v| v >= g.n()) || !(g.has_edge(t[0], t[1]) && g.has_edge(t[1], t[2]) && g.has_edge(t[0], t[2]))
    {
        return Err(ConstructionError::NotTriangle(t));
    }
    let mut outside = [0; 3];
    for (i, &c) in t.iter().enumerate() {
        let rest: Vec<usize> = g.neighbors(c).iter().copied().filter(|w| !t.contains(w)).collect();
        if rest.len() != 1 {
            return Err(ConstructionError::BadTriangleNeighbourhood);
        }
        outside[i] = rest[0];
    }
    if outside[0] == outside[1] || outside[0] == outside[2] || outside[1] == outside[2] {
        return Err(ConstructionError::BadTriangleNeighbourhood);
    }
    Ok((outside, g.boundary(&t)))
}

/// Every 6-cycle of `g`, as a vertex sequence starting at its smallest
/// vertex, each listed once.
fn six_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().expect("nonempty");
        if path.len() == 6 {
            // one orientation only
            if g.has_edge(last, start) && path[1] < path[5] {
                out.push(path.clone());
            }
            return;
        }
        for &w in g.neighbors(last) {
            if w > start && !path.contains(&w) {
                path.push(w);
                extend(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        extend(g, &mut vec![s], &mut out);
    }
    out
}

/// `C(T, G)` and `M(T, G)`: the unique 6-cycle containing `N(T)` whose
/// union with `T` has a 3-edge matching boundary, and that boundary.
pub fn t_cycle_and_cut(f: &FFamilyCert, t: [usize; 3]) -> Result<(Vec<usize>, Vec<Edge>), ConstructionError> {
    let g = &f.graph;
    let (outside, _) = triangle_neighbourhood(g, t)?;
    let mut found = Vec::new();
    for c in six_cycles(g) {
        if !outside.iter().all(|v| c.contains(v)) {
            continue;
        }
        let mut set: Vec<usize> = c.iter().chain(t.iter()).copied().collect();
        set.sort_unstable();
        set.dedup();
        let cut = g.boundary(&set);
        if cut.len() == 3 && is_matching(&cut) {
            found.push((c, cut));
        }
    }
    match found.len() {
        0 => Err(ConstructionError::NoSixCycle),
        1 => Ok(found.pop().expect("one")),
        k => Err(ConstructionError::SixCycleNotUnique(k)),
    }
}

/// `A(T, B)`: replaces triangle `T` of `A` by `B - L(B)`, identifying the
/// outside neighbour of the `i`-th (sorted) corner of `T` with the `i`-th
/// leaf of `B`. Vertices of `A - T` come first in order, then the
/// non-leaf vertices of `B`. The leaves are those of `A`.
pub fn f_compose(a: &FFamilyCert, t: [usize; 3], b: &FFamilyCert) -> Result<FFamilyCert, ConstructionError> {
    let mut t = t;
    t.sort_unstable();
    let (outside, _) = triangle_neighbourhood(&a.graph, t)?;
    let (a_rest, map_a) = a.graph.delete_vertices(&t);
    let (b_rest, map_b) = b.graph.delete_vertices(&b.leaves);
    let shift = a_rest.n();
    let n = shift + b_rest.n();
    // where each vertex of B lands
    let place_b = |v: usize| -> usize {
        match b.leaves.iter().position(|&l| l == v) {
            Some(i) => map_a[outside[i]].expect("outside vertex survives"),
            None => map_b[v].expect("non-leaf survives") + shift,
        }
    };
    let mut edges: Vec<Edge> = a_rest.edges().to_vec();
    for e in b.graph.edges() {
        edges.push(Edge::of(place_b(e.u), place_b(e.v)));
    }
    let mut labels: Vec<Option<String>> = a_rest.labels().to_vec();
    labels.extend((0..b_rest.n()).map(|v| provenance("B", &b_rest, v)));
    let graph = Graph::from_parts(n, edges, labels);
    let leaves = a.leaves.map(|l| map_a[l].expect("leaves are not triangle corners"));
    let expected = a.graph.n() + b.graph.n() - 6;
    if graph.n() != expected || graph.edge_count() != a.graph.edge_count() + b.graph.edge_count() - 6 {
        return Err(ConstructionError::InvalidCertificate("composition collapsed edges".into()));
    }
    let tree = BuildTree::Compose { a: Box::new(a.tree.clone()), triangle: t, b: Box::new(b.tree.clone()) };
    Ok(FFamilyCert { graph, leaves, tree })
}

/// The three closures of a family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FOperator {
    /// Identify the leaves into one new vertex `x`.
    Dot,
    /// Add a triangle on the leaves.
    Bar,
    /// `Bar`, then subdivide each triangle edge by `v_e` and join the
    /// `v_e` to a new vertex `z`.
    Ddot,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FOperatorOutput {
    pub graph: Graph,
    /// `Dot`: `[x]` (the last vertex). `Bar`: the leaves, which now form
    /// the triangle. `Ddot`: `[v_01, v_02, v_12, z]`, the last four
    /// vertices, where `v_ij` subdivides the edge between leaves `i`, `j`.
    pub special: Vec<usize>,
}

pub fn f_operator(f: &FFamilyCert, op: FOperator) -> Result<FOperatorOutput, ConstructionError> {
    let g = &f.graph;
    let [l0, l1, l2] = f.leaves;
    match op {
        FOperator::Dot => {
            let (rest, map) = g.delete_vertices(&f.leaves);
            let x = rest.n();
            let mut edges = rest.edges().to_vec();
            for l in f.leaves {
                let p = g.neighbors(l)[0];
                edges.push(Edge::of(map[p].expect("leaf neighbour is not a leaf"), x));
            }
            let mut labels = rest.labels().to_vec();
            labels.push(Some("x".into()));
            let graph = Graph::from_parts(x + 1, edges, labels);
            if graph.edge_count() != g.edge_count() {
                return Err(ConstructionError::InvalidCertificate("two leaves share a neighbour".into()));
            }
            Ok(FOperatorOutput { graph, special: vec![x] })
        }
        FOperator::Bar => {
            let graph = g.add_edges(&[Edge::of(l0, l1), Edge::of(l0, l2), Edge::of(l1, l2)])?;
            Ok(FOperatorOutput { graph, special: f.leaves.to_vec() })
        }
        FOperator::Ddot => {
            let bar = f_operator(f, FOperator::Bar)?.graph;
            let n = bar.n();
            let mut edges: Vec<Edge> = bar.edges().to_vec();
            let tri = [(l0, l1), (l0, l2), (l1, l2)];
            edges.retain(|e| !tri.iter().any(|&(p, q)| *e == Edge::of(p, q)));
            for (k, &(p, q)) in tri.iter().enumerate() {
                edges.extend([Edge::of(p, n + k), Edge::of(q, n + k), Edge::of(n + k, n + 3)]);
            }
            let mut labels = bar.labels().to_vec();
            labels.extend(["v_e1", "v_e2", "v_e3", "z"].map(|s| Some(s.to_owned())));
            let graph = Graph::from_parts(n + 4, edges, labels);
            Ok(FOperatorOutput { graph, special: vec![n, n + 1, n + 2, n + 3] })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_three_connected;

    #[test]
    fn bases_validate() {
        FFamilyCert::y_base().validate().unwrap();
        FFamilyCert::z_base().validate().unwrap();
    }

    #[test]
    fn y_composed_with_y_is_y() {
        let y = FFamilyCert::y_base();
        let yy = f_compose(&y, [0, 1, 2], &y).unwrap();
        // the old leaves come first, the triangle after them
        assert_eq!(yy.graph, y.graph.permute(&[3, 4, 5, 0, 1, 2]));
        assert_eq!(yy.leaves, [0, 1, 2]);
        assert_eq!(yy.graph.n(), 6);
        yy.validate().unwrap();
    }

    #[test]
    fn z_with_y_in_a_triangle() {
        let z = FFamilyCert::z_base();
        let m = f_compose(&z, [0, 1, 2], &FFamilyCert::y_base()).unwrap();
        assert_eq!(m.graph.n(), 24);
        m.validate().unwrap();
        let zz = f_compose(&z, [9, 10, 11], &z).unwrap();
        assert_eq!(zz.graph.n(), 42);
        zz.validate().unwrap();
    }

    #[test]
    fn six_cycle_witnesses() {
        let z = FFamilyCert::z_base();
        for t in [[0, 1, 2], [9, 10, 11]] {
            let (c, m) = t_cycle_and_cut(&z, t).unwrap();
            assert_eq!(c.len(), 6);
            assert_eq!(m.len(), 3);
        }
        assert_eq!(t_cycle_and_cut(&FFamilyCert::y_base(), [0, 1, 2]), Err(ConstructionError::NoSixCycle));
        assert_eq!(
            t_cycle_and_cut(&z, [0, 1, 3]),
            Err(ConstructionError::NotTriangle([0, 1, 3]))
        );
    }

    #[test]
    fn closures_of_y() {
        let y = FFamilyCert::y_base();
        let dot = f_operator(&y, FOperator::Dot).unwrap();
        assert_eq!(dot.graph, base_graph("K4").unwrap());
        let bar = f_operator(&y, FOperator::Bar).unwrap();
        assert_eq!(bar.graph, base_graph("prism").unwrap());
        let dd = f_operator(&y, FOperator::Ddot).unwrap();
        assert_eq!((dd.graph.n(), dd.graph.residue_mod6()), (10, 4));
        for out in [dot, bar, dd] {
            assert!(out.graph.is_cubic() && is_three_connected(&out.graph));
        }
    }
}
