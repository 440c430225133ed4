//! Graph compositions: splices, vertex replacement, Y-composites, local
//! edits, the named base graphs, `R_s`, `H`, and the leaf-triangle family.
//!
//! Every builder returns wiring metadata next to the graph so that cut and
//! projection checks can work on the exact edges the construction created.

mod family;
mod recipe;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::connectivity::is_three_connected;
use crate::error::ConstructionError;
use crate::graph::{Edge, Graph};
use crate::packing::Path3;

pub use family::{f_compose, f_operator, t_cycle_and_cut, BuildTree, FFamilyCert, FOperator, FOperatorOutput};
pub use recipe::{Built, GadgetSpec, Recipe};

fn require_degree_three(g: &Graph, v: usize) -> Result<(), ConstructionError> {
    if v >= g.n() {
        return Err(crate::error::GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
    }
    match g.degree(v) {
        3 => Ok(()),
        degree => Err(ConstructionError::NotDegreeThree { vertex: v, degree }),
    }
}

fn check_permutation(p: [usize; 3]) -> Result<(), ConstructionError> {
    let mut seen = [false; 3];
    for &i in &p {
        if i > 2 || seen[i] {
            return Err(ConstructionError::BadBijection(p));
        }
        seen[i] = true;
    }
    Ok(())
}

fn provenance(prefix: &str, g: &Graph, v: usize) -> Option<String> {
    Some(match g.label(v) {
        Some(l) => format!("{prefix}:{l}"),
        None => format!("{prefix}:{v}"),
    })
}

/// Wiring of `A a σ b B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpliceMeta {
    /// The three edges `x σ(x)`, sorted.
    pub cut_edges: Vec<Edge>,
    /// Vertices coming from `A - a`.
    pub side_a: Vec<usize>,
    /// Vertices coming from `B - b`.
    pub side_b: Vec<usize>,
    /// `v(A) mod 3`.
    pub residue_a: usize,
}

impl SpliceMeta {
    /// The same splice read as `B b σ⁻¹ a A`.
    pub fn swapped(&self) -> SpliceMeta {
        SpliceMeta {
            cut_edges: self.cut_edges.clone(),
            side_a: self.side_b.clone(),
            side_b: self.side_a.clone(),
            residue_a: (self.side_b.len() + 1) % 3,
        }
    }
}

/// Deletes `a` from `A` and `b` from `B` and joins `N(a)` to `N(b)`.
///
/// With neighbours sorted as `a_1 < a_2 < a_3` and `b_1 < b_2 < b_3`,
/// `sigma[i] = j` sends `a_{i+1}` to `b_{j+1}`; `None` is the identity.
/// Vertices of `A - a` come first (in order), then those of `B - b`.
pub fn splice(
    a_graph: &Graph,
    a: usize,
    b_graph: &Graph,
    b: usize,
    sigma: Option<[usize; 3]>,
) -> Result<(Graph, SpliceMeta), ConstructionError> {
    require_degree_three(a_graph, a)?;
    require_degree_three(b_graph, b)?;
    let sigma = sigma.unwrap_or([0, 1, 2]);
    check_permutation(sigma)?;
    let (ga, map_a) = a_graph.delete_vertices(&[a]);
    let (gb, map_b) = b_graph.delete_vertices(&[b]);
    let shift = ga.n();
    let n = shift + gb.n();
    let mut labels: Vec<Option<String>> = (0..ga.n()).map(|v| provenance("A", &ga, v)).collect();
    labels.extend((0..gb.n()).map(|v| provenance("B", &gb, v)));
    let mut edges: Vec<Edge> = ga.edges().to_vec();
    edges.extend(gb.edges().iter().map(|e| Edge::of(e.u + shift, e.v + shift)));
    let na = a_graph.neighbors(a);
    let nb = b_graph.neighbors(b);
    let mut cut = Vec::new();
    for i in 0..3 {
        let x = map_a[na[i]].expect("neighbour survives");
        let y = map_b[nb[sigma[i]]].expect("neighbour survives") + shift;
        cut.push(Edge::of(x, y));
    }
    edges.extend(&cut);
    cut.sort_unstable();
    let g = Graph::from_parts(n, edges, labels);
    let meta = SpliceMeta {
        cut_edges: cut,
        side_a: (0..shift).collect(),
        side_b: (shift..n).collect(),
        residue_a: a_graph.n() % 3,
    };
    Ok((g, meta))
}

/// A graph with a degree-3 root to be cut out and wired into a host.
///
/// With the root's neighbours sorted `r_1 < r_2 < r_3` and the host
/// vertex's neighbours sorted `w_1 < w_2 < w_3`, the dangling edge at
/// `r_{i+1}` goes to `w_{ports[i]+1}`. `None` is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gadget {
    pub graph: Graph,
    pub root: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ports: Option<[usize; 3]>,
}

impl Gadget {
    pub fn new(graph: Graph, root: usize) -> Gadget {
        Gadget { graph, root, ports: None }
    }
}

/// Wiring of `B{(A(v), a^v)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplacementMeta {
    /// `(uv, α(uv))` for every edge of `B`, sorted by `uv`.
    pub alpha: Vec<(Edge, Edge)>,
    /// For each vertex of `B`, the vertices of its block `A^v` (a single
    /// vertex when `v` was not replaced).
    pub gadget_sides: Vec<Vec<usize>>,
    /// Which vertices of `B` were replaced.
    pub replaced: Vec<usize>,
}

impl ReplacementMeta {
    pub fn alpha(&self, e: Edge) -> Option<Edge> {
        self.alpha.iter().find(|(b, _)| *b == e).map(|&(_, g)| g)
    }

    pub fn alpha_inverse(&self, e: Edge) -> Option<Edge> {
        self.alpha.iter().find(|(_, g)| *g == e).map(|&(b, _)| b)
    }

    /// The vertex of `B` whose block contains `x`.
    pub fn owner(&self, x: usize) -> Option<usize> {
        self.gadget_sides.iter().position(|side| side.binary_search(&x).is_ok())
    }

    /// `D^v`: the three inter-block edges at block `v`.
    pub fn attachment(&self, v: usize) -> Vec<Edge> {
        let mut d: Vec<Edge> = self.alpha.iter().filter(|(b, _)| b.touches(v)).map(|&(_, g)| g).collect();
        d.sort_unstable();
        d
    }
}

/// Replaces each vertex `v` of the cubic graph `B` that has a gadget by
/// `A(v) - a^v`. Blocks are laid out in vertex order of `B`; vertices
/// without a gadget stay as single vertices.
pub fn vertex_replacement(
    b: &Graph,
    gadgets: &BTreeMap<usize, Gadget>,
) -> Result<(Graph, ReplacementMeta), ConstructionError> {
    if !b.is_cubic() {
        return Err(ConstructionError::NotCubic);
    }
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(b.n());
    let mut maps: Vec<Option<Vec<Option<usize>>>> = Vec::with_capacity(b.n());
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut next = 0;
    for v in 0..b.n() {
        match gadgets.get(&v) {
            Some(gad) => {
                require_degree_three(&gad.graph, gad.root)?;
                check_permutation(gad.ports.unwrap_or([0, 1, 2]))?;
                let (inner, map) = gad.graph.delete_vertices(&[gad.root]);
                edges.extend(inner.edges().iter().map(|e| Edge::of(e.u + next, e.v + next)));
                labels.extend((0..inner.n()).map(|x| provenance(&format!("A^{v}"), &inner, x)));
                blocks.push((next..next + inner.n()).collect());
                next += inner.n();
                maps.push(Some(map));
            }
            None => {
                labels.push(b.label(v).map(str::to_owned).or_else(|| Some(format!("B:{v}"))));
                blocks.push(vec![next]);
                next += 1;
                maps.push(None);
            }
        }
    }
    for &v in gadgets.keys() {
        if v >= b.n() {
            return Err(crate::error::GraphError::VertexOutOfRange { vertex: v, n: b.n() }.into());
        }
    }
    // endpoint inside block `v` for the B-edge towards `w`
    let port = |v: usize, w: usize| -> usize {
        match (&maps[v], gadgets.get(&v)) {
            (Some(map), Some(gad)) => {
                let slot = b.neighbors(v).iter().position(|&x| x == w).expect("w adjacent to v");
                let ports = gad.ports.unwrap_or([0, 1, 2]);
                let i = ports.iter().position(|&p| p == slot).expect("permutation");
                let r = gad.graph.neighbors(gad.root)[i];
                blocks[v][0] + map[r].expect("root neighbour survives")
            }
            _ => blocks[v][0],
        }
    };
    let mut alpha = Vec::new();
    for e in b.edges() {
        let f = Edge::of(port(e.u, e.v), port(e.v, e.u));
        edges.push(f);
        alpha.push((*e, f));
    }
    let g = Graph::from_parts(next, edges, labels);
    let meta = ReplacementMeta { alpha, gadget_sides: blocks, replaced: gadgets.keys().copied().collect() };
    Ok((g, meta))
}

/// Wiring of `Y(A^1,a^1; A^2,a^2; A^3,a^3)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YMeta {
    /// `z_1, z_2, z_3`; these are the last three vertices.
    pub z_vertices: [usize; 3],
    /// `D^i = D(A^i - a^i)`, each sorted.
    pub d_sets: [Vec<Edge>; 3],
    /// Vertices of `A^i - a^i`.
    pub sides: [Vec<usize>; 3],
}

/// The Y-composite: three gadgets joined through hubs `z_1, z_2, z_3`,
/// where `z_j` is adjacent to the `j`-th root neighbour of every gadget.
/// A `None` gadget stands for a single vertex adjacent to all three hubs.
pub fn y_construction(gadgets: [Option<Gadget>; 3]) -> Result<(Graph, YMeta), ConstructionError> {
    let k33 = base_graph("K33")?;
    let map: BTreeMap<usize, Gadget> =
        gadgets.into_iter().enumerate().filter_map(|(i, g)| g.map(|g| (i, g))).collect();
    let (mut g, rmeta) = vertex_replacement(&k33, &map)?;
    let z = [rmeta.gadget_sides[3][0], rmeta.gadget_sides[4][0], rmeta.gadget_sides[5][0]];
    for (j, &zj) in z.iter().enumerate() {
        g.set_label(zj, format!("z_{}", j + 1));
    }
    let side = |i: usize| rmeta.gadget_sides[i].clone();
    let meta = YMeta {
        z_vertices: z,
        d_sets: [rmeta.attachment(0), rmeta.attachment(1), rmeta.attachment(2)],
        sides: [side(0), side(1), side(2)],
    };
    Ok((g, meta))
}

/// Replaces `x` by a triangle `x'_1 x'_2 x'_3` with `x_i x'_i` edges, where
/// `x_1 < x_2 < x_3` are the neighbours of `x`. `x'_1` keeps index `x`;
/// `x'_2, x'_3` are `n` and `n + 1`.
pub fn triangle_expand(g: &Graph, x: usize) -> Result<Graph, ConstructionError> {
    require_degree_three(g, x)?;
    let n = g.n();
    let nb = g.neighbors(x).to_vec();
    let mut edges: Vec<Edge> = g.edges().iter().copied().filter(|e| !e.touches(x)).collect();
    let corners = [x, n, n + 1];
    for i in 0..3 {
        edges.push(Edge::of(nb[i], corners[i]));
    }
    edges.extend([Edge::of(x, n), Edge::of(x, n + 1), Edge::of(n, n + 1)]);
    let mut labels = g.labels().to_vec();
    labels.push(Some(format!("{x}'2")));
    labels.push(Some(format!("{x}'3")));
    Ok(Graph::from_parts(n + 2, edges, labels))
}

/// Subdivides `e1` by `w1 = n` and `e2` by `w2 = n + 1` and joins them.
pub fn subdivide_and_connect(g: &Graph, e1: Edge, e2: Edge) -> Result<(Graph, usize, usize), ConstructionError> {
    if e1 == e2 {
        return Err(ConstructionError::SameEdge(e1, e2));
    }
    let (g1, w1) = g.subdivide_edge(e1)?;
    let (g2, w2) = g1.subdivide_edge(e2)?;
    let g3 = g2.add_edges(&[Edge::of(w1, w2)])?;
    Ok((g3, w1, w2))
}

/// Which pair of edges a rewiring adds after deleting `x` and `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RewireKind {
    /// `x_1 y_1, x_2 y_2`
    E1,
    /// `x_1 y_2, x_2 y_1`
    E2,
    /// `x_1 x_2, y_1 y_2`
    E3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewireCandidate {
    pub kind: RewireKind,
    /// The added pairs, in the indices of the input graph.
    pub added: [(usize, usize); 2],
    /// The rewired graph on `n - 2` vertices (indices of `G - {x, y}`),
    /// or `None` when the pair would create a loop or a parallel edge.
    pub graph: Option<Graph>,
    pub three_connected: bool,
}

impl RewireCandidate {
    pub fn is_valid(&self) -> bool {
        self.graph.is_some()
    }
}

/// The three rewirings of `G - {x, y}` for an edge `xy` of a cubic graph.
/// `x_1 < x_2` are the other neighbours of `x`, `y_1 < y_2` those of `y`.
pub fn rewire_after_pair_deletion(g: &Graph, x: usize, y: usize) -> Result<Vec<RewireCandidate>, ConstructionError> {
    if !g.is_cubic() {
        return Err(ConstructionError::NotCubic);
    }
    match Edge::new(x, y) {
        None => return Err(crate::error::GraphError::Loop(x).into()),
        Some(e) if !g.contains_edge(e) => return Err(crate::error::GraphError::MissingEdge(e).into()),
        Some(_) => {}
    }
    let xs: Vec<usize> = g.neighbors(x).iter().copied().filter(|&w| w != y).collect();
    let ys: Vec<usize> = g.neighbors(y).iter().copied().filter(|&w| w != x).collect();
    let (h, remap) = g.delete_vertices(&[x, y]);
    let plans = [
        (RewireKind::E1, [(xs[0], ys[0]), (xs[1], ys[1])]),
        (RewireKind::E2, [(xs[0], ys[1]), (xs[1], ys[0])]),
        (RewireKind::E3, [(xs[0], xs[1]), (ys[0], ys[1])]),
    ];
    let mut out = Vec::new();
    for (kind, added) in plans {
        let mapped: Option<Vec<Edge>> = added
            .iter()
            .map(|&(p, q)| Edge::new(remap[p].expect("kept"), remap[q].expect("kept")))
            .collect();
        let graph = mapped.and_then(|es| {
            if es[0] == es[1] {
                return None;
            }
            h.add_edges(&es).ok()
        });
        let three_connected = graph.as_ref().is_some_and(is_three_connected);
        out.push(RewireCandidate { kind, added, graph, three_connected });
    }
    Ok(out)
}

/// Names accepted by [`base_graph`].
pub const BASE_NAMES: [&str; 7] = ["K4", "prism", "K33", "Y_base", "Z_base", "cube", "petersen"];

fn labelled(n: usize, pairs: &[(usize, usize)], labels: &[&str]) -> Graph {
    let g = Graph::from_edge_list(n, pairs).expect("static graph");
    if labels.is_empty() {
        g
    } else {
        g.with_labels(labels.iter().copied())
    }
}

/// A named small graph.
///
/// - `K4`: vertices 0..4.
/// - `prism`: triangles 012 and 345, matching 03, 14, 25.
/// - `K33`: parts {0,1,2} and {3,4,5}.
/// - `Y_base`: triangle `z_1 z_2 z_3` = 0,1,2 with leaves `x_i` = 3,4,5,
///   `x_i z_i` edges.
/// - `Z_base`: two copies of `t_1..t_3` (a triangle), `y_1..y_3` (`y_i`
///   on `t_i`) and `s'_1..s'_3` (`s'_i` on `y_j, y_k` for
///   `{i,j,k} = {1,2,3}`), at 0..9 and 9..18; then `c_1..c_3` = 18,19,20
///   with `c_i` on both copies of `s'_i`, and leaves `x_i` = 21,22,23 on
///   `c_i`.
/// - `cube`: vertices 0..8, edges between indices differing in one bit.
/// - `petersen`: outer 5-cycle 0..5, inner pentagram 5..10, spokes `i, i+5`.
pub fn base_graph(name: &str) -> Result<Graph, ConstructionError> {
    let g = match name.to_ascii_lowercase().as_str() {
        "k4" => labelled(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], &[]),
        "prism" => labelled(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)], &[]),
        "k33" | "k3,3" => {
            let pairs: Vec<_> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
            labelled(6, &pairs, &[])
        }
        "y_base" | "y" => labelled(
            6,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)],
            &["z_1", "z_2", "z_3", "x_1", "x_2", "x_3"],
        ),
        "z_base" | "z" => z_base(),
        "cube" => {
            let mut pairs = Vec::new();
            for v in 0..8usize {
                for bit in [1, 2, 4] {
                    if v & bit == 0 {
                        pairs.push((v, v | bit));
                    }
                }
            }
            labelled(8, &pairs, &[])
        }
        "petersen" => {
            let mut pairs = Vec::new();
            for i in 0..5 {
                pairs.push((i, (i + 1) % 5));
                pairs.push((5 + i, 5 + (i + 2) % 5));
                pairs.push((i, i + 5));
            }
            labelled(10, &pairs, &[])
        }
        _ => return Err(ConstructionError::UnknownBase(name.to_owned())),
    };
    Ok(g)
}

fn z_base() -> Graph {
    let mut pairs = Vec::new();
    let mut labels = Vec::new();
    for (copy, off) in [("A", 0usize), ("B", 9)] {
        let t = |i: usize| off + i;
        let y = |i: usize| off + 3 + i;
        let s = |i: usize| off + 6 + i;
        pairs.extend([(t(0), t(1)), (t(1), t(2)), (t(0), t(2))]);
        for i in 0..3 {
            pairs.push((t(i), y(i)));
            for j in 0..3 {
                if j != i {
                    pairs.push((s(i), y(j)));
                }
            }
            pairs.push((s(i), 18 + i));
        }
        for kind in ["t", "y", "s'"] {
            for i in 1..=3 {
                labels.push(format!("{copy}:{kind}_{i}"));
            }
        }
    }
    for i in 0..3 {
        pairs.push((18 + i, 21 + i));
    }
    labels.extend((1..=3).map(|i| format!("c_{i}")));
    labels.extend((1..=3).map(|i| format!("x_{i}")));
    let g = Graph::from_edge_list(24, &pairs).expect("static graph");
    g.with_labels(labels)
}

/// All triangles `[a, b, c]` with `a < b < c`, sorted.
pub fn find_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for e in g.edges() {
        for &w in g.neighbors(e.v) {
            if w > e.v && g.has_edge(e.u, w) {
                out.push([e.u, e.v, w]);
            }
        }
    }
    out.sort_unstable();
    out
}

/// `R_s`: a cycle `0..9s` whose consecutive triples `L_k = (3k, 3k+1,
/// 3k+2)` form a Λ-factor of the cycle, plus vertices
/// `x_i^j = 9s + 3i + j` (`i < s`, `j < 3`) adjacent to the `j`-th vertex
/// of `L_i`, `L_{i+s}` and `L_{i+2s}`. Returns the graph and the paths
/// `L_k` (centred at `3k+1`).
pub fn r_s(s: usize) -> Result<(Graph, Vec<Path3>), ConstructionError> {
    if s == 0 {
        return Err(ConstructionError::BadOrder);
    }
    let c = 9 * s;
    let mut pairs: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    for i in 0..s {
        for j in 0..3 {
            let x = c + 3 * i + j;
            for k in [i, i + s, i + 2 * s] {
                pairs.push((x, 3 * k + j));
            }
        }
    }
    let mut labels: Vec<String> = (0..c).map(|v| format!("z_{}^{}", v / 3 + 1, v % 3 + 1)).collect();
    labels.extend((0..3 * s).map(|t| format!("x_{}^{}", t / 3 + 1, t % 3 + 1)));
    let g = Graph::from_edge_list(12 * s, &pairs)?.with_labels(labels);
    let paths = (0..3 * s).map(|k| Path3::of(3 * k, 3 * k + 1, 3 * k + 2)).collect();
    Ok((g, paths))
}

/// The 10-vertex cubic graph `H`: `x_i` = 0,1,2, `y_i` = 3,4,5,
/// `z^j` = 6..10, with `x_i` adjacent to `y_i, z^1, z^2` and `y_i`
/// adjacent to `x_i, z^3, z^4`.
pub fn h_graph() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..3 {
        pairs.extend([(i, 3 + i), (i, 6), (i, 7), (3 + i, 8), (3 + i, 9)]);
    }
    let labels = ["x_1", "x_2", "x_3", "y_1", "y_2", "y_3", "z^1", "z^2", "z^3", "z^4"];
    Graph::from_edge_list(10, &pairs).expect("static graph").with_labels(labels)
}

/// `H(A^1,a^1; ...; A^4,a^4)`: `H` with each `z^j` replaced by its gadget.
pub fn h_construction(gadgets: [Option<Gadget>; 4]) -> Result<(Graph, ReplacementMeta), ConstructionError> {
    let map: BTreeMap<usize, Gadget> =
        gadgets.into_iter().enumerate().filter_map(|(j, g)| g.map(|g| (6 + j, g))).collect();
    vertex_replacement(&h_graph(), &map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{enumerate_3_edge_cuts, vertex_connectivity};

    fn base(name: &str) -> Graph {
        base_graph(name).unwrap()
    }

    #[test]
    fn base_graphs_have_documented_shape() {
        for name in ["K4", "prism", "K33", "cube", "petersen"] {
            let g = base(name);
            assert!(g.is_cubic(), "{name}");
            assert!(is_three_connected(&g), "{name}");
        }
        assert!(!base("prism").is_bipartite());
        assert!(base("K33").is_bipartite() && base("cube").is_bipartite());
        let y = base("Y_base");
        assert_eq!(y.degrees(), vec![3, 3, 3, 1, 1, 1]);
        let z = base("Z_base");
        assert_eq!(z.n(), 24);
        let leaves: Vec<usize> = (0..24).filter(|&v| z.degree(v) == 1).collect();
        assert_eq!(leaves, vec![21, 22, 23]);
        assert!((0..21).all(|v| z.degree(v) == 3));
        assert_eq!(base_graph("nope"), Err(ConstructionError::UnknownBase("nope".into())));
    }

    #[test]
    fn splice_of_two_k4_is_prism() {
        let (g, meta) = splice(&base("K4"), 0, &base("K4"), 0, None).unwrap();
        assert_eq!(g, base("prism"));
        assert_eq!(meta.cut_edges, vec![Edge::of(0, 3), Edge::of(1, 4), Edge::of(2, 5)]);
        assert_eq!(meta.residue_a, 1);
        let cuts = enumerate_3_edge_cuts(&g).unwrap();
        assert!(cuts.iter().any(|c| c.edges == meta.cut_edges && c.is_matching()));
        let (g8, _) = splice(&base("prism"), 0, &base("K4"), 0, Some([2, 0, 1])).unwrap();
        assert_eq!(g8.n(), 8);
        assert!(g8.is_cubic() && is_three_connected(&g8));
        assert_eq!(
            splice(&base("K4"), 0, &base("K4"), 0, Some([0, 0, 1])).unwrap_err(),
            ConstructionError::BadBijection([0, 0, 1])
        );
        assert!(matches!(
            splice(&base("Y_base"), 3, &base("K4"), 0, None),
            Err(ConstructionError::NotDegreeThree { vertex: 3, degree: 1 })
        ));
    }

    #[test]
    fn replacement_examples() {
        let k4 = base("K4");
        let all: BTreeMap<usize, Gadget> = (0..4).map(|v| (v, Gadget::new(k4.clone(), 0))).collect();
        let (g, meta) = vertex_replacement(&k4, &all).unwrap();
        assert_eq!(g.n(), 12);
        assert!(g.is_cubic() && is_three_connected(&g));
        assert_eq!(find_triangles(&g).len(), 4);
        for (b, e) in &meta.alpha {
            let (ou, ov) = (meta.owner(e.u).unwrap(), meta.owner(e.v).unwrap());
            assert_eq!(Edge::of(ou, ov), *b);
        }

        let (same, meta) = vertex_replacement(&k4, &BTreeMap::new()).unwrap();
        assert_eq!(same, k4);
        assert!(meta.alpha.iter().all(|(b, g)| b == g));

        let k33 = base("K33");
        let gad: BTreeMap<usize, Gadget> = (0..6).map(|v| (v, Gadget::new(k33.clone(), 0))).collect();
        let (g, _) = vertex_replacement(&k33, &gad).unwrap();
        assert_eq!(g.n(), 30);
        assert!(g.is_cubic() && g.is_bipartite() && is_three_connected(&g));

        assert_eq!(vertex_replacement(&base("Y_base"), &BTreeMap::new()).unwrap_err(), ConstructionError::NotCubic);
    }

    #[test]
    fn y_examples() {
        let k4 = || Some(Gadget::new(base("K4"), 0));
        let (g, meta) = y_construction([k4(), k4(), k4()]).unwrap();
        assert_eq!(g.n(), 12);
        assert!(g.is_cubic());
        assert_eq!(vertex_connectivity(&g), Ok(3));
        assert_eq!(meta.z_vertices, [9, 10, 11]);
        for d in &meta.d_sets {
            assert_eq!(d.len(), 3);
            for &z in &meta.z_vertices {
                assert_eq!(d.iter().filter(|e| e.touches(z)).count(), 1);
            }
        }
        let pr = || Some(Gadget::new(base("prism"), 0));
        let (g, _) = y_construction([pr(), pr(), pr()]).unwrap();
        assert_eq!((g.n(), g.residue_mod6()), (18, 0));
        let (g, meta) = y_construction([pr(), pr(), None]).unwrap();
        assert_eq!((g.n(), g.residue_mod6()), (14, 2));
        assert_eq!(meta.sides[2], vec![10]);
        assert!(g.is_cubic() && is_three_connected(&g));
    }

    #[test]
    fn local_edits() {
        let p = triangle_expand(&base("K4"), 0).unwrap();
        assert!(p.is_cubic() && p.n() == 6 && find_triangles(&p).len() == 2 && !p.is_bipartite());
        assert_eq!(triangle_expand(&base("prism"), 0).unwrap().n(), 8);

        let (g, w1, w2) = subdivide_and_connect(&base("prism"), Edge::of(0, 3), Edge::of(1, 4)).unwrap();
        assert_eq!((g.n(), w1, w2), (8, 6, 7));
        assert!(g.is_cubic());
        // K4 with two opposite edges subdivided and joined is K_{3,3}
        let (g, _, _) = subdivide_and_connect(&base("K4"), Edge::of(0, 1), Edge::of(2, 3)).unwrap();
        assert!(g.is_cubic() && g.n() == 6 && g.is_bipartite());
        assert_eq!(
            subdivide_and_connect(&base("K4"), Edge::of(0, 1), Edge::of(0, 1)).unwrap_err(),
            ConstructionError::SameEdge(Edge::of(0, 1), Edge::of(0, 1))
        );
    }

    #[test]
    fn rewire_examples() {
        let c = rewire_after_pair_deletion(&base("prism"), 0, 1).unwrap();
        assert_eq!(c.len(), 3);
        // E1 joins 2 to itself
        assert!(!c[0].is_valid());
        assert!(c[1].is_valid() && c[2].is_valid());
        let cube = base("cube");
        for e in cube.edges() {
            let c = rewire_after_pair_deletion(&cube, e.u, e.v).unwrap();
            assert!(c.iter().any(|r| r.three_connected));
            for r in c.iter().filter(|r| r.is_valid()) {
                let g = r.graph.as_ref().unwrap();
                assert!(g.is_cubic() && g.n() == 6);
            }
        }
        assert!(rewire_after_pair_deletion(&base("prism"), 0, 4).is_err());
    }

    #[test]
    fn r_s_and_h() {
        let (r1, ls) = r_s(1).unwrap();
        assert_eq!((r1.n(), r1.edge_count()), (12, 18));
        assert!(r1.is_cubic());
        assert_eq!(ls.len(), 3);
        let (r2, _) = r_s(2).unwrap();
        assert_eq!(r2.n(), 24);
        assert!(r2.is_cubic());
        assert_eq!(r_s(0).unwrap_err(), ConstructionError::BadOrder);

        let h = h_graph();
        assert!(h.is_cubic() && is_three_connected(&h));
        let k4 = || Some(Gadget::new(base("K4"), 0));
        let (g, _) = h_construction([k4(), k4(), k4(), k4()]).unwrap();
        assert_eq!(g.n(), 18);
        assert!(g.is_cubic() && is_three_connected(&g));
        assert_eq!(find_triangles(&base("K4")).len(), 4);
    }
}
