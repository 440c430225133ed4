//! JSON build trees: nested `{"op": ..., "args": ...}` objects that name a
//! construction and its inputs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{
    base_graph, f_operator, h_construction, r_s, rewire_after_pair_deletion, splice, subdivide_and_connect,
    triangle_expand, vertex_replacement, y_construction, BuildTree, FFamilyCert, FOperator, Gadget, RewireKind,
};
use crate::error::ConstructionError;
use crate::graph::{Edge, Graph};

/// A gadget inside a recipe: the graph to cut `root` out of, plus an
/// optional port permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetSpec {
    pub graph: Box<Recipe>,
    pub root: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ports: Option<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", content = "args", rename_all = "snake_case")]
pub enum Recipe {
    Base(String),
    Graph6(String),
    EdgeList {
        n: usize,
        edges: Vec<[usize; 2]>,
    },
    Splice {
        a: Box<Recipe>,
        a_vertex: usize,
        b: Box<Recipe>,
        b_vertex: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sigma: Option<[usize; 3]>,
    },
    Replace {
        host: Box<Recipe>,
        gadgets: BTreeMap<usize, GadgetSpec>,
    },
    Y {
        gadgets: [Option<GadgetSpec>; 3],
    },
    TriangleExpand {
        graph: Box<Recipe>,
        vertex: usize,
    },
    SubdivideAndConnect {
        graph: Box<Recipe>,
        e1: [usize; 2],
        e2: [usize; 2],
    },
    Rewire {
        graph: Box<Recipe>,
        x: usize,
        y: usize,
        kind: RewireKind,
    },
    Family {
        tree: BuildTree,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        operator: Option<FOperator>,
    },
    Rs {
        s: usize,
    },
    H {
        gadgets: [Option<GadgetSpec>; 4],
    },
}

/// A built graph with its construction metadata as JSON.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Built {
    pub graph: Graph,
    pub meta: Value,
}

fn edge(pair: [usize; 2]) -> Result<Edge, ConstructionError> {
    Edge::new(pair[0], pair[1]).ok_or(ConstructionError::Recipe(format!("edge {pair:?} is a loop")))
}

impl GadgetSpec {
    fn build(&self) -> Result<Gadget, ConstructionError> {
        Ok(Gadget { graph: self.graph.build()?.graph, root: self.root, ports: self.ports })
    }
}

fn gadgets<const N: usize>(specs: &[Option<GadgetSpec>; N]) -> Result<[Option<Gadget>; N], ConstructionError> {
    let mut out: [Option<Gadget>; N] = std::array::from_fn(|_| None);
    for (slot, spec) in out.iter_mut().zip(specs) {
        *slot = spec.as_ref().map(GadgetSpec::build).transpose()?;
    }
    Ok(out)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("metadata serialises")
}

impl Recipe {
    pub fn from_json(text: &str) -> Result<Recipe, ConstructionError> {
        serde_json::from_str(text).map_err(|e| ConstructionError::Recipe(e.to_string()))
    }

    pub fn build(&self) -> Result<Built, ConstructionError> {
        let plain = |graph: Graph| Built { graph, meta: Value::Null };
        Ok(match self {
            Recipe::Base(name) => plain(base_graph(name)?),
            Recipe::Graph6(text) => plain(Graph::from_graph6(text)?),
            Recipe::EdgeList { n, edges } => {
                let pairs: Vec<(usize, usize)> = edges.iter().map(|p| (p[0], p[1])).collect();
                plain(Graph::from_edge_list(*n, &pairs)?)
            }
            Recipe::Splice { a, a_vertex, b, b_vertex, sigma } => {
                let (g, meta) = splice(&a.build()?.graph, *a_vertex, &b.build()?.graph, *b_vertex, *sigma)?;
                Built { graph: g, meta: json!({ "splice": to_value(&meta) }) }
            }
            Recipe::Replace { host, gadgets } => {
                let built: BTreeMap<usize, Gadget> =
                    gadgets.iter().map(|(&v, s)| Ok((v, s.build()?))).collect::<Result<_, ConstructionError>>()?;
                let (g, meta) = vertex_replacement(&host.build()?.graph, &built)?;
                Built { graph: g, meta: json!({ "replacement": to_value(&meta) }) }
            }
            Recipe::Y { gadgets: specs } => {
                let (g, meta) = y_construction(gadgets(specs)?)?;
                Built { graph: g, meta: json!({ "y": to_value(&meta) }) }
            }
            Recipe::TriangleExpand { graph, vertex } => plain(triangle_expand(&graph.build()?.graph, *vertex)?),
            Recipe::SubdivideAndConnect { graph, e1, e2 } => {
                let (g, w1, w2) = subdivide_and_connect(&graph.build()?.graph, edge(*e1)?, edge(*e2)?)?;
                Built { graph: g, meta: json!({ "w1": w1, "w2": w2 }) }
            }
            Recipe::Rewire { graph, x, y, kind } => {
                let cands = rewire_after_pair_deletion(&graph.build()?.graph, *x, *y)?;
                let c = cands.into_iter().find(|c| c.kind == *kind).expect("all kinds listed");
                let three_connected = c.three_connected;
                let g = c
                    .graph
                    .ok_or_else(|| ConstructionError::Recipe(format!("rewiring {kind:?} creates a loop or parallel edge")))?;
                Built { graph: g, meta: json!({ "rewire": kind, "three_connected": three_connected }) }
            }
            Recipe::Family { tree, operator } => {
                let cert = FFamilyCert::from_tree(tree)?;
                match operator {
                    None => Built { graph: cert.graph.clone(), meta: json!({ "leaves": cert.leaves }) },
                    Some(op) => {
                        let out = f_operator(&cert, *op)?;
                        Built { graph: out.graph, meta: json!({ "operator": op, "special": out.special }) }
                    }
                }
            }
            Recipe::Rs { s } => {
                let (g, paths) = r_s(*s)?;
                Built { graph: g, meta: json!({ "paths": to_value(&paths) }) }
            }
            Recipe::H { gadgets: specs } => {
                let (g, meta) = h_construction(gadgets(specs)?)?;
                Built { graph: g, meta: json!({ "replacement": to_value(&meta) }) }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y_of_three_k4_from_json() {
        let text = r#"{"op":"y","args":{"gadgets":[
            {"graph":{"op":"base","args":"K4"},"root":0},
            {"graph":{"op":"base","args":"K4"},"root":0},
            {"graph":{"op":"base","args":"K4"},"root":0}]}}"#;
        let r = Recipe::from_json(text).unwrap();
        let built = r.build().unwrap();
        assert_eq!(built.graph.n(), 12);
        assert_eq!(built.meta["y"]["z_vertices"], json!([9, 10, 11]));
        let again: Recipe = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(again, r);
    }

    #[test]
    fn nested_recipes() {
        let text = r#"{"op":"splice","args":{
            "a":{"op":"family","args":{"tree":"base_y","operator":"bar"}},"a_vertex":0,
            "b":{"op":"triangle_expand","args":{"graph":{"op":"graph6","args":"C~"},"vertex":1}},"b_vertex":0}}"#;
        let built = Recipe::from_json(text).unwrap().build().unwrap();
        assert_eq!(built.graph.n(), 10);
        assert!(built.graph.is_cubic());
        let fam = r#"{"op":"family","args":{"tree":{"compose":{"a":"base_z","triangle":[0,1,2],"b":"base_y"}}}}"#;
        assert_eq!(Recipe::from_json(fam).unwrap().build().unwrap().graph.n(), 24);
        assert!(Recipe::from_json(r#"{"op":"warp"}"#).is_err());
        let bad = r#"{"op":"rewire","args":{"graph":{"op":"base","args":"prism"},"x":0,"y":1,"kind":"E1"}}"#;
        assert!(matches!(Recipe::from_json(bad).unwrap().build(), Err(ConstructionError::Recipe(_))));
    }
}
