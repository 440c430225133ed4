//! Canonical labelling by colour refinement with individualisation.

use serde::{Deserialize, Serialize};

use crate::error::CorpusError;
use crate::graph::{Edge, Graph};

/// Default cap on search-tree leaves.
pub const DEFAULT_LEAF_BUDGET: u64 = 2_000_000;

/// A labelling-independent encoding: the lexicographically least sorted
/// edge list over all labellings reached by the refinement search. Two
/// graphs have equal forms iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&(a, b)| (a as usize, b as usize)).collect();
        Graph::from_edge_list(self.n, &pairs).expect("canonical edges are valid")
    }

    /// graph6 of the canonical relabelling; a compact stable id.
    pub fn graph6(&self) -> String {
        self.to_graph().to_graph6()
    }
}

/// Refines `colors` until stable: a vertex's new colour is the rank of
/// `(old colour, sorted neighbour colours)`.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = g.n();
    let packed = n < u16::MAX as usize && (0..n).all(|v| g.degree(v) <= 7);
    let mut classes = count_classes(colors);
    let mut keys: Vec<(u128, usize)> = Vec::with_capacity(n);
    loop {
        let mut rank = 0u32;
        if packed {
            keys.clear();
            let mut nb = [u16::MAX; 7];
            for v in 0..n {
                let d = g.degree(v);
                for (slot, &w) in nb.iter_mut().zip(g.neighbors(v)) {
                    *slot = colors[w] as u16;
                }
                nb[..d].sort_unstable();
                let mut k = colors[v] as u128;
                for &c in &nb {
                    k = (k << 16) | c as u128;
                }
                nb[..d].fill(u16::MAX);
                keys.push((k, v));
            }
            keys.sort_unstable();
            for i in 0..n {
                if i > 0 && keys[i].0 != keys[i - 1].0 {
                    rank += 1;
                }
                colors[keys[i].1] = rank;
            }
        } else {
            let mut wide: Vec<(u32, Vec<u32>, usize)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[v], nb, v)
                })
                .collect();
            wide.sort_unstable();
            for i in 0..n {
                if i > 0 && (wide[i].0 != wide[i - 1].0 || wide[i].1 != wide[i - 1].1) {
                    rank += 1;
                }
                colors[wide[i].2] = rank;
            }
        }
        let now = rank as usize + usize::from(n > 0);
        if now == classes {
            return;
        }
        classes = now;
    }
}

/// Starting colours from triangle and 4-cycle counts at each vertex.
fn local_invariant(g: &Graph) -> Vec<u32> {
    let key = |v: usize| {
        let nb = g.neighbors(v);
        let mut tri = 0usize;
        let mut sq = 0usize;
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                tri += usize::from(g.has_edge(a, b));
                sq += g.neighbors(a).iter().filter(|&&w| w != v && g.has_edge(w, b)).count();
            }
        }
        (g.degree(v), tri, sq)
    };
    let keys: Vec<_> = (0..g.n()).map(key).collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();
    keys.iter().map(|k| distinct.binary_search(k).expect("present") as u32).collect()
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Vec<(u32, u32)>>,
    leaves: u64,
    budget: u64,
}

impl Search<'_> {
    fn encode(&self, colors: &[u32]) -> Vec<(u32, u32)> {
        let mut edges: Vec<(u32, u32)> = self
            .g
            .edges()
            .iter()
            .map(|e: &Edge| {
                let (a, b) = (colors[e.u], colors[e.v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    fn run(&mut self, mut colors: Vec<u32>) -> Result<(), CorpusError> {
        refine(self.g, &mut colors);
        let n = self.g.n();
        // first smallest non-singleton cell
        let mut size = vec![0usize; n];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = (0..n).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c));
        let Some(cell) = target else {
            self.leaves += 1;
            if self.leaves > self.budget {
                return Err(CorpusError::BudgetExceeded(self.budget));
            }
            let enc = self.encode(&colors);
            if self.best.as_ref().is_none_or(|b| enc < *b) {
                self.best = Some(enc);
            }
            return Ok(());
        };
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == cell).collect();
        for v in members {
            let next: Vec<u32> = (0..n)
                .map(|w| {
                    let c = colors[w] * 2;
                    if colors[w] as usize == cell && w != v {
                        c + 1
                    } else {
                        c
                    }
                })
                .collect();
            self.run(next)?;
        }
        Ok(())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CorpusError> {
    canonical_form_with_budget(g, DEFAULT_LEAF_BUDGET)
}

/// Fails with [`CorpusError::BudgetExceeded`] rather than return a form
/// that was not fully searched.
pub fn canonical_form_with_budget(g: &Graph, budget: u64) -> Result<CanonicalForm, CorpusError> {
    let mut s = Search { g, best: None, leaves: 0, budget };
    s.run(local_invariant(g))?;
    Ok(CanonicalForm { n: g.n(), edges: s.best.unwrap_or_default() })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, CorpusError> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
