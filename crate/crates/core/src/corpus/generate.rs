//! Connected cubic graphs by ordered edge extension.
//!
//! The lowest vertex still short of degree three is completed first, its
//! new neighbours taken in increasing order. Untouched vertices are
//! interchangeable, so only the first of them is ever tried. Every vertex
//! other than 0 is therefore reached from an earlier one, which keeps the
//! output connected and gives every connected cubic graph at least one
//! labelling in the stream.

use std::collections::BTreeMap;

use super::canonical::{canonical_form, CanonicalForm};
use crate::error::CorpusError;
use crate::graph::Graph;

pub const MAX_GENERATED_ORDER: usize = 16;

struct State {
    n: usize,
    adj: Vec<[usize; 3]>,
    deg: Vec<usize>,
    touched: usize,
    edges: Vec<(usize, usize)>,
}

impl State {
    fn link(&mut self, a: usize, b: usize) {
        self.adj[a][self.deg[a]] = b;
        self.deg[a] += 1;
        self.adj[b][self.deg[b]] = a;
        self.deg[b] += 1;
        self.edges.push((a, b));
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.deg[a] -= 1;
        self.deg[b] -= 1;
        self.edges.pop();
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][..self.deg[a]].contains(&b)
    }

    fn rec(&mut self, prev: usize, min_w: usize, emit: &mut dyn FnMut(&[(usize, usize)])) {
        let Some(v) = (0..self.n).find(|&v| self.deg[v] < 3) else {
            emit(&self.edges);
            return;
        };
        if self.deg[v] == 0 && v > 0 {
            // everything touched so far is closed off
            return;
        }
        let lo = if v == prev { min_w } else { v + 1 };
        let hi = (self.touched + 1).min(self.n);
        for w in lo..hi {
            if self.deg[w] == 3 || self.adjacent(v, w) {
                continue;
            }
            let fresh = w == self.touched;
            if fresh {
                self.touched += 1;
            }
            self.link(v, w);
            self.rec(v, w + 1, emit);
            self.unlink(v, w);
            if fresh {
                self.touched -= 1;
            }
        }
    }
}

fn check_order(n: usize) -> Result<(), CorpusError> {
    if n % 2 == 1 {
        return Err(CorpusError::OddOrder(n));
    }
    if !(4..=MAX_GENERATED_ORDER).contains(&n) {
        return Err(CorpusError::OrderOutOfRange(n));
    }
    Ok(())
}

/// Visits every labelling the extension search produces. Isomorphic
/// repeats are common.
pub fn for_each_labelled_cubic(n: usize, mut f: impl FnMut(Graph)) -> Result<(), CorpusError> {
    check_order(n)?;
    let mut st = State { n, adj: vec![[0; 3]; n], deg: vec![0; n], touched: 1, edges: Vec::with_capacity(3 * n / 2) };
    st.rec(usize::MAX, 1, &mut |edges| {
        f(Graph::from_edge_list(n, edges).expect("generator emits simple graphs"));
    });
    Ok(())
}

/// All connected cubic graphs on `n` vertices. With `dedup`, one graph per
/// isomorphism class, each in its canonical labelling, sorted by canonical
/// form. Without it, the raw labelled stream.
pub fn generate_cubic(n: usize, dedup: bool) -> Result<Vec<Graph>, CorpusError> {
    if !dedup {
        let mut out = Vec::new();
        for_each_labelled_cubic(n, |g| out.push(g))?;
        return Ok(out);
    }
    Ok(generate_classes(n)?.into_values().collect())
}

/// Isomorphism classes keyed by canonical form.
pub fn generate_classes(n: usize) -> Result<BTreeMap<CanonicalForm, Graph>, CorpusError> {
    let mut classes = BTreeMap::new();
    let mut failure = None;
    for_each_labelled_cubic(n, |g| {
        if failure.is_some() {
            return;
        }
        match canonical_form(&g) {
            Ok(c) => {
                classes.entry(c).or_insert_with_key(|c: &CanonicalForm| c.to_graph());
            }
            Err(e) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(classes),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert!(matches!(generate_cubic(5, true), Err(CorpusError::OddOrder(5))));
        assert!(matches!(generate_cubic(2, true), Err(CorpusError::OrderOutOfRange(2))));
        assert!(matches!(generate_cubic(18, true), Err(CorpusError::OrderOutOfRange(18))));
        assert_eq!(generate_cubic(4, true).unwrap().len(), 1);
        let six = generate_cubic(6, true).unwrap();
        assert_eq!(six.len(), 2);
        assert_eq!(six.iter().filter(|g| g.is_bipartite()).count(), 1);
        for g in generate_cubic(8, false).unwrap() {
            assert!(g.is_cubic() && g.is_connected());
        }
    }

    #[test]
    fn class_counts_through_ten() {
        assert_eq!(generate_cubic(8, true).unwrap().len(), 5);
        assert_eq!(generate_cubic(10, true).unwrap().len(), 19);
    }
}
