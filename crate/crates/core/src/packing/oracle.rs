//! Exhaustive reference answers for small graphs.
//!
//! Walks every set of pairwise disjoint 3-vertex paths with no pruning
//! beyond disjointness. It shares nothing with the backtracking solver
//! except the `Graph` type, so the two can be checked against each other.

use std::collections::BTreeSet;

use super::{FactorConstraint, Packing, Path3};
use crate::error::PackingError;
use crate::graph::{Edge, Graph};

pub const ORACLE_MAX_VERTICES: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// Size of a largest packing in `G - removed - forbidden` (required
    /// edges ignored).
    pub lambda: usize,
    /// How many packings reach `lambda`.
    pub maximum_packings: usize,
    /// Every Λ-factor honouring all of the constraint, sorted.
    pub factors: Vec<Packing>,
}

struct Walk<'a> {
    paths: &'a [(u32, [usize; 3])],
    full: u32,
    required: &'a [Edge],
    chosen: Vec<usize>,
    lambda: usize,
    maximum_packings: usize,
    factors: BTreeSet<Packing>,
}

impl Walk<'_> {
    fn visit(&mut self, from: usize, used: u32) {
        let size = self.chosen.len();
        match size.cmp(&self.lambda) {
            std::cmp::Ordering::Greater => {
                self.lambda = size;
                self.maximum_packings = 1;
            }
            std::cmp::Ordering::Equal => self.maximum_packings += 1,
            std::cmp::Ordering::Less => {}
        }
        if used == self.full {
            let ok = self.required.iter().all(|e| {
                self.chosen.iter().any(|&i| {
                    let [a, c, b] = self.paths[i].1;
                    (c == e.u || c == e.v) && (a == e.u || a == e.v || b == e.u || b == e.v)
                })
            });
            if ok {
                let ps = self.chosen.iter().map(|&i| {
                    let [a, c, b] = self.paths[i].1;
                    Path3::of(a, c, b)
                });
                self.factors.insert(Packing::new(ps.collect()));
            }
        }
        for i in from..self.paths.len() {
            let mask = self.paths[i].0;
            if used & mask == 0 {
                self.chosen.push(i);
                self.visit(i + 1, used | mask);
                self.chosen.pop();
            }
        }
    }
}

/// Exhaustive λ, number of maximum packings and full factor list. Only
/// for `n <= 14`.
pub fn brute_force_oracle(g: &Graph, c: &FactorConstraint) -> Result<OracleResult, PackingError> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(PackingError::OracleTooLarge(n));
    }
    c.check(g)?;
    let usable = |a: usize, b: usize| {
        g.has_edge(a, b) && !c.forbidden.contains(&Edge::of(a, b)) && !c.removed.contains(&a) && !c.removed.contains(&b)
    };
    let mut paths = Vec::new();
    for center in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                if a != center && b != center && usable(a, center) && usable(center, b) {
                    paths.push(((1u32 << a) | (1 << center) | (1 << b), [a, center, b]));
                }
            }
        }
    }
    let full = (0..n).filter(|v| !c.removed.contains(v)).fold(0u32, |m, v| m | (1 << v));
    let required: Vec<Edge> = c.required.iter().copied().collect();
    let mut walk = Walk {
        paths: &paths,
        full,
        required: &required,
        chosen: Vec::new(),
        lambda: 0,
        maximum_packings: 0,
        factors: BTreeSet::new(),
    };
    walk.visit(0, 0);
    Ok(OracleResult {
        lambda: walk.lambda,
        maximum_packings: walk.maximum_packings,
        factors: walk.factors.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_counts() {
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = brute_force_oracle(&k4, &FactorConstraint::none()).unwrap();
        assert_eq!(r.lambda, 1);
        // 4 choices of centre, 3 pairs of ends each
        assert_eq!(r.maximum_packings, 12);
        assert!(r.factors.is_empty());
    }

    #[test]
    fn refuses_large_graphs() {
        assert_eq!(
            brute_force_oracle(&Graph::empty(15), &FactorConstraint::none()),
            Err(PackingError::OracleTooLarge(15))
        );
    }
}
