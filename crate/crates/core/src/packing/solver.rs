//! Exact backtracking search for constrained Λ-factors and maximum
//! Λ-packings.

use std::collections::BTreeSet;
use std::time::Instant;

use super::{greedy_packing, FactorConstraint, Packing, Path3};
use crate::error::PackingError;
use crate::graph::{Edge, Graph};

/// Node and wall-clock budget for a search. The default is unlimited.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
}

impl SearchLimits {
    pub fn unlimited() -> SearchLimits {
        SearchLimits::default()
    }

    pub fn nodes(max_nodes: u64) -> SearchLimits {
        SearchLimits { max_nodes: Some(max_nodes), deadline: None }
    }

    pub fn until(deadline: Instant) -> SearchLimits {
        SearchLimits { max_nodes: None, deadline: Some(deadline) }
    }

    fn hit(&self, nodes: u64) -> bool {
        if self.max_nodes.is_some_and(|m| nodes > m) {
            return true;
        }
        // checking the clock every node is wasteful
        nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorSearch {
    Found(Packing),
    NoFactor,
    /// The budget ran out before the question was settled.
    Exhausted { nodes: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorEnumeration {
    /// Distinct factors, sorted.
    pub factors: Vec<Packing>,
    /// True when the search space was fully explored, so `factors` is the
    /// complete list.
    pub complete: bool,
    pub nodes: u64,
}

/// Adjacency with removed vertices and forbidden edges dropped.
fn working_adjacency(g: &Graph, c: &FactorConstraint) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|v| {
            if c.removed.contains(&v) {
                return Vec::new();
            }
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| !c.removed.contains(&w) && !c.forbidden.contains(&Edge::of(v, w)))
                .collect()
        })
        .collect()
}

enum Flow {
    Continue,
    Stop,
}

struct FactorSearcher {
    nbrs: Vec<Vec<usize>>,
    /// Required partners of each vertex.
    req: Vec<Vec<usize>>,
    required: Vec<Edge>,
    free: Vec<bool>,
    stack: Vec<Path3>,
    nodes: u64,
    limits: SearchLimits,
    budget_hit: bool,
    // scratch for the component check
    seen: Vec<bool>,
    queue: Vec<usize>,
}

impl FactorSearcher {
    fn new(g: &Graph, c: &FactorConstraint, limits: SearchLimits) -> FactorSearcher {
        let n = g.n();
        let mut req = vec![Vec::new(); n];
        for e in &c.required {
            req[e.u].push(e.v);
            req[e.v].push(e.u);
        }
        FactorSearcher {
            nbrs: working_adjacency(g, c),
            req,
            required: c.required.iter().copied().collect(),
            free: (0..n).map(|v| !c.removed.contains(&v)).collect(),
            stack: Vec::new(),
            nodes: 0,
            limits,
            budget_hit: false,
            seen: vec![false; n],
            queue: Vec::new(),
        }
    }

    fn free_degree(&self, v: usize) -> usize {
        self.nbrs[v].iter().filter(|&&w| self.free[w]).count()
    }

    /// Every free component has size divisible by 3 and no free vertex is
    /// isolated.
    fn feasible(&mut self) -> bool {
        let n = self.free.len();
        self.seen.iter_mut().for_each(|s| *s = false);
        for s in 0..n {
            if !self.free[s] || self.seen[s] {
                continue;
            }
            self.seen[s] = true;
            self.queue.clear();
            self.queue.push(s);
            let mut head = 0;
            while head < self.queue.len() {
                let x = self.queue[head];
                head += 1;
                let mut deg = 0;
                for &y in &self.nbrs[x] {
                    if self.free[y] {
                        deg += 1;
                        if !self.seen[y] {
                            self.seen[y] = true;
                            self.queue.push(y);
                        }
                    }
                }
                if deg == 0 {
                    return false;
                }
            }
            if !self.queue.len().is_multiple_of(3) {
                return false;
            }
        }
        true
    }

    /// Path edges cover every required edge at the path's vertices.
    fn respects_required(&self, p: &Path3) -> bool {
        p.vertices().iter().all(|&x| self.req[x].iter().all(|&r| p.has_edge(Edge::of(x, r))))
    }

    fn paths_through_edge(&self, e: Edge) -> Vec<Path3> {
        let mut out = Vec::new();
        for (c, other) in [(e.u, e.v), (e.v, e.u)] {
            for &w in &self.nbrs[c] {
                if w != other && self.free[w] {
                    out.push(Path3::of(other, c, w));
                }
            }
        }
        out
    }

    fn paths_through_vertex(&self, v: usize) -> Vec<Path3> {
        let mut out = Vec::new();
        let nb: Vec<usize> = self.nbrs[v].iter().copied().filter(|&w| self.free[w]).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                out.push(Path3::of(a, v, b));
            }
        }
        for &u in &nb {
            for &w in &self.nbrs[u] {
                if w != v && self.free[w] {
                    out.push(Path3::of(v, u, w));
                }
            }
        }
        out
    }

    fn moves(&self) -> Option<Vec<Path3>> {
        let n = self.free.len();
        let mut moves = if let Some(&e) = self.required.iter().find(|e| self.free[e.u] && self.free[e.v]) {
            self.paths_through_edge(e)
        } else if let Some(v) = (0..n).find(|&v| self.free[v] && self.free_degree(v) == 1) {
            let u = *self.nbrs[v].iter().find(|&&u| self.free[u]).expect("one free neighbour");
            self.nbrs[u]
                .iter()
                .filter(|&&w| w != v && self.free[w])
                .map(|&w| Path3::of(v, u, w))
                .collect()
        } else {
            let v = (0..n).find(|&v| self.free[v])?;
            self.paths_through_vertex(v)
        };
        moves.retain(|p| self.respects_required(p));
        moves.sort_unstable();
        Some(moves)
    }

    fn run(&mut self, sink: &mut dyn FnMut(&[Path3]) -> bool) -> Flow {
        self.nodes += 1;
        if self.limits.hit(self.nodes) {
            self.budget_hit = true;
            return Flow::Stop;
        }
        if !self.feasible() {
            return Flow::Continue;
        }
        let Some(moves) = self.moves() else {
            // nothing left to cover
            return if sink(&self.stack) { Flow::Continue } else { Flow::Stop };
        };
        for p in moves {
            for v in p.vertices() {
                self.free[v] = false;
            }
            self.stack.push(p);
            let flow = self.run(sink);
            self.stack.pop();
            for v in p.vertices() {
                self.free[v] = true;
            }
            if let Flow::Stop = flow {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }
}

fn residue_allows(g: &Graph, c: &FactorConstraint) -> bool {
    c.remaining(g).is_multiple_of(3)
}

/// A Λ-factor of `g` under `c`, or `None` if none exists.
pub fn find_lambda_factor(g: &Graph, c: &FactorConstraint) -> Result<Option<Packing>, PackingError> {
    match find_lambda_factor_limited(g, c, SearchLimits::unlimited())? {
        FactorSearch::Found(p) => Ok(Some(p)),
        FactorSearch::NoFactor => Ok(None),
        FactorSearch::Exhausted { .. } => unreachable!("unlimited search cannot run out"),
    }
}

pub fn find_lambda_factor_limited(
    g: &Graph,
    c: &FactorConstraint,
    limits: SearchLimits,
) -> Result<FactorSearch, PackingError> {
    c.check(g)?;
    if !residue_allows(g, c) {
        return Ok(FactorSearch::NoFactor);
    }
    let mut s = FactorSearcher::new(g, c, limits);
    let mut found = None;
    s.run(&mut |paths| {
        found = Some(Packing::new(paths.to_vec()));
        false
    });
    Ok(match found {
        Some(p) => FactorSearch::Found(p),
        None if s.budget_hit => FactorSearch::Exhausted { nodes: s.nodes },
        None => FactorSearch::NoFactor,
    })
}

/// All Λ-factors of `g` under `c`, up to `limit` of them.
pub fn enumerate_lambda_factors(
    g: &Graph,
    c: &FactorConstraint,
    limit: usize,
) -> Result<FactorEnumeration, PackingError> {
    enumerate_lambda_factors_limited(g, c, limit, SearchLimits::unlimited())
}

pub fn enumerate_lambda_factors_limited(
    g: &Graph,
    c: &FactorConstraint,
    limit: usize,
    limits: SearchLimits,
) -> Result<FactorEnumeration, PackingError> {
    c.check(g)?;
    if !residue_allows(g, c) {
        return Ok(FactorEnumeration { factors: Vec::new(), complete: true, nodes: 0 });
    }
    let mut s = FactorSearcher::new(g, c, limits);
    let mut found = BTreeSet::new();
    let mut capped = false;
    if limit == 0 {
        capped = true;
    } else {
        s.run(&mut |paths| {
            found.insert(Packing::new(paths.to_vec()));
            if found.len() >= limit {
                capped = true;
                false
            } else {
                true
            }
        });
    }
    // hitting the cap exactly on the last factor still counts as incomplete
    Ok(FactorEnumeration {
        factors: found.into_iter().collect(),
        complete: !capped && !s.budget_hit,
        nodes: s.nodes,
    })
}

struct MaxSearcher {
    nbrs: Vec<Vec<usize>>,
    free: Vec<bool>,
    stack: Vec<Path3>,
    best: Vec<Path3>,
    ceiling: usize,
    seen: Vec<bool>,
    queue: Vec<usize>,
}

impl MaxSearcher {
    /// Sum over free components of `floor(size / 3)`.
    fn bound(&mut self) -> usize {
        let n = self.free.len();
        self.seen.iter_mut().for_each(|s| *s = false);
        let mut total = 0;
        for s in 0..n {
            if !self.free[s] || self.seen[s] {
                continue;
            }
            self.seen[s] = true;
            self.queue.clear();
            self.queue.push(s);
            let mut head = 0;
            while head < self.queue.len() {
                let x = self.queue[head];
                head += 1;
                for &y in &self.nbrs[x] {
                    if self.free[y] && !self.seen[y] {
                        self.seen[y] = true;
                        self.queue.push(y);
                    }
                }
            }
            total += self.queue.len() / 3;
        }
        total
    }

    fn run(&mut self) {
        if self.stack.len() > self.best.len() {
            self.best = self.stack.clone();
        }
        if self.best.len() == self.ceiling {
            return;
        }
        if self.stack.len() + self.bound() <= self.best.len() {
            return;
        }
        let Some(v) = (0..self.free.len()).find(|&v| self.free[v]) else {
            return;
        };
        let mut moves = Vec::new();
        let nb: Vec<usize> = self.nbrs[v].iter().copied().filter(|&w| self.free[w]).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                moves.push(Path3::of(a, v, b));
            }
        }
        for &u in &nb {
            for &w in &self.nbrs[u] {
                if w != v && self.free[w] {
                    moves.push(Path3::of(v, u, w));
                }
            }
        }
        moves.sort_unstable();
        for p in moves {
            for x in p.vertices() {
                self.free[x] = false;
            }
            self.stack.push(p);
            self.run();
            self.stack.pop();
            for x in p.vertices() {
                self.free[x] = true;
            }
            if self.best.len() == self.ceiling {
                return;
            }
        }
        // leave v uncovered
        self.free[v] = false;
        self.run();
        self.free[v] = true;
    }
}

/// A maximum Λ-packing of `g`; its size is `λ(g)`.
pub fn max_lambda_packing(g: &Graph) -> Packing {
    max_lambda_packing_constrained(g, &FactorConstraint::none()).expect("empty constraint is always valid")
}

/// A maximum Λ-packing of `g` minus the removed vertices and forbidden
/// edges of `c`. Required edges are ignored.
pub fn max_lambda_packing_constrained(g: &Graph, c: &FactorConstraint) -> Result<Packing, PackingError> {
    c.check(g)?;
    let relaxed = FactorConstraint { required: BTreeSet::new(), ..c.clone() };
    let start = greedy_packing(g, &relaxed)?;
    let n = g.n();
    let mut s = MaxSearcher {
        nbrs: working_adjacency(g, c),
        free: (0..n).map(|v| !c.removed.contains(&v)).collect(),
        stack: Vec::new(),
        best: start.paths().to_vec(),
        ceiling: c.remaining(g) / 3,
        seen: vec![false; n],
        queue: Vec::new(),
    };
    s.run();
    Ok(Packing::new(s.best))
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

    #[test]
    fn prism_has_factors_k4_does_not() {
        let f = find_lambda_factor(&prism(), &FactorConstraint::none()).unwrap().unwrap();
        f.validate_factor(&prism(), &FactorConstraint::none()).unwrap();
        assert_eq!(find_lambda_factor(&k4(), &FactorConstraint::none()).unwrap(), None);
        assert_eq!(max_lambda_packing(&k4()).len(), 1);
        assert_eq!(max_lambda_packing(&prism()).len(), 2);
    }

    #[test]
    fn required_and_forbidden_edges_are_honoured() {
        let g = prism();
        let req = FactorConstraint::requiring([Edge::of(0, 3), Edge::of(1, 4), Edge::of(2, 5)]);
        // three disjoint required edges cannot all sit in two paths
        assert_eq!(find_lambda_factor(&g, &req).unwrap(), None);
        let forb = FactorConstraint::forbidding([Edge::of(0, 3), Edge::of(1, 4), Edge::of(2, 5)]);
        let f = find_lambda_factor(&g, &forb).unwrap().unwrap();
        f.validate_factor(&g, &forb).unwrap();
        let all = enumerate_lambda_factors(&g, &forb, 100).unwrap();
        assert!(all.complete);
        // each triangle splits into one path in 3 ways
        assert_eq!(all.factors.len(), 9);
    }

    #[test]
    fn removal_and_enumeration_limits() {
        let g = k4();
        let c = FactorConstraint::removing([3]);
        let all = enumerate_lambda_factors(&g, &c, 10).unwrap();
        assert_eq!(all.factors.len(), 3);
        assert!(all.complete);
        let capped = enumerate_lambda_factors(&g, &c, 2).unwrap();
        assert_eq!(capped.factors.len(), 2);
        assert!(!capped.complete);
    }

    #[test]
    fn node_budget_reports_exhaustion() {
        let r = find_lambda_factor_limited(&prism(), &FactorConstraint::none(), SearchLimits::nodes(0)).unwrap();
        assert!(matches!(r, FactorSearch::Exhausted { .. }));
    }
}
