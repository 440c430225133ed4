use super::{FactorConstraint, Packing, Path3};
use crate::error::PackingError;
use crate::graph::{Edge, Graph};

/// A maximal (not necessarily maximum) Λ-packing of `g` minus the removed
/// vertices and forbidden edges of `c`.
///
/// Repeatedly takes the live vertex with the fewest free neighbours and
/// covers it, preferring it as an end. A vertex that fits in no path among
/// the free vertices is retired; since the free set only shrinks, it never
/// fits later, so the result is maximal.
pub fn greedy_packing(g: &Graph, c: &FactorConstraint) -> Result<Packing, PackingError> {
    c.check(g)?;
    let n = g.n();
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| !c.removed.contains(&w) && !c.forbidden.contains(&Edge::of(v, w)))
                .collect()
        })
        .collect();
    let mut free: Vec<bool> = (0..n).map(|v| !c.removed.contains(&v)).collect();
    let mut live = free.clone();
    let mut paths = Vec::new();
    let deg = |free: &[bool], v: usize| nbrs[v].iter().filter(|&&w| free[w]).count();

    while let Some(v) = (0..n).filter(|&v| live[v]).min_by_key(|&v| (deg(&free, v), v)) {
        let as_end = nbrs[v]
            .iter()
            .copied()
            .filter(|&u| free[u] && deg(&free, u) >= 2)
            .min_by_key(|&u| (deg(&free, u), u))
            .and_then(|u| {
                let w = nbrs[u]
                    .iter()
                    .copied()
                    .filter(|&w| w != v && free[w])
                    .min_by_key(|&w| (deg(&free, w), w))?;
                Some(Path3::of(v, u, w))
            });
        let path = as_end.or_else(|| {
            let mut nb = nbrs[v].iter().copied().filter(|&w| free[w]);
            Some(Path3::of(nb.next()?, v, nb.next()?))
        });
        match path {
            Some(p) => {
                for x in p.vertices() {
                    free[x] = false;
                    live[x] = false;
                }
                paths.push(p);
            }
            None => live[v] = false,
        }
    }
    Ok(Packing::new(paths))
}
