use std::collections::BTreeMap;

use lambdapack::connectivity::vertex_connectivity;
use lambdapack::constructions::{base_graph, splice, vertex_replacement, y_construction, Gadget};
use lambdapack::corpus::generate_cubic;
use lambdapack::Graph;
use proptest::prelude::*;
use proptest::sample::Index;

/// Every connected cubic graph up to 10 vertices, plus K33 and the cube
/// so bipartite inputs turn up often.
fn inputs() -> Vec<Graph> {
    let mut all: Vec<Graph> = [4, 6, 8, 10].iter().flat_map(|&n| generate_cubic(n, true).unwrap()).collect();
    all.push(base_graph("K33").unwrap());
    all.push(base_graph("cube").unwrap());
    all
}

fn kappa(g: &Graph) -> usize {
    vertex_connectivity(g).unwrap().min(3)
}

fn sigma() -> impl Strategy<Value = Vec<usize>> {
    Just(vec![0usize, 1, 2]).prop_shuffle()
}

fn gadget(all: &[Graph], gi: Index, root: Index, ports: Vec<usize>) -> Gadget {
    let g = gi.get(all).clone();
    let root = root.index(g.n());
    Gadget { graph: g, root, ports: Some([ports[0], ports[1], ports[2]]) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn splice_preserves(ai in any::<Index>(), bi in any::<Index>(), av in any::<Index>(), bv in any::<Index>(), s in sigma()) {
        let all = inputs();
        let (a, b) = (ai.get(&all), bi.get(&all));
        let (g, meta) = splice(a, av.index(a.n()), b, bv.index(b.n()), Some([s[0], s[1], s[2]])).unwrap();
        prop_assert!(g.is_cubic());
        prop_assert_eq!(g.n(), a.n() + b.n() - 2);
        prop_assert_eq!(meta.residue_a, a.n() % 3);
        prop_assert!(kappa(&g) >= kappa(a).min(kappa(b)));
        if a.is_bipartite() && b.is_bipartite() {
            prop_assert!(g.is_bipartite());
        }
    }

    #[test]
    fn replacement_preserves(
        hi in any::<Index>(),
        picks in proptest::collection::vec((any::<bool>(), any::<Index>(), any::<Index>(), sigma()), 12),
    ) {
        let all = inputs();
        let host = hi.get(&all);
        let mut gadgets = BTreeMap::new();
        for (v, (on, gi, root, ports)) in picks.into_iter().enumerate().take(host.n()) {
            if on {
                gadgets.insert(v, gadget(&all, gi, root, ports));
            }
        }
        let (g, _) = vertex_replacement(host, &gadgets).unwrap();
        prop_assert!(g.is_cubic());
        prop_assert_eq!(g.n(), host.n() + gadgets.values().map(|x| x.graph.n() - 2).sum::<usize>());
        let weakest = gadgets.values().map(|x| kappa(&x.graph)).chain([kappa(host)]).min().unwrap();
        prop_assert!(kappa(&g) >= weakest);
        if host.is_bipartite() && gadgets.values().all(|x| x.graph.is_bipartite()) {
            prop_assert!(g.is_bipartite());
        }
    }

    #[test]
    fn y_preserves(picks in proptest::collection::vec((any::<bool>(), any::<Index>(), any::<Index>(), sigma()), 3)) {
        let all = inputs();
        let gs: Vec<Option<Gadget>> =
            picks.into_iter().map(|(on, gi, root, ports)| on.then(|| gadget(&all, gi, root, ports))).collect();
        let expected: usize = gs.iter().map(|x| x.as_ref().map_or(1, |x| x.graph.n() - 1)).sum::<usize>() + 3;
        let weakest = gs.iter().flatten().map(|x| kappa(&x.graph)).min().unwrap_or(3);
        let bip = gs.iter().flatten().all(|x| x.graph.is_bipartite());
        let (g, meta) = y_construction([gs[0].clone(), gs[1].clone(), gs[2].clone()]).unwrap();
        prop_assert!(g.is_cubic());
        prop_assert_eq!(g.n(), expected);
        prop_assert_eq!(meta.sides.iter().map(Vec::len).sum::<usize>() + 3, g.n());
        prop_assert!(kappa(&g) >= weakest);
        if bip {
            prop_assert!(g.is_bipartite());
        }
    }
}
