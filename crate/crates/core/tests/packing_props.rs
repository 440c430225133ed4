use lambdapack::corpus::generate_cubic;
use lambdapack::packing::{
    brute_force_oracle, enumerate_lambda_factors, find_lambda_factor, max_lambda_packing, max_lambda_packing_constrained,
    FactorConstraint,
};
use lambdapack::{Edge, Graph};
use proptest::prelude::*;
use proptest::sample::Index;

fn corpus_upto_10() -> Vec<Graph> {
    [4, 6, 8, 10].iter().flat_map(|&n| generate_cubic(n, true).unwrap()).collect()
}

/// Graph index, a relabelling seed, and raw picks for the constraint.
fn query() -> impl Strategy<Value = (Index, Vec<Index>, usize, Vec<Index>, Vec<Index>)> {
    (
        any::<Index>(),
        proptest::collection::vec(any::<Index>(), 0..4),
        0usize..3,
        proptest::collection::vec(any::<Index>(), 0..3),
        proptest::collection::vec(any::<Index>(), 0..3),
    )
}

fn build(
    all: &[Graph],
    (gi, rem, rot, forb, req): (Index, Vec<Index>, usize, Vec<Index>, Vec<Index>),
) -> (Graph, FactorConstraint) {
    let g = gi.get(all);
    let n = g.n();
    let perm: Vec<usize> = (0..n).map(|v| (v + rot) % n).collect();
    let g = g.permute(&perm);
    let removed: Vec<usize> = rem.iter().map(|i| i.index(n)).collect();
    let live: Vec<Edge> = g.edges().iter().copied().filter(|e| !removed.contains(&e.u) && !removed.contains(&e.v)).collect();
    let mut c = FactorConstraint::removing(removed);
    if !live.is_empty() {
        let forbidden: Vec<Edge> = forb.iter().map(|i| *i.get(&live)).collect();
        let required: Vec<Edge> = req.iter().map(|i| *i.get(&live)).filter(|e| !forbidden.contains(e)).collect();
        c = c.forbid(forbidden).require(required);
    }
    (g, c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solver_matches_oracle(q in query()) {
        let all = corpus_upto_10();
        let (g, c) = build(&all, q);
        let oracle = brute_force_oracle(&g, &c).unwrap();
        let found = find_lambda_factor(&g, &c).unwrap();
        prop_assert_eq!(found.is_some(), !oracle.factors.is_empty());
        if let Some(p) = &found {
            prop_assert!(p.validate_factor(&g, &c).is_ok());
        }
        let listed = enumerate_lambda_factors(&g, &c, usize::MAX).unwrap();
        prop_assert!(listed.complete);
        prop_assert_eq!(&listed.factors, &oracle.factors);
        prop_assert_eq!(max_lambda_packing_constrained(&g, &c).unwrap().len(), oracle.lambda);
    }

    #[test]
    fn loosening_never_loses_factors(q in query()) {
        let all = corpus_upto_10();
        let (g, c) = build(&all, q);
        if find_lambda_factor(&g, &c).unwrap().is_some() {
            let looser = FactorConstraint { required: Default::default(), forbidden: Default::default(), ..c.clone() };
            prop_assert!(find_lambda_factor(&g, &looser).unwrap().is_some());
        }
        let tighter_lambda = max_lambda_packing_constrained(&g, &c).unwrap().len();
        prop_assert!(tighter_lambda <= max_lambda_packing(&g).len());
    }

    #[test]
    fn answers_are_deterministic(q in query()) {
        let all = corpus_upto_10();
        let (g, c) = build(&all, q);
        prop_assert_eq!(find_lambda_factor(&g, &c).unwrap(), find_lambda_factor(&g, &c).unwrap());
        prop_assert_eq!(max_lambda_packing(&g), max_lambda_packing(&g));
    }

    #[test]
    fn lambda_is_labelling_invariant(gi in any::<Index>(), perm in Just((0..10).collect::<Vec<usize>>()).prop_shuffle()) {
        let tens = generate_cubic(10, true).unwrap();
        let g = gi.get(&tens);
        let h = g.permute(&perm);
        let p = max_lambda_packing(&h);
        prop_assert!(p.validate_in(&h).is_ok());
        prop_assert_eq!(max_lambda_packing(g).len(), p.len());
    }
}
