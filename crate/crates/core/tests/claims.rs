use lambdapack::claims::{
    centre_in_some_factor, claim_matrix, evaluate_claim, ClaimId, ClaimOptions, QueryBudget, Verdict,
};
use lambdapack::corpus::{generate_cubic, load_corpus, CorpusSpec};
use lambdapack::packing::{all_paths3, brute_force_oracle, find_lambda_factor, FactorConstraint};
use lambdapack::{Edge, Graph};

fn three_connected(n: usize) -> Vec<Graph> {
    load_corpus(&CorpusSpec::generated(n).three_connected()).unwrap().0
}

fn oracle_has(g: &Graph, c: FactorConstraint) -> bool {
    !brute_force_oracle(g, &c).unwrap().factors.is_empty()
}

fn verdict(g: &Graph, id: ClaimId) -> Verdict {
    evaluate_claim(g, id, &ClaimOptions::default()).unwrap().verdict
}

fn expect(holds: bool) -> Verdict {
    if holds {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

#[test]
fn z_claims_agree_with_oracle() {
    for n in [6, 12] {
        for g in three_connected(n) {
            let edges: Vec<Edge> = g.edges().to_vec();
            assert_eq!(verdict(&g, ClaimId::Z1), expect(oracle_has(&g, FactorConstraint::none())));
            let z2 = edges.iter().all(|&e| oracle_has(&g, FactorConstraint::forbidding([e])));
            assert_eq!(verdict(&g, ClaimId::Z2), expect(z2));
            let z3 = edges.iter().all(|&e| oracle_has(&g, FactorConstraint::requiring([e])));
            assert_eq!(verdict(&g, ClaimId::Z3), expect(z3));
            let z8 = all_paths3(&g).iter().all(|p| oracle_has(&g, FactorConstraint::removing(p.vertices())));
            assert_eq!(verdict(&g, ClaimId::Z8), expect(z8));
        }
    }
}

#[test]
fn f1_agrees_with_oracle() {
    for n in [4, 10] {
        for g in three_connected(n) {
            let f1 = (0..g.n()).all(|x| oracle_has(&g, FactorConstraint::removing([x])));
            assert_eq!(verdict(&g, ClaimId::F1), expect(f1));
        }
    }
}

#[test]
fn neighbour_pair_reading_matches_centre_reading() {
    for n in [6, 12] {
        for g in generate_cubic(n, true).unwrap() {
            for x in 0..n {
                let nb = g.neighbors(x);
                let pairs = [(nb[0], nb[1]), (nb[0], nb[2]), (nb[1], nb[2])];
                let some_pair =
                    pairs.iter().any(|&(a, b)| find_lambda_factor(&g, &FactorConstraint::removing([a, x, b])).unwrap().is_some());
                assert_eq!(some_pair, centre_in_some_factor(&g, x).unwrap(), "{} at {x}", g.to_graph6());
            }
        }
    }
}

#[test]
fn residue_guard_and_refusals() {
    let prism = lambdapack::constructions::base_graph("prism").unwrap();
    for id in ClaimId::ALL {
        let v = verdict(&prism, id);
        assert_eq!(v == Verdict::NotApplicable, id.residue() != 0, "{id}");
    }
    let two_connected = generate_cubic(8, true).unwrap().into_iter().find(|g| {
        lambdapack::connectivity::vertex_connectivity(g).unwrap() == 2
    });
    assert!(evaluate_claim(&two_connected.unwrap(), ClaimId::Z1, &ClaimOptions::default()).is_err());
}

#[test]
fn tiny_budgets_skip_and_never_fail() {
    let graphs = three_connected(12);
    let options = ClaimOptions { budget: QueryBudget::nodes(1), ..ClaimOptions::default() };
    let m = claim_matrix(&graphs, &ClaimId::ALL, &options);
    assert!(!m.has_fails());
    assert!(m.has_skipped());
    for r in m.reports.iter().filter(|r| r.verdict == Verdict::Skipped) {
        assert!(r.witness.as_ref().is_some_and(|w| w.get("undecided").is_some()));
    }
}

#[test]
fn matrix_is_reproducible() {
    let graphs = three_connected(10);
    let a = serde_json::to_string(&claim_matrix(&graphs, &ClaimId::ALL, &ClaimOptions::default())).unwrap();
    let mut rev = graphs.clone();
    rev.reverse();
    let b = serde_json::to_string(&claim_matrix(&rev, &ClaimId::ALL, &ClaimOptions::default())).unwrap();
    assert_eq!(a, b);
}
