use lambdapack::connectivity::{is_three_connected, vertex_connectivity};
use lambdapack::corpus::{canonical_form, generate_cubic, CorpusSpec, load_corpus};
use lambdapack::Graph;
use proptest::prelude::*;

/// Labelled cubic graphs by filling the adjacency matrix row by row, with
/// vertex 0 pinned to neighbours 1, 2, 3.
fn labelled_cubic(n: usize) -> Vec<Vec<Vec<bool>>> {
    fn fill(m: &mut Vec<Vec<bool>>, deg: &mut Vec<usize>, i: usize, j: usize, out: &mut Vec<Vec<Vec<bool>>>) {
        let n = m.len();
        if i == n {
            out.push(m.clone());
            return;
        }
        if j == n {
            if deg[i] == 3 {
                fill(m, deg, i + 1, i + 2, out);
            }
            return;
        }
        // skip
        if deg[i] + (n - j - 1) >= 3 {
            fill(m, deg, i, j + 1, out);
        }
        if deg[i] < 3 && deg[j] < 3 {
            m[i][j] = true;
            m[j][i] = true;
            deg[i] += 1;
            deg[j] += 1;
            fill(m, deg, i, j + 1, out);
            deg[i] -= 1;
            deg[j] -= 1;
            m[i][j] = false;
            m[j][i] = false;
        }
    }
    let mut m = vec![vec![false; n]; n];
    let mut deg = vec![0; n];
    for j in 1..4 {
        m[0][j] = true;
        m[j][0] = true;
        deg[j] = 1;
    }
    deg[0] = 3;
    let mut out = Vec::new();
    fill(&mut m, &mut deg, 1, 2, &mut out);
    out
}

fn connected(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if m[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn isomorphic(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    fn extend(a: &[Vec<bool>], b: &[Vec<bool>], map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == a.len() {
            return true;
        }
        for w in 0..b.len() {
            if used[w] || (0..v).any(|u| a[u][v] != b[map[u]][w]) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

fn oracle_classes(n: usize) -> Vec<Vec<Vec<bool>>> {
    let mut reps: Vec<Vec<Vec<bool>>> = Vec::new();
    for m in labelled_cubic(n) {
        if connected(&m) && !reps.iter().any(|r| isomorphic(r, &m)) {
            reps.push(m);
        }
    }
    reps
}

fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; g.n()]; g.n()];
    for e in g.edges() {
        m[e.u][e.v] = true;
        m[e.v][e.u] = true;
    }
    m
}

#[test]
fn generated_classes_match_matrix_enumeration() {
    for (n, expected) in [(4, 1), (6, 2), (8, 5)] {
        let reps = oracle_classes(n);
        assert_eq!(reps.len(), expected, "oracle n={n}");
        let gen = generate_cubic(n, true).unwrap();
        assert_eq!(gen.len(), reps.len(), "n={n}");
        for g in &gen {
            let m = matrix(g);
            assert_eq!(reps.iter().filter(|r| isomorphic(r, &m)).count(), 1);
        }
    }
}

#[test]
fn known_class_counts() {
    let counts: Vec<usize> = [4, 6, 8, 10, 12].iter().map(|&n| generate_cubic(n, true).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 19, 85]);
}

#[test]
fn generated_graphs_are_valid_and_filter_agrees() {
    for n in [4, 6, 8, 10, 12] {
        let all = generate_cubic(n, true).unwrap();
        for g in &all {
            assert!(g.is_cubic() && g.is_connected());
            g.validate().unwrap();
            assert_eq!(is_three_connected(g), vertex_connectivity(g).unwrap() >= 3);
        }
        let (three, diag) = load_corpus(&CorpusSpec::generated(n).three_connected()).unwrap();
        assert!(diag.is_empty());
        assert_eq!(three.len(), all.iter().filter(|g| vertex_connectivity(g).unwrap() >= 3).count());
    }
    let three: Vec<usize> =
        [4, 6, 8, 10, 12].iter().map(|&n| load_corpus(&CorpusSpec::generated(n).three_connected()).unwrap().0.len()).collect();
    assert_eq!(three, vec![1, 2, 4, 14, 57]);
}

#[test]
fn raw_stream_covers_every_class() {
    let raw = generate_cubic(8, false).unwrap();
    let forms: std::collections::BTreeSet<_> = raw.iter().map(|g| canonical_form(g).unwrap()).collect();
    assert_eq!(forms.len(), 5);
    assert!(raw.len() > 5);
}

proptest! {
    #[test]
    fn canonical_form_ignores_labelling(idx in 0usize..19, perm in Just((0..10).collect::<Vec<usize>>()).prop_shuffle()) {
        let g = &generate_cubic(10, true).unwrap()[idx];
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn distinct_classes_have_distinct_forms(i in 0usize..19, j in 0usize..19) {
        let all = generate_cubic(10, true).unwrap();
        let same = isomorphic(&matrix(&all[i]), &matrix(&all[j]));
        prop_assert_eq!(same, canonical_form(&all[i]).unwrap() == canonical_form(&all[j]).unwrap());
    }
}
