//! Plain edge-list text: a line `n m`, then `m` lines `u v`.
//!
//! A file may hold several graphs back to back; blank lines and lines
//! starting with `#` between blocks are skipped.

use super::Graph;
use crate::error::GraphError;

pub fn edge_list_encode(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let a = it.next().and_then(|t| t.parse().ok());
    let b = it.next().and_then(|t| t.parse().ok());
    match (a, b, it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(GraphError::EdgeList(format!("line {lineno}: expected two integers, got {line:?}"))),
    }
}

fn is_skippable(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

/// Decodes exactly one graph.
pub fn edge_list_decode(text: &str) -> Result<Graph, GraphError> {
    let mut all = edge_list_decode_many(text);
    match all.len() {
        1 => all.pop().expect("one block").1,
        0 => Err(GraphError::EdgeList("no graph found".into())),
        k => Err(GraphError::EdgeList(format!("expected one graph, found {k} blocks"))),
    }
}

/// Decodes consecutive blocks, returning each block's starting line
/// (1-based) together with its result. A malformed block consumes the
/// lines up to the next header-looking line it can resynchronise on.
pub fn edge_list_decode_many(text: &str) -> Vec<(usize, Result<Graph, GraphError>)> {
    let lines: Vec<&str> = text.lines().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        if is_skippable(lines[i]) {
            i += 1;
            continue;
        }
        let start = i + 1;
        let (n, m) = match parse_pair(lines[i], start) {
            Ok(h) => h,
            Err(e) => {
                out.push((start, Err(e)));
                i += 1;
                continue;
            }
        };
        i += 1;
        let mut pairs = Vec::with_capacity(m);
        let mut err = None;
        while pairs.len() < m {
            if i >= lines.len() {
                err = Some(GraphError::EdgeList(format!(
                    "line {start}: block declares {m} edges but only {} follow",
                    pairs.len()
                )));
                break;
            }
            if lines[i].trim().is_empty() {
                err = Some(GraphError::EdgeList(format!(
                    "line {}: blank line inside edge block",
                    i + 1
                )));
                break;
            }
            match parse_pair(lines[i], i + 1) {
                Ok(p) => pairs.push(p),
                Err(e) => {
                    err = Some(e);
                    i += 1;
                    break;
                }
            }
            i += 1;
        }
        let res = match err {
            Some(e) => Err(e),
            None => Graph::from_edge_list(n, &pairs).and_then(|g| {
                if g.edge_count() == m {
                    Ok(g)
                } else {
                    Err(GraphError::EdgeList(format!("line {start}: duplicate edges in block")))
                }
            }),
        };
        out.push((start, res));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_multiple_blocks() {
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let text = edge_list_encode(&k4);
        assert!(text.starts_with("4 6\n0 1\n"));
        assert_eq!(edge_list_decode(&text).unwrap(), k4);

        let two = format!("{text}\n# next\n3 1\n0 2\n");
        let blocks = edge_list_decode_many(&two);
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[1].0, 10);
        assert_eq!(blocks[1].1.as_ref().unwrap().edge_count(), 1);
    }

    #[test]
    fn malformed_blocks_are_reported() {
        assert!(edge_list_decode("3 2\n0 1\n").is_err());
        assert!(edge_list_decode("3 1\n0 x\n").is_err());
        assert!(edge_list_decode("3 1\n1 1\n").is_err());
        assert!(edge_list_decode("").is_err());
        let blocks = edge_list_decode_many("2 1\n0 1\nbogus\n2 1\n0 1\n");
        assert_eq!(blocks.len(), 3);
        assert!(blocks[0].1.is_ok() && blocks[1].1.is_err() && blocks[2].1.is_ok());
    }
}
