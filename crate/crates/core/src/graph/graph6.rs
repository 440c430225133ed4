//! The graph6 interchange format.
//!
//! Header: one byte `63 + n` for `n <= 62`, otherwise `126` followed by
//! three 6-bit groups (`n <= 258047`). Body: the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed big-endian into 6-bit groups, each emitted as `group + 63`,
//! zero-padded to a whole group.

use super::Graph;
use crate::error::GraphError;

const MAX_LONG: usize = 258_047;
const HEADER: &str = ">>graph6<<";

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        assert!(n <= MAX_LONG, "graph6 supports at most {MAX_LONG} vertices");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(GraphError::Graph6BadByte { byte, offset });
        }
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(GraphError::Graph6Truncated { expected: 4, found: bytes.len() });
        }
        if bytes[1] == 126 {
            // 8-byte header for n > 258047
            return Err(GraphError::Graph6TooLarge(usize::MAX));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(GraphError::Graph6Truncated {
            expected: need + (bytes.len() - body.len()),
            found: bytes.len(),
        });
    }
    if body.len() > need {
        return Err(GraphError::Graph6Trailing(body.len() - need));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - 63;
            if (group >> (5 - k % 6)) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &pairs)
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        graph6_encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        graph6_decode(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn k4_encodes_to_c_tilde() {
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(graph6_encode(&k4), "C~");
        assert_eq!(graph6_decode("C~").unwrap(), k4);
    }

    #[test]
    fn known_small_strings() {
        // path a-c, a-e, b-d, d-e on 5 vertices (0=a .. 4=e)
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph6_encode(&g), "DQc");
        assert_eq!(graph6_encode(&Graph::empty(0)), "?");
        assert_eq!(graph6_encode(&Graph::empty(1)), "@");
        // Petersen graph in its usual nauty labelling
        let p = graph6_decode("IheA@GUAo").unwrap();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!(p.is_cubic());
    }

    #[test]
    fn decode_errors() {
        assert_eq!(graph6_decode(""), Err(GraphError::Graph6Empty));
        assert_eq!(graph6_decode("C"), Err(GraphError::Graph6Truncated { expected: 2, found: 1 }));
        assert_eq!(graph6_decode("C~~"), Err(GraphError::Graph6Trailing(1)));
        assert!(matches!(graph6_decode("C \x7f"), Err(GraphError::Graph6BadByte { .. })));
        assert!(matches!(graph6_decode("~"), Err(GraphError::Graph6Truncated { .. })));
    }

    #[test]
    fn long_header_round_trip() {
        let n = 70;
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::from_edge_list(n, &pairs).unwrap();
        let s = graph6_encode(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(graph6_decode(&s).unwrap(), g);
        assert_eq!(graph6_decode(&format!(">>graph6<<{s}\n")).unwrap(), g);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip_random(n in 0usize..=20, seed in proptest::collection::vec(any::<bool>(), 190)) {
            let mut pairs = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if seed[k] { pairs.push((i, j)); }
                    k += 1;
                }
            }
            let g = Graph::from_edge_list(n, &pairs).unwrap();
            let back = graph6_decode(&graph6_encode(&g)).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
