//! Reading and writing graph files.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::canonical::canonical_form;
use super::generate::generate_cubic;
use crate::connectivity::is_three_connected;
use crate::error::CorpusError;
use crate::graph::{edge_list_decode_many, edge_list_encode, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

/// A rejected line (graph6) or block start (edge list), 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Ingested {
    /// Each graph with the line it started on.
    pub graphs: Vec<(usize, Graph)>,
    pub diagnostics: Vec<Diagnostic>,
}

pub fn ingest_str(text: &str, format: GraphFormat) -> Ingested {
    let mut out = Ingested::default();
    let results: Vec<(usize, Result<Graph, String>)> = match format {
        GraphFormat::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            })
            .map(|(i, l)| {
                let t = l.trim();
                let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
                (i + 1, Graph::from_graph6(t).map_err(|e| e.to_string()))
            })
            .collect(),
        GraphFormat::EdgeList => {
            edge_list_decode_many(text).into_iter().map(|(l, r)| (l, r.map_err(|e| e.to_string()))).collect()
        }
    };
    for (line, r) in results {
        match r {
            Ok(g) => out.graphs.push((line, g)),
            Err(message) => out.diagnostics.push(Diagnostic { line, message }),
        }
    }
    out
}

pub fn ingest(path: &Path, format: GraphFormat) -> Result<Ingested, CorpusError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CorpusError::Io { path: path.display().to_string(), source })?;
    Ok(ingest_str(&text, format))
}

pub fn export(graphs: &[Graph], format: GraphFormat) -> String {
    let mut out = String::new();
    for g in graphs {
        match format {
            GraphFormat::Graph6 => {
                out.push_str(&g.to_graph6());
                out.push('\n');
            }
            GraphFormat::EdgeList => {
                out.push_str(&edge_list_encode(g));
                out.push('\n');
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusSource {
    Generate,
    Graph6File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub n: usize,
    pub require_3connected: bool,
    pub dedup: bool,
    pub source: CorpusSource,
}

impl CorpusSpec {
    pub fn generated(n: usize) -> CorpusSpec {
        CorpusSpec { n, require_3connected: false, dedup: true, source: CorpusSource::Generate }
    }

    pub fn three_connected(mut self) -> CorpusSpec {
        self.require_3connected = true;
        self
    }
}

/// Graphs named by `spec`. File sources keep only order-`n` graphs
/// (`n == 0` keeps all) and drop malformed lines, which come back as
/// diagnostics.
pub fn load_corpus(spec: &CorpusSpec) -> Result<(Vec<Graph>, Vec<Diagnostic>), CorpusError> {
    let (mut graphs, diagnostics) = match &spec.source {
        CorpusSource::Generate => (generate_cubic(spec.n, spec.dedup)?, Vec::new()),
        CorpusSource::Graph6File(path) => {
            let ing = ingest(path, GraphFormat::Graph6)?;
            let mut gs: Vec<Graph> =
                ing.graphs.into_iter().map(|(_, g)| g).filter(|g| spec.n == 0 || g.n() == spec.n).collect();
            if spec.dedup {
                let mut seen = std::collections::BTreeSet::new();
                let mut kept = Vec::new();
                for g in gs {
                    if seen.insert(canonical_form(&g)?) {
                        kept.push(g);
                    }
                }
                gs = kept;
            }
            (gs, ing.diagnostics)
        }
    };
    if spec.require_3connected {
        graphs.retain(is_three_connected);
    }
    Ok((graphs, diagnostics))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn malformed_line_is_reported() {
        let ing = ingest_str("C~\nE{Sw\n?!!\n", GraphFormat::Graph6);
        assert_eq!(ing.graphs.len(), 2);
        assert_eq!(ing.diagnostics.len(), 1);
        assert_eq!(ing.diagnostics[0].line, 3);
        assert_eq!(ingest_str("", GraphFormat::Graph6), Ingested::default());
    }

    #[test]
    fn export_then_ingest_keeps_classes() {
        let six = generate_cubic(6, true).unwrap();
        for fmt in [GraphFormat::Graph6, GraphFormat::EdgeList] {
            let ing = ingest_str(&export(&six, fmt), fmt);
            assert!(ing.diagnostics.is_empty());
            let a: BTreeSet<_> = six.iter().map(|g| canonical_form(g).unwrap()).collect();
            let b: BTreeSet<_> = ing.graphs.iter().map(|(_, g)| canonical_form(g).unwrap()).collect();
            assert_eq!(a, b);
            assert_eq!(b.len(), 2);
        }
    }

    #[test]
    fn missing_file() {
        assert!(matches!(
            ingest(Path::new("/nonexistent/graphs.g6"), GraphFormat::Graph6),
            Err(CorpusError::Io { .. })
        ));
    }
}
