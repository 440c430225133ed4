//! Corpus sweeps: every graph against every requested claim.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{evaluate_claim, require_cubic_three_connected, ClaimId, ClaimOptions, ClaimReport, Verdict};
use crate::corpus::{canonical_form, load_corpus, CorpusSpec, Diagnostic};
use crate::error::CorpusError;
use crate::graph::Graph;
use crate::packing::max_lambda_packing;

/// Canonical graph6, or plain graph6 if canonical labelling runs out of
/// budget.
pub fn graph_id(g: &Graph) -> String {
    canonical_form(g).map(|c| c.graph6()).unwrap_or_else(|_| g.to_graph6())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRow {
    pub graph: String,
    pub n: usize,
    pub lambda: usize,
    /// `λ = ⌊n/3⌋`.
    pub lambda_full: bool,
    /// Why the claims were not run on this graph.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refused: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub holds: usize,
    pub fails: usize,
    pub not_applicable: usize,
    pub skipped: usize,
}

impl VerdictCounts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Fails => self.fails += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ClaimMatrix {
    pub graphs: Vec<GraphRow>,
    /// Sorted by graph id, then claim.
    pub reports: Vec<ClaimReport>,
    pub summary: BTreeMap<ClaimId, VerdictCounts>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<Diagnostic>,
}

impl ClaimMatrix {
    pub fn fails(&self) -> impl Iterator<Item = &ClaimReport> {
        self.reports.iter().filter(|r| r.verdict == Verdict::Fails)
    }

    pub fn has_fails(&self) -> bool {
        self.fails().next().is_some()
    }

    pub fn has_skipped(&self) -> bool {
        self.reports.iter().any(|r| r.verdict == Verdict::Skipped)
    }

    /// Merges several matrices, re-sorting and recounting.
    pub fn merge(parts: impl IntoIterator<Item = ClaimMatrix>) -> ClaimMatrix {
        let mut out = ClaimMatrix::default();
        for p in parts {
            out.graphs.extend(p.graphs);
            out.reports.extend(p.reports);
            out.diagnostics.extend(p.diagnostics);
        }
        out.finish();
        out
    }

    fn finish(&mut self) {
        self.graphs.sort_by(|a, b| (a.n, &a.graph).cmp(&(b.n, &b.graph)));
        self.graphs.dedup_by(|a, b| a.graph == b.graph);
        self.reports.sort_by(|a, b| (a.graph.len(), &a.graph, a.claim).cmp(&(b.graph.len(), &b.graph, b.claim)));
        self.reports.dedup_by(|a, b| a.graph == b.graph && a.claim == b.claim);
        self.summary.clear();
        for r in &self.reports {
            self.summary.entry(r.claim).or_default().add(r.verdict);
        }
    }

    /// Aligned text: one line per claim with its counts, then one line
    /// per non-`holds`, non-`not_applicable` cell.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let lambda_full = self.graphs.iter().filter(|g| g.lambda_full).count();
        let _ = writeln!(out, "graphs: {}  (λ = ⌊n/3⌋ on {lambda_full})", self.graphs.len());
        let _ = writeln!(out, "{:<6}{:>8}{:>8}{:>8}{:>8}", "claim", "holds", "fails", "n/a", "skipped");
        for (id, c) in &self.summary {
            let _ = writeln!(out, "{:<6}{:>8}{:>8}{:>8}{:>8}", id.name(), c.holds, c.fails, c.not_applicable, c.skipped);
        }
        for r in self.reports.iter().filter(|r| matches!(r.verdict, Verdict::Fails | Verdict::Skipped)) {
            let w = r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
            let _ = writeln!(out, "{} {} {} {}", r.verdict, r.claim, r.graph, w);
        }
        for g in self.graphs.iter().filter(|g| g.refused.is_some()) {
            let _ = writeln!(out, "refused {} {}", g.graph, g.refused.as_deref().unwrap_or(""));
        }
        out
    }
}

fn sweep_one(g: &Graph, claims: &[ClaimId], options: &ClaimOptions) -> (GraphRow, Vec<ClaimReport>) {
    let lambda = max_lambda_packing(g).len();
    let mut row = GraphRow { graph: graph_id(g), n: g.n(), lambda, lambda_full: lambda == g.n() / 3, refused: None };
    if let Err(e) = require_cubic_three_connected(g) {
        row.refused = Some(e.to_string());
        return (row, Vec::new());
    }
    let mut reports = Vec::new();
    for &id in claims {
        match evaluate_claim(g, id, options) {
            Ok(r) => reports.push(r),
            Err(e) => {
                row.refused = Some(e.to_string());
                return (row, Vec::new());
            }
        }
    }
    (row, reports)
}

/// Loads the corpus named by `spec` and sweeps it.
pub fn corpus_claim_matrix(
    spec: &CorpusSpec,
    claims: &[ClaimId],
    options: &ClaimOptions,
) -> Result<ClaimMatrix, CorpusError> {
    let (graphs, diagnostics) = load_corpus(spec)?;
    let mut m = claim_matrix(&graphs, claims, options);
    m.diagnostics = diagnostics;
    Ok(m)
}

/// Evaluates `claims` on every graph, in parallel across graphs, with
/// results in a fixed order. Graphs that are not cubic and 3-connected
/// get a row with `refused` set and no reports.
pub fn claim_matrix(graphs: &[Graph], claims: &[ClaimId], options: &ClaimOptions) -> ClaimMatrix {
    let rows: Vec<(GraphRow, Vec<ClaimReport>)> = graphs.par_iter().map(|g| sweep_one(g, claims, options)).collect();
    let mut out = ClaimMatrix::default();
    for (row, reports) in rows {
        out.graphs.push(row);
        out.reports.extend(reports);
    }
    out.finish();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::base_graph;

    #[test]
    fn small_matrix() {
        let graphs = vec![base_graph("prism").unwrap(), base_graph("K4").unwrap(), base_graph("y").unwrap()];
        let m = claim_matrix(&graphs, &ClaimId::ALL, &ClaimOptions::default());
        assert_eq!(m.graphs.len(), 3);
        assert_eq!(m.reports.len(), 38);
        assert!(!m.has_fails());
        assert_eq!(m.graphs.iter().filter(|g| g.refused.is_some()).count(), 1);
        let again = claim_matrix(&graphs, &ClaimId::ALL, &ClaimOptions::default());
        assert_eq!(serde_json::to_string(&m).unwrap(), serde_json::to_string(&again).unwrap());
        assert!(m.to_table().contains("z1"));
        let merged = ClaimMatrix::merge([m.clone(), again]);
        assert_eq!(merged.reports.len(), 38);
        let six = corpus_claim_matrix(&CorpusSpec::generated(6), &ClaimId::ALL, &ClaimOptions::default()).unwrap();
        assert_eq!(six.summary[&ClaimId::Z1].holds, 2);
    }
}
