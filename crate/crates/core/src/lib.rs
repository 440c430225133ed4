//! Exact 3-vertex-path (Λ) packing in cubic graphs.
//!
//! The crate builds the cubic graph compositions used to study Λ-factors
//! (splices, vertex replacement, Y-composites, the leaf-triangle family
//! and its closures, the `R_s` graphs), decides constrained Λ-factor
//! existence and maximum Λ-packing exactly, and evaluates the
//! residue-guarded factor claims on concrete graphs and corpora.
//!
//! Modules:
//! - [`graph`]: simple graphs, graph6 and edge-list interchange.
//! - [`connectivity`]: vertex connectivity, 3-edge cuts, cyclic edge connectivity.
//! - [`constructions`]: every composition recipe with wiring metadata.
//! - [`corpus`]: cubic graph generation, canonical forms, ingestion.
//! - [`packing`]: the exact solver and its brute-force oracle.
//! - [`claims`]: claim predicates, cut-case and projection checkers, sweeps.

pub mod claims;
pub mod connectivity;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod packing;

pub use error::{ClaimError, ConnectivityError, ConstructionError, CorpusError, GraphError, PackingError};
pub use graph::{Edge, Graph};
