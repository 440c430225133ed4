//! Small cubic graph corpora: generation, isomorphism dedup, file ingest.

mod canonical;
mod generate;
mod ingest;

pub use canonical::{canonical_form, canonical_form_with_budget, is_isomorphic, CanonicalForm, DEFAULT_LEAF_BUDGET};
pub use generate::{for_each_labelled_cubic, generate_classes, generate_cubic, MAX_GENERATED_ORDER};
pub use ingest::{export, ingest, ingest_str, load_corpus, CorpusSource, CorpusSpec, Diagnostic, GraphFormat, Ingested};
