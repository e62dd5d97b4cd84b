//! Normal forms, compact embeddings, the sphere-transitive subgroup table and the
//! classification tables with their expected verdicts.

use thiserror::Error;

use crate::lie_ambient::AmbientError;
use crate::subalgebra_toolkit::ToolkitError;

pub mod elements;
pub mod embeddings;
pub mod normal_forms;
pub mod onishchik;
pub mod tables;

pub use embeddings::{make_embedding, Embedding, EmbeddingName, FreeChoice};
pub use onishchik::{onishchik_entries, onishchik_negatives, ClassicalGroup, OnishchikEntry};
pub use normal_forms::{make_normal_form, sp_slot_pattern, su_complex_invariants, NormalFormKind, NormalFormSpec, SlotPattern};
pub use tables::{
    discrepancy_scan, f4_preimage, orthonormal_action, so4c_in_f4model, table_cases, CaseKind, Expected, Provenance,
    SplitKind, TableCase, TheoremId, F4_PYTHAGOREAN_C,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Ambient(#[from] AmbientError),
    #[error(transparent)]
    Toolkit(#[from] ToolkitError),
}
