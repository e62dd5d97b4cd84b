//! Verification campaigns over the sphericity tables, subalgebra file checks and
//! invariant self-tests, with deterministic JSON-lines reports.

pub mod campaign;
pub mod check;
pub mod report;
pub mod selftest;

pub use campaign::{explore, run_campaign, run_cases, CampaignError};
pub use check::{check_file, check_text, CheckError};
pub use report::{CaseResult, Report, Status};

/// Seed of the pseudo-random sample vector when none is given.
pub const DEFAULT_SEED: u64 = rankone::sphericity_core::DEFAULT_SEED;
