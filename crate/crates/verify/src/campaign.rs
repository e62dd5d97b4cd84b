//! Running table cases through the criteria.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use rankone::catalog::{discrepancy_scan, table_cases, CaseKind, Expected, TableCase, TheoremId};
use rankone::exact_linalg::{format_scalar, MatrixQ};
use rankone::lie_ambient::{construct_algebra, AlgebraFamily, AmbientAlgebra};
use rankone::sphericity_core::{
    replay_witness, spherical, transitive_on_spheres, LinearAction, Outcome, Reason, SphericityVerdict,
};
use rankone::subalgebra_toolkit::{CandidateSubalgebra, Split};

use crate::report::{CaseResult, Computed, Dims, Report, Status};

#[derive(Debug, thiserror::Error)]
pub enum CampaignError {
    #[error("empty size range {0}..={1}")]
    EmptyRange(usize, usize),
    #[error("table {table} does not apply at n = {n}: {why}")]
    OutOfRange { table: TheoremId, n: usize, why: String },
    #[error("{0}")]
    Catalog(#[from] rankone::catalog::CatalogError),
    #[error("could not build the worker pool: {0}")]
    Pool(String),
}

/// Runs `f` on a pool sized by `VERIFY_THREADS` when set, on the global pool otherwise.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T, CampaignError> {
    match std::env::var("VERIFY_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CampaignError::Pool(e.to_string()))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

pub fn outcome_tag(o: Outcome) -> &'static str {
    match o {
        Outcome::Spherical => "Spherical",
        Outcome::NotSpherical => "NotSpherical",
    }
}

fn blank(case: &TableCase) -> CaseResult {
    CaseResult {
        case_id: case.case_id.clone(),
        theorem_id: case.theorem.as_str().to_string(),
        family: case.family.map(|f| f.to_string()),
        n: case.n,
        row: case.row.clone(),
        params: case.params.iter().cloned().collect::<BTreeMap<_, _>>(),
        expected: case.expected.tag().to_string(),
        provenance: case.provenance.tag().to_string(),
        computed: Computed::default(),
        dims: None,
        ranks_at_samples: vec![],
        status: Status::Fail,
        note: case.note.clone(),
    }
}

pub(crate) fn dims_of(cand: &CandidateSubalgebra, complement: Option<usize>) -> Dims {
    let mut parts = BTreeMap::new();
    match &cand.split {
        Some(Split::Reductive(s)) => {
            parts.insert("k_H".to_string(), s.k_h.dim());
            parts.insert("p_H".to_string(), s.p_h.dim());
        }
        Some(Split::Parabolic(s)) => {
            parts.insert("m_H".to_string(), s.m_h.dim());
            parts.insert("a_H".to_string(), s.a_h.dim());
            parts.insert("n_H".to_string(), s.n_h.dim());
        }
        None => {}
    }
    Dims { h: cand.span.dim(), parts, complement }
}

pub(crate) fn computed_of(v: &SphericityVerdict) -> Computed {
    let mut c = Computed {
        outcome: Some(outcome_tag(v.outcome).to_string()),
        reason: Some(v.reason.tag().to_string()),
        contains_g2alpha: v.contains_g2alpha,
        ..Computed::default()
    };
    if let Reason::DeficientRank { witness, rank, required } = &v.reason {
        c.witness = Some(witness.iter().map(format_scalar).collect());
        c.witness_rank = Some(*rank);
        c.required_rank = Some(*required);
    }
    c
}

fn status_for(expected: Expected, outcome: Outcome) -> Status {
    match (expected, outcome) {
        (Expected::Discrepancy, _) => Status::DiscrepancyCandidate,
        (Expected::Spherical, Outcome::Spherical) | (Expected::NotSpherical, Outcome::NotSpherical) => Status::Pass,
        _ => Status::Fail,
    }
}

/// Runs the criterion for a subalgebra case and checks the witness by replay.
pub(crate) fn evaluate(cand: &CandidateSubalgebra, seed: u64) -> Result<(SphericityVerdict, Dims), String> {
    let verdict = spherical(cand, seed).map_err(|e| e.to_string())?;
    if let Reason::DeficientRank { rank, .. } = &verdict.reason {
        let replayed = replay_witness(cand, &verdict).map_err(|e| e.to_string())?;
        if replayed != Some(*rank) {
            return Err(format!("witness replay gave rank {replayed:?}, reported {rank}"));
        }
    }
    let dims = dims_of(cand, Some(verdict.complement_dim));
    Ok((verdict, dims))
}

fn run_action(case: &TableCase, dim: usize, seed: u64, out: &mut CaseResult) -> Result<(), String> {
    let gens = case.action_generators().map_err(|e| e.to_string())?;
    let act = LinearAction::from_operators(gens, MatrixQ::identity(dim)).map_err(|e| e.to_string())?;
    let test = transitive_on_spheres(&act, seed).map_err(|e| e.to_string())?;
    let outcome = if test.transitive { Outcome::Spherical } else { Outcome::NotSpherical };
    out.computed.outcome = Some(outcome_tag(outcome).to_string());
    out.computed.reason = Some(if test.transitive { "TransitiveOnSpheres" } else { "DeficientRank" }.to_string());
    if let Some(w) = &test.witness {
        if act.rank_at(w) != test.witness_rank {
            return Err("witness replay disagrees with the reported rank".into());
        }
        out.computed.witness = Some(w.iter().map(format_scalar).collect());
        out.computed.witness_rank = Some(test.witness_rank);
        out.computed.required_rank = Some(test.required);
    }
    out.ranks_at_samples = test.ranks_at_samples;
    out.status = status_for(case.expected, outcome);
    Ok(())
}

/// Evaluates one table case. Construction and criterion errors become `FAIL` with the cause.
pub fn run_case(case: &TableCase, alg: Option<&AmbientAlgebra>, seed: u64) -> CaseResult {
    let mut out = blank(case);
    let result = match (&case.kind, alg) {
        (CaseKind::Action { dim, .. }, _) => run_action(case, *dim, seed, &mut out),
        (CaseKind::Subalgebra { .. }, Some(alg)) => case
            .candidate(alg)
            .map_err(|e| e.to_string())
            .and_then(|cand| evaluate(&cand, seed))
            .map(|(verdict, dims)| {
                out.computed = computed_of(&verdict);
                out.dims = Some(dims);
                out.ranks_at_samples = verdict.ranks_at_samples.clone();
                out.status = status_for(case.expected, verdict.outcome);
            }),
        (CaseKind::Subalgebra { .. }, None) => Err("no ambient algebra for a subalgebra case".into()),
    };
    if let Err(e) = result {
        out.computed.error = Some(e);
        out.status = Status::Fail;
    }
    out
}

/// Evaluates cases in parallel and returns the results in input order.
pub fn run_cases(cases: &[TableCase], seed: u64) -> Result<Vec<CaseResult>, CampaignError> {
    let mut families: Vec<AlgebraFamily> = cases.iter().filter_map(|c| c.family).collect();
    families.sort();
    families.dedup();
    with_pool(|| {
        let algebras: BTreeMap<AlgebraFamily, Result<AmbientAlgebra, String>> = families
            .par_iter()
            .map(|f| (*f, construct_algebra(*f).map_err(|e| e.to_string())))
            .collect();
        cases
            .par_iter()
            .map(|case| match case.family.map(|f| &algebras[&f]) {
                Some(Err(e)) => {
                    let mut r = blank(case);
                    r.computed.error = Some(e.clone());
                    r
                }
                Some(Ok(alg)) => run_case(case, Some(alg), seed),
                None => run_case(case, None, seed),
            })
            .collect()
    })
}

/// Collects the cases of one table over a size range; tables without `n` are built once.
pub fn campaign_cases(table: TheoremId, sizes: RangeInclusive<usize>) -> Result<Vec<TableCase>, CampaignError> {
    if sizes.is_empty() {
        return Err(CampaignError::EmptyRange(*sizes.start(), *sizes.end()));
    }
    if !table.uses_n() {
        return Ok(table_cases(table, 0)?);
    }
    let mut cases = Vec::new();
    for n in sizes {
        if let Some(f) = table.family(n) {
            f.validate().map_err(|e| CampaignError::OutOfRange { table, n, why: e.to_string() })?;
        }
        cases.extend(table_cases(table, n)?);
    }
    Ok(cases)
}

pub fn run_campaign(table: TheoremId, sizes: RangeInclusive<usize>, seed: u64) -> Result<Report, CampaignError> {
    let cases = campaign_cases(table, sizes)?;
    Ok(Report::new(seed, run_cases(&cases, seed)?))
}

/// The non-asserting scan for rows the tables may be missing.
pub fn explore(family: AlgebraFamily, seed: u64) -> Result<Report, CampaignError> {
    let cases = discrepancy_scan(family)?;
    Ok(Report::new(seed, run_cases(&cases, seed)?))
}
