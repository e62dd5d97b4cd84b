//! Checking a subalgebra supplied as a JSON file.
//!
//! ```json
//! { "ambient": {"family": "so", "n": 5},
//!   "basis": [ [[["0","0"], ["1","0"], ...], ...], ... ] }
//! ```
//!
//! Each basis element of a matrix family is a square matrix of `[re, im]` rational strings.
//! For `f4-model` an element is `[m, n]` or `[m, a, n]`: 21 so(7) coordinates, an optional
//! `a` coefficient and 15 coordinates on `g_alpha + g_2alpha`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use rankone::exact_linalg::{parse_scalar, GaussianScalar, Scalar, SparseVec, Subspace};
use rankone::lie_ambient::{construct_algebra, AlgebraFamily, AmbientAlgebra, CMatrix, F4_A_INDEX, F4_GALPHA_START};
use rankone::subalgebra_toolkit::{CandidateSubalgebra, ToolkitError};

use crate::campaign::{computed_of, evaluate};
use crate::report::{CaseResult, Status};

#[derive(Debug, thiserror::Error)]
pub enum CheckError {
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("NotASubalgebra: the span is not closed under the bracket")]
    NotASubalgebra,
    #[error("not in normal position: {0}")]
    NotInNormalPosition(String),
    #[error("{0}")]
    Criterion(String),
}

#[derive(Deserialize)]
struct Ambient {
    family: String,
    n: Option<usize>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum F4Element {
    Pair(Vec<String>, Vec<String>),
    Triple(Vec<String>, String, Vec<String>),
}

#[derive(Deserialize)]
struct RawFile {
    ambient: Ambient,
    basis: serde_json::Value,
}

fn scalar(text: &str) -> Result<Scalar, CheckError> {
    parse_scalar(text).map_err(|e| CheckError::Parse(format!("{text:?}: {}", e.0)))
}

fn matrix_element(alg: &AmbientAlgebra, rows: &[Vec<[String; 2]>]) -> Result<SparseVec, CheckError> {
    let size = alg.matrix_size();
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(CheckError::Parse(format!("expected {size}x{size} matrices for {}", alg.family())));
    }
    let mut m = CMatrix::zero(size);
    for (r, row) in rows.iter().enumerate() {
        for (c, [re, im]) in row.iter().enumerate() {
            m.set(r, c, GaussianScalar::new(scalar(re)?, scalar(im)?));
        }
    }
    alg.from_matrix(&m).map_err(|e| CheckError::Parse(format!("matrix is not in {}: {e}", alg.family())))
}

fn f4_element(e: &F4Element) -> Result<SparseVec, CheckError> {
    let (m, a, n) = match e {
        F4Element::Pair(m, n) => (m, None, n),
        F4Element::Triple(m, a, n) => (m, Some(a), n),
    };
    if m.len() != 21 || n.len() != 15 {
        return Err(CheckError::Parse("f4-model elements need 21 m and 15 n coordinates".into()));
    }
    let mut pairs = Vec::new();
    for (i, x) in m.iter().enumerate() {
        pairs.push((i, scalar(x)?));
    }
    if let Some(a) = a {
        pairs.push((F4_A_INDEX, scalar(a)?));
    }
    for (i, x) in n.iter().enumerate() {
        pairs.push((F4_GALPHA_START + i, scalar(x)?));
    }
    Ok(SparseVec::from_pairs(pairs))
}

/// Parses the file contents into the ambient algebra and the spanned subspace.
pub fn parse_candidate(text: &str) -> Result<(AmbientAlgebra, Subspace), CheckError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| CheckError::Parse(e.to_string()))?;
    let family = AlgebraFamily::from_tag(&raw.ambient.family, raw.ambient.n)
        .ok_or_else(|| CheckError::Parse(format!("unknown ambient {:?} with n = {:?}", raw.ambient.family, raw.ambient.n)))?;
    let alg = construct_algebra(family).map_err(|e| CheckError::Parse(e.to_string()))?;
    let vecs = if family == AlgebraFamily::F4Model {
        let elems: Vec<F4Element> = serde_json::from_value(raw.basis).map_err(|e| CheckError::Parse(e.to_string()))?;
        elems.iter().map(f4_element).collect::<Result<Vec<_>, _>>()?
    } else {
        let mats: Vec<Vec<Vec<[String; 2]>>> =
            serde_json::from_value(raw.basis).map_err(|e| CheckError::Parse(e.to_string()))?;
        mats.iter().map(|m| matrix_element(&alg, m)).collect::<Result<Vec<_>, _>>()?
    };
    let span = Subspace::span(alg.dim(), &vecs);
    Ok((alg, span))
}

/// Runs the criterion on the parsed candidate, detecting the split (reductive first).
pub fn check_text(text: &str, label: &str, seed: u64) -> Result<CaseResult, CheckError> {
    let (alg, span) = parse_candidate(text)?;
    let cand = CandidateSubalgebra::new(&alg, span)
        .map_err(|e| match e {
            ToolkitError::NotASubalgebra => CheckError::NotASubalgebra,
            other => CheckError::Parse(other.to_string()),
        })?
        .with_detected_split()
        .map_err(|e| CheckError::NotInNormalPosition(e.to_string()))?;
    let (verdict, dims) = evaluate(&cand, seed).map_err(CheckError::Criterion)?;
    Ok(CaseResult {
        case_id: label.to_string(),
        theorem_id: "check".to_string(),
        family: Some(alg.family().to_string()),
        n: alg.family().n(),
        row: "file".to_string(),
        params: BTreeMap::new(),
        expected: "Unasserted".to_string(),
        provenance: "INPUT".to_string(),
        computed: computed_of(&verdict),
        dims: Some(dims),
        ranks_at_samples: verdict.ranks_at_samples.clone(),
        status: Status::Pass,
        note: None,
    })
}

pub fn check_file(path: &Path, seed: u64) -> Result<CaseResult, CheckError> {
    let text = std::fs::read_to_string(path).map_err(|e| CheckError::Io(path.display().to_string(), e))?;
    check_text(&text, &path.display().to_string(), seed)
}
