//! Classification tables as data: each row becomes one or more concrete cases with an
//! expected verdict and a recipe that builds the subalgebra inside a given ambient algebra.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::exact_linalg::{MatrixQ, SparseVec, Subspace};
use crate::lie_ambient::{AlgebraFamily, AmbientAlgebra, CMatrix};
use crate::subalgebra_toolkit::{lie_closure, CandidateSubalgebra};

use super::embeddings::FreeChoice;
use super::{make_normal_form, CatalogError, NormalFormSpec};

mod f4;
mod sp;
mod so;
mod su;

pub use f4::{f4_preimage, orthonormal_action, so4c_in_f4model, F4_PYTHAGOREAN_C};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T5_2,
    T5_3,
    T6_2,
    T6_3,
    T7_3,
    T7_4,
    Facts8_1,
    T8_5,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::T5_2,
        TheoremId::T5_3,
        TheoremId::T6_2,
        TheoremId::T6_3,
        TheoremId::T7_3,
        TheoremId::T7_4,
        TheoremId::Facts8_1,
        TheoremId::T8_5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T5_2 => "5.2",
            TheoremId::T5_3 => "5.3",
            TheoremId::T6_2 => "6.2",
            TheoremId::T6_3 => "6.3",
            TheoremId::T7_3 => "7.3",
            TheoremId::T7_4 => "7.4",
            TheoremId::Facts8_1 => "8.1-facts",
            TheoremId::T8_5 => "8.5",
        }
    }

    /// Family the theorem is about; `None` for the bare representation facts.
    pub fn family(self, n: usize) -> Option<AlgebraFamily> {
        match self {
            TheoremId::T5_2 | TheoremId::T5_3 => Some(AlgebraFamily::So(n)),
            TheoremId::T6_2 | TheoremId::T6_3 => Some(AlgebraFamily::Su(n)),
            TheoremId::T7_3 | TheoremId::T7_4 => Some(AlgebraFamily::Sp(n)),
            TheoremId::T8_5 => Some(AlgebraFamily::F4Model),
            TheoremId::Facts8_1 => None,
        }
    }

    /// Whether the table's rows depend on `n`.
    pub fn uses_n(self) -> bool {
        !matches!(self, TheoremId::T8_5 | TheoremId::Facts8_1)
    }

    pub fn is_reductive(self) -> bool {
        matches!(self, TheoremId::T5_2 | TheoremId::T6_2 | TheoremId::T7_3)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "8.4-facts" => Ok(TheoremId::Facts8_1),
            _ => TheoremId::ALL
                .into_iter()
                .find(|t| t.as_str() == s)
                .ok_or_else(|| CatalogError::InvalidParams(format!("unknown table id {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Expected {
    Spherical,
    NotSpherical,
    /// Computed and reported, never asserted.
    Discrepancy,
}

impl Expected {
    pub fn tag(self) -> &'static str {
        match self {
            Expected::Spherical => "Spherical",
            Expected::NotSpherical => "NotSpherical",
            Expected::Discrepancy => "Unasserted",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// A row of the published table or a negative computed in its proof.
    Paper,
    /// A negative control derived independently.
    Derived,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::Paper => "PAPER",
            Provenance::Derived => "DERIVED",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitKind {
    Reductive,
    Parabolic,
}

pub type Recipe = Arc<dyn Fn(&AmbientAlgebra) -> Result<Subspace, CatalogError> + Send + Sync>;
pub type ActionRecipe = Arc<dyn Fn() -> Result<Vec<MatrixQ>, CatalogError> + Send + Sync>;

#[derive(Clone)]
pub enum CaseKind {
    /// A subalgebra of the ambient algebra, to be split and run through the sphericity criterion.
    Subalgebra { split: SplitKind, recipe: Recipe },
    /// A linear action on `R^dim` tested for transitivity on spheres.
    Action { dim: usize, recipe: ActionRecipe },
}

#[derive(Clone)]
pub struct TableCase {
    pub theorem: TheoremId,
    pub case_id: String,
    pub family: Option<AlgebraFamily>,
    pub n: Option<usize>,
    /// The row as printed, e.g. `"so(k)+so(n-k,1)"`.
    pub row: String,
    pub params: Vec<(String, String)>,
    pub expected: Expected,
    pub provenance: Provenance,
    pub symmetric: bool,
    pub note: Option<String>,
    pub kind: CaseKind,
}

impl fmt::Debug for TableCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TableCase")
            .field("case_id", &self.case_id)
            .field("expected", &self.expected)
            .field("provenance", &self.provenance)
            .finish()
    }
}

impl TableCase {
    /// Builds the span; fails for action cases.
    pub fn build_span(&self, alg: &AmbientAlgebra) -> Result<Subspace, CatalogError> {
        match &self.kind {
            CaseKind::Subalgebra { recipe, .. } => recipe(alg),
            CaseKind::Action { .. } => Err(CatalogError::InvalidParams(format!("{} is an action case", self.case_id))),
        }
    }

    /// Builds the candidate and applies the split the table row is about.
    pub fn candidate<'a>(&self, alg: &'a AmbientAlgebra) -> Result<CandidateSubalgebra<'a>, CatalogError> {
        let CaseKind::Subalgebra { split, .. } = &self.kind else {
            return Err(CatalogError::InvalidParams(format!("{} is an action case", self.case_id)));
        };
        let cand = CandidateSubalgebra::new(alg, self.build_span(alg)?)?;
        Ok(match split {
            SplitKind::Reductive => cand.with_reductive_split()?,
            SplitKind::Parabolic => cand.with_parabolic_split()?,
        })
    }

    pub fn action_generators(&self) -> Result<Vec<MatrixQ>, CatalogError> {
        match &self.kind {
            CaseKind::Action { recipe, .. } => recipe(),
            CaseKind::Subalgebra { .. } => Err(CatalogError::InvalidParams(format!("{} is a subalgebra case", self.case_id))),
        }
    }
}

/// Collects cases for one table at one size.
pub(crate) struct Builder {
    theorem: TheoremId,
    family: Option<AlgebraFamily>,
    n: Option<usize>,
    cases: Vec<TableCase>,
}

/// Options for a single pushed case.
#[derive(Clone, Default)]
pub(crate) struct Meta {
    pub symmetric: bool,
    pub note: Option<String>,
}

impl Builder {
    fn new(theorem: TheoremId, n: usize) -> Self {
        let family = theorem.family(n);
        let n = if theorem.uses_n() { Some(n) } else { None };
        Builder { theorem, family, n, cases: Vec::new() }
    }

    fn split(&self) -> SplitKind {
        if self.theorem.is_reductive() {
            SplitKind::Reductive
        } else {
            SplitKind::Parabolic
        }
    }

    fn case_id(&self, row: &str, params: &[(String, String)]) -> String {
        let mut id = format!("{}", self.theorem);
        match self.family {
            Some(f) => id.push_str(&format!("/{f}")),
            None => id.push_str("/rep"),
        }
        id.push('/');
        id.push_str(row);
        for (k, v) in params {
            id.push_str(&format!("/{k}={v}"));
        }
        id
    }

    #[allow(clippy::too_many_arguments)]
    fn push_kind(
        &mut self,
        row: &str,
        params: Vec<(String, String)>,
        expected: Expected,
        provenance: Provenance,
        meta: Meta,
        kind: CaseKind,
    ) {
        let case_id = self.case_id(row, &params);
        self.cases.push(TableCase {
            theorem: self.theorem,
            case_id,
            family: self.family,
            n: self.n,
            row: row.to_string(),
            params,
            expected,
            provenance,
            symmetric: meta.symmetric,
            note: meta.note,
            kind,
        });
    }

    /// Pushes a subalgebra case with the table's natural split.
    pub(crate) fn push<F>(
        &mut self,
        row: &str,
        params: Vec<(String, String)>,
        expected: Expected,
        provenance: Provenance,
        meta: Meta,
        recipe: F,
    ) where
        F: Fn(&AmbientAlgebra) -> Result<Subspace, CatalogError> + Send + Sync + 'static,
    {
        let kind = CaseKind::Subalgebra { split: self.split(), recipe: Arc::new(recipe) };
        self.push_kind(row, params, expected, provenance, meta, kind);
    }

    pub(crate) fn push_action<F>(&mut self, row: &str, expected: Expected, provenance: Provenance, dim: usize, recipe: F)
    where
        F: Fn() -> Result<Vec<MatrixQ>, CatalogError> + Send + Sync + 'static,
    {
        let kind = CaseKind::Action { dim, recipe: Arc::new(recipe) };
        self.push_kind(row, vec![], expected, provenance, Meta::default(), kind);
    }
}

pub(crate) fn p(key: &str, value: impl fmt::Display) -> (String, String) {
    (key.to_string(), value.to_string())
}

/// Free-parameter samples for a factor with `basis_len` generators: zero, a torus, the full factor.
pub(crate) fn choices(basis_len: usize) -> Vec<FreeChoice> {
    match basis_len {
        0 => vec![FreeChoice::Zero],
        1 => vec![FreeChoice::Zero, FreeChoice::Full],
        _ => FreeChoice::ALL.to_vec(),
    }
}

pub(crate) fn pick<T: Clone>(basis: &[T], choice: FreeChoice) -> Vec<T> {
    match choice {
        FreeChoice::Zero => vec![],
        FreeChoice::Torus => basis[..1.min(basis.len())].to_vec(),
        FreeChoice::Full => basis.to_vec(),
    }
}

pub(crate) fn pick_space(s: &Subspace, choice: FreeChoice) -> Subspace {
    Subspace::span(s.ambient_dim(), &pick(s.basis(), choice))
}

pub(crate) fn sum_all(dim: usize, parts: &[&Subspace]) -> Subspace {
    let vecs: Vec<SparseVec> = parts.iter().flat_map(|s| s.basis().iter().cloned()).collect();
    Subspace::span(dim, &vecs)
}

pub(crate) fn mats(alg: &AmbientAlgebra, gens: &[CMatrix]) -> Result<Subspace, CatalogError> {
    Ok(alg.span_of_matrices(gens)?)
}

pub(crate) fn normal_form(alg: &AmbientAlgebra, spec: &NormalFormSpec) -> Result<Subspace, CatalogError> {
    make_normal_form(alg, spec)
}

pub(crate) fn closure_of(alg: &AmbientAlgebra, spec: &NormalFormSpec) -> Result<Subspace, CatalogError> {
    Ok(lie_closure(alg, &make_normal_form(alg, spec)?))
}

/// `l_H + n` rows: `l_H` sampled as `0`, `a` and `m + a`.
pub(crate) fn push_lh_plus_n(b: &mut Builder) {
    for (tag, m, a) in [("0", false, false), ("a", false, true), ("m+a", true, true)] {
        b.push("l_H+n", vec![p("l_H", tag)], Expected::Spherical, Provenance::Paper, Meta::default(), move |alg| {
            let zero = Subspace::zero(alg.dim());
            let mm = if m { alg.m().clone() } else { zero.clone() };
            let aa = if a { alg.a().clone() } else { zero };
            Ok(sum_all(alg.dim(), &[&mm, &aa, alg.n_nil()]))
        });
    }
}

/// Cases of the table `theorem` at size `n` (ignored by the f4 and representation tables).
pub fn table_cases(theorem: TheoremId, n: usize) -> Result<Vec<TableCase>, CatalogError> {
    if let Some(family) = theorem.family(n) {
        if theorem.uses_n() {
            family.validate()?;
        }
    }
    let mut b = Builder::new(theorem, n);
    match theorem {
        TheoremId::T5_2 => so::reductive(&mut b, n),
        TheoremId::T5_3 => so::nonreductive(&mut b, n),
        TheoremId::T6_2 => su::reductive(&mut b, n),
        TheoremId::T6_3 => su::nonreductive(&mut b, n),
        TheoremId::T7_3 => sp::reductive(&mut b, n),
        TheoremId::T7_4 => sp::nonreductive(&mut b, n),
        TheoremId::Facts8_1 => f4::facts(&mut b),
        TheoremId::T8_5 => f4::nonreductive(&mut b),
    }
    Ok(b.cases)
}

/// The non-asserted cases of both tables of a family: rows the tables omit although
/// the criterion can decide them.
pub fn discrepancy_scan(family: AlgebraFamily) -> Result<Vec<TableCase>, CatalogError> {
    family.validate()?;
    let n = family.n().unwrap_or(0);
    let theorems = match family {
        AlgebraFamily::So(_) => [TheoremId::T5_2, TheoremId::T5_3],
        AlgebraFamily::Su(_) => [TheoremId::T6_2, TheoremId::T6_3],
        AlgebraFamily::Sp(_) => [TheoremId::T7_3, TheoremId::T7_4],
        AlgebraFamily::F4Model => return Ok(vec![]),
    };
    let mut out = Vec::new();
    for t in theorems {
        out.extend(table_cases(t, n)?.into_iter().filter(|c| c.expected == Expected::Discrepancy));
    }
    Ok(out)
}
