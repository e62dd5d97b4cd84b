//! Subalgebra calculus on top of an [`AmbientAlgebra`]: bracket spaces, closure,
//! normalizers and centralizers as kernel computations, and the Cartan-compatible
//! splittings of a candidate subalgebra.

use thiserror::Error;

use crate::exact_linalg::{left_kernel, SparseVec, Subspace};
use crate::lie_ambient::AmbientAlgebra;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToolkitError {
    #[error("subspace lives in dimension {0}, the algebra has dimension {1}")]
    DimensionMismatch(usize, usize),
    #[error("span is not closed under the bracket")]
    NotASubalgebra,
    #[error("subalgebra is not the sum of its intersections with k and p; conjugate it into normal position first")]
    NotThetaStable,
    #[error("subalgebra is not the sum of its intersections with m, a and n, or its n-part is not an ideal")]
    NotInNormalPosition,
    #[error("the ambient algebra carries no Cartan decomposition")]
    NoCartanDecomposition,
    #[error("constraint chain [p_H,p_H] in k_H in N_k(p_H) fails")]
    ConstraintChainViolation,
}

fn check_dim(alg: &AmbientAlgebra, s: &Subspace) -> Result<(), ToolkitError> {
    if s.ambient_dim() != alg.dim() {
        return Err(ToolkitError::DimensionMismatch(s.ambient_dim(), alg.dim()));
    }
    Ok(())
}

/// Span of all brackets `[x, y]` with `x` in `a` and `y` in `b`.
pub fn bracket_space(alg: &AmbientAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut out = Vec::with_capacity(a.dim() * b.dim());
    for x in a.basis() {
        for y in b.basis() {
            let z = alg.bracket(x, y);
            if !z.is_zero() {
                out.push(z);
            }
        }
    }
    Subspace::span(alg.dim(), &out)
}

/// `[S, S]`.
pub fn derived_space(alg: &AmbientAlgebra, s: &Subspace) -> Subspace {
    let b = s.basis();
    let mut out = Vec::new();
    for i in 0..b.len() {
        for j in (i + 1)..b.len() {
            let z = alg.bracket(&b[i], &b[j]);
            if !z.is_zero() {
                out.push(z);
            }
        }
    }
    Subspace::span(alg.dim(), &out)
}

/// Smallest subalgebra containing `s`.
pub fn lie_closure(alg: &AmbientAlgebra, s: &Subspace) -> Subspace {
    let mut current = s.clone();
    let mut frontier: Vec<SparseVec> = s.basis().to_vec();
    while !frontier.is_empty() {
        let mut gens: Vec<SparseVec> = current.basis().to_vec();
        let before = current.dim();
        for x in &frontier {
            for y in current.basis() {
                let z = alg.bracket(x, y);
                if !current.contains(&z) {
                    gens.push(z);
                }
            }
        }
        let next = Subspace::span(alg.dim(), &gens);
        if next.dim() == before {
            break;
        }
        frontier = next.basis().iter().filter(|v| !current.contains(v)).cloned().collect();
        current = next;
    }
    current
}

/// Elements `X` of `l` such that every `[X, s_i]`, reduced modulo `modulo`, vanishes.
fn stabilizing(alg: &AmbientAlgebra, l: &Subspace, s: &Subspace, modulo: Option<&Subspace>) -> Subspace {
    let dim = alg.dim();
    let rows: Vec<SparseVec> = l
        .basis()
        .iter()
        .map(|x| {
            let mut pairs = Vec::new();
            for (i, si) in s.basis().iter().enumerate() {
                let mut z = alg.bracket(x, si);
                if let Some(m) = modulo {
                    z = m.reduce(&z);
                }
                pairs.extend(z.iter().map(|(k, v)| (i * dim + k, v.clone())));
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    let coeffs = left_kernel(&rows, s.dim().max(1) * dim);
    let vecs: Vec<SparseVec> = coeffs.basis().iter().map(|c| SparseVec::combination(c, l.basis())).collect();
    Subspace::span(dim, &vecs)
}

/// `{X in l : [X, s] in s}`.
pub fn normalizer_in(alg: &AmbientAlgebra, l: &Subspace, s: &Subspace) -> Subspace {
    stabilizing(alg, l, s, Some(s))
}

/// `{X in l : [X, s] = 0}`.
pub fn centralizer_in(alg: &AmbientAlgebra, l: &Subspace, s: &Subspace) -> Subspace {
    stabilizing(alg, l, s, None)
}

pub fn is_subalgebra(alg: &AmbientAlgebra, s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.len()).all(|i| ((i + 1)..b.len()).all(|j| s.contains(&alg.bracket(&b[i], &b[j]))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductiveSplit {
    pub k_h: Subspace,
    pub p_h: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicSplit {
    pub m_h: Subspace,
    pub a_h: Subspace,
    pub n_h: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Split {
    Reductive(ReductiveSplit),
    Parabolic(ParabolicSplit),
}

fn meet(a: &Subspace, b: &Subspace) -> Subspace {
    a.intersection(b).expect("subspaces of the same algebra")
}

/// `h = (h cap k) + (h cap p)` together with the constraint chain.
pub fn split_reductive(alg: &AmbientAlgebra, h: &Subspace) -> Result<ReductiveSplit, ToolkitError> {
    check_dim(alg, h)?;
    let (k, p) = match (alg.k(), alg.p()) {
        (Some(k), Some(p)) => (k, p),
        _ => return Err(ToolkitError::NoCartanDecomposition),
    };
    let k_h = meet(h, k);
    let p_h = meet(h, p);
    if k_h.dim() + p_h.dim() != h.dim() {
        return Err(ToolkitError::NotThetaStable);
    }
    if !k_h.contains_space(&derived_space(alg, &p_h)) || !normalizer_in(alg, k, &p_h).contains_space(&k_h) {
        return Err(ToolkitError::ConstraintChainViolation);
    }
    Ok(ReductiveSplit { k_h, p_h })
}

/// `h = (h cap m) + (h cap a) + (h cap n)` with `h cap n` an ideal of `h`.
pub fn split_parabolic(alg: &AmbientAlgebra, h: &Subspace) -> Result<ParabolicSplit, ToolkitError> {
    check_dim(alg, h)?;
    let m_h = meet(h, alg.m());
    let a_h = meet(h, alg.a());
    let n_h = meet(h, alg.n_nil());
    if m_h.dim() + a_h.dim() + n_h.dim() != h.dim() {
        return Err(ToolkitError::NotInNormalPosition);
    }
    if !n_h.contains_space(&bracket_space(alg, h, &n_h)) {
        return Err(ToolkitError::NotInNormalPosition);
    }
    Ok(ParabolicSplit { m_h, a_h, n_h })
}

/// A bracket-closed subspace of an ambient algebra, optionally split into its
/// Cartan or parabolic parts.
#[derive(Clone, Debug)]
pub struct CandidateSubalgebra<'a> {
    pub algebra: &'a AmbientAlgebra,
    pub span: Subspace,
    pub split: Option<Split>,
}

impl<'a> CandidateSubalgebra<'a> {
    pub fn new(algebra: &'a AmbientAlgebra, span: Subspace) -> Result<Self, ToolkitError> {
        check_dim(algebra, &span)?;
        if !is_subalgebra(algebra, &span) {
            return Err(ToolkitError::NotASubalgebra);
        }
        Ok(CandidateSubalgebra { algebra, span, split: None })
    }

    pub fn with_reductive_split(mut self) -> Result<Self, ToolkitError> {
        self.split = Some(Split::Reductive(split_reductive(self.algebra, &self.span)?));
        Ok(self)
    }

    pub fn with_parabolic_split(mut self) -> Result<Self, ToolkitError> {
        self.split = Some(Split::Parabolic(split_parabolic(self.algebra, &self.span)?));
        Ok(self)
    }

    /// Reductive split when the span is theta-stable, parabolic split otherwise.
    pub fn with_detected_split(self) -> Result<Self, ToolkitError> {
        match split_reductive(self.algebra, &self.span) {
            Ok(s) => Ok(CandidateSubalgebra { split: Some(Split::Reductive(s)), ..self }),
            Err(ToolkitError::NotThetaStable | ToolkitError::NoCartanDecomposition) => self.with_parabolic_split(),
            Err(e) => Err(e),
        }
    }
}
