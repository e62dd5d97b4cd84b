//! Decision procedures for sphericity: the orbit-rank oracle for compact linear actions
//! on spheres and the reductive and non-reductive criteria built on it.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exact_linalg::{int, rank_of, LinalgError, MatrixQ, Scalar, SparseVec, Subspace};
use crate::lie_ambient::AmbientAlgebra;
use crate::subalgebra_toolkit::{normalizer_in, CandidateSubalgebra, ParabolicSplit, ReductiveSplit, Split, ToolkitError};

/// Seed used for the pseudo-random sample vector when none is given.
pub const DEFAULT_SEED: u64 = 20_170_405;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SphericityError {
    #[error("subspace is not invariant under the acting algebra")]
    NotInvariant,
    #[error("operator {0} is not skew with respect to the Gram matrix")]
    NotSkew(usize),
    #[error("operators are not closed under the commutator")]
    NotARepresentation,
    #[error("operator sizes do not match the module dimension")]
    ShapeMismatch,
    #[error("orbit ranks {ranks:?} are inconsistent for a module of dimension {dim}")]
    InconsistentDichotomy { ranks: Vec<usize>, dim: usize },
    #[error("rank at v and at 2v differ")]
    ScalingViolation,
    #[error("candidate carries no {0} split")]
    MissingSplit(&'static str),
    #[error("nilpotent part n_H is zero; the subalgebra is reductive")]
    TrivialNilpotentPart,
    #[error("m_H does not normalize n_H")]
    NormalizerViolation,
    #[error("constraint chain [p_H,p_H] in k_H in N_k(p_H) fails")]
    ConstraintChainViolation,
    #[error(transparent)]
    Toolkit(#[from] ToolkitError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A linear action of an algebra on a module `V`, given by one operator per basis element of
/// the acting algebra in the stored basis of `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearAction {
    pub acting: Subspace,
    pub space: Subspace,
    pub gram: MatrixQ,
    pub operators: Vec<MatrixQ>,
}

fn check_skew(ops: &[MatrixQ], gram: &MatrixQ) -> Result<(), SphericityError> {
    for (i, t) in ops.iter().enumerate() {
        let gt = gram.mul(t);
        if !gt.add(&gt.transpose()).is_zero() {
            return Err(SphericityError::NotSkew(i));
        }
    }
    Ok(())
}

fn flatten(m: &MatrixQ) -> SparseVec {
    let cols = m.cols();
    SparseVec::from_pairs(
        (0..m.rows()).flat_map(|r| (0..cols).map(move |c| (r, c))).map(|(r, c)| (r * cols + c, m.get(r, c).clone())),
    )
}

impl LinearAction {
    /// Action given directly by matrices on `R^N` with the given Gram matrix.
    ///
    /// The operators must be skew for `gram` and their span must be closed under the commutator.
    pub fn from_operators(operators: Vec<MatrixQ>, gram: MatrixQ) -> Result<Self, SphericityError> {
        let dim = gram.rows();
        if gram.cols() != dim || operators.iter().any(|t| t.rows() != dim || t.cols() != dim) {
            return Err(SphericityError::ShapeMismatch);
        }
        check_skew(&operators, &gram)?;
        let flat: Vec<SparseVec> = operators.iter().map(flatten).collect();
        let span = Subspace::span(dim * dim, &flat);
        for i in 0..operators.len() {
            for j in (i + 1)..operators.len() {
                let c = operators[i].mul(&operators[j]).sub(&operators[j].mul(&operators[i]));
                if !span.contains(&flatten(&c)) {
                    return Err(SphericityError::NotARepresentation);
                }
            }
        }
        Ok(LinearAction {
            acting: Subspace::full(operators.len()),
            space: Subspace::full(dim),
            gram,
            operators,
        })
    }

    pub fn module_dim(&self) -> usize {
        self.space.dim()
    }

    /// `dim span { T_i v }` for `v` in coordinates of the module basis.
    pub fn rank_at(&self, v: &[Scalar]) -> usize {
        let sv = SparseVec::from_dense(v);
        let images: Vec<SparseVec> = self.operators.iter().map(|t| t.mul_sparse(&sv)).collect();
        rank_of(&images)
    }
}

/// `ad(L)` restricted to an `L`-invariant subspace `V`, with the invariant form of the algebra.
pub fn restrict_action(alg: &AmbientAlgebra, l: &Subspace, v: &Subspace) -> Result<LinearAction, SphericityError> {
    let dim = v.dim();
    let mut operators = Vec::with_capacity(l.dim());
    for x in l.basis() {
        let mut t = MatrixQ::zeros(dim, dim);
        for (j, vj) in v.basis().iter().enumerate() {
            let image = alg.bracket(x, vj);
            let coords = v.coordinates(&image).ok_or(SphericityError::NotInvariant)?;
            for (i, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    t.set(i, j, c);
                }
            }
        }
        operators.push(t);
    }
    let gram = alg.gram_on(v);
    check_skew(&operators, &gram)?;
    Ok(LinearAction { acting: l.clone(), space: v.clone(), gram, operators })
}

/// Outcome of the orbit-rank oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTest {
    pub transitive: bool,
    /// First sample point with deficient rank, in module coordinates.
    pub witness: Option<Vec<Scalar>>,
    pub witness_rank: usize,
    pub required: usize,
    pub ranks_at_samples: Vec<usize>,
}

/// Deterministic sample schedule: the basis vectors, the all-ones vector and one seeded vector.
pub fn sample_points(dim: usize, seed: u64) -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    if dim == 0 {
        return out;
    }
    out.push(vec![Scalar::one(); dim]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random: Vec<Scalar> =
        (0..dim).map(|_| Scalar::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=7).into())).collect();
    if random.iter().all(|x| x.is_zero()) {
        random[0] = Scalar::one();
    }
    out.push(random);
    out
}

/// Decides transitivity on spheres through the rank of `{T_i v}` at the sample schedule.
///
/// Rank `dim V - 1` at one point means the orbit is open in its sphere; a compact group then
/// sweeps out the whole (connected) sphere. The remaining samples and the `2v` rescaling act as
/// a self-test and raise an error when they disagree.
pub fn transitive_on_spheres(act: &LinearAction, seed: u64) -> Result<OrbitTest, SphericityError> {
    let dim = act.module_dim();
    let required = dim.saturating_sub(1);
    let samples = sample_points(dim, seed);
    let ranks: Vec<usize> = samples.iter().map(|v| act.rank_at(v)).collect();
    if let Some(last) = samples.last() {
        let doubled: Vec<Scalar> = last.iter().map(|x| x * int(2)).collect();
        if act.rank_at(&doubled) != *ranks.last().expect("nonempty") {
            return Err(SphericityError::ScalingViolation);
        }
    }
    let full = ranks.iter().filter(|&&r| r == required).count();
    if ranks.iter().any(|&r| r > required) || (full > 0 && full < ranks.len() && dim > 1) {
        return Err(SphericityError::InconsistentDichotomy { ranks, dim });
    }
    if dim <= 1 {
        return Ok(OrbitTest { transitive: true, witness: None, witness_rank: required, required, ranks_at_samples: ranks });
    }
    match ranks.iter().position(|&r| r < required) {
        None => Ok(OrbitTest { transitive: true, witness: None, witness_rank: required, required, ranks_at_samples: ranks }),
        Some(i) => Ok(OrbitTest {
            transitive: false,
            witness: Some(samples[i].clone()),
            witness_rank: ranks[i],
            required,
            ranks_at_samples: ranks,
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Spherical,
    NotSpherical,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    TransitiveOnSpheres,
    ComplementDimAtMostOne,
    FullN,
    DeficientRank { witness: Vec<Scalar>, rank: usize, required: usize },
    AHNotFull,
}

impl Reason {
    pub fn tag(&self) -> &'static str {
        match self {
            Reason::TransitiveOnSpheres => "TransitiveOnSpheres",
            Reason::ComplementDimAtMostOne => "ComplementDimAtMostOne",
            Reason::FullN => "FullN",
            Reason::DeficientRank { .. } => "DeficientRank",
            Reason::AHNotFull => "AHNotFull",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericityVerdict {
    pub outcome: Outcome,
    pub reason: Reason,
    pub ranks_at_samples: Vec<usize>,
    /// Dimension of `p_H^perp` in `p` or of `n_H^perp` in `n`.
    pub complement_dim: usize,
    /// The complement itself, in algebra coordinates; witnesses are coordinates in its basis.
    pub complement: Subspace,
    /// Whether `n_H` contains `g_2alpha` (non-reductive case only).
    pub contains_g2alpha: Option<bool>,
}

fn verdict_from_oracle(
    act: &LinearAction,
    seed: u64,
    complement: Subspace,
    contains_g2alpha: Option<bool>,
) -> Result<SphericityVerdict, SphericityError> {
    let test = transitive_on_spheres(act, seed)?;
    let (outcome, reason) = if test.transitive {
        (Outcome::Spherical, Reason::TransitiveOnSpheres)
    } else {
        (
            Outcome::NotSpherical,
            Reason::DeficientRank {
                witness: test.witness.expect("deficient sample"),
                rank: test.witness_rank,
                required: test.required,
            },
        )
    };
    Ok(SphericityVerdict {
        outcome,
        reason,
        ranks_at_samples: test.ranks_at_samples,
        complement_dim: complement.dim(),
        complement,
        contains_g2alpha,
    })
}

fn reductive_split<'a>(cand: &'a CandidateSubalgebra) -> Result<&'a ReductiveSplit, SphericityError> {
    match &cand.split {
        Some(Split::Reductive(s)) => Ok(s),
        _ => Err(SphericityError::MissingSplit("reductive")),
    }
}

fn parabolic_split<'a>(cand: &'a CandidateSubalgebra) -> Result<&'a ParabolicSplit, SphericityError> {
    match &cand.split {
        Some(Split::Parabolic(s)) => Ok(s),
        _ => Err(SphericityError::MissingSplit("parabolic")),
    }
}

/// Reductive criterion: `h` is spherical iff `K_H` has an open orbit in every sphere of `p_H^perp`.
pub fn reductive_spherical(cand: &CandidateSubalgebra, seed: u64) -> Result<SphericityVerdict, SphericityError> {
    let alg = cand.algebra;
    let split = reductive_split(cand)?;
    let (k, p) = match (alg.k(), alg.p()) {
        (Some(k), Some(p)) => (k, p),
        _ => return Err(ToolkitError::NoCartanDecomposition.into()),
    };
    let derived = crate::subalgebra_toolkit::derived_space(alg, &split.p_h);
    if !split.k_h.contains_space(&derived) || !normalizer_in(alg, k, &split.p_h).contains_space(&split.k_h) {
        return Err(SphericityError::ConstraintChainViolation);
    }
    let complement = split.p_h.ortho_complement(p, alg.gram_g())?;
    if complement.dim() <= 1 {
        return Ok(SphericityVerdict {
            outcome: Outcome::Spherical,
            reason: Reason::ComplementDimAtMostOne,
            ranks_at_samples: vec![],
            complement_dim: complement.dim(),
            complement,
            contains_g2alpha: None,
        });
    }
    let act = restrict_action(alg, &split.k_h, &complement)?;
    verdict_from_oracle(&act, seed, complement, None)
}

/// Non-reductive criterion for `h = m_H + a_H + n_H` with `n_H` nonzero.
pub fn nonreductive_spherical(cand: &CandidateSubalgebra, seed: u64) -> Result<SphericityVerdict, SphericityError> {
    let alg = cand.algebra;
    let split = parabolic_split(cand)?;
    if split.n_h.is_zero() {
        return Err(SphericityError::TrivialNilpotentPart);
    }
    if !normalizer_in(alg, alg.m(), &split.n_h).contains_space(&split.m_h) {
        return Err(SphericityError::NormalizerViolation);
    }
    let contains_g2alpha = Some(split.n_h.contains_space(alg.g_2alpha()));
    let n = alg.n_nil();
    let complement = split.n_h.ortho_complement(n, alg.gram_g())?;
    let a_full = split.a_h.dim() == alg.a().dim();
    let simple = |outcome, reason, complement: Subspace| SphericityVerdict {
        outcome,
        reason,
        ranks_at_samples: vec![],
        complement_dim: complement.dim(),
        complement,
        contains_g2alpha,
    };
    if complement.is_zero() {
        return Ok(simple(Outcome::Spherical, Reason::FullN, complement));
    }
    if !a_full {
        return Ok(simple(Outcome::NotSpherical, Reason::AHNotFull, complement));
    }
    if complement.dim() == 1 {
        return Ok(simple(Outcome::Spherical, Reason::ComplementDimAtMostOne, complement));
    }
    let act = restrict_action(alg, &split.m_h, &complement)?;
    verdict_from_oracle(&act, seed, complement, contains_g2alpha)
}

/// Runs the criterion matching the candidate's split.
pub fn spherical(cand: &CandidateSubalgebra, seed: u64) -> Result<SphericityVerdict, SphericityError> {
    match &cand.split {
        Some(Split::Reductive(_)) => reductive_spherical(cand, seed),
        Some(Split::Parabolic(_)) => nonreductive_spherical(cand, seed),
        None => Err(SphericityError::MissingSplit("any")),
    }
}

/// Recomputes the rank at a stored witness; `None` when the verdict carries no witness.
pub fn replay_witness(cand: &CandidateSubalgebra, verdict: &SphericityVerdict) -> Result<Option<usize>, SphericityError> {
    let Reason::DeficientRank { witness, .. } = &verdict.reason else {
        return Ok(None);
    };
    let acting = match &cand.split {
        Some(Split::Reductive(s)) => &s.k_h,
        Some(Split::Parabolic(s)) => &s.m_h,
        None => return Err(SphericityError::MissingSplit("any")),
    };
    let act = restrict_action(cand.algebra, acting, &verdict.complement)?;
    Ok(Some(act.rank_at(witness)))
}
