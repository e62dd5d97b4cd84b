//! Exact rational linear algebra: scalars, sparse vectors, dense matrices and canonical subspaces.

mod matrix;
mod scalar;
mod subspace;
mod vector;

pub use matrix::{kernel_of_rows, MatrixQ};
pub use scalar::{format_scalar, frac, int, parse_scalar, GaussianScalar, ParseScalarError, Scalar};
pub use subspace::{left_kernel, rank_of, subspace_ops, LinalgError, Rref, Subspace, SubspaceRelation};
pub use vector::SparseVec;

/// Rank of a dense matrix.
pub fn rank(m: &MatrixQ) -> usize {
    m.rank()
}

/// Kernel of a dense matrix as a canonical subspace.
pub fn kernel(m: &MatrixQ) -> Subspace {
    m.kernel()
}

/// Orthogonal complement of `s` inside `within` with respect to `gram`.
pub fn ortho_complement(s: &Subspace, within: &Subspace, gram: &MatrixQ) -> Result<Subspace, LinalgError> {
    s.ortho_complement(within, gram)
}
