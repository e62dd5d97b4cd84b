//! The rank-one ambient algebras so(n,1), su(n,1), sp(n,1) as matrix Lie algebras,
//! plus a model of the minimal parabolic of f4 built from spin(7) acting on R^8 and R^7.
//!
//! Elements are coordinate vectors ([`SparseVec`]) in the algebra's basis. For the
//! matrix families the basis is the canonical echelon basis of the realified
//! solution space of the defining linear constraints.

mod cmatrix;
mod f4;
pub mod octonion;
mod quaternion;

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exact_linalg::{int, kernel_of_rows, GaussianScalar, MatrixQ, Scalar, SparseVec, Subspace};

pub use cmatrix::CMatrix;
pub use f4::{f4_model, F4_A_INDEX, F4_G2ALPHA_START, F4_GALPHA_START, F4_M_DIM};
pub use quaternion::{phi_quaternion, phi_vector, QuatMatrix, Quaternion};

/// One of the four rank-one families handled here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraFamily {
    So(usize),
    Su(usize),
    Sp(usize),
    F4Model,
}

impl AlgebraFamily {
    /// Checks the range of `n` for the family.
    pub fn validate(&self) -> Result<(), AmbientError> {
        let ok = match *self {
            AlgebraFamily::So(n) => n >= 3,
            AlgebraFamily::Su(n) => n >= 1,
            AlgebraFamily::Sp(n) => n >= 2,
            AlgebraFamily::F4Model => true,
        };
        if ok {
            Ok(())
        } else {
            Err(AmbientError::FamilyConstraint(*self))
        }
    }

    pub fn n(&self) -> Option<usize> {
        match *self {
            AlgebraFamily::So(n) | AlgebraFamily::Su(n) | AlgebraFamily::Sp(n) => Some(n),
            AlgebraFamily::F4Model => None,
        }
    }

    /// Short tag: `so`, `su`, `sp` or `f4-model`.
    pub fn tag(&self) -> &'static str {
        match self {
            AlgebraFamily::So(_) => "so",
            AlgebraFamily::Su(_) => "su",
            AlgebraFamily::Sp(_) => "sp",
            AlgebraFamily::F4Model => "f4-model",
        }
    }

    /// Parses a tag together with `n` (ignored for the f4 model).
    pub fn from_tag(tag: &str, n: Option<usize>) -> Option<AlgebraFamily> {
        match (tag, n) {
            ("so", Some(n)) => Some(AlgebraFamily::So(n)),
            ("su", Some(n)) => Some(AlgebraFamily::Su(n)),
            ("sp", Some(n)) => Some(AlgebraFamily::Sp(n)),
            ("f4-model", _) | ("f4", _) => Some(AlgebraFamily::F4Model),
            _ => None,
        }
    }

    /// Complex matrix size of the realization (0 for the f4 model).
    pub fn matrix_size(&self) -> usize {
        match *self {
            AlgebraFamily::So(n) | AlgebraFamily::Su(n) => n + 1,
            AlgebraFamily::Sp(n) => 2 * (n + 1),
            AlgebraFamily::F4Model => 0,
        }
    }

    /// Expected real dimension.
    pub fn expected_dim(&self) -> usize {
        match *self {
            AlgebraFamily::So(n) => (n + 1) * n / 2,
            AlgebraFamily::Su(n) => (n + 1) * (n + 1) - 1,
            AlgebraFamily::Sp(n) => (n + 1) * (2 * n + 3),
            AlgebraFamily::F4Model => F4_M_DIM + 1 + 8 + 7,
        }
    }
}

impl fmt::Display for AlgebraFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraFamily::So(n) => write!(f, "so({n},1)"),
            AlgebraFamily::Su(n) => write!(f, "su({n},1)"),
            AlgebraFamily::Sp(n) => write!(f, "sp({n},1)"),
            AlgebraFamily::F4Model => write!(f, "f4-model"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AmbientError {
    #[error("family parameter out of range for {0}")]
    FamilyConstraint(AlgebraFamily),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("matrix does not lie in the algebra")]
    NotInAlgebra,
    #[error("bracket left the algebra")]
    ClosureViolation,
    #[error("the f4 model has no matrix realization")]
    NoMatrixRealization,
    #[error("the f4 model carries no Cartan decomposition")]
    NoCartanDecomposition,
}

/// Which distinguished subspace a Gram matrix is requested for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    P,
    NNil,
    G,
}

/// A constructed rank-one Lie algebra with its distinguished subspaces.
#[derive(Clone, Debug)]
pub struct AmbientAlgebra {
    family: AlgebraFamily,
    matrix_size: usize,
    basis: Vec<CMatrix>,
    realified: Option<Subspace>,
    structure: Vec<SparseVec>,
    k: Option<Subspace>,
    p: Option<Subspace>,
    m: Subspace,
    a: Subspace,
    n_nil: Subspace,
    g_alpha: Subspace,
    g_2alpha: Subspace,
    a0: SparseVec,
    gram_g: MatrixQ,
}

/// Real linear constraints on the realified entries of a `size x size` complex matrix.
struct Constraints {
    size: usize,
    rows: Vec<SparseVec>,
}

impl Constraints {
    fn new(size: usize) -> Self {
        Constraints { size, rows: Vec::new() }
    }

    fn idx(&self, r: usize, c: usize, part: usize) -> usize {
        CMatrix::real_index(self.size, r, c, part)
    }

    fn push(&mut self, terms: &[(usize, usize, usize, i64)]) {
        let row = SparseVec::from_pairs(terms.iter().map(|&(r, c, part, coef)| (self.idx(r, c, part), int(coef))));
        if !row.is_zero() {
            self.rows.push(row);
        }
    }

    /// `X^* J + J X = 0` on the leading `len x len` block starting at `off`, with `J = diag(1, ..., 1, -1)`.
    fn skew_hermitian_j(&mut self, off: usize, len: usize) {
        let j = |i: usize| if i + 1 == len { -1 } else { 1 };
        for a in 0..len {
            for b in a..len {
                let (ra, rb) = (off + a, off + b);
                self.push(&[(rb, ra, 0, j(b)), (ra, rb, 0, j(a))]);
                self.push(&[(rb, ra, 1, -j(b)), (ra, rb, 1, j(a))]);
            }
        }
    }

    fn all_real(&mut self) {
        for r in 0..self.size {
            for c in 0..self.size {
                self.push(&[(r, c, 1, 1)]);
            }
        }
    }

    fn traceless(&mut self) {
        for part in 0..2 {
            let terms: Vec<_> = (0..self.size).map(|i| (i, i, part, 1)).collect();
            self.push(&terms);
        }
    }
}

fn a0_matrix(family: AlgebraFamily) -> CMatrix {
    match family {
        AlgebraFamily::So(n) | AlgebraFamily::Su(n) => {
            CMatrix::from_int_entries(n + 1, &[(n - 1, n, 1, 0), (n, n - 1, 1, 0)])
        }
        AlgebraFamily::Sp(n) => CMatrix::from_int_entries(
            2 * (n + 1),
            &[(0, n, 1, 0), (n, 0, 1, 0), (n + 1, 2 * n + 1, 1, 0), (2 * n + 1, n + 1, 1, 0)],
        ),
        AlgebraFamily::F4Model => unreachable!("the f4 model is built separately"),
    }
}

/// Builds so(n,1), su(n,1) or sp(n,1) (or the f4 model) with all distinguished subspaces.
pub fn construct_algebra(family: AlgebraFamily) -> Result<AmbientAlgebra, AmbientError> {
    family.validate()?;
    let size = family.matrix_size();
    let mut cons = Constraints::new(size);
    match family {
        AlgebraFamily::F4Model => return f4_model(),
        AlgebraFamily::So(_) => {
            cons.all_real();
            cons.skew_hermitian_j(0, size);
        }
        AlgebraFamily::Su(_) => {
            cons.skew_hermitian_j(0, size);
            cons.traceless();
        }
        AlgebraFamily::Sp(n) => {
            let h = n + 1;
            cons.skew_hermitian_j(0, h);
            for r in 0..h {
                for c in 0..h {
                    // lower-right block is the conjugate of the upper-left block
                    cons.push(&[(h + r, h + c, 0, 1), (r, c, 0, -1)]);
                    cons.push(&[(h + r, h + c, 1, 1), (r, c, 1, 1)]);
                    // upper-right block is minus the conjugate of the lower-left block
                    cons.push(&[(r, h + c, 0, 1), (h + r, c, 0, 1)]);
                    cons.push(&[(r, h + c, 1, 1), (h + r, c, 1, -1)]);
                }
            }
            let j = |i: usize| if i + 1 == h { -1 } else { 1 };
            for r in 0..h {
                for c in (r + 1)..h {
                    for part in 0..2 {
                        // J R symmetric, J = diag(1, ..., 1, -1)
                        cons.push(&[(h + r, c, part, j(r)), (h + c, r, part, -j(c))]);
                    }
                }
            }
        }
    }
    let realified = kernel_of_rows(&cons.rows, 2 * size * size);
    if realified.dim() != family.expected_dim() {
        return Err(AmbientError::Inconsistent(format!(
            "{family}: constraint kernel has dimension {}, expected {}",
            realified.dim(),
            family.expected_dim()
        )));
    }
    let basis: Vec<CMatrix> = realified.basis().iter().map(|v| CMatrix::from_realified(size, v)).collect();
    AmbientAlgebra::from_matrices(family, basis, realified)
}

impl AmbientAlgebra {
    fn from_matrices(family: AlgebraFamily, basis: Vec<CMatrix>, realified: Subspace) -> Result<Self, AmbientError> {
        let size = family.matrix_size();
        let dim = basis.len();
        let coords_of = |m: &CMatrix| -> Result<SparseVec, AmbientError> {
            let v = m.realify();
            if !realified.contains(&v) {
                return Err(AmbientError::ClosureViolation);
            }
            Ok(SparseVec::from_dense(&realified.coordinates_unchecked(&v)))
        };
        let mut structure = vec![SparseVec::zero(); dim * dim];
        for i in 0..dim {
            for j in (i + 1)..dim {
                let c = coords_of(&basis[i].commutator(&basis[j]))?;
                structure[j * dim + i] = c.neg();
                structure[i * dim + j] = c;
            }
        }
        let reals: Vec<SparseVec> = basis.iter().map(|b| b.realify()).collect();
        let mut gram_g = MatrixQ::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                let v = reals[i].dot(&reals[j]);
                gram_g.set(j, i, v.clone());
                gram_g.set(i, j, v);
            }
        }
        let theta_cols: Vec<SparseVec> =
            basis.iter().map(|b| coords_of(&b.star().neg())).collect::<Result<_, _>>()?;
        let theta = MatrixQ::from_sparse_cols(&theta_cols, dim);
        let id = MatrixQ::identity(dim);
        let k = theta.sub(&id).kernel();
        let p = theta.add(&id).kernel();
        let a0 = coords_of(&a0_matrix(family))?;
        let mut alg = AmbientAlgebra {
            family,
            matrix_size: size,
            basis,
            realified: Some(realified),
            structure,
            k: Some(k),
            p: Some(p),
            m: Subspace::zero(dim),
            a: Subspace::span(dim, std::slice::from_ref(&a0)),
            n_nil: Subspace::zero(dim),
            g_alpha: Subspace::zero(dim),
            g_2alpha: Subspace::zero(dim),
            a0,
            gram_g,
        };
        alg.finish_root_data()?;
        Ok(alg)
    }

    fn from_structure(
        family: AlgebraFamily,
        structure: Vec<SparseVec>,
        gram_g: MatrixQ,
        m: Subspace,
        a0: SparseVec,
    ) -> Result<Self, AmbientError> {
        let dim = gram_g.rows();
        let mut alg = AmbientAlgebra {
            family,
            matrix_size: 0,
            basis: Vec::new(),
            realified: None,
            structure,
            k: None,
            p: None,
            m,
            a: Subspace::span(dim, std::slice::from_ref(&a0)),
            n_nil: Subspace::zero(dim),
            g_alpha: Subspace::zero(dim),
            g_2alpha: Subspace::zero(dim),
            a0,
            gram_g,
        };
        alg.finish_root_data()?;
        Ok(alg)
    }

    /// Computes root spaces (and m, for the matrix families) from `a0`.
    fn finish_root_data(&mut self) -> Result<(), AmbientError> {
        let dim = self.dim();
        let ad = self.ad_matrix(&self.a0);
        let id = MatrixQ::identity(dim);
        self.g_alpha = ad.sub(&id).kernel();
        self.g_2alpha = ad.sub(&id.scale(&int(2))).kernel();
        self.n_nil = self.g_alpha.sum(&self.g_2alpha).map_err(|e| AmbientError::Inconsistent(e.to_string()))?;
        if let Some(k) = &self.k {
            self.m = k.intersection(&ad.kernel()).map_err(|e| AmbientError::Inconsistent(e.to_string()))?;
        }
        let (ga, g2a) = expected_root_dims(self.family);
        if self.g_alpha.dim() != ga || self.g_2alpha.dim() != g2a {
            return Err(AmbientError::Inconsistent(format!(
                "{}: root spaces of dimension {} and {}, expected {ga} and {g2a}",
                self.family,
                self.g_alpha.dim(),
                self.g_2alpha.dim()
            )));
        }
        Ok(())
    }

    pub fn family(&self) -> AlgebraFamily {
        self.family
    }

    /// Complex matrix size (0 for the f4 model).
    pub fn matrix_size(&self) -> usize {
        self.matrix_size
    }

    /// Real dimension.
    pub fn dim(&self) -> usize {
        self.gram_g.rows()
    }

    /// Basis matrices (empty for the f4 model).
    pub fn basis_matrices(&self) -> &[CMatrix] {
        &self.basis
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// `[e_i, e_j]` for basis elements.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.structure[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let dim = self.dim();
        let mut acc = vec![Scalar::zero(); dim];
        let mut touched = false;
        for (i, xi) in x.iter() {
            for (j, yj) in y.iter() {
                let c = &self.structure[i * dim + j];
                if c.is_zero() {
                    continue;
                }
                let coef = xi * yj;
                for (k, v) in c.iter() {
                    acc[*k] += &coef * v;
                }
                touched = true;
            }
        }
        if touched {
            SparseVec::from_dense(&acc)
        } else {
            SparseVec::zero()
        }
    }

    /// Matrix of `ad(x)` in the basis (column `j` is `[x, e_j]`).
    pub fn ad_matrix(&self, x: &SparseVec) -> MatrixQ {
        let cols: Vec<SparseVec> = (0..self.dim()).map(|j| self.bracket(x, &SparseVec::unit(j))).collect();
        MatrixQ::from_sparse_cols(&cols, self.dim())
    }

    /// Matrix form of an element.
    pub fn to_matrix(&self, x: &SparseVec) -> Result<CMatrix, AmbientError> {
        if self.realified.is_none() {
            return Err(AmbientError::NoMatrixRealization);
        }
        let mut out = CMatrix::zero(self.matrix_size);
        for (i, c) in x.iter() {
            out = out.add(&self.basis[*i].scale_real(c));
        }
        Ok(out)
    }

    /// Coordinates of a matrix lying in the algebra.
    pub fn from_matrix(&self, m: &CMatrix) -> Result<SparseVec, AmbientError> {
        let realified = self.realified.as_ref().ok_or(AmbientError::NoMatrixRealization)?;
        if m.size() != self.matrix_size {
            return Err(AmbientError::NotInAlgebra);
        }
        let v = m.realify();
        if !realified.contains(&v) {
            return Err(AmbientError::NotInAlgebra);
        }
        Ok(SparseVec::from_dense(&realified.coordinates_unchecked(&v)))
    }

    /// Span of matrices that must all lie in the algebra.
    pub fn span_of_matrices(&self, gens: &[CMatrix]) -> Result<Subspace, AmbientError> {
        let coords: Vec<SparseVec> = gens.iter().map(|g| self.from_matrix(g)).collect::<Result<_, _>>()?;
        Ok(Subspace::span(self.dim(), &coords))
    }

    /// The part of the real span of `gens` that lies in the algebra, e.g. `s(b + u(n-k,1))`.
    pub fn meet_matrix_span(&self, gens: &[CMatrix]) -> Result<Subspace, AmbientError> {
        let realified = self.realified.as_ref().ok_or(AmbientError::NoMatrixRealization)?;
        if gens.iter().any(|g| g.size() != self.matrix_size) {
            return Err(AmbientError::NotInAlgebra);
        }
        let reals: Vec<SparseVec> = gens.iter().map(CMatrix::realify).collect();
        let span = Subspace::span(realified.ambient_dim(), &reals);
        let meet = span.intersection(realified).map_err(|e| AmbientError::Inconsistent(e.to_string()))?;
        let coords: Vec<SparseVec> =
            meet.basis().iter().map(|v| SparseVec::from_dense(&realified.coordinates_unchecked(v))).collect();
        Ok(Subspace::span(self.dim(), &coords))
    }

    /// Commutator of two matrices, checked to stay in the algebra.
    pub fn bracket_matrices(&self, x: &CMatrix, y: &CMatrix) -> Result<SparseVec, AmbientError> {
        self.from_matrix(x)?;
        self.from_matrix(y)?;
        self.from_matrix(&x.commutator(y)).map_err(|_| AmbientError::ClosureViolation)
    }

    /// Cartan involution `X -> -X^*`.
    pub fn theta(&self, x: &SparseVec) -> Result<SparseVec, AmbientError> {
        let m = self.to_matrix(x)?;
        self.from_matrix(&m.star().neg())
    }

    pub fn k(&self) -> Option<&Subspace> {
        self.k.as_ref()
    }

    pub fn p(&self) -> Option<&Subspace> {
        self.p.as_ref()
    }

    pub fn m(&self) -> &Subspace {
        &self.m
    }

    pub fn a(&self) -> &Subspace {
        &self.a
    }

    /// Generator of `a`.
    pub fn a0(&self) -> &SparseVec {
        &self.a0
    }

    pub fn n_nil(&self) -> &Subspace {
        &self.n_nil
    }

    pub fn g_alpha(&self) -> &Subspace {
        &self.g_alpha
    }

    pub fn g_2alpha(&self) -> &Subspace {
        &self.g_2alpha
    }

    /// Gram matrix of the invariant form on the whole basis.
    pub fn gram_g(&self) -> &MatrixQ {
        &self.gram_g
    }

    pub fn inner(&self, x: &SparseVec, y: &SparseVec) -> Scalar {
        let gy = self.gram_g.mul_sparse(y);
        x.dot(&gy)
    }

    /// Gram matrix of the invariant form restricted to the stored basis of `s`.
    pub fn gram_on(&self, s: &Subspace) -> MatrixQ {
        let b = s.basis();
        let gb: Vec<SparseVec> = b.iter().map(|v| self.gram_g.mul_sparse(v)).collect();
        let mut out = MatrixQ::zeros(b.len(), b.len());
        for (i, bi) in b.iter().enumerate() {
            for (j, gj) in gb.iter().enumerate().skip(i) {
                let v = bi.dot(gj);
                out.set(j, i, v.clone());
                out.set(i, j, v);
            }
        }
        out
    }

    /// Gram matrix on `p`, `n` or `g` in the stored basis of that subspace.
    pub fn invariant_gram(&self, selector: Selector) -> Result<MatrixQ, AmbientError> {
        match selector {
            Selector::P => Ok(self.gram_on(self.p.as_ref().ok_or(AmbientError::NoCartanDecomposition)?)),
            Selector::NNil => Ok(self.gram_on(&self.n_nil)),
            Selector::G => Ok(self.gram_g.clone()),
        }
    }
}

/// Dimensions of `g_alpha` and `g_2alpha`.
pub fn expected_root_dims(family: AlgebraFamily) -> (usize, usize) {
    match family {
        AlgebraFamily::So(n) => (n - 1, 0),
        AlgebraFamily::Su(n) => (2 * (n - 1), 1),
        AlgebraFamily::Sp(n) => (4 * (n - 1), 3),
        AlgebraFamily::F4Model => (8, 7),
    }
}

/// Dimension of `m`.
pub fn expected_m_dim(family: AlgebraFamily) -> usize {
    match family {
        AlgebraFamily::So(n) => (n - 1) * (n - 2) / 2,
        AlgebraFamily::Su(n) => (n - 1) * (n - 1),
        AlgebraFamily::Sp(n) => (n - 1) * (2 * n - 1) + 3,
        AlgebraFamily::F4Model => F4_M_DIM,
    }
}

/// Dimension of `p` (`None` for the f4 model).
pub fn expected_p_dim(family: AlgebraFamily) -> Option<usize> {
    match family {
        AlgebraFamily::So(n) => Some(n),
        AlgebraFamily::Su(n) => Some(2 * n),
        AlgebraFamily::Sp(n) => Some(4 * n),
        AlgebraFamily::F4Model => None,
    }
}

/// Unit Gaussian scalar helper for building displayed matrices.
pub fn gauss(re: i64, im: i64) -> GaussianScalar {
    GaussianScalar::from_ints(re, im)
}
