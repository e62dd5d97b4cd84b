//! Compact subalgebras of `so(N)` given by explicit real skew generators.

use num_traits::{One, Zero};

use crate::exact_linalg::{GaussianScalar, MatrixQ, Scalar, SparseVec, Subspace};
use crate::lie_ambient::octonion::{lambda_basis, left_mul, so7_basis};
use crate::lie_ambient::{phi_quaternion, CMatrix, QuatMatrix, Quaternion};

use super::CatalogError;

/// Named compact embeddings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EmbeddingName {
    SoN,
    SuInSo,
    UInSo,
    SpInSo,
    SpS1InSo,
    Su4InSo8,
    Sp2InSu4,
    Spin7InSo8,
    G2InSo7,
    Spin9InSo16,
    Sp1xL2InSo4,
    L2xSp1InSo4,
    So4cInF4Model,
}

/// Free choice of a subalgebra of `sp(1)` or of a one-parameter factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FreeChoice {
    Zero,
    Torus,
    Full,
}

impl FreeChoice {
    pub const ALL: [FreeChoice; 3] = [FreeChoice::Zero, FreeChoice::Torus, FreeChoice::Full];

    pub fn tag(self) -> &'static str {
        match self {
            FreeChoice::Zero => "0",
            FreeChoice::Torus => "torus",
            FreeChoice::Full => "full",
        }
    }
}

/// A subalgebra of `so(target)` with generators and their flattened span.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub name: EmbeddingName,
    pub target: usize,
    pub generators: Vec<MatrixQ>,
    pub span: Subspace,
}

impl Embedding {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    /// Independent generators, one per basis vector of the span.
    pub fn basis_matrices(&self) -> Vec<MatrixQ> {
        self.span.basis().iter().map(|v| unflatten(self.target, v)).collect()
    }

    pub fn is_subalgebra(&self) -> bool {
        let basis = self.basis_matrices();
        basis.iter().enumerate().all(|(i, x)| {
            basis[i + 1..].iter().all(|y| self.span.contains(&flatten(&x.mul(y).sub(&y.mul(x)))))
        })
    }
}

pub fn flatten(m: &MatrixQ) -> SparseVec {
    let n = m.cols();
    SparseVec::from_pairs(
        (0..m.rows()).flat_map(|r| (0..n).map(move |c| (r, c))).map(|(r, c)| (r * n + c, m.get(r, c).clone())),
    )
}

pub fn unflatten(n: usize, v: &SparseVec) -> MatrixQ {
    let mut m = MatrixQ::zeros(n, n);
    for (i, x) in v.iter() {
        m.set(i / n, i % n, x.clone());
    }
    m
}

fn span_of(n: usize, gens: &[MatrixQ]) -> Subspace {
    Subspace::span(n * n, &gens.iter().map(flatten).collect::<Vec<_>>())
}

fn embedding(name: EmbeddingName, target: usize, generators: Vec<MatrixQ>) -> Embedding {
    let span = span_of(target, &generators);
    Embedding { name, target, generators, span }
}

/// Entry `a + ib` becomes the block `[[a, -b], [b, a]]`.
pub fn realify_matrix(m: &CMatrix) -> MatrixQ {
    let n = m.size();
    let mut out = MatrixQ::zeros(2 * n, 2 * n);
    for (&(r, c), v) in m.entries() {
        out.set(2 * r, 2 * c, v.re.clone());
        out.set(2 * r + 1, 2 * c + 1, v.re.clone());
        out.set(2 * r, 2 * c + 1, -&v.im);
        out.set(2 * r + 1, 2 * c, v.im.clone());
    }
    out
}

/// `E_ij - E_ji`.
pub fn so_generator(n: usize, i: usize, j: usize) -> MatrixQ {
    let mut m = MatrixQ::zeros(n, n);
    m.set(i, j, Scalar::one());
    m.set(j, i, -Scalar::one());
    m
}

pub fn so_basis(n: usize) -> Vec<MatrixQ> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| so_generator(n, i, j))).collect()
}

/// Skew-hermitian basis of `u(n)`.
pub fn u_basis(n: usize) -> Vec<CMatrix> {
    let mut out = Vec::new();
    for i in 0..n {
        out.push(CMatrix::from_int_entries(n, &[(i, i, 0, 1)]));
        for j in i + 1..n {
            out.push(CMatrix::from_int_entries(n, &[(i, j, 1, 0), (j, i, -1, 0)]));
            out.push(CMatrix::from_int_entries(n, &[(i, j, 0, 1), (j, i, 0, 1)]));
        }
    }
    out
}

/// Traceless skew-hermitian basis of `su(n)`.
pub fn su_basis(n: usize) -> Vec<CMatrix> {
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        out.push(CMatrix::from_int_entries(n, &[(i, i, 0, 1), (i + 1, i + 1, 0, -1)]));
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(CMatrix::from_int_entries(n, &[(i, j, 1, 0), (j, i, -1, 0)]));
            out.push(CMatrix::from_int_entries(n, &[(i, j, 0, 1), (j, i, 0, 1)]));
        }
    }
    out
}

/// Quaternionic skew-hermitian basis of `sp(n)`.
pub fn sp_basis(n: usize) -> Vec<QuatMatrix> {
    let z = || MatrixQ::zeros(n, n);
    let sym = |i: usize, j: usize| {
        let mut m = MatrixQ::zeros(n, n);
        m.set(i, j, Scalar::one());
        m.set(j, i, Scalar::one());
        m
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i < j {
                out.push(QuatMatrix::new(so_generator(n, i, j), z(), z(), z()));
            }
            out.push(QuatMatrix::new(z(), sym(i, j), z(), z()));
            out.push(QuatMatrix::new(z(), z(), sym(i, j), z()));
            out.push(QuatMatrix::new(z(), z(), z(), sym(i, j)));
        }
    }
    out
}

/// `sp(n)` inside `su(2n)` through the quaternionic-to-complex map.
pub fn sp_in_su(n: usize) -> Vec<CMatrix> {
    sp_basis(n).iter().map(phi_quaternion).collect()
}

fn quaternion_basis() -> [Quaternion; 4] {
    [Quaternion::from_ints(1, 0, 0, 0), Quaternion::from_ints(0, 1, 0, 0), Quaternion::from_ints(0, 0, 1, 0), Quaternion::from_ints(0, 0, 0, 1)]
}

fn quaternion_operator(f: impl Fn(&Quaternion) -> Quaternion) -> MatrixQ {
    let mut m = MatrixQ::zeros(4, 4);
    for (col, b) in quaternion_basis().iter().enumerate() {
        for (row, x) in f(b).coords().into_iter().enumerate() {
            m.set(row, col, x);
        }
    }
    m
}

/// `x -> q x` on `H = R^4` with basis `1, i, j, k`.
pub fn left_quaternion(q: &Quaternion) -> MatrixQ {
    quaternion_operator(|x| q.mul(x))
}

/// `x -> x q` on `H = R^4`.
pub fn right_quaternion(q: &Quaternion) -> MatrixQ {
    quaternion_operator(|x| x.mul(q))
}

fn imaginary_units() -> [Quaternion; 3] {
    [Quaternion::from_ints(0, 1, 0, 0), Quaternion::from_ints(0, 0, 1, 0), Quaternion::from_ints(0, 0, 0, 1)]
}

/// Left multiplications by imaginary units (one ideal of `so(4)`).
pub fn sp1_left() -> Vec<MatrixQ> {
    imaginary_units().iter().map(left_quaternion).collect()
}

/// Right multiplications by imaginary units (the other ideal of `so(4)`).
pub fn sp1_right() -> Vec<MatrixQ> {
    imaginary_units().iter().map(right_quaternion).collect()
}

/// A subalgebra of `sp(1)` given as operators from a three-element basis.
pub fn choose(gens: &[MatrixQ], choice: FreeChoice) -> Vec<MatrixQ> {
    match choice {
        FreeChoice::Zero => vec![],
        FreeChoice::Torus => gens[..1].to_vec(),
        FreeChoice::Full => gens.to_vec(),
    }
}

/// `x -> q x - x q` for imaginary `q`: the diagonal `sp(1)` acting on `H`.
pub fn sp1_diagonal() -> Vec<MatrixQ> {
    imaginary_units().iter().map(|q| left_quaternion(q).sub(&right_quaternion(q))).collect()
}

/// Real `4n x 4n` image of `sp(n)`.
pub fn sp_in_so(n: usize) -> Vec<MatrixQ> {
    sp_in_su(n).iter().map(realify_matrix).collect()
}

/// Multiplication by `i` on `C^n`, realified. It commutes with every complex matrix, in
/// particular with the image of `sp(n/2)`.
pub fn complex_structure(n: usize) -> MatrixQ {
    realify_matrix(&CMatrix::identity(n).scale(&GaussianScalar::new(Scalar::zero(), Scalar::one())))
}

/// Real `2n x 2n` image of `su(n)`.
pub fn su_in_so(n: usize) -> Vec<MatrixQ> {
    su_basis(n).iter().map(realify_matrix).collect()
}

/// Real `2n x 2n` image of `u(n)`.
pub fn u_in_so(n: usize) -> Vec<MatrixQ> {
    u_basis(n).iter().map(realify_matrix).collect()
}

/// The displayed map from `su(4)` to `so(8)`, applied to an anti-hermitian `4 x 4` matrix.
pub fn su4_to_so8(x: &CMatrix) -> MatrixQ {
    assert_eq!(x.size(), 4);
    let mut m = MatrixQ::zeros(8, 8);
    for r in 0..4 {
        for c in 0..4 {
            let v = x.get(r, c);
            if r == c {
                m.set(2 * r, 2 * r + 1, -&v.im);
                m.set(2 * r + 1, 2 * r, v.im.clone());
            } else if r < c {
                let (a1, a2) = (v.re.clone(), v.im.clone());
                m.set(2 * r, 2 * c, a1.clone());
                m.set(2 * r, 2 * c + 1, -&a2);
                m.set(2 * r + 1, 2 * c, a2.clone());
                m.set(2 * r + 1, 2 * c + 1, a1.clone());
                m.set(2 * c, 2 * r, -&a1);
                m.set(2 * c, 2 * r + 1, -&a2);
                m.set(2 * c + 1, 2 * r, a2);
                m.set(2 * c + 1, 2 * r + 1, -a1);
            }
        }
    }
    m
}

/// `sp(2)` as `[[A, B], [-conj B, conj A]]` with `A` anti-hermitian and `B` symmetric.
pub fn sp2_in_su4() -> Vec<CMatrix> {
    let mut out = Vec::new();
    for a in u_basis(2) {
        let mut m = CMatrix::zero(4);
        m.place(0, 0, &a);
        m.place(2, 2, &a.conj());
        out.push(m);
    }
    for (i, j) in [(0, 0), (0, 1), (1, 1)] {
        for im in [0, 1] {
            let mut b = CMatrix::zero(2);
            let v = crate::lie_ambient::gauss(1 - im, im);
            b.set(i, j, v.clone());
            b.set(j, i, v);
            let mut m = CMatrix::zero(4);
            m.place(0, 2, &b);
            m.place(2, 0, &b.conj().neg());
            out.push(m);
        }
    }
    out
}

/// Nine symmetric `16 x 16` matrices with `G_i G_j + G_j G_i = 2 delta_ij`.
pub fn spin9_gammas() -> Result<Vec<MatrixQ>, CatalogError> {
    let mut gammas = Vec::new();
    let id8 = MatrixQ::identity(8);
    let ops: Vec<MatrixQ> = std::iter::once(id8.clone()).chain((1..8).map(left_mul)).collect();
    for l in &ops {
        let mut g = MatrixQ::zeros(16, 16);
        for r in 0..8 {
            for c in 0..8 {
                g.set(r, 8 + c, l.get(r, c).clone());
                g.set(8 + c, r, l.get(r, c).clone());
            }
        }
        gammas.push(g);
    }
    let mut last = MatrixQ::zeros(16, 16);
    for i in 0..16 {
        last.set(i, i, if i < 8 { Scalar::one() } else { -Scalar::one() });
    }
    gammas.push(last);
    let two = Scalar::from_integer(2.into());
    for (i, gi) in gammas.iter().enumerate() {
        if !gi.is_symmetric() {
            return Err(CatalogError::Construction(format!("gamma {i} is not symmetric")));
        }
        for (j, gj) in gammas.iter().enumerate() {
            let anti = gi.mul(gj).add(&gj.mul(gi));
            let want = if i == j { MatrixQ::identity(16).scale(&two) } else { MatrixQ::zeros(16, 16) };
            if anti != want {
                return Err(CatalogError::Construction(format!("gammas {i} and {j} fail anticommutation")));
            }
        }
    }
    Ok(gammas)
}

/// `spin(9)` spanned by the products `G_i G_j`, `i < j`.
pub fn spin9_in_so16() -> Result<Vec<MatrixQ>, CatalogError> {
    let g = spin9_gammas()?;
    Ok((0..9).flat_map(|i| (i + 1..9).map(move |j| (i, j))).map(|(i, j)| g[i].mul(&g[j])).collect())
}

pub fn spin7_in_so8() -> Vec<MatrixQ> {
    (0..21).map(lambda_basis).collect()
}

/// Elements of so(7) whose spin image kills `e0` (the last octonion basis vector).
pub fn g2_in_so7() -> Vec<MatrixQ> {
    let rows: Vec<SparseVec> = (0..8)
        .map(|r| SparseVec::from_pairs((0..21).map(|idx| (idx, lambda_basis(idx).get(r, 7).clone()))))
        .collect();
    let kernel = crate::exact_linalg::kernel_of_rows(&rows, 21);
    kernel
        .basis()
        .iter()
        .map(|v| v.iter().fold(MatrixQ::zeros(7, 7), |acc, (i, x)| acc.add(&so7_basis(*i).scale(x))))
        .collect()
}

/// Real `n x n` block placed at `offset` in an `size x size` zero matrix.
pub fn place_real(size: usize, block: &MatrixQ, offset: usize) -> MatrixQ {
    let mut m = MatrixQ::zeros(size, size);
    for r in 0..block.rows() {
        for c in 0..block.cols() {
            let v = block.get(r, c);
            if !v.is_zero() {
                m.set(offset + r, offset + c, v.clone());
            }
        }
    }
    m
}

/// Generators of the named embedding. `n` sizes the families; `choice` picks `l_2`.
pub fn make_embedding(name: EmbeddingName, n: usize, choice: FreeChoice) -> Result<Embedding, CatalogError> {
    let bad = |why: &str| Err(CatalogError::InvalidParams(format!("{name:?}: {why}")));
    let e = match name {
        EmbeddingName::SoN => embedding(name, n, so_basis(n)),
        EmbeddingName::SuInSo => embedding(name, 2 * n, su_in_so(n)),
        EmbeddingName::UInSo => embedding(name, 2 * n, u_in_so(n)),
        EmbeddingName::SpInSo => embedding(name, 4 * n, sp_in_so(n)),
        EmbeddingName::SpS1InSo => {
            let mut gens = sp_in_so(n);
            gens.push(complex_structure(2 * n));
            embedding(name, 4 * n, gens)
        }
        EmbeddingName::Su4InSo8 => embedding(name, 8, su_basis(4).iter().map(su4_to_so8).collect()),
        EmbeddingName::Sp2InSu4 => embedding(name, 8, sp2_in_su4().iter().map(su4_to_so8).collect()),
        EmbeddingName::Spin7InSo8 => embedding(name, 8, spin7_in_so8()),
        EmbeddingName::G2InSo7 => embedding(name, 7, g2_in_so7()),
        EmbeddingName::Spin9InSo16 => embedding(name, 16, spin9_in_so16()?),
        EmbeddingName::Sp1xL2InSo4 => {
            let mut gens = sp1_left();
            gens.extend(choose(&sp1_right(), choice));
            embedding(name, 4, gens)
        }
        EmbeddingName::L2xSp1InSo4 => {
            let mut gens = choose(&sp1_left(), choice);
            gens.extend(sp1_right());
            embedding(name, 4, gens)
        }
        EmbeddingName::So4cInF4Model => return bad("use so4c_in_f4model, it lives in the f4 model"),
    };
    let expected = match name {
        EmbeddingName::SoN => n * n.saturating_sub(1) / 2,
        EmbeddingName::SuInSo => (n * n).saturating_sub(1),
        EmbeddingName::UInSo => n * n,
        EmbeddingName::SpInSo => n * (2 * n + 1),
        EmbeddingName::SpS1InSo => n * (2 * n + 1) + 1,
        EmbeddingName::Su4InSo8 => 15,
        EmbeddingName::Sp2InSu4 => 10,
        EmbeddingName::Spin7InSo8 => 21,
        EmbeddingName::G2InSo7 => 14,
        EmbeddingName::Spin9InSo16 => 36,
        EmbeddingName::Sp1xL2InSo4 | EmbeddingName::L2xSp1InSo4 => {
            3 + match choice {
                FreeChoice::Zero => 0,
                FreeChoice::Torus => 1,
                FreeChoice::Full => 3,
            }
        }
        EmbeddingName::So4cInF4Model => unreachable!(),
    };
    if e.dim() != expected {
        return Err(CatalogError::Construction(format!("{name:?} has dimension {}, expected {expected}", e.dim())));
    }
    if !e.is_subalgebra() {
        return Err(CatalogError::Construction(format!("{name:?} is not bracket closed")));
    }
    Ok(e)
}
