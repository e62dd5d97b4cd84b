//! Canonical subspaces in reduced row-echelon form.

use super::scalar::Scalar;
use super::vector::SparseVec;
use super::matrix::MatrixQ;
use num_traits::One;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("subspace is not contained in the enclosing space")]
    NotContained,
}

/// Incremental reduced row-echelon builder.
///
/// Every stored row has leading entry 1 and is zero in every other row's pivot column.
#[derive(Clone, Debug, Default)]
pub struct Rref {
    rows: BTreeMap<usize, SparseVec>,
}

impl Rref {
    pub fn new() -> Self {
        Rref { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after clearing all pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter(|(i, _)| self.rows.contains_key(i))
            .map(|(i, x)| (*i, x.clone()))
            .collect();
        let mut out = v.clone();
        for (p, c) in hits {
            out = out.add_scaled(&self.rows[&p], &-c);
        }
        out
    }

    /// Adds `v`; returns `true` when it was independent of the current rows.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.leading().cloned() else {
            return false;
        };
        let r = r.scale(&(Scalar::one() / lead));
        let touched: Vec<usize> =
            self.rows.iter().filter(|(_, row)| row.get_ref(p).is_some()).map(|(k, _)| *k).collect();
        for k in touched {
            let row = &self.rows[&k];
            let c = row.get(p);
            let updated = row.add_scaled(&r, &-c);
            self.rows.insert(k, updated);
        }
        self.rows.insert(p, r);
        true
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows.into_values().collect()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.rows.keys()
    }
}

/// Rank of a family of sparse vectors.
pub fn rank_of(vectors: &[SparseVec]) -> usize {
    let mut r = Rref::new();
    for v in vectors {
        r.insert(v);
    }
    r.rank()
}

/// All coefficient vectors `c` with `sum_i c_i * rows[i] = 0`, as a canonical subspace of Q^rows.len().
pub fn left_kernel(rows: &[SparseVec], width: usize) -> Subspace {
    let m = rows.len();
    let mut r = Rref::new();
    for (i, row) in rows.iter().enumerate() {
        let mut pairs: Vec<(usize, Scalar)> = row.iter().cloned().collect();
        debug_assert!(row.max_index().is_none_or(|x| x < width));
        pairs.push((width + i, Scalar::one()));
        r.insert(&SparseVec::from_pairs(pairs));
    }
    let relations: Vec<SparseVec> = r
        .into_rows()
        .into_iter()
        .filter(|row| row.leading().is_some_and(|(p, _)| *p >= width))
        .map(|row| row.window(width, width + m))
        .collect();
    Subspace::span(m, &relations)
}

/// A real subspace of Q^n stored as its canonical reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(SparseVec::unit).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    fn from_rref(ambient_dim: usize, r: Rref) -> Self {
        let pivots: Vec<usize> = r.pivots().copied().collect();
        Subspace { ambient_dim, basis: r.into_rows(), pivots }
    }

    pub fn span(ambient_dim: usize, vectors: &[SparseVec]) -> Self {
        let mut r = Rref::new();
        for v in vectors {
            debug_assert!(v.max_index().is_none_or(|x| x < ambient_dim));
            r.insert(v);
        }
        Self::from_rref(ambient_dim, r)
    }

    /// Span of the coordinate vectors `e_i` for the listed indices.
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let v: Vec<SparseVec> = indices.into_iter().map(SparseVec::unit).collect();
        Subspace::span(ambient_dim, &v)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn builder(&self) -> Rref {
        let mut r = Rref::new();
        for (p, b) in self.pivots.iter().zip(&self.basis) {
            r.rows.insert(*p, b.clone());
        }
        r
    }

    /// Canonical representative of `v` modulo this subspace.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(i, x)| self.pivots.binary_search(i).ok().map(|pos| (pos, x.clone())))
            .collect();
        let mut out = v.clone();
        for (pos, c) in hits {
            out = out.add_scaled(&self.basis[pos], &-c);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.ambient_dim == self.ambient_dim && other.basis.iter().all(|b| self.contains(b))
    }

    /// Coefficients of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.coordinates_unchecked(v))
    }

    /// Coefficients of `v` read off the pivot columns, assuming `v` lies in the subspace.
    pub fn coordinates_unchecked(&self, v: &SparseVec) -> Vec<Scalar> {
        self.pivots.iter().map(|p| v.get(*p)).collect()
    }

    /// Inverse of [`Subspace::coordinates`].
    pub fn from_coordinates(&self, coords: &[Scalar]) -> SparseVec {
        let mut out = SparseVec::zero();
        for (c, b) in coords.iter().zip(&self.basis) {
            out = out.add_scaled(b, c);
        }
        out
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            Err(LinalgError::DimensionMismatch(self.ambient_dim, other.ambient_dim))
        } else {
            Ok(())
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let mut r = self.builder();
        for b in &other.basis {
            r.insert(b);
        }
        Ok(Self::from_rref(self.ambient_dim, r))
    }

    /// Zassenhaus intersection.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let n = self.ambient_dim;
        let mut r = Rref::new();
        for a in &self.basis {
            r.insert(&a.add(&a.shifted(n)));
        }
        for b in &other.basis {
            r.insert(b);
        }
        let meet: Vec<SparseVec> = r
            .into_rows()
            .into_iter()
            .filter(|row| row.leading().is_some_and(|(p, _)| *p >= n))
            .map(|row| row.window(n, 2 * n))
            .collect();
        Ok(Subspace::span(n, &meet))
    }

    /// `{ v in within : v^T gram s = 0 for all s in self }`.
    pub fn ortho_complement(&self, within: &Subspace, gram: &MatrixQ) -> Result<Subspace, LinalgError> {
        self.check(within)?;
        if gram.rows() != self.ambient_dim || gram.cols() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch(gram.rows(), self.ambient_dim));
        }
        if !within.contains_space(self) {
            return Err(LinalgError::NotContained);
        }
        let gs: Vec<SparseVec> = self.basis.iter().map(|s| gram.mul_sparse(s)).collect();
        // Column j of the constraint system holds the pairings of within-basis vector j.
        let rows: Vec<SparseVec> = within
            .basis
            .iter()
            .map(|w| SparseVec::from_pairs(gs.iter().enumerate().map(|(i, g)| (i, w.dot(g)))))
            .collect();
        let coeffs = left_kernel(&rows, self.basis.len());
        let vecs: Vec<SparseVec> =
            coeffs.basis.iter().map(|c| SparseVec::combination(c, &within.basis)).collect();
        Ok(Subspace::span(self.ambient_dim, &vecs))
    }

    /// Image of this subspace under `f`, spanned in an ambient space of dimension `target_dim`.
    pub fn map<F: Fn(&SparseVec) -> SparseVec>(&self, target_dim: usize, f: F) -> Subspace {
        let imgs: Vec<SparseVec> = self.basis.iter().map(f).collect();
        Subspace::span(target_dim, &imgs)
    }
}

/// Convenience wrapper matching the four set-level answers for a pair of subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceRelation {
    pub contains: bool,
    pub equal: bool,
    pub sum: Subspace,
    pub intersection: Subspace,
}

pub fn subspace_ops(a: &Subspace, b: &Subspace) -> Result<SubspaceRelation, LinalgError> {
    Ok(SubspaceRelation {
        contains: a.contains_space(b),
        equal: a == b,
        sum: a.sum(b)?,
        intersection: a.intersection(b)?,
    })
}
