//! Dense rational matrices.

use super::scalar::{int, Scalar};
use super::subspace::{Rref, Subspace};
use super::vector::SparseVec;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixQ { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn diag(values: &[Scalar]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        MatrixQ { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Matrix whose rows are the given sparse vectors.
    pub fn from_sparse_rows(rows: &[SparseVec], cols: usize) -> Self {
        Self::from_rows(rows.iter().map(|r| r.to_dense(cols)).collect())
    }

    /// Matrix whose columns are the given sparse vectors.
    pub fn from_sparse_cols(cols: &[SparseVec], rows: usize) -> Self {
        Self::from_sparse_rows(cols, rows).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row_sparse(&self, r: usize) -> SparseVec {
        SparseVec::from_dense(&self.data[r * self.cols..(r + 1) * self.cols])
    }

    pub fn col_sparse(&self, c: usize) -> SparseVec {
        SparseVec::from_pairs((0..self.rows).map(|r| (r, self.get(r, c).clone())))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &MatrixQ) -> MatrixQ {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &MatrixQ) -> MatrixQ {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &MatrixQ) -> MatrixQ {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> MatrixQ {
        MatrixQ { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// `self * v` for a sparse column vector.
    pub fn mul_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut out = vec![Scalar::zero(); self.rows];
        for (k, x) in v.iter() {
            for (r, slot) in out.iter_mut().enumerate() {
                let a = self.get(r, *k);
                if !a.is_zero() {
                    *slot += a * x;
                }
            }
        }
        SparseVec::from_dense(&out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        let mut r = Rref::new();
        for i in 0..self.rows {
            r.insert(&self.row_sparse(i));
        }
        r.rank()
    }

    /// `{ v : self * v = 0 }` in canonical form.
    pub fn kernel(&self) -> Subspace {
        kernel_of_rows((0..self.rows).map(|i| self.row_sparse(i)).collect::<Vec<_>>().as_slice(), self.cols)
    }

    /// Leading principal minors are all positive (Sylvester), decided exactly.
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        let n = self.rows;
        // Gaussian elimination without pivoting; all pivots positive iff positive definite.
        let mut a = self.clone();
        for k in 0..n {
            let p = a.get(k, k).clone();
            if p <= Scalar::zero() {
                return false;
            }
            for i in k + 1..n {
                let f = a.get(i, k) / &p;
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = a.get(i, j) - &f * a.get(k, j);
                    a.set(i, j, v);
                }
            }
        }
        true
    }
}

/// Kernel of the linear map whose matrix has the given sparse rows.
pub fn kernel_of_rows(rows: &[SparseVec], cols: usize) -> Subspace {
    let mut r = Rref::new();
    for row in rows {
        r.insert(row);
    }
    let pivots: Vec<usize> = r.pivots().copied().collect();
    let reduced = r.into_rows();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut gens = Vec::new();
    for f in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut pairs = vec![(f, Scalar::one())];
        for (p, row) in pivots.iter().zip(&reduced) {
            let c = row.get(f);
            if !c.is_zero() {
                pairs.push((*p, -c));
            }
        }
        gens.push(SparseVec::from_pairs(pairs));
    }
    Subspace::span(cols, &gens)
}

impl fmt::Display for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> =
                (0..self.cols).map(|c| super::scalar::format_scalar(self.get(r, c))).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
