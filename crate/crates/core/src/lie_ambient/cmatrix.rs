use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact_linalg::{GaussianScalar, MatrixQ, Scalar, SparseVec};

/// Square matrix with Gaussian-rational entries, stored sparsely by `(row, col)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    size: usize,
    entries: BTreeMap<(usize, usize), GaussianScalar>,
}

impl CMatrix {
    pub fn zero(size: usize) -> Self {
        CMatrix { size, entries: BTreeMap::new() }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.set(i, i, GaussianScalar::one());
        }
        m
    }

    /// Real matrix viewed as a complex one.
    pub fn from_real(m: &MatrixQ) -> Self {
        assert_eq!(m.rows(), m.cols());
        let mut out = Self::zero(m.rows());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                out.set(r, c, GaussianScalar::real(m.get(r, c).clone()));
            }
        }
        out
    }

    /// Builds a matrix from integer `(row, col, re, im)` tuples; repeated positions accumulate.
    pub fn from_int_entries(size: usize, entries: &[(usize, usize, i64, i64)]) -> Self {
        let mut m = Self::zero(size);
        for &(r, c, re, im) in entries {
            m.add_at(r, c, &GaussianScalar::from_ints(re, im));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> GaussianScalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(GaussianScalar::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianScalar) {
        assert!(r < self.size && c < self.size, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &GaussianScalar) {
        let cur = self.get(r, c);
        self.set(r, c, &cur + v);
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &GaussianScalar)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, o: &CMatrix) -> CMatrix {
        assert_eq!(self.size, o.size);
        let mut out = self.clone();
        for (&(r, c), v) in &o.entries {
            out.add_at(r, c, v);
        }
        out
    }

    pub fn sub(&self, o: &CMatrix) -> CMatrix {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> CMatrix {
        self.scale_real(&-Scalar::one())
    }

    pub fn scale_real(&self, s: &Scalar) -> CMatrix {
        let mut out = CMatrix::zero(self.size);
        if s.is_zero() {
            return out;
        }
        for (&k, v) in &self.entries {
            out.entries.insert(k, v.scale(s));
        }
        out
    }

    pub fn scale(&self, z: &GaussianScalar) -> CMatrix {
        let mut out = CMatrix::zero(self.size);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, z * v);
        }
        out
    }

    pub fn mul(&self, o: &CMatrix) -> CMatrix {
        assert_eq!(self.size, o.size);
        let mut out = CMatrix::zero(self.size);
        for (&(i, k), a) in &self.entries {
            for (&(_, j), b) in o.entries.range((k, 0)..(k + 1, 0)) {
                out.add_at(i, j, &(a * b));
            }
        }
        out
    }

    /// Commutator `XY - YX`.
    pub fn commutator(&self, o: &CMatrix) -> CMatrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn transpose(&self) -> CMatrix {
        let mut out = CMatrix::zero(self.size);
        for (&(r, c), v) in &self.entries {
            out.entries.insert((c, r), v.clone());
        }
        out
    }

    pub fn conj(&self) -> CMatrix {
        let mut out = CMatrix::zero(self.size);
        for (&k, v) in &self.entries {
            out.entries.insert(k, v.conj());
        }
        out
    }

    /// Conjugate transpose.
    pub fn star(&self) -> CMatrix {
        self.conj().transpose()
    }

    pub fn trace(&self) -> GaussianScalar {
        let mut t = GaussianScalar::zero();
        for i in 0..self.size {
            if let Some(v) = self.entries.get(&(i, i)) {
                t = &t + v;
            }
        }
        t
    }

    /// Realified coordinate index of the real (`part = 0`) or imaginary (`part = 1`) part of entry `(r, c)`.
    pub fn real_index(size: usize, r: usize, c: usize, part: usize) -> usize {
        2 * (r * size + c) + part
    }

    /// Flattens to `2 * size^2` real coordinates.
    pub fn realify(&self) -> SparseVec {
        let mut pairs = Vec::with_capacity(2 * self.entries.len());
        for (&(r, c), v) in &self.entries {
            if !v.re.is_zero() {
                pairs.push((Self::real_index(self.size, r, c, 0), v.re.clone()));
            }
            if !v.im.is_zero() {
                pairs.push((Self::real_index(self.size, r, c, 1), v.im.clone()));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    pub fn from_realified(size: usize, v: &SparseVec) -> CMatrix {
        let mut out = CMatrix::zero(size);
        for (idx, x) in v.iter() {
            let cell = idx / 2;
            let (r, c) = (cell / size, cell % size);
            let add = if idx % 2 == 0 {
                GaussianScalar::real(x.clone())
            } else {
                GaussianScalar::new(Scalar::zero(), x.clone())
            };
            out.add_at(r, c, &add);
        }
        out
    }

    /// Real part as a dense matrix, if all imaginary parts vanish.
    pub fn to_real(&self) -> Option<MatrixQ> {
        let mut m = MatrixQ::zeros(self.size, self.size);
        for (&(r, c), v) in &self.entries {
            if !v.im.is_zero() {
                return None;
            }
            m.set(r, c, v.re.clone());
        }
        Some(m)
    }

    /// Copies `block` into this matrix with its top-left corner at `(r0, c0)`.
    pub fn place(&mut self, r0: usize, c0: usize, block: &CMatrix) {
        for (&(r, c), v) in &block.entries {
            self.set(r0 + r, c0 + c, v.clone());
        }
    }

    /// The `len x len` block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, len: usize) -> CMatrix {
        let mut out = CMatrix::zero(len);
        for (&(r, c), v) in &self.entries {
            if r >= r0 && r < r0 + len && c >= c0 && c < c0 + len {
                out.entries.insert((r - r0, c - c0), v.clone());
            }
        }
        out
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
