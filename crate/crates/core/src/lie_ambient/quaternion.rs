use num_traits::Zero;

use crate::exact_linalg::{int, GaussianScalar, MatrixQ, Scalar};

use super::cmatrix::CMatrix;

/// Rational quaternion `a + b i + c j + d k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quaternion {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
}

impl Quaternion {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quaternion::new(int(a), int(b), int(c), int(d))
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    /// Purely imaginary quaternion `x i + y j + z k`.
    pub fn imaginary(x: Scalar, y: Scalar, z: Scalar) -> Self {
        Quaternion::new(Scalar::zero(), x, y, z)
    }

    pub fn mul(&self, o: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Quaternion {
            a: a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            b: a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            c: a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            d: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        }
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion { a: self.a.clone(), b: -&self.b, c: -&self.c, d: -&self.d }
    }

    pub fn norm_sq(&self) -> Scalar {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    pub fn is_imaginary(&self) -> bool {
        self.a.is_zero()
    }

    /// Coordinates `(a, b, c, d)` as a vector.
    pub fn coords(&self) -> [Scalar; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }
}

/// Quaternionic matrix `A + iB + jC + kD` with real blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatMatrix {
    pub a: MatrixQ,
    pub b: MatrixQ,
    pub c: MatrixQ,
    pub d: MatrixQ,
}

impl QuatMatrix {
    pub fn new(a: MatrixQ, b: MatrixQ, c: MatrixQ, d: MatrixQ) -> Self {
        let n = a.rows();
        for m in [&a, &b, &c, &d] {
            assert!(m.rows() == n && m.cols() == n, "inconsistent quaternionic block sizes");
        }
        QuatMatrix { a, b, c, d }
    }

    /// Scalar quaternion as a `1 x 1` matrix.
    pub fn from_quaternion(q: &Quaternion) -> Self {
        let one = |s: &Scalar| MatrixQ::from_rows(vec![vec![s.clone()]]);
        QuatMatrix::new(one(&q.a), one(&q.b), one(&q.c), one(&q.d))
    }

    pub fn size(&self) -> usize {
        self.a.rows()
    }

    /// Matrix product; real blocks commute with the quaternion units.
    pub fn mul(&self, o: &QuatMatrix) -> QuatMatrix {
        let p = |x: &MatrixQ, y: &MatrixQ| x.mul(y);
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        QuatMatrix {
            a: p(a1, a2).sub(&p(b1, b2)).sub(&p(c1, c2)).sub(&p(d1, d2)),
            b: p(a1, b2).add(&p(b1, a2)).add(&p(c1, d2)).sub(&p(d1, c2)),
            c: p(a1, c2).sub(&p(b1, d2)).add(&p(c1, a2)).add(&p(d1, b2)),
            d: p(a1, d2).add(&p(b1, c2)).sub(&p(c1, b2)).add(&p(d1, a2)),
        }
    }
}

/// The complex `2n x 2n` image `[[A + iB, -C - iD], [C - iD, A - iB]]`.
pub fn phi_quaternion(m: &QuatMatrix) -> CMatrix {
    let n = m.size();
    let mut out = CMatrix::zero(2 * n);
    for r in 0..n {
        for c in 0..n {
            let (a, b, cc, d) = (m.a.get(r, c), m.b.get(r, c), m.c.get(r, c), m.d.get(r, c));
            out.set(r, c, GaussianScalar::new(a.clone(), b.clone()));
            out.set(r, n + c, GaussianScalar::new(-cc, -d));
            out.set(n + r, c, GaussianScalar::new(cc.clone(), -d));
            out.set(n + r, n + c, GaussianScalar::new(a.clone(), -b));
        }
    }
    out
}

/// The complex-linear identification `H^n -> C^{2n}`, `a + ib + jc + kd -> (a + ib, c - id)`.
pub fn phi_vector(v: &[Quaternion]) -> Vec<GaussianScalar> {
    let mut top = Vec::with_capacity(v.len());
    let mut bottom = Vec::with_capacity(v.len());
    for q in v {
        top.push(GaussianScalar::new(q.a.clone(), q.b.clone()));
        bottom.push(GaussianScalar::new(q.c.clone(), -&q.d));
    }
    top.extend(bottom);
    top
}
