//! Matrix elements of so(n,1), su(n,1) and sp(n,1) in the block coordinates used by the
//! normal forms.
//!
//! Layouts: so and su use `(n+1) x (n+1)` matrices with the distinguished coordinate last.
//! For sp(n,1) the `2n+2` rows are ordered `A`-rows `0..n`, the `e` row `n`, `B`-rows
//! `n+1..2n+1` and the `f` row `2n+1`.

use num_traits::Zero;

use crate::exact_linalg::{GaussianScalar, MatrixQ, Scalar};
use crate::lie_ambient::{phi_quaternion, CMatrix, QuatMatrix};

/// `[[0, x], [x^t, 0]]` with `x = e_i`.
pub fn so_p(n: usize, i: usize) -> CMatrix {
    CMatrix::from_int_entries(n + 1, &[(i, n, 1, 0), (n, i, 1, 0)])
}

/// Root vector of so(n,1) for `v = e_i`, `i < n - 1`.
pub fn so_n(n: usize, i: usize) -> CMatrix {
    CMatrix::from_int_entries(n + 1, &[(i, n - 1, 1, 0), (i, n, -1, 0), (n - 1, i, -1, 0), (n, i, -1, 0)])
}

/// `[[0, z], [z*, 0]]` with `z = value * e_i`.
pub fn su_p(n: usize, i: usize, value: &GaussianScalar) -> CMatrix {
    let mut m = CMatrix::zero(n + 1);
    m.set(i, n, value.clone());
    m.set(n, i, value.conj());
    m
}

/// Element of `g_alpha` in su(n,1) for `v = value * e_i`.
pub fn su_n(n: usize, i: usize, value: &GaussianScalar) -> CMatrix {
    let mut m = CMatrix::zero(n + 1);
    m.set(i, n - 1, value.clone());
    m.set(i, n, -value);
    m.set(n - 1, i, -value.conj());
    m.set(n, i, -value.conj());
    m
}

/// Generator of `g_2alpha` in su(n,1) (`x = 1`).
pub fn su_n_center(n: usize) -> CMatrix {
    CMatrix::from_int_entries(n + 1, &[(n - 1, n - 1, 0, -1), (n - 1, n, 0, 1), (n, n - 1, 0, -1), (n, n, 0, 1)])
}

/// Complex matrix placed into a bigger zero matrix at the listed rows/columns.
pub fn embed_indexed(size: usize, block: &CMatrix, index: &[usize]) -> CMatrix {
    assert_eq!(block.size(), index.len(), "index map length");
    let mut m = CMatrix::zero(size);
    for (&(r, c), v) in block.entries() {
        m.set(index[r], index[c], v.clone());
    }
    m
}

/// Block pieces of an sp(n,1) element.
#[derive(Clone, Debug, Default)]
pub struct SpElement {
    pub a: Vec<((usize, usize), GaussianScalar)>,
    pub b: Vec<((usize, usize), GaussianScalar)>,
    pub z: Vec<(usize, GaussianScalar)>,
    pub w: Vec<(usize, GaussianScalar)>,
    pub e: GaussianScalar,
    pub f: GaussianScalar,
}

/// `[[A, z, -conj B, -conj w], [z*, e, w*, -conj f], [B, w, conj A, conj z], [-w^t, f, z^t, conj e]]`.
pub fn sp_element(n: usize, parts: &SpElement) -> CMatrix {
    let h = n + 1;
    let mut m = CMatrix::zero(2 * h);
    for ((r, c), v) in &parts.a {
        m.add_at(*r, *c, v);
        m.add_at(h + r, h + c, &v.conj());
    }
    for ((r, c), v) in &parts.b {
        m.add_at(h + r, *c, v);
        m.add_at(*r, h + c, &-v.conj());
    }
    for (i, v) in &parts.z {
        m.add_at(*i, n, v);
        m.add_at(n, *i, &v.conj());
        m.add_at(h + i, 2 * n + 1, &v.conj());
        m.add_at(2 * n + 1, h + i, v);
    }
    for (i, v) in &parts.w {
        m.add_at(*i, 2 * n + 1, &-v.conj());
        m.add_at(n, h + i, &v.conj());
        m.add_at(h + i, n, v);
        m.add_at(2 * n + 1, *i, &-v);
    }
    m.add_at(n, n, &parts.e);
    m.add_at(2 * n + 1, 2 * n + 1, &parts.e.conj());
    m.add_at(2 * n + 1, n, &parts.f);
    m.add_at(n, 2 * n + 1, &-parts.f.conj());
    m
}

/// Element of `p` in sp(n,1) with coordinate `i` equal to `(z, w)`.
pub fn sp_p(n: usize, i: usize, z: &GaussianScalar, w: &GaussianScalar) -> CMatrix {
    sp_element(n, &SpElement { z: vec![(i, z.clone())], w: vec![(i, w.clone())], ..Default::default() })
}

/// Element of `g_alpha` in sp(n,1) with coordinate `i >= 1` equal to `(z, w)`.
pub fn sp_galpha(n: usize, i: usize, z: &GaussianScalar, w: &GaussianScalar) -> CMatrix {
    assert!(i >= 1 && i < n);
    sp_element(
        n,
        &SpElement {
            a: vec![((0, i), z.conj()), ((i, 0), -z)],
            b: vec![((0, i), -w), ((i, 0), -w)],
            z: vec![(i, z.clone())],
            w: vec![(i, w.clone())],
            ..Default::default()
        },
    )
}

/// Element of `g_2alpha` in sp(n,1) with `e = i * e_im` and the given `f`.
pub fn sp_g2alpha(n: usize, e_im: &Scalar, f: &GaussianScalar) -> CMatrix {
    let e = GaussianScalar::new(Scalar::zero(), e_im.clone());
    sp_element(
        n,
        &SpElement {
            a: vec![((0, 0), -&e)],
            b: vec![((0, 0), -f)],
            z: vec![(0, e.clone())],
            w: vec![(0, f.clone())],
            e,
            f: f.clone(),
        },
    )
}

/// The `sp(n)` part of `k` for a quaternionic `m x m` matrix acting on coordinates `offset..offset+m`.
pub fn sp_k_quaternionic(n: usize, q: &QuatMatrix, offset: usize) -> CMatrix {
    let m = q.size();
    assert!(offset + m <= n);
    let index: Vec<usize> = (0..m).map(|i| offset + i).chain((0..m).map(|i| n + 1 + offset + i)).collect();
    embed_indexed(2 * n + 2, &phi_quaternion(q), &index)
}

/// The `sp(1)` factor of `k`: `e = i * e_im` and `f`.
pub fn sp_k_sp1(n: usize, e_im: &Scalar, f: &GaussianScalar) -> CMatrix {
    let e = GaussianScalar::new(Scalar::zero(), e_im.clone());
    sp_element(n, &SpElement { e, f: f.clone(), ..Default::default() })
}

/// Real `m x m` matrix acting on the `A`-block coordinates `offset..offset+m` of sp(n,1).
pub fn sp_k_real(n: usize, block: &MatrixQ, offset: usize) -> CMatrix {
    let zero = MatrixQ::zeros(block.rows(), block.cols());
    sp_k_quaternionic(n, &QuatMatrix::new(block.clone(), zero.clone(), zero.clone(), zero), offset)
}

/// Complex `m x m` block placed on the diagonal of a `size x size` matrix at `offset`.
pub fn complex_block(size: usize, block: &CMatrix, offset: usize) -> CMatrix {
    let mut m = CMatrix::zero(size);
    m.place(offset, offset, block);
    m
}

/// Complex `m x m` matrix placed into the `A`-block of sp(n,1) (with its conjugate in the lower copy).
pub fn sp_k_complex(n: usize, block: &CMatrix, offset: usize) -> CMatrix {
    let entries: Vec<((usize, usize), GaussianScalar)> =
        block.entries().map(|(&(r, c), v)| ((offset + r, offset + c), v.clone())).collect();
    sp_element(n, &SpElement { a: entries, ..Default::default() })
}
