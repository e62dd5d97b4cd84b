//! Octonion multiplication and the spin(7) action on the octonions.
//!
//! Vectors of `R^8` are written in the basis `{e1, ..., e7, e0}`, so octonion
//! unit `e_k` sits at position `k - 1` for `k >= 1` and `e0` at position 7.

use num_traits::{One, Zero};

use crate::exact_linalg::{frac, MatrixQ, Scalar};

/// Product table: `OCTONION_TABLE[a][b] = (sign, c)` means `e_a e_b = sign * e_c`.
pub const OCTONION_TABLE: [[(i8, usize); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

/// Position of octonion unit `e_k` in the ordered basis `{e1, ..., e7, e0}`.
pub fn position(k: usize) -> usize {
    if k == 0 {
        7
    } else {
        k - 1
    }
}

/// Octonion unit index at a basis position.
pub fn unit_at(pos: usize) -> usize {
    if pos == 7 {
        0
    } else {
        pos + 1
    }
}

/// Product of two octonions given in the ordered basis.
pub fn octonion_mul(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); 8];
    for (p, xv) in x.iter().enumerate() {
        if xv.is_zero() {
            continue;
        }
        for (q, yv) in y.iter().enumerate() {
            if yv.is_zero() {
                continue;
            }
            let (s, c) = OCTONION_TABLE[unit_at(p)][unit_at(q)];
            let v = xv * yv;
            if s > 0 {
                out[position(c)] += v;
            } else {
                out[position(c)] -= v;
            }
        }
    }
    out
}

/// Matrix of `x -> e_k x` in the ordered basis.
pub fn left_mul(k: usize) -> MatrixQ {
    let mut m = MatrixQ::zeros(8, 8);
    for q in 0..8 {
        let (s, c) = OCTONION_TABLE[k][unit_at(q)];
        m.set(position(c), q, Scalar::from_integer(s.into()));
    }
    m
}

/// Names of the 21 so(7) coordinates, ordered by the below-diagonal entries
/// `(2,1), (3,1), ..., (7,1), (3,2), ..., (7,6)` (1-based).
pub const SO7_LETTERS: [char; 21] = [
    'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'j', 'k', 'l', 'm', 'n', 'p', 'q', 'r', 's', 't', 'u', 'v',
];

/// 1-based index pair `(i, j)`, `i < j`, of the so(7) coordinate at `idx`.
pub fn so7_pair(idx: usize) -> (usize, usize) {
    let mut n = 0;
    for i in 1..=7 {
        for j in (i + 1)..=7 {
            if n == idx {
                return (i, j);
            }
            n += 1;
        }
    }
    panic!("so(7) coordinate index {idx} out of range")
}

/// Coordinate index of the 1-based pair `(i, j)`, `i < j`.
pub fn so7_index(i: usize, j: usize) -> usize {
    assert!(1 <= i && i < j && j <= 7);
    (0..21).find(|&x| so7_pair(x) == (i, j)).expect("valid pair")
}

/// The basis matrix `-E_ij + E_ji` (1-based `i < j`) of coordinate `idx`.
pub fn so7_basis(idx: usize) -> MatrixQ {
    let (i, j) = so7_pair(idx);
    let mut m = MatrixQ::zeros(7, 7);
    m.set(i - 1, j - 1, -Scalar::one());
    m.set(j - 1, i - 1, Scalar::one());
    m
}

/// Skew 7x7 matrix with the given coordinates.
pub fn so7_matrix(coords: &[Scalar]) -> MatrixQ {
    assert_eq!(coords.len(), 21);
    let mut m = MatrixQ::zeros(7, 7);
    for (idx, c) in coords.iter().enumerate() {
        let (i, j) = so7_pair(idx);
        m.set(j - 1, i - 1, c.clone());
        m.set(i - 1, j - 1, -c);
    }
    m
}

/// Coordinates of a skew 7x7 matrix (read from the entries below the diagonal).
pub fn so7_coords(m: &MatrixQ) -> Vec<Scalar> {
    (0..21)
        .map(|idx| {
            let (i, j) = so7_pair(idx);
            m.get(j - 1, i - 1).clone()
        })
        .collect()
}

/// Entry formulas of the displayed spin(7) to so(8) map, one string per cell.
const LAMBDA_TABLE: [[&str; 8]; 8] = [
    ["0", "-a+s-t", "-b-r-u", "-c-k+n", "-d+j+p", "-e-i-l", "-f+h-m", "g+q-v"],
    ["a-s+t", "0", "-g+q-v", "f-h-m", "-e-i+l", "d-j+p", "-c-k-n", "-b+r+u"],
    ["b+r+u", "g-q+v", "0", "-e+i-l", "-f-h-m", "c-k-n", "d+j-p", "a+s-t"],
    ["c+k-n", "-f+h+m", "e-i+l", "0", "g-q-v", "-b-r+u", "a-s-t", "-d-j-p"],
    ["d-j-p", "e+i-l", "f+h+m", "-g+q+v", "0", "-a-s-t", "-b+r-u", "c-k+n"],
    ["e+i+l", "-d+j-p", "-c+k+n", "b+r-u", "a+s+t", "0", "-g-q-v", "f+h-m"],
    ["f-h+m", "c+k+n", "-d-j+p", "-a+s+t", "b-r+u", "g+q+v", "0", "-e+i+l"],
    ["-g-q+v", "b-r-u", "-a-s+t", "d+j+p", "-c+k-n", "-f-h+m", "e-i-l", "0"],
];

fn parse_cell(cell: &str) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    let mut sign = 1;
    for ch in cell.chars() {
        match ch {
            '+' => sign = 1,
            '-' => sign = -1,
            '0' => {}
            letter => {
                let idx = SO7_LETTERS.iter().position(|&l| l == letter).expect("known letter");
                out.push((sign, idx));
                sign = 1;
            }
        }
    }
    out
}

/// The displayed 8x8 image of the so(7) element with the given coordinates.
pub fn lambda_table_image(coords: &[Scalar]) -> MatrixQ {
    assert_eq!(coords.len(), 21);
    let mut m = MatrixQ::zeros(8, 8);
    for (r, row) in LAMBDA_TABLE.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            let mut v = Scalar::zero();
            for (s, idx) in parse_cell(cell) {
                if s > 0 {
                    v += &coords[idx];
                } else {
                    v -= &coords[idx];
                }
            }
            m.set(r, c, v);
        }
    }
    m
}

/// The Lie algebra homomorphism so(7) -> so(8): half of the displayed map,
/// so that `2(-E_ij + E_ji)` goes to `x -> e_i (e_j x)`.
pub fn lambda(coords: &[Scalar]) -> MatrixQ {
    lambda_table_image(coords).scale(&frac(1, 2))
}

/// `lambda` applied to the basis element of coordinate `idx`.
pub fn lambda_basis(idx: usize) -> MatrixQ {
    let mut coords = vec![Scalar::zero(); 21];
    coords[idx] = Scalar::one();
    lambda(&coords)
}
