//! The minimal parabolic model `m + a + g_alpha + g_2alpha` of f4.
//!
//! Coordinates: `0..21` are the so(7) coordinates of `m`, `21` spans `a`,
//! `22..30` is `g_alpha = R^8` (basis `e1..e7, e0`) and `30..37` is `g_2alpha = R^7`.
//! The bracket on `g_alpha x g_alpha -> g_2alpha` is the unique (up to scale)
//! m-equivariant antisymmetric map, obtained by solving the equivariance equations.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact_linalg::{int, kernel_of_rows, MatrixQ, Scalar, SparseVec, Subspace};

use super::octonion::{lambda_basis, so7_basis, so7_coords};
use super::{AlgebraFamily, AmbientAlgebra, AmbientError};

pub const F4_M_DIM: usize = 21;
pub const F4_A_INDEX: usize = 21;
pub const F4_GALPHA_START: usize = 22;
pub const F4_G2ALPHA_START: usize = 30;
const DIM: usize = 37;

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < 8);
    (0..i).map(|r| 7 - r).sum::<usize>() + (j - i - 1)
}

/// Signed unknown index of `Lambda(e_i, e_j)[k]`, or `None` when `i == j`.
fn unknown(i: usize, j: usize, k: usize) -> Option<(usize, i64)> {
    match i.cmp(&j) {
        std::cmp::Ordering::Less => Some((pair_index(i, j) * 7 + k, 1)),
        std::cmp::Ordering::Greater => Some((pair_index(j, i) * 7 + k, -1)),
        std::cmp::Ordering::Equal => None,
    }
}

/// Solves for the equivariant antisymmetric map; returns `table[pair][k]` with integer entries.
fn equivariant_bracket(lams: &[MatrixQ], reps: &[MatrixQ]) -> Result<Vec<Vec<Scalar>>, AmbientError> {
    let mut rows = Vec::new();
    for (lam, x) in lams.iter().zip(reps) {
        for i in 0..8 {
            for j in (i + 1)..8 {
                for k in 0..7 {
                    let mut terms: Vec<(usize, Scalar)> = Vec::new();
                    for kp in 0..7 {
                        let c = x.get(k, kp);
                        if !c.is_zero() {
                            let (u, s) = unknown(i, j, kp).expect("i < j");
                            terms.push((u, c * int(s)));
                        }
                    }
                    for a in 0..8 {
                        let c = lam.get(a, i);
                        if let (false, Some((u, s))) = (c.is_zero(), unknown(a, j, k)) {
                            terms.push((u, -(c * int(s))));
                        }
                        let c = lam.get(a, j);
                        if let (false, Some((u, s))) = (c.is_zero(), unknown(i, a, k)) {
                            terms.push((u, -(c * int(s))));
                        }
                    }
                    let row = SparseVec::from_pairs(terms);
                    if !row.is_zero() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let ker = kernel_of_rows(&rows, 28 * 7);
    if ker.dim() != 1 {
        return Err(AmbientError::Inconsistent(format!(
            "equivariant map space has dimension {}, expected 1",
            ker.dim()
        )));
    }
    let v = &ker.basis()[0];
    let lcm = v.iter().fold(num_bigint::BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
    let scaled = v.scale(&Scalar::from_integer(lcm));
    let gcd = scaled.iter().fold(num_bigint::BigInt::zero(), |acc, (_, x)| acc.gcd(x.numer()));
    let scaled = scaled.scale(&Scalar::new(num_bigint::BigInt::one(), gcd.abs()));
    Ok((0..28).map(|p| (0..7).map(|k| scaled.get(p * 7 + k)).collect()).collect())
}

/// Builds the f4 parabolic model.
pub fn f4_model() -> Result<AmbientAlgebra, AmbientError> {
    let reps: Vec<MatrixQ> = (0..F4_M_DIM).map(so7_basis).collect();
    let lams: Vec<MatrixQ> = (0..F4_M_DIM).map(lambda_basis).collect();
    for (s, lam) in lams.iter().enumerate() {
        if lam.transpose() != lam.scale(&-Scalar::one()) {
            return Err(AmbientError::Inconsistent(format!("lambda image {s} is not skew")));
        }
    }
    let mut structure = vec![SparseVec::zero(); DIM * DIM];
    let set = |st: &mut Vec<SparseVec>, i: usize, j: usize, v: SparseVec| {
        st[j * DIM + i] = v.neg();
        st[i * DIM + j] = v;
    };
    for s in 0..F4_M_DIM {
        for t in (s + 1)..F4_M_DIM {
            let comm = reps[s].mul(&reps[t]).sub(&reps[t].mul(&reps[s]));
            let coords = so7_coords(&comm);
            let lam_comm = lams[s].mul(&lams[t]).sub(&lams[t].mul(&lams[s]));
            let lam_of = coords
                .iter()
                .enumerate()
                .fold(MatrixQ::zeros(8, 8), |acc, (u, c)| acc.add(&lams[u].scale(c)));
            if lam_comm != lam_of {
                return Err(AmbientError::Inconsistent("lambda is not a homomorphism".into()));
            }
            set(&mut structure, s, t, SparseVec::from_dense(&coords));
        }
        for i in 0..8 {
            let col = lams[s].col_sparse(i).shifted(F4_GALPHA_START);
            set(&mut structure, s, F4_GALPHA_START + i, col);
        }
        for i in 0..7 {
            let col = reps[s].col_sparse(i).shifted(F4_G2ALPHA_START);
            set(&mut structure, s, F4_G2ALPHA_START + i, col);
        }
    }
    for i in 0..8 {
        set(&mut structure, F4_A_INDEX, F4_GALPHA_START + i, SparseVec::unit(F4_GALPHA_START + i));
    }
    for i in 0..7 {
        set(
            &mut structure,
            F4_A_INDEX,
            F4_G2ALPHA_START + i,
            SparseVec::unit(F4_G2ALPHA_START + i).scale(&int(2)),
        );
    }
    let table = equivariant_bracket(&lams, &reps)?;
    for i in 0..8 {
        for j in (i + 1)..8 {
            let v = SparseVec::from_dense(&table[pair_index(i, j)]).shifted(F4_G2ALPHA_START);
            set(&mut structure, F4_GALPHA_START + i, F4_GALPHA_START + j, v);
        }
    }
    let mut diag = vec![int(2); F4_M_DIM];
    diag.extend(std::iter::repeat_n(int(1), DIM - F4_M_DIM));
    let gram = MatrixQ::diag(&diag);
    let m = Subspace::span(DIM, &(0..F4_M_DIM).map(SparseVec::unit).collect::<Vec<_>>());
    AmbientAlgebra::from_structure(AlgebraFamily::F4Model, structure, gram, m, SparseVec::unit(F4_A_INDEX))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_is_a_bijection() {
        let mut seen = Vec::new();
        for i in 0..8 {
            for j in (i + 1)..8 {
                seen.push(pair_index(i, j));
            }
        }
        seen.sort();
        assert_eq!(seen, (0..28).collect::<Vec<_>>());
    }
}
