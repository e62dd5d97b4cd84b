//! Connected proper subgroups of O(n), U(n), Sp(n) transitive on spheres, and
//! subgroups that fail to be.

use std::fmt;

use crate::exact_linalg::MatrixQ;
use crate::lie_ambient::{phi_quaternion, QuatMatrix, Quaternion};

use super::embeddings::{
    choose, complex_structure, g2_in_so7, left_quaternion, realify_matrix, right_quaternion, so_basis, sp1_diagonal, sp1_left,
    sp1_right, sp_basis, sp_in_so, spin7_in_so8, spin9_in_so16, su_basis, FreeChoice,
};
use super::CatalogError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalGroup {
    O,
    U,
    Sp,
}

impl ClassicalGroup {
    /// Real dimension of the defining representation of the group of size `n`.
    pub fn real_dim(self, n: usize) -> usize {
        match self {
            ClassicalGroup::O => n,
            ClassicalGroup::U => 2 * n,
            ClassicalGroup::Sp => 4 * n,
        }
    }
}

impl fmt::Display for ClassicalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalGroup::O => "O",
            ClassicalGroup::U => "U",
            ClassicalGroup::Sp => "Sp",
        })
    }
}

/// One row of the sphere-transitive table at a concrete size.
#[derive(Clone, Debug)]
pub struct OnishchikEntry {
    pub ambient: ClassicalGroup,
    pub n: usize,
    /// The table's size condition, e.g. `"O(4n), n >= 2"`.
    pub constraint: &'static str,
    pub label: String,
    pub note: Option<String>,
    /// Real skew operators on the realified defining representation.
    pub generators: Vec<MatrixQ>,
}

impl OnishchikEntry {
    pub fn real_dim(&self) -> usize {
        self.ambient.real_dim(self.n)
    }
}

fn entry(
    ambient: ClassicalGroup,
    n: usize,
    constraint: &'static str,
    label: impl Into<String>,
    generators: Vec<MatrixQ>,
) -> OnishchikEntry {
    OnishchikEntry { ambient, n, constraint, label: label.into(), note: None, generators }
}

/// Table rows applicable to the given group and size. `Sp(n)` yields nothing.
pub fn onishchik_entries(ambient: ClassicalGroup, n: usize) -> Result<Vec<OnishchikEntry>, CatalogError> {
    let mut out = Vec::new();
    match ambient {
        ClassicalGroup::U => {
            if n >= 2 {
                let gens = su_basis(n).iter().map(realify_matrix).collect();
                out.push(entry(ambient, n, "U(n), n >= 2", format!("SU({n})"), gens));
            }
            if n.is_multiple_of(2) && n >= 4 {
                let m = n / 2;
                out.push(entry(ambient, n, "U(2n), n >= 2", format!("Sp({m})"), sp_in_so(m)));
                let mut gens = sp_in_so(m);
                gens.push(complex_structure(n));
                out.push(entry(ambient, n, "U(2n), n >= 2", format!("Sp({m})xS1"), gens));
            }
        }
        ClassicalGroup::O => {
            if n >= 2 {
                out.push(entry(ambient, n, "O(n), n >= 2", format!("SO({n})"), so_basis(n)));
            }
            if n.is_multiple_of(2) && n >= 6 {
                let gens = su_basis(n / 2).iter().map(realify_matrix).collect();
                out.push(entry(ambient, n, "O(2n), n >= 3", format!("SU({})", n / 2), gens));
            }
            if n.is_multiple_of(4) && n >= 8 {
                out.push(entry(ambient, n, "O(4n), n >= 2", format!("Sp({})", n / 4), sp_in_so(n / 4)));
            }
            if n == 16 {
                out.push(entry(ambient, n, "O(16)", "Spin(9)", spin9_in_so16()?));
            }
            if n == 8 {
                out.push(entry(ambient, n, "O(8)", "Spin(7)", spin7_in_so8()));
            }
            if n == 7 {
                out.push(entry(ambient, n, "O(7)", "G2", g2_in_so7()));
            }
            if n == 4 {
                for choice in FreeChoice::ALL {
                    let mut gens = sp1_left();
                    gens.extend(choose(&sp1_right(), choice));
                    let mut e = entry(ambient, n, "O(4)", format!("p(Sp(1)xL2), L2={}", choice.tag()), gens);
                    e.note = Some("L2 is an arbitrary connected subgroup of Sp(1)".into());
                    out.push(e);
                }
                for choice in FreeChoice::ALL {
                    let mut gens = choose(&sp1_left(), choice);
                    gens.extend(sp1_right());
                    let mut e = entry(ambient, n, "O(4)", format!("p(L2xSp(1)), L2={}", choice.tag()), gens);
                    e.note = Some("L2 is an arbitrary connected subgroup of Sp(1)".into());
                    out.push(e);
                }
            }
        }
        ClassicalGroup::Sp => {}
    }
    Ok(out)
}

/// Subgroups known not to act transitively on spheres.
pub fn onishchik_negatives() -> Vec<OnishchikEntry> {
    let mut out = Vec::new();
    out.push(entry(ClassicalGroup::O, 4, "O(4)", "diagonal Sp(1)", sp1_diagonal()));
    let j = Quaternion::from_ints(0, 0, 1, 0);
    let graph: Vec<MatrixQ> = [Quaternion::from_ints(0, 1, 0, 0), j.clone(), Quaternion::from_ints(0, 0, 0, 1)]
        .iter()
        .map(|q| {
            let twisted = j.mul(q).mul(&j.conj());
            left_quaternion(q).sub(&right_quaternion(&twisted))
        })
        .collect();
    out.push(entry(ClassicalGroup::O, 4, "O(4)", "graph of conjugation by j", graph));
    for k in 3..=8 {
        let gens = so_basis(k - 1).iter().map(|b| super::embeddings::place_real(k, b, 0)).collect();
        out.push(entry(ClassicalGroup::O, k, "O(n)", format!("SO({}) block", k - 1), gens));
    }
    for n in 2..=3 {
        let mut gens = Vec::new();
        for b in sp_basis(n - 1) {
            gens.push(realify_matrix(&phi_quaternion(&pad_quaternionic(&b, n, 0))));
        }
        for b in sp_basis(1) {
            gens.push(realify_matrix(&phi_quaternion(&pad_quaternionic(&b, n, n - 1))));
        }
        out.push(entry(ClassicalGroup::Sp, n, "Sp(n)", format!("Sp({})xSp(1)", n - 1), gens));
    }
    out
}

/// Quaternionic block placed at `offset` in an `n x n` zero matrix.
pub fn pad_quaternionic(b: &QuatMatrix, n: usize, offset: usize) -> QuatMatrix {
    let pad = |m: &MatrixQ| super::embeddings::place_real(n, m, offset);
    QuatMatrix::new(pad(&b.a), pad(&b.b), pad(&b.c), pad(&b.d))
}

/// Skew-symmetric check used before handing the operators to the orbit test.
pub fn all_skew(gens: &[MatrixQ]) -> bool {
    gens.iter().all(|g| g.add(&g.transpose()).is_zero())
}
