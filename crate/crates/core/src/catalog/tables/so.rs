//! Rows for so(n,1). The compact factors sit on the leading coordinates of the
//! `(n+1) x (n+1)` matrices, which is also where `m = so(n-1)` lives.

use std::sync::Arc;

use crate::exact_linalg::{MatrixQ, Subspace};
use crate::lie_ambient::{AlgebraFamily, AmbientAlgebra, CMatrix};

use super::super::embeddings::{
    g2_in_so7, place_real, so_basis, sp1_diagonal, sp1_left, sp1_right, sp_in_so, spin7_in_so8, spin9_in_so16, su_in_so,
    u_in_so, FreeChoice,
};
use super::super::{CatalogError, NormalFormSpec};
use super::{choices, closure_of, mats, normal_form, p, pick, sum_all, Builder, Expected, Meta, Provenance};

pub(super) type Gens = Arc<dyn Fn() -> Result<Vec<MatrixQ>, CatalogError> + Send + Sync>;

fn placed(n: usize, gens: &[MatrixQ], offset: usize) -> Vec<CMatrix> {
    gens.iter().map(|g| CMatrix::from_real(&place_real(n + 1, g, offset))).collect()
}

/// `b + so(n-k,1)` with `b` acting on the first `k` coordinates.
fn reductive_with(alg: &AmbientAlgebra, n: usize, k: usize, b: &[MatrixQ]) -> Result<Subspace, CatalogError> {
    let compact = mats(alg, &placed(n, b, 0))?;
    let noncompact = closure_of(alg, &NormalFormSpec::q_k(n, k))?;
    Ok(sum_all(alg.dim(), &[&compact, &noncompact]))
}

/// `b + c + a + n_k` with `b` on coordinates `0..k` and `c` on `k..n-1`.
fn nonreductive_with(
    alg: &AmbientAlgebra,
    n: usize,
    k: usize,
    b: &[MatrixQ],
    c: &[MatrixQ],
    with_a: bool,
) -> Result<Subspace, CatalogError> {
    let mut gens = placed(n, b, 0);
    gens.extend(placed(n, c, k));
    let compact = mats(alg, &gens)?;
    let nk = normal_form(alg, &NormalFormSpec::n_k(AlgebraFamily::So(n), k))?;
    let a = if with_a { alg.a().clone() } else { Subspace::zero(alg.dim()) };
    Ok(sum_all(alg.dim(), &[&compact, &a, &nk]))
}

fn sp1_l2(left_full: bool, l2: FreeChoice) -> Vec<MatrixQ> {
    if left_full {
        let mut g = sp1_left();
        g.extend(pick(&sp1_right(), l2));
        g
    } else {
        let mut g = pick(&sp1_left(), l2);
        g.extend(sp1_right());
        g
    }
}

/// Special compact factors `(row label, k, generators)` from the sphere-transitive table
/// that fit into `0..limit`.
pub(super) fn special_factors(limit: usize) -> Vec<(String, usize, Gens)> {
    let mut out: Vec<(String, usize, Gens)> = Vec::new();
    for m in (4..).take_while(|m| 2 * m <= limit) {
        out.push((format!("su({m})"), 2 * m, Arc::new(move || Ok(su_in_so(m)))));
    }
    for m in (2..).take_while(|m| 4 * m <= limit) {
        out.push((format!("sp({m})"), 4 * m, Arc::new(move || Ok(sp_in_so(m)))));
    }
    if 16 <= limit {
        out.push(("spin(9)".into(), 16, Arc::new(spin9_in_so16)));
    }
    if 8 <= limit {
        out.push(("spin(7)".into(), 8, Arc::new(|| Ok(spin7_in_so8()))));
    }
    if 7 <= limit {
        out.push(("g2".into(), 7, Arc::new(|| Ok(g2_in_so7()))));
    }
    out
}

pub(super) fn reductive(b: &mut Builder, n: usize) {
    let meta = |symmetric| Meta { symmetric, note: None };
    for k in 0..=n {
        let symmetric = k == n || (2 < k && k < n);
        b.push("so(k)+so(n-k,1)", vec![p("k", k)], Expected::Spherical, Provenance::Paper, meta(symmetric), move |alg| {
            reductive_with(alg, n, k, &so_basis(k))
        });
    }
    for (label, k, gens) in special_factors(n) {
        b.push(&format!("{label}+so(n-k,1)"), vec![p("k", k)], Expected::Spherical, Provenance::Paper, meta(false), move |alg| {
            reductive_with(alg, n, k, &gens()?)
        });
    }
    if n >= 4 {
        for l2 in [FreeChoice::Zero, FreeChoice::Torus] {
            for (row, left) in [("sp(1)+l2+so(n-4,1)", true), ("l2+sp(1)+so(n-4,1)", false)] {
                b.push(row, vec![p("l2", l2.tag())], Expected::Spherical, Provenance::Paper, meta(false), move |alg| {
                    reductive_with(alg, n, 4, &sp1_l2(left, l2))
                });
            }
        }
    }
    discrepancy_rows(b, n);
    for k in [2usize, 3] {
        if k <= n {
            b.push("so(k-1)+so(n-k,1)", vec![p("k", k)], Expected::NotSpherical, Provenance::Derived, meta(false), move |alg| {
                let inner: Vec<MatrixQ> = so_basis(k - 1);
                reductive_with(alg, n, k, &inner)
            });
        }
    }
    if n >= 4 {
        b.push("diag-sp(1)+so(n-4,1)", vec![], Expected::NotSpherical, Provenance::Derived, meta(false), move |alg| {
            reductive_with(alg, n, 4, &sp1_diagonal())
        });
    }
    if n >= 2 {
        b.push("0+so(n-2,1)", vec![], Expected::NotSpherical, Provenance::Derived, meta(false), move |alg| {
            reductive_with(alg, n, 2, &[])
        });
    }
}

/// `su(3)` on `R^6` and `u(m)` on `R^2m` (`m >= 3`): transitive, yet absent from the tables.
pub(super) fn discrepancy_rows(b: &mut Builder, n: usize) {
    let note = Some("transitive compact factor missing from the table".to_string());
    let meta = Meta { symmetric: false, note };
    if n >= 6 {
        b.push("su(3)+so(n-6,1)", vec![p("k", 6)], Expected::Discrepancy, Provenance::Derived, meta.clone(), move |alg| {
            reductive_with(alg, n, 6, &su_in_so(3))
        });
    }
    for m in 3..=n / 2 {
        b.push("u(m)+so(n-2m,1)", vec![p("k", 2 * m)], Expected::Discrepancy, Provenance::Derived, meta.clone(), move |alg| {
            reductive_with(alg, n, 2 * m, &u_in_so(m))
        });
    }
}

pub(super) fn nonreductive(b: &mut Builder, n: usize) {
    super::push_lh_plus_n(b);
    let limit = n.saturating_sub(2);
    for k in 1..=limit {
        let c_len = so_basis(n - k - 1).len();
        for c in choices(c_len) {
            b.push("so(k)+c_k+a+n_k", vec![p("k", k), p("c", c.tag())], Expected::Spherical, Provenance::Paper, Meta::default(), move |alg| {
                nonreductive_with(alg, n, k, &so_basis(k), &pick(&so_basis(n - k - 1), c), true)
            });
        }
    }
    for (label, k, gens) in special_factors(limit) {
        for c in choices(so_basis(n - k - 1).len()) {
            let gens = gens.clone();
            b.push(&format!("{label}+c_k+a+n_k"), vec![p("k", k), p("c", c.tag())], Expected::Spherical, Provenance::Paper, Meta::default(), move |alg| {
                nonreductive_with(alg, n, k, &gens()?, &pick(&so_basis(n - k - 1), c), true)
            });
        }
    }
    if 4 <= limit {
        for l2 in [FreeChoice::Zero, FreeChoice::Torus] {
            for c in choices(so_basis(n - 5).len()) {
                for (row, left) in [("sp(1)+l2+c_4+a+n_4", true), ("l2+sp(1)+c_4+a+n_4", false)] {
                    b.push(row, vec![p("l2", l2.tag()), p("c", c.tag())], Expected::Spherical, Provenance::Paper, Meta::default(), move |alg| {
                        nonreductive_with(alg, n, 4, &sp1_l2(left, l2), &pick(&so_basis(n - 5), c), true)
                    });
                }
            }
        }
    }
    nonreductive_discrepancy_rows(b, n);
    for k in [2usize, 3] {
        if k <= limit {
            b.push("so(k-1)+a+n_k", vec![p("k", k)], Expected::NotSpherical, Provenance::Derived, Meta::default(), move |alg| {
                nonreductive_with(alg, n, k, &so_basis(k - 1), &[], true)
            });
        }
    }
    if 2 <= limit {
        b.push("so(k)+n_k", vec![p("k", 2)], Expected::NotSpherical, Provenance::Derived, Meta::default(), move |alg| {
            nonreductive_with(alg, n, 2, &so_basis(2), &[], false)
        });
    }
    if 4 <= limit {
        b.push("diag-sp(1)+a+n_4", vec![], Expected::NotSpherical, Provenance::Derived, Meta::default(), move |alg| {
            nonreductive_with(alg, n, 4, &sp1_diagonal(), &[], true)
        });
    }
}

pub(super) fn nonreductive_discrepancy_rows(b: &mut Builder, n: usize) {
    let note = Some("transitive compact factor missing from the table".to_string());
    let meta = Meta { symmetric: false, note };
    let limit = n.saturating_sub(2);
    if 6 <= limit {
        b.push("su(3)+a+n_6", vec![p("k", 6)], Expected::Discrepancy, Provenance::Derived, meta.clone(), move |alg| {
            nonreductive_with(alg, n, 6, &su_in_so(3), &[], true)
        });
    }
    for m in 3..=limit / 2 {
        b.push("u(m)+a+n_2m", vec![p("k", 2 * m)], Expected::Discrepancy, Provenance::Derived, meta.clone(), move |alg| {
            nonreductive_with(alg, n, 2 * m, &u_in_so(m), &[], true)
        });
    }
}
