//! Rows for the minimal parabolic model of f4, plus the bare representation facts the
//! reductive f4 classification rests on.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exact_linalg::{frac, left_kernel, ortho_complement, MatrixQ, Scalar, SparseVec, Subspace};
use crate::lie_ambient::{phi_quaternion, AlgebraFamily, AmbientAlgebra, Quaternion};
use crate::sphericity_core::{restrict_action, LinearAction};
use crate::subalgebra_toolkit::normalizer_in;

use super::super::embeddings::{
    flatten, left_quaternion, realify_matrix, right_quaternion, sp_basis, sp_in_so, spin9_in_so16, FreeChoice,
};
use super::super::onishchik::pad_quaternionic;
use super::super::{CatalogError, NormalFormSpec};
use super::{normal_form, p, pick, sum_all, Builder, Expected, Meta, Provenance};

/// Values of `c` with `1 + c^2` a rational square, as `(numerator, denominator)`; at these the
/// `sp(1)` ideals of `so(4)_c` are defined over the rationals.
pub const F4_PYTHAGOREAN_C: [(i64, i64); 3] = [(0, 1), (3, 4), (-4, 3)];

fn construction(e: impl std::fmt::Display) -> CatalogError {
    CatalogError::Construction(e.to_string())
}

fn rational_sqrt(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let root = |v: &BigInt| {
        let r = v.sqrt();
        (&r * &r == *v).then_some(r)
    };
    Some(Scalar::new(root(x.numer())?, root(x.denom())?))
}

/// `ad(n)` on `w`, rewritten in an orthonormal basis of `w`.
///
/// The basis of `w` must be orthogonal with squared norms that are rational squares.
pub fn orthonormal_action(alg: &AmbientAlgebra, n: &Subspace, w: &Subspace) -> Result<LinearAction, CatalogError> {
    let act = restrict_action(alg, n, w).map_err(construction)?;
    let d = act.gram.rows();
    let mut scale = Vec::with_capacity(d);
    for i in 0..d {
        for j in 0..d {
            if i != j && !act.gram.get(i, j).is_zero() {
                return Err(construction("basis of the module is not orthogonal"));
            }
        }
        scale.push(rational_sqrt(act.gram.get(i, i)).ok_or_else(|| construction("squared norm is not a rational square"))?);
    }
    let dm = MatrixQ::diag(&scale);
    let dinv = MatrixQ::diag(&scale.iter().map(|s| s.recip()).collect::<Vec<_>>());
    let operators = act.operators.iter().map(|t| dm.mul(t).mul(&dinv)).collect();
    LinearAction::from_operators(operators, MatrixQ::identity(d)).map_err(construction)
}

/// `{X in n : rho(X) in target}` with `rho` the orthonormal action of `n` on `w` and `target`
/// a subspace of flattened `dim w x dim w` matrices.
pub fn f4_preimage(alg: &AmbientAlgebra, n: &Subspace, w: &Subspace, target: &Subspace) -> Result<Subspace, CatalogError> {
    let act = orthonormal_action(alg, n, w)?;
    let d = act.module_dim();
    let residues: Vec<SparseVec> = act.operators.iter().map(|t| target.reduce(&flatten(t))).collect();
    let coeffs = left_kernel(&residues, d * d);
    let vecs: Vec<SparseVec> = coeffs.basis().iter().map(|a| n.from_coordinates(&a.to_dense(n.dim()))).collect();
    Ok(Subspace::span(alg.dim(), &vecs))
}

/// `so(4)_c`: the normalizer in `m` of `n_c`.
pub fn so4c_in_f4model(alg: &AmbientAlgebra, c: &Scalar) -> Result<Subspace, CatalogError> {
    let nc = normal_form(alg, &NormalFormSpec::n_c(c.clone()))?;
    let out = normalizer_in(alg, alg.m(), &nc);
    if out.dim() != 6 {
        return Err(construction(format!("normalizer of n_c has dimension {}, expected 6", out.dim())));
    }
    Ok(out)
}

fn galpha(alg: &AmbientAlgebra) -> &Subspace {
    alg.g_alpha()
}

/// `n_H^perp` inside `g_alpha`.
fn module_of(alg: &AmbientAlgebra, nh: &Subspace) -> Result<Subspace, CatalogError> {
    ortho_complement(&nh.intersection(galpha(alg)).map_err(construction)?, galpha(alg), alg.gram_g()).map_err(construction)
}

fn n_k(alg: &AmbientAlgebra, k: usize) -> Result<Subspace, CatalogError> {
    normal_form(alg, &NormalFormSpec::n_k(AlgebraFamily::F4Model, k))
}

fn with_a(alg: &AmbientAlgebra, compact: &Subspace, nh: &Subspace, a: bool) -> Subspace {
    let zero = Subspace::zero(alg.dim());
    sum_all(alg.dim(), &[compact, if a { alg.a() } else { &zero }, nh])
}

fn flat_span(mats: &[MatrixQ]) -> Subspace {
    let d = mats.first().map_or(0, |m| m.rows());
    Subspace::span(d * d, &mats.iter().map(flatten).collect::<Vec<_>>())
}

/// `sp(1) + l2` (`left`) or `l2 + sp(1)` inside `so(4)` in the quaternion basis `1, i, j, k`.
fn sp1_target(left: bool, l2: FreeChoice) -> Subspace {
    let units = [Quaternion::from_ints(0, 1, 0, 0), Quaternion::from_ints(0, 0, 1, 0), Quaternion::from_ints(0, 0, 0, 1)];
    let l: Vec<MatrixQ> = units.iter().map(left_quaternion).collect();
    let r: Vec<MatrixQ> = units.iter().map(right_quaternion).collect();
    let (full, part) = if left { (l, r) } else { (r, l) };
    let mut gens = full;
    gens.extend(pick(&part, l2));
    flat_span(&gens)
}

/// `b_k` samples for `phi^-1(b_k + so(8-k))`: the ideal complementing the kernel of the action on
/// the module, that ideal plus one kernel direction, and all of `N`.
fn kernel_variant(alg: &AmbientAlgebra, norm: &Subspace, w: &Subspace, choice: FreeChoice) -> Result<Subspace, CatalogError> {
    if choice == FreeChoice::Full {
        return Ok(norm.clone());
    }
    let d = w.dim();
    let ker = f4_preimage(alg, norm, w, &Subspace::zero(d * d))?;
    let ideal = ortho_complement(&ker, norm, alg.gram_g()).map_err(construction)?;
    let extra = pick(ker.basis(), choice);
    Ok(sum_all(alg.dim(), &[&ideal, &Subspace::span(alg.dim(), &extra)]))
}

type BoxedRecipe = Box<dyn Fn(&AmbientAlgebra) -> Result<Subspace, CatalogError> + Send + Sync>;

pub(super) fn nonreductive(b: &mut Builder) {
    super::push_lh_plus_n(b);
    let spherical = |b: &mut Builder, row: &str, params: Vec<(String, String)>, note: Option<String>, recipe: BoxedRecipe| {
        b.push(row, params, Expected::Spherical, Provenance::Paper, Meta { symmetric: false, note }, recipe);
    };
    for choice in FreeChoice::ALL {
        let note = Some("the row's n_1 read as n_7: only a complement of dimension one allows arbitrary m'".to_string());
        spherical(b, "m'+a+n_7", vec![p("m'", choice.tag())], note, Box::new(move |alg| {
            let nh = n_k(alg, 7)?;
            let g2 = normalizer_in(alg, alg.m(), &nh);
            let m_prime = super::pick_space(&g2, choice);
            Ok(with_a(alg, &m_prime, &nh, true))
        }));
    }
    spherical(b, "spin(7)+a+n_0", vec![], None, Box::new(|alg| Ok(with_a(alg, alg.m(), &n_k(alg, 0)?, true))));
    spherical(b, "g2+a+n_1", vec![], None, Box::new(|alg| {
        let nh = n_k(alg, 1)?;
        Ok(with_a(alg, &normalizer_in(alg, alg.m(), &nh), &nh, true))
    }));
    spherical(b, "so(4)+a+n_4", vec![], None, Box::new(|alg| {
        let nh = n_k(alg, 4)?;
        Ok(with_a(alg, &normalizer_in(alg, alg.m(), &nh), &nh, true))
    }));
    for l2 in [FreeChoice::Zero, FreeChoice::Torus] {
        for (row, left) in [("phi^-1(b_4+sp(1)+l2)+a+n_4", true), ("phi^-1(b_4+l2+sp(1))+a+n_4", false)] {
            spherical(b, row, vec![p("l2", l2.tag())], None, Box::new(move |alg| {
                let nh = n_k(alg, 4)?;
                let norm = normalizer_in(alg, alg.m(), &nh);
                let pre = f4_preimage(alg, &norm, &module_of(alg, &nh)?, &sp1_target(left, l2))?;
                Ok(with_a(alg, &pre, &nh, true))
            }));
        }
    }
    for k in [5usize, 6] {
        for choice in FreeChoice::ALL {
            b.push("phi^-1(b_k+so(8-k))+a+n_k", vec![p("k", k), p("b", choice.tag())], Expected::Spherical, Provenance::Paper, Meta::default(), move |alg| {
                let nh = n_k(alg, k)?;
                let norm = normalizer_in(alg, alg.m(), &nh);
                let bk = kernel_variant(alg, &norm, &module_of(alg, &nh)?, choice)?;
                Ok(with_a(alg, &bk, &nh, true))
            });
        }
    }
    for (num, den) in [(0, 1), (1, 1), (2, 1), (-1, 1)] {
        spherical(b, "so(4)_c+a+n_c", vec![p("c", frac(num, den))], None, Box::new(move |alg| {
            let c = frac(num, den);
            let nh = normal_form(alg, &NormalFormSpec::n_c(c.clone()))?;
            Ok(with_a(alg, &so4c_in_f4model(alg, &c)?, &nh, true))
        }));
    }
    for (num, den) in F4_PYTHAGOREAN_C {
        for l2 in [FreeChoice::Zero, FreeChoice::Torus] {
            for (row, left) in [("sp(1)+l2+a+n_c", true), ("l2+sp(1)+a+n_c", false)] {
                let note = Some("c chosen with 1 + c^2 a rational square".to_string());
                spherical(b, row, vec![p("c", frac(num, den)), p("l2", l2.tag())], note, Box::new(move |alg| {
                    let c = frac(num, den);
                    let nh = normal_form(alg, &NormalFormSpec::n_c(c.clone()))?;
                    let so4 = so4c_in_f4model(alg, &c)?;
                    let pre = f4_preimage(alg, &so4, &module_of(alg, &nh)?, &sp1_target(left, l2))?;
                    Ok(with_a(alg, &pre, &nh, true))
                }));
            }
        }
    }
    for k in [2usize, 3] {
        let note = (k == 2).then(|| "computed transitive: the normalizer is u(3), which contains su(3) acting on R^6 = C^3".to_string());
        b.push("N_m(n_k)+a+n_k", vec![p("k", k)], Expected::NotSpherical, Provenance::Paper, Meta { symmetric: false, note }, move |alg| {
            let nh = n_k(alg, k)?;
            Ok(with_a(alg, &normalizer_in(alg, alg.m(), &nh), &nh, true))
        });
    }
    b.push("N_m(n_4)+n_4", vec![], Expected::NotSpherical, Provenance::Derived, Meta::default(), |alg| {
        let nh = n_k(alg, 4)?;
        Ok(with_a(alg, &normalizer_in(alg, alg.m(), &nh), &nh, false))
    });
    b.push("t+a+n_4", vec![], Expected::NotSpherical, Provenance::Derived, Meta::default(), |alg| {
        let nh = n_k(alg, 4)?;
        let norm = normalizer_in(alg, alg.m(), &nh);
        Ok(with_a(alg, &super::pick_space(&norm, FreeChoice::Torus), &nh, true))
    });
}

/// `Sp(1) x Sp(1)` acting blockwise on `H^2`.
fn sp1_times_sp1_on_h2() -> Vec<MatrixQ> {
    let mut out = Vec::new();
    for offset in [0, 1] {
        for q in sp_basis(1) {
            out.push(realify_matrix(&phi_quaternion(&pad_quaternionic(&q, 2, offset))));
        }
    }
    out
}

pub(super) fn facts(b: &mut Builder) {
    b.push_action("Spin(9) on R^16", Expected::Spherical, Provenance::Paper, 16, spin9_in_so16);
    b.push_action("Sp(2) on H^2", Expected::Spherical, Provenance::Paper, 8, || Ok(sp_in_so(2)));
    b.push_action("Sp(1)xSp(1) on H^2", Expected::NotSpherical, Provenance::Derived, 8, || Ok(sp1_times_sp1_on_h2()));
}
