//! Rows for su(n,1). Block positions follow `diag(A, lambda B, C, lambda, lambda)` for the
//! elements of `m`; the trace condition `s(...)` is imposed by intersecting with the algebra.

use crate::exact_linalg::{MatrixQ, Subspace};
use crate::lie_ambient::{gauss, AmbientAlgebra, CMatrix};

use super::super::elements::complex_block;
use super::super::embeddings::{place_real, sp1_left, sp1_right, sp_in_su, su_basis, u_basis, FreeChoice};
use super::super::{CatalogError, NormalFormSpec};
use super::so::special_factors;
use super::{choices, closure_of, mats, normal_form, p, pick, sum_all, Builder, Expected, Meta, Provenance};

fn at(n: usize, gens: &[CMatrix], offset: usize) -> Vec<CMatrix> {
    gens.iter().map(|g| complex_block(n + 1, g, offset)).collect()
}

fn real_at(n: usize, gens: &[MatrixQ], offset: usize) -> Vec<CMatrix> {
    gens.iter().map(|g| CMatrix::from_real(&place_real(n + 1, g, offset))).collect()
}

/// `i` on the listed diagonal positions of an `(n+1) x (n+1)` matrix.
fn diag_i(n: usize, positions: impl IntoIterator<Item = usize>) -> CMatrix {
    let mut m = CMatrix::zero(n + 1);
    for i in positions {
        m.set(i, i, gauss(0, 1));
    }
    m
}

fn meet(alg: &AmbientAlgebra, gens: &[CMatrix]) -> Result<Subspace, CatalogError> {
    Ok(alg.meet_matrix_span(gens)?)
}

/// `s(b + u(n-k,1))` or `b + su(n-k,1)` with `b` on the first `k` coordinates; `center`
/// adds `i` on the noncompact block before the trace condition.
fn reductive_with(alg: &AmbientAlgebra, n: usize, k: usize, b: &[CMatrix], center: bool) -> Result<Subspace, CatalogError> {
    let mut gens = at(n, b, 0);
    if center {
        gens.push(diag_i(n, k..=n));
    }
    let compact = meet(alg, &gens)?;
    let noncompact = closure_of(alg, &NormalFormSpec::q_kl(n, k, 0))?;
    Ok(sum_all(alg.dim(), &[&compact, &noncompact]))
}

pub(super) fn reductive(b: &mut Builder, n: usize) {
    let meta = |symmetric| Meta { symmetric, note: None };
    b.push("u(n)", vec![], Expected::Spherical, Provenance::Paper, meta(true), |alg| {
        Ok(alg.k().expect("su(n,1) has a Cartan decomposition").clone())
    });
    if n >= 2 {
        b.push("su(n)", vec![], Expected::Spherical, Provenance::Paper, meta(false), move |alg| {
            mats(alg, &at(n, &su_basis(n), 0))
        });
    }
    if n.is_multiple_of(2) && n >= 4 {
        let m = n / 2;
        b.push("sp(m)", vec![p("m", m)], Expected::Spherical, Provenance::Paper, meta(false), move |alg| {
            mats(alg, &at(n, &sp_in_su(m), 0))
        });
        b.push("sp(m)+s1", vec![p("m", m)], Expected::Spherical, Provenance::Paper, meta(false), move |alg| {
            let mut gens = at(n, &sp_in_su(m), 0);
            let mut center = diag_i(n, 0..n);
            center.set(n, n, gauss(0, -(n as i64)));
            gens.push(center);
            mats(alg, &gens)
        });
    }
    for k in 0..n {
        b.push("s(u(k)+u(n-k,1))", vec![p("k", k)], Expected::Spherical, Provenance::Paper, meta(true), move |alg| {
            reductive_with(alg, n, k, &u_basis(k), true)
        });
        b.push("su(k)+su(n-k,1)", vec![p("k", k)], Expected::Spherical, Provenance::Paper, meta(false), move |alg| {
            reductive_with(alg, n, k, &su_basis(k), false)
        });
        if k % 2 == 0 && k >= 4 {
            let m = k / 2;
            b.push("s(sp(m)+u(n-k,1))", vec![p("k", k)], Expected::Spherical, Provenance::Paper, meta(false), move |alg| {
                reductive_with(alg, n, k, &sp_in_su(m), true)
            });
            b.push("s(sp(m)+s1+u(n-k,1))", vec![p("k", k)], Expected::Spherical, Provenance::Paper, meta(false), move |alg| {
                let mut gens = sp_in_su(m);
                gens.push(diag_i(k - 1, 0..k));
                reductive_with(alg, n, k, &gens, true)
            });
        }
    }
    b.push("so(n,1)", vec![], Expected::Spherical, Provenance::Paper, meta(true), move |alg| {
        closure_of(alg, &NormalFormSpec::q_kl(n, 0, n))
    });
    for k in 1..n {
        b.push("N_k(q_{k,n-k})+q_{k,n-k}", vec![p("k", k)], Expected::NotSpherical, Provenance::Paper, meta(false), move |alg| {
            let q = normal_form(alg, &NormalFormSpec::q_kl(n, k, n - k))?;
            let k_alg = alg.k().expect("su(n,1) has a Cartan decomposition");
            let norm = crate::subalgebra_toolkit::normalizer_in(alg, k_alg, &q);
            Ok(sum_all(alg.dim(), &[&norm, &q]))
        });
    }
    if n >= 2 {
        b.push("s(u(n-1)+u(1))", vec![], Expected::NotSpherical, Provenance::Derived, meta(false), move |alg| {
            let mut gens = at(n, &u_basis(n - 1), 0);
            gens.push(diag_i(n, [n]));
            meet(alg, &gens)
        });
    }
}

/// Pieces of an element `diag(A, lambda B, C, lambda, lambda)` of `m` for `n_{k,l}`.
struct MParts {
    /// Complex generators on the `A` block (coordinates `0..k`).
    a: Vec<CMatrix>,
    /// Real generators on the `B` block (coordinates `k..k+l`).
    real_b: Vec<MatrixQ>,
    /// Generators of `u(n-1-k-l)` on the `C` block.
    c_block: Vec<CMatrix>,
    /// Whether the `lambda` direction is included.
    lambda: bool,
    /// `k` and `l` of the normal form.
    k: usize,
    l: usize,
}

fn nonreductive_with(alg: &AmbientAlgebra, n: usize, parts: &MParts, with_a: bool) -> Result<Subspace, CatalogError> {
    let (k, l) = (parts.k, parts.l);
    let mut gens = at(n, &parts.a, 0);
    gens.extend(real_at(n, &parts.real_b, k));
    gens.extend(at(n, &parts.c_block, k + l));
    if parts.lambda {
        gens.push(diag_i(n, (k..k + l).chain([n - 1, n])));
    }
    let compact = if gens.is_empty() { Subspace::zero(alg.dim()) } else { meet(alg, &gens)? };
    let nkl = normal_form(alg, &NormalFormSpec::n_kl(n, k, l))?;
    let a = if with_a { alg.a().clone() } else { Subspace::zero(alg.dim()) };
    Ok(sum_all(alg.dim(), &[&compact, &a, &nkl]))
}

fn lambda_choices() -> [(bool, &'static str); 2] {
    [(false, "0"), (true, "u(1)")]
}

pub(super) fn nonreductive(b: &mut Builder, n: usize) {
    super::push_lh_plus_n(b);
    if n < 2 {
        return;
    }
    let push_l_row = |b: &mut Builder, label: &str, l: usize, gens: super::so::Gens, extra: Vec<(String, String)>| {
        let rest = n - 1 - l;
        for bc in choices(rest * rest) {
            for (lambda, ctag) in lambda_choices() {
                let gens = gens.clone();
                let mut params = vec![p("l", l)];
                params.extend(extra.clone());
                params.extend([p("b", bc.tag()), p("c", ctag)]);
                b.push(label, params, Expected::Spherical, Provenance::Paper, Meta::default(), move |alg| {
                    let parts = MParts { a: vec![], real_b: gens()?, c_block: pick(&u_basis(rest), bc), lambda, k: 0, l };
                    nonreductive_with(alg, n, &parts, true)
                });
            }
        }
    };
    for l in 1..n {
        push_l_row(b, "s(so(l)+b_l+c)+a+n_{0,l}", l, std::sync::Arc::new(move || Ok(super::super::embeddings::so_basis(l))), vec![]);
    }
    for (label, l, gens) in special_factors(n - 1) {
        push_l_row(b, &format!("s({label}+b_l+c)+a+n_{{0,l}}"), l, gens, vec![]);
    }
    if n > 4 {
        for l2 in [FreeChoice::Zero, FreeChoice::Torus] {
            for (label, left) in [("s(sp(1)+l2+b_4+c)+a+n_{0,4}", true), ("s(l2+sp(1)+b_4+c)+a+n_{0,4}", false)] {
                let gens: super::so::Gens = std::sync::Arc::new(move || {
                    let (full, part) = if left { (sp1_left(), sp1_right()) } else { (sp1_right(), sp1_left()) };
                    let mut g = full;
                    g.extend(pick(&part, l2));
                    Ok(g)
                });
                push_l_row(b, label, 4, gens, vec![p("l2", l2.tag())]);
            }
        }
    }
    for k in 1..n {
        let rest = n - 1 - k;
        let mut factors: Vec<(String, Vec<CMatrix>, bool)> =
            vec![("u(k)".into(), u_basis(k), true), ("su(k)".into(), su_basis(k), false)];
        if k % 2 == 0 && k >= 4 {
            factors.push(("sp(m)".into(), sp_in_su(k / 2), false));
            let mut with_circle = sp_in_su(k / 2);
            with_circle.push(diag_i(k - 1, 0..k));
            factors.push(("sp(m)+s1".into(), with_circle, true));
        }
        for (label, a_gens, has_trace) in factors {
            for bc in choices(rest * rest) {
                for (lambda, ctag) in lambda_choices() {
                    let a_gens = a_gens.clone();
                    let expected = if k == 1 && collapses(has_trace, bc, lambda) { Expected::Discrepancy } else { Expected::Spherical };
                    let note = (expected == Expected::Discrepancy)
                        .then(|| "trace condition removes every element acting on n_{1,0}^perp".to_string());
                    let row = format!("s({label}+b_k+c)+a+n_{{k,0}}");
                    let params = vec![p("k", k), p("b", bc.tag()), p("c", ctag)];
                    b.push(&row, params, expected, Provenance::Paper, Meta { symmetric: false, note }, move |alg| {
                        let parts = MParts { a: a_gens.clone(), real_b: vec![], c_block: pick(&u_basis(rest), bc), lambda, k, l: 0 };
                        nonreductive_with(alg, n, &parts, true)
                    });
                }
            }
        }
    }
    let rest = n - 2;
    for bc in choices(rest * rest) {
        for (a_full, ctag) in [(false, "0"), (true, "u(1)")] {
            let expected = if collapses(a_full, bc, true) { Expected::Discrepancy } else { Expected::Spherical };
            let note = Some(if expected == Expected::Discrepancy {
                "factor order as displayed; trace condition removes every element acting on n_{1,0}^perp".to_string()
            } else {
                "factor order as displayed: c on the first coordinate, u(1) as lambda".to_string()
            });
            b.push("s(c+b_1+u(1))+a+n_{1,0}", vec![p("b", bc.tag()), p("c", ctag)], expected, Provenance::Paper, Meta { symmetric: false, note }, move |alg| {
                let a = if a_full { u_basis(1) } else { vec![] };
                let parts = MParts { a, real_b: vec![], c_block: pick(&u_basis(rest), bc), lambda: true, k: 1, l: 0 };
                nonreductive_with(alg, n, &parts, true)
            });
        }
    }
    if n >= 3 {
        b.push("N_m(n_{1,1})+a+n_{1,1}", vec![], Expected::NotSpherical, Provenance::Derived, Meta::default(), move |alg| {
            let nkl = normal_form(alg, &NormalFormSpec::n_kl(n, 1, 1))?;
            let norm = crate::subalgebra_toolkit::normalizer_in(alg, alg.m(), &nkl);
            Ok(sum_all(alg.dim(), &[&norm, alg.a(), &nkl]))
        });
        b.push("a+n_{0,2}", vec![], Expected::NotSpherical, Provenance::Derived, Meta::default(), move |alg| {
            let parts = MParts { a: vec![], real_b: vec![], c_block: vec![], lambda: false, k: 0, l: 2 };
            nonreductive_with(alg, n, &parts, true)
        });
    }
    b.push("N_m(n_{1,0})+n_{1,0}", vec![], Expected::NotSpherical, Provenance::Derived, Meta::default(), move |alg| {
        let nkl = normal_form(alg, &NormalFormSpec::n_kl(n, 1, 0))?;
        let norm = crate::subalgebra_toolkit::normalizer_in(alg, alg.m(), &nkl);
        Ok(sum_all(alg.dim(), &[&norm, &nkl]))
    });
}

/// With `k = 1` the only motion of `n_{1,0}^perp` comes from `A` and `lambda`; after the trace
/// condition one survives iff some trace can be balanced.
fn collapses(a_has_trace: bool, b: FreeChoice, lambda: bool) -> bool {
    let b_has_trace = b != FreeChoice::Zero;
    let sources = [a_has_trace, lambda].iter().filter(|x| **x).count();
    match sources {
        0 => true,
        1 => !b_has_trace && !(a_has_trace && lambda),
        _ => false,
    }
}
