//! Rows for sp(n,1). The quaternionic coordinates are `0..n`; `m` acts on `1..n` together
//! with the coupled `sp(1)` factor.

use num_traits::{One, Zero};

use crate::exact_linalg::{frac, GaussianScalar, Scalar, Subspace};
use crate::lie_ambient::{AmbientAlgebra, CMatrix, QuatMatrix, Quaternion};
use crate::subalgebra_toolkit::{centralizer_in, derived_space, normalizer_in};

use super::super::elements::{sp_k_complex, sp_k_quaternionic, sp_k_real, sp_k_sp1};
use super::super::embeddings::{so_basis, sp_basis, su_basis, u_basis, FreeChoice};
use super::super::{CatalogError, NormalFormSpec};
use super::{choices, closure_of, mats, normal_form, p, pick, pick_space, sum_all, Builder, Expected, Meta, Provenance};

fn quat_block(n: usize, size: usize, offset: usize) -> Vec<CMatrix> {
    sp_basis(size).iter().map(|q| sp_k_quaternionic(n, q, offset)).collect()
}

fn sp1_factor(n: usize) -> Vec<CMatrix> {
    let one = Scalar::one();
    let zero = Scalar::zero();
    vec![
        sp_k_sp1(n, &one, &GaussianScalar::zero()),
        sp_k_sp1(n, &zero, &GaussianScalar::from_ints(1, 0)),
        sp_k_sp1(n, &zero, &GaussianScalar::from_ints(0, 1)),
    ]
}

fn circle_at(n: usize, offset: usize) -> CMatrix {
    sp_k_quaternionic(n, &QuatMatrix::from_quaternion(&Quaternion::from_ints(0, 1, 0, 0)), offset)
}

fn xi_samples() -> Vec<(&'static str, Quaternion)> {
    vec![
        ("i", Quaternion::from_ints(0, 1, 0, 0)),
        ("j", Quaternion::from_ints(0, 0, 1, 0)),
        ("3i/5+4j/5", Quaternion::imaginary(frac(3, 5), frac(4, 5), Scalar::zero())),
    ]
}

fn k_of(alg: &AmbientAlgebra) -> &Subspace {
    alg.k().expect("sp(n,1) has a Cartan decomposition")
}

fn normalizer_plus(alg: &AmbientAlgebra, spec: &NormalFormSpec) -> Result<Subspace, CatalogError> {
    let q = normal_form(alg, spec)?;
    let norm = normalizer_in(alg, k_of(alg), &q);
    Ok(sum_all(alg.dim(), &[&norm, &q]))
}

pub(super) fn reductive(b: &mut Builder, n: usize) {
    let meta = |symmetric| Meta { symmetric, note: None };
    b.push("sp(n)", vec![], Expected::Spherical, Provenance::Paper, meta(false), move |alg| mats(alg, &quat_block(n, n, 0)));
    b.push("sp(n)+s1", vec![], Expected::Spherical, Provenance::Paper, meta(false), move |alg| {
        let mut gens = quat_block(n, n, 0);
        gens.push(sp_k_sp1(n, &Scalar::one(), &GaussianScalar::zero()));
        mats(alg, &gens)
    });
    b.push("sp(n)+sp(1)", vec![], Expected::Spherical, Provenance::Paper, meta(true), |alg| Ok(k_of(alg).clone()));
    b.push("s1+sp(n-1,1)", vec![], Expected::Spherical, Provenance::Paper, meta(false), move |alg| {
        let circle = mats(alg, &[circle_at(n, 0)])?;
        let rest = closure_of(alg, &NormalFormSpec::q_klmp(n, 1, 0, 0, 0, vec![]))?;
        Ok(sum_all(alg.dim(), &[&circle, &rest]))
    });
    for k in 0..n {
        b.push("sp(k)+sp(n-k,1)", vec![p("k", k)], Expected::Spherical, Provenance::Paper, meta(true), move |alg| {
            let compact = if k == 0 { Subspace::zero(alg.dim()) } else { mats(alg, &quat_block(n, k, 0))? };
            let rest = closure_of(alg, &NormalFormSpec::q_klmp(n, k, 0, 0, 0, vec![]))?;
            Ok(sum_all(alg.dim(), &[&compact, &rest]))
        });
    }
    for (tag, xi) in xi_samples() {
        let xi_all = vec![xi; n];
        let spec = NormalFormSpec::q_klmp(n, 0, 0, n, 0, xi_all);
        let s = spec.clone();
        b.push("su(n,1)", vec![p("xi", tag)], Expected::Spherical, Provenance::Paper, meta(false), move |alg| closure_of(alg, &s));
        b.push("su(n,1)+s1", vec![p("xi", tag)], Expected::Spherical, Provenance::Paper, meta(true), move |alg| {
            let out = normalizer_plus(alg, &spec)?;
            if out.dim() != (n + 1) * (n + 1) {
                return Err(CatalogError::Construction(format!("u(n,1) came out with dimension {}", out.dim())));
            }
            Ok(out)
        });
    }
    b.push("N_k(q_{0,n,0,0})+q_{0,n,0,0}", vec![], Expected::NotSpherical, Provenance::Paper, meta(false), move |alg| {
        normalizer_plus(alg, &NormalFormSpec::q_klmp(n, 0, n, 0, 0, vec![]))
    });
    for k in 1..n {
        b.push("N_k(q_{k,n-k,0,0})+q_{k,n-k,0,0}", vec![p("k", k)], Expected::NotSpherical, Provenance::Derived, meta(false), move |alg| {
            normalizer_plus(alg, &NormalFormSpec::q_klmp(n, k, n - k, 0, 0, vec![]))
        });
    }
    b.push("sp(1)+sp(n-1)+sp(1)", vec![], Expected::NotSpherical, Provenance::Derived, meta(false), move |alg| {
        let mut gens = quat_block(n, 1, 0);
        gens.extend(quat_block(n, n - 1, 1));
        gens.extend(sp1_factor(n));
        mats(alg, &gens)
    });
}

/// `compact + a + n_{k,l,m,p}`.
fn over(alg: &AmbientAlgebra, compact: &Subspace, spec: &NormalFormSpec, with_a: bool) -> Result<Subspace, CatalogError> {
    let nf = normal_form(alg, spec)?;
    let a = if with_a { alg.a().clone() } else { Subspace::zero(alg.dim()) };
    Ok(sum_all(alg.dim(), &[compact, &a, &nf]))
}

/// The centralizer of the `sp(n-1)` block in `m`: the coupled `sp(1)`.
fn m_sp1(alg: &AmbientAlgebra, n: usize) -> Result<Subspace, CatalogError> {
    let block = mats(alg, &quat_block(n, n - 1, 1))?;
    Ok(centralizer_in(alg, alg.m(), &block))
}

fn block_span(alg: &AmbientAlgebra, gens: &[CMatrix]) -> Result<Subspace, CatalogError> {
    if gens.is_empty() {
        Ok(Subspace::zero(alg.dim()))
    } else {
        mats(alg, gens)
    }
}

fn xi_i(count: usize) -> Vec<Quaternion> {
    vec![Quaternion::from_ints(0, 1, 0, 0); count]
}

pub(super) fn nonreductive(b: &mut Builder, n: usize) {
    super::push_lh_plus_n(b);
    let sp_len = |size: usize| sp_basis(size).len();
    for k in 1..n {
        let rest = n - 1 - k;
        for bc in choices(sp_len(rest)) {
            for cc in FreeChoice::ALL {
                let params = vec![p("k", k), p("b", bc.tag()), p("c", cc.tag())];
                b.push("sp(k)+b_k+c+a+n_{k,0,0,0}", params, Expected::Spherical, Provenance::Paper, Meta::default(), move |alg| {
                    let mut gens = quat_block(n, k, 1);
                    gens.extend(pick(&quat_block(n, rest, k + 1), bc));
                    let c = pick_space(&m_sp1(alg, n)?, cc);
                    let compact = sum_all(alg.dim(), &[&mats(alg, &gens)?, &c]);
                    over(alg, &compact, &NormalFormSpec::n_klmp(n, k, 0, 0, 0, vec![]), true)
                });
            }
        }
    }
    let rest = n - 2;
    for cc in choices(sp_len(1)) {
        for bc in choices(sp_len(rest)) {
            let params = vec![p("c", cc.tag()), p("b", bc.tag())];
            b.push("c+b_1+sp(1)+a+n_{1,0,0,0}", params, Expected::Spherical, Provenance::Paper, Meta::default(), move |alg| {
                let mut gens = pick(&quat_block(n, 1, 1), cc);
                gens.extend(pick(&quat_block(n, rest, 2), bc));
                let compact = sum_all(alg.dim(), &[&block_span(alg, &gens)?, &m_sp1(alg, n)?]);
                over(alg, &compact, &NormalFormSpec::n_klmp(n, 1, 0, 0, 0, vec![]), true)
            });
        }
    }
    for bc in choices(sp_len(rest)) {
        b.push("sp(1)+b_1+a+n_{0,1,0,0}", vec![p("b", bc.tag())], Expected::Spherical, Provenance::Paper, Meta::default(), move |alg| {
            let spec = NormalFormSpec::n_klmp(n, 0, 1, 0, 0, vec![]);
            let nf = normal_form(alg, &spec)?;
            let norm = normalizer_in(alg, alg.m(), &nf);
            let block = block_span(alg, &quat_block(n, rest, 2))?;
            let diagonal = derived_space(alg, &centralizer_in(alg, &norm, &block));
            let b_part = block_span(alg, &pick(&quat_block(n, rest, 2), bc))?;
            over(alg, &sum_all(alg.dim(), &[&diagonal, &b_part]), &spec, true)
        });
    }
    for m in 1..n {
        let rest = n - 1 - m;
        for (label, unitary) in [("u(m)", true), ("su(m)", false)] {
            for bc in choices(sp_len(rest)) {
                for (with_d, dtag) in [(false, "0"), (true, "s1")] {
                    let collapse = m == 1 && !unitary && !with_d;
                    let expected = if collapse { Expected::Discrepancy } else { Expected::Spherical };
                    let note = collapse.then(|| "su(1) = 0 and d = 0 leave the complement without motion".to_string());
                    let row = format!("{label}+b_m+d+a+n_{{0,0,m,0}}");
                    let params = vec![p("m", m), p("b", bc.tag()), p("d", dtag)];
                    b.push(&row, params, expected, Provenance::Paper, Meta { symmetric: false, note }, move |alg| {
                        let base = if unitary { u_basis(m) } else { su_basis(m) };
                        let mut gens: Vec<CMatrix> = base.iter().map(|x| sp_k_complex(n, x, 1)).collect();
                        gens.extend(pick(&quat_block(n, rest, m + 1), bc));
                        let mut compact = block_span(alg, &gens)?;
                        if with_d {
                            let circle = mats(alg, &[sp_k_sp1(n, &Scalar::one(), &GaussianScalar::zero())])?;
                            let d = centralizer_in(alg, &m_sp1(alg, n)?, &circle);
                            compact = sum_all(alg.dim(), &[&compact, &d]);
                        }
                        over(alg, &compact, &NormalFormSpec::n_klmp(n, 0, 0, m, 0, xi_i(m)), true)
                    });
                }
            }
        }
    }
    for pp in 1..n {
        let rest = n - 1 - pp;
        for bc in choices(sp_len(rest)) {
            for cc in FreeChoice::ALL {
                let params = vec![p("p", pp), p("b", bc.tag()), p("c", cc.tag())];
                b.push("so(p)+b_p+c+a+n_{0,0,0,p}", params, Expected::Spherical, Provenance::Paper, Meta::default(), move |alg| {
                    let spec = NormalFormSpec::n_klmp(n, 0, 0, 0, pp, vec![]);
                    let nf = normal_form(alg, &spec)?;
                    let so_p = block_span(alg, &so_basis(pp).iter().map(|x| sp_k_real(n, x, 1)).collect::<Vec<_>>())?;
                    let b_full = block_span(alg, &quat_block(n, rest, pp + 1))?;
                    let norm = normalizer_in(alg, alg.m(), &nf);
                    let fixed = centralizer_in(alg, &norm, &sum_all(alg.dim(), &[&so_p, &b_full]));
                    let c = pick_space(&derived_space(alg, &fixed), cc);
                    let b_part = block_span(alg, &pick(&quat_block(n, rest, pp + 1), bc))?;
                    over(alg, &sum_all(alg.dim(), &[&so_p, &b_part, &c]), &spec, true)
                });
            }
        }
    }
    let normalizer_row = |b: &mut Builder, row: &str, k: usize, l: usize, provenance: Provenance| {
        b.push(row, vec![], Expected::NotSpherical, provenance, Meta::default(), move |alg| {
            let spec = NormalFormSpec::n_klmp(n, k, l, 0, 0, vec![]);
            let nf = normal_form(alg, &spec)?;
            let norm = normalizer_in(alg, alg.m(), &nf);
            over(alg, &norm, &spec, true)
        });
    };
    if n == 3 {
        normalizer_row(b, "N_m(n_{0,2,0,0})+a+n_{0,2,0,0}", 0, 2, Provenance::Paper);
        normalizer_row(b, "N_m(n_{1,1,0,0})+a+n_{1,1,0,0}", 1, 1, Provenance::Derived);
    }
    b.push("N_m(n_{1,0,0,0})+n_{1,0,0,0}", vec![], Expected::NotSpherical, Provenance::Derived, Meta::default(), move |alg| {
        let spec = NormalFormSpec::n_klmp(n, 1, 0, 0, 0, vec![]);
        let norm = normalizer_in(alg, alg.m(), &normal_form(alg, &spec)?);
        over(alg, &norm, &spec, false)
    });
    b.push("b_1+a+n_{1,0,0,0}", vec![], Expected::NotSpherical, Provenance::Derived, Meta::default(), move |alg| {
        let compact = block_span(alg, &quat_block(n, n - 2, 2))?;
        over(alg, &compact, &NormalFormSpec::n_klmp(n, 1, 0, 0, 0, vec![]), true)
    });
}
