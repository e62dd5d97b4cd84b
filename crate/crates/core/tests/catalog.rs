use num_traits::{One, Zero};

use rankone::catalog::embeddings::{flatten, su4_to_so8, sp2_in_su4, spin9_gammas};
use rankone::catalog::*;
use rankone::exact_linalg::{frac, int, MatrixQ, Scalar, SparseVec, Subspace};
use rankone::lie_ambient::octonion::{lambda_basis, lambda_table_image, so7_coords, so7_matrix};
use rankone::lie_ambient::{construct_algebra, f4_model, AlgebraFamily, Quaternion, F4_GALPHA_START};
use rankone::sphericity_core::{restrict_action, spherical, transitive_on_spheres, Outcome, DEFAULT_SEED};
use rankone::subalgebra_toolkit::normalizer_in;

fn flat_span(size: usize, mats: &[MatrixQ]) -> Subspace {
    let v: Vec<SparseVec> = mats.iter().map(flatten).collect();
    Subspace::span(size * size, &v)
}

fn transitive(gens: &[MatrixQ], dim: usize) -> bool {
    let act = rankone::sphericity_core::LinearAction::from_operators(gens.to_vec(), MatrixQ::identity(dim)).unwrap();
    transitive_on_spheres(&act, DEFAULT_SEED).unwrap().transitive
}

#[test]
fn embeddings_are_subalgebras_of_expected_dimension() {
    let cases = [
        (EmbeddingName::SoN, 5, 10),
        (EmbeddingName::SuInSo, 3, 8),
        (EmbeddingName::UInSo, 3, 9),
        (EmbeddingName::SpInSo, 2, 10),
        (EmbeddingName::SpS1InSo, 2, 11),
        (EmbeddingName::Su4InSo8, 0, 15),
        (EmbeddingName::Sp2InSu4, 0, 10),
        (EmbeddingName::Spin7InSo8, 0, 21),
        (EmbeddingName::G2InSo7, 0, 14),
        (EmbeddingName::Spin9InSo16, 0, 36),
    ];
    for (name, n, dim) in cases {
        let e = make_embedding(name, n, FreeChoice::Zero).unwrap();
        assert_eq!(e.dim(), dim, "{name:?}");
        assert!(e.is_subalgebra(), "{name:?}");
    }
    for choice in FreeChoice::ALL {
        for name in [EmbeddingName::Sp1xL2InSo4, EmbeddingName::L2xSp1InSo4] {
            assert!(make_embedding(name, 0, choice).unwrap().is_subalgebra());
        }
    }
}

#[test]
fn spin9_gammas_anticommute() {
    let g = spin9_gammas().unwrap();
    assert_eq!(g.len(), 9);
    let two = MatrixQ::identity(16).scale(&int(2));
    for (i, a) in g.iter().enumerate() {
        assert_eq!(*a, a.transpose());
        for (j, b) in g.iter().enumerate() {
            let anti = a.mul(b).add(&b.mul(a));
            if i == j {
                assert_eq!(anti, two);
            } else {
                assert!(anti.is_zero());
            }
        }
    }
}

#[test]
fn g2_is_the_stabilizer_of_e0() {
    let g2 = make_embedding(EmbeddingName::G2InSo7, 0, FreeChoice::Zero).unwrap();
    assert_eq!(21 - g2.dim(), 7);
}

#[test]
fn onishchik_o7_sp3_o4() {
    let labels = |g, n| onishchik_entries(g, n).unwrap().into_iter().map(|e| e.label).collect::<Vec<_>>();
    assert_eq!(labels(ClassicalGroup::O, 7), ["SO(7)", "G2"]);
    assert!(labels(ClassicalGroup::Sp, 3).is_empty());
    let o4 = labels(ClassicalGroup::O, 4);
    assert_eq!(o4.len(), 7);
    assert_eq!(o4[0], "SO(4)");
    assert_eq!(o4.iter().filter(|l| l.starts_with("p(Sp(1)xL2)")).count(), 3);
    assert_eq!(o4.iter().filter(|l| l.starts_with("p(L2xSp(1))")).count(), 3);
}

#[test]
fn onishchik_rows_are_transitive_and_negatives_are_not() {
    for (group, sizes) in [(ClassicalGroup::O, 2..=16), (ClassicalGroup::U, 2..=6)] {
        for n in sizes {
            for e in onishchik_entries(group, n).unwrap() {
                assert!(onishchik::all_skew(&e.generators), "{}", e.label);
                assert!(transitive(&e.generators, e.real_dim()), "{} at n={n}", e.label);
            }
        }
    }
    for e in onishchik_negatives() {
        assert!(!transitive(&e.generators, e.real_dim()), "{}", e.label);
    }
}

#[test]
fn normal_form_dimensions() {
    let so5 = construct_algebra(AlgebraFamily::So(5)).unwrap();
    assert_eq!(make_normal_form(&so5, &NormalFormSpec::q_k(5, 2)).unwrap().dim(), 3);
    let su4 = construct_algebra(AlgebraFamily::Su(4)).unwrap();
    assert_eq!(make_normal_form(&su4, &NormalFormSpec::n_kl(4, 0, 2)).unwrap().dim(), 5);
    let sp2 = construct_algebra(AlgebraFamily::Sp(2)).unwrap();
    let i = Quaternion::from_ints(0, 1, 0, 0);
    let spec = NormalFormSpec::q_klmp(2, 0, 0, 2, 0, vec![i.clone(), i]);
    assert_eq!(make_normal_form(&sp2, &spec).unwrap().dim(), 4);
    assert_eq!(spec.expected_dim(), 4);
}

#[test]
fn invalid_normal_form_parameters_are_rejected() {
    let so5 = construct_algebra(AlgebraFamily::So(5)).unwrap();
    assert!(make_normal_form(&so5, &NormalFormSpec::q_k(5, 6)).is_err());
    let sp2 = construct_algebra(AlgebraFamily::Sp(2)).unwrap();
    let not_unit = Quaternion::from_ints(0, 1, 1, 0);
    assert!(make_normal_form(&sp2, &NormalFormSpec::q_klmp(2, 0, 0, 1, 0, vec![not_unit])).is_err());
    let real = Quaternion::one();
    assert!(make_normal_form(&sp2, &NormalFormSpec::q_klmp(2, 0, 0, 1, 0, vec![real])).is_err());
}

#[test]
fn su_detector_reproduces_k_l() {
    for n in 1..=4 {
        let alg = construct_algebra(AlgebraFamily::Su(n)).unwrap();
        for k in 0..=n {
            for l in 0..=(n - k) {
                let q = make_normal_form(&alg, &NormalFormSpec::q_kl(n, k, l)).unwrap();
                let expected = ((n - k - l) * 2 + l, n - k - l);
                assert_eq!(su_complex_invariants(&alg, &q).unwrap(), expected, "n={n} k={k} l={l}");
                assert_eq!(q.dim(), expected.0);
            }
        }
    }
}

fn same_line(a: &Quaternion, b: &Quaternion) -> bool {
    let (x, y) = (a.coords(), b.coords());
    let ratio = (0..4).find(|&t| !y[t].is_zero()).map(|t| &x[t] / &y[t]);
    match ratio {
        Some(r) => (0..4).all(|t| x[t] == &r * &y[t]),
        None => false,
    }
}

#[test]
fn sp_detector_reproduces_klmp_and_xi() {
    let xis = [
        Quaternion::from_ints(0, 1, 0, 0),
        Quaternion::from_ints(0, 0, 1, 0),
        Quaternion::imaginary(frac(3, 5), frac(4, 5), Scalar::zero()),
        Quaternion::imaginary(Scalar::zero(), frac(-5, 13), frac(12, 13)),
    ];
    let alg = construct_algebra(AlgebraFamily::Sp(3)).unwrap();
    for k in 0..=3usize {
        for l in 0..=3 - k {
            for m in 0..=3 - k - l {
                for p in 0..=3 - k - l - m {
                    let xi: Vec<Quaternion> = (0..m).map(|j| xis[(k + l + j) % xis.len()].clone()).collect();
                    let spec = NormalFormSpec::q_klmp(3, k, l, m, p, xi.clone());
                    let q = make_normal_form(&alg, &spec).unwrap();
                    assert_eq!(q.dim(), spec.expected_dim());
                    let pat = sp_slot_pattern(&alg, &q).unwrap();
                    assert_eq!(pat.klmp(), (k, l, m, p));
                    assert_eq!(pat.xi_lines.len(), m);
                    for (got, want) in pat.xi_lines.iter().zip(&xi) {
                        assert!(same_line(got, want), "{got:?} vs {want:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn table_rows_named_in_the_catalog_exist() {
    let has = |t: TheoremId, n: usize, row: &str| table_cases(t, n).unwrap().iter().any(|c| c.row == row);
    let g2 = table_cases(TheoremId::T5_2, 7).unwrap();
    assert!(g2.iter().any(|c| c.row == "g2+so(n-k,1)" && c.params.contains(&("k".into(), "7".into()))));
    assert!(has(TheoremId::T7_4, 2, "sp(1)+b_1+a+n_{0,1,0,0}"));
    let f4 = table_cases(TheoremId::T8_5, 0).unwrap();
    let m_prime: Vec<_> = f4.iter().filter(|c| c.row.starts_with("m'+a+n_")).collect();
    assert_eq!(m_prime.len(), 3);
}

#[test]
fn theorem_ids_round_trip() {
    for t in TheoremId::ALL {
        assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
    }
    assert_eq!("8.4-facts".parse::<TheoremId>().unwrap(), TheoremId::Facts8_1);
    assert!("9.9".parse::<TheoremId>().is_err());
}

fn sizes(t: TheoremId) -> Vec<usize> {
    match t {
        TheoremId::T5_2 | TheoremId::T5_3 => vec![4, 5, 6],
        TheoremId::T6_2 | TheoremId::T6_3 => vec![2, 3],
        TheoremId::T7_3 | TheoremId::T7_4 => vec![2],
        TheoremId::Facts8_1 | TheoremId::T8_5 => vec![0],
    }
}

#[test]
fn every_case_builds_and_splits() {
    for t in TheoremId::ALL {
        for n in sizes(t) {
            let cases = table_cases(t, n).unwrap();
            assert!(cases.iter().any(|c| c.expected == Expected::NotSpherical), "{t} n={n} lacks negatives");
            let Some(family) = t.family(n) else {
                for c in &cases {
                    assert!(!c.action_generators().unwrap().is_empty());
                }
                continue;
            };
            let alg = construct_algebra(family).unwrap();
            for c in &cases {
                let cand = c.candidate(&alg).unwrap_or_else(|e| panic!("{}: {e}", c.case_id));
                assert!(cand.split.is_some(), "{}", c.case_id);
            }
        }
    }
}

#[test]
fn spherical_nonreductive_cases_contain_g2alpha() {
    for t in [TheoremId::T5_3, TheoremId::T6_3, TheoremId::T7_4, TheoremId::T8_5] {
        for n in sizes(t) {
            let alg = construct_algebra(t.family(n).unwrap()).unwrap();
            for c in table_cases(t, n).unwrap() {
                let v = spherical(&c.candidate(&alg).unwrap(), DEFAULT_SEED).unwrap();
                if v.outcome == Outcome::Spherical && v.complement_dim >= 2 {
                    assert_eq!(v.contains_g2alpha, Some(true), "{}", c.case_id);
                }
            }
        }
    }
}

/// The printed 7x7 normalizer with the sign of `v` in rows 6 and 7 given by `v67`.
fn display7(i: i64, m: i64, n: i64, t: i64, u: i64, v: i64, v67: i64) -> MatrixQ {
    let rows = [
        [0, -t, -u, 0, 0, i, m],
        [t, 0, v, 0, -i, 0, n],
        [u, -v, 0, 0, -m, -n, 0],
        [0, 0, 0, 0, 0, 0, 0],
        [0, i, m, 0, 0, -t, -u],
        [-i, 0, n, 0, t, 0, -v67 * v],
        [-m, -n, 0, 0, u, v67 * v, 0],
    ];
    from_rows(&rows)
}

fn display8(i: i64, m: i64, n: i64, t: i64, u: i64, v: i64) -> MatrixQ {
    let rows = [
        [0, -t, -u, n, 0, 0, 0, 0],
        [t, 0, -v, -m, 0, 0, 0, 0],
        [u, v, 0, i, 0, 0, 0, 0],
        [-n, m, -i, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, -t, -u, n],
        [0, 0, 0, 0, t, 0, -v, -m],
        [0, 0, 0, 0, u, v, 0, i],
        [0, 0, 0, 0, -n, m, -i, 0],
    ];
    from_rows(&rows)
}

fn from_rows<const N: usize>(rows: &[[i64; N]; N]) -> MatrixQ {
    let mut out = MatrixQ::zeros(N, N);
    for (r, row) in rows.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            out.set(r, c, int(*x));
        }
    }
    out
}

fn unit_params() -> [[i64; 6]; 6] {
    let mut out = [[0; 6]; 6];
    for (k, row) in out.iter_mut().enumerate() {
        row[k] = 1;
    }
    out
}

#[test]
fn normalizer_of_n4_matches_both_displays() {
    let alg = f4_model().unwrap();
    let n4 = make_normal_form(&alg, &NormalFormSpec::n_k(AlgebraFamily::F4Model, 4)).unwrap();
    let norm = normalizer_in(&alg, alg.m(), &n4);
    assert_eq!(norm.dim(), 6);
    let as7: Vec<MatrixQ> = norm
        .basis()
        .iter()
        .map(|x| so7_matrix(&(0..21).map(|c| x.get(c)).collect::<Vec<_>>()))
        .collect();
    let printed: Vec<MatrixQ> = unit_params().iter().map(|p| display7(p[0], p[1], p[2], p[3], p[4], p[5], 1)).collect();
    let printed_span = flat_span(7, &printed);
    let closed = printed.iter().all(|a| printed.iter().all(|b| printed_span.contains(&flatten(&a.mul(b).sub(&b.mul(a))))));
    assert!(!closed, "the printed 7x7 pattern is not bracket closed as shown");
    let shown7: Vec<MatrixQ> = unit_params().iter().map(|p| display7(p[0], p[1], p[2], p[3], p[4], p[5], -1)).collect();
    assert_eq!(flat_span(7, &as7), flat_span(7, &shown7));
    let as8: Vec<MatrixQ> = as7.iter().map(|m| lambda_table_image(&so7_coords(m))).collect();
    let shown8: Vec<MatrixQ> = unit_params().iter().map(|p| display8(p[0], p[1], p[2], p[3], p[4], p[5])).collect();
    assert_eq!(flat_span(8, &as8), flat_span(8, &shown8));
}

fn so4c_display(c: &Scalar, params: [i64; 6]) -> MatrixQ {
    let [h, l, p, r, s, v] = params.map(int);
    let z = Scalar::zero;
    let rows: [[Scalar; 8]; 8] = [
        [z(), &s + &r * c, -&r + &s * c, &p * c, p.clone(), z(), z(), z()],
        [-&s - &r * c, z(), -&v, &l * c, l.clone(), z(), z(), z()],
        [&r - &s * c, v.clone(), z(), -(&h * c), -&h, z(), z(), z()],
        [-(&p * c), -(&l * c), &h * c, z(), z(), -&r, -&s, -&p],
        [-&p, -&l, h.clone(), z(), z(), &r * c, &s * c, &p * c],
        [z(), z(), z(), r.clone(), -(&r * c), z(), -&v, &h + &l * c],
        [z(), z(), z(), s.clone(), -(&s * c), v.clone(), z(), -(&h * c) + &l],
        [z(), z(), z(), p.clone(), -(&p * c), -&h - &l * c, &h * c - &l, z()],
    ];
    let mut out = MatrixQ::zeros(8, 8);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            out.set(i, j, x);
        }
    }
    out
}

#[test]
fn so4c_matches_display_and_moves_w_onto_a_tangent_space() {
    let alg = f4_model().unwrap();
    let g_alpha = Subspace::coordinate(alg.dim(), F4_GALPHA_START..F4_GALPHA_START + 8);
    for c in [int(1), int(0), int(2), frac(3, 4), frac(-4, 3)] {
        let so4c = so4c_in_f4model(&alg, &c).unwrap();
        assert_eq!(so4c.dim(), 6);
        let act = restrict_action(&alg, &so4c, &g_alpha).unwrap();
        let shown: Vec<MatrixQ> = unit_params().iter().map(|p| so4c_display(&c, *p)).collect();
        assert_eq!(flat_span(8, &act.operators), flat_span(8, &shown), "c = {c}");
        let mut w = vec![Scalar::zero(); 8];
        w[3] = Scalar::one();
        w[4] = -c.clone();
        assert_eq!(act.rank_at(&w), 3, "c = {c}");
    }
}

#[test]
fn sp2_is_not_inside_the_spin7_image() {
    let sp2: Vec<MatrixQ> = sp2_in_su4().iter().map(su4_to_so8).collect();
    let sp2_span = flat_span(8, &sp2);
    assert_eq!(sp2_span.dim(), 10);
    let image = flat_span(8, &(0..21).map(lambda_basis).collect::<Vec<_>>());
    assert_eq!(image.dim(), 21);
    assert!(sp2_span.intersection(&image).unwrap().dim() < 10);
}
