use rankone::catalog::elements::{sp_element, sp_k_sp1, SpElement};
use rankone::catalog::{make_normal_form, NormalFormSpec};
use num_traits::Zero;
use rankone::exact_linalg::{frac, int, GaussianScalar, Subspace};
use rankone::lie_ambient::{construct_algebra, f4_model, AlgebraFamily, AmbientAlgebra, CMatrix, Quaternion};
use rankone::subalgebra_toolkit::{
    centralizer_in, derived_space, is_subalgebra, lie_closure, normalizer_in, split_parabolic, split_reductive,
    CandidateSubalgebra, Split, ToolkitError,
};

fn so(n: usize) -> AmbientAlgebra {
    construct_algebra(AlgebraFamily::So(n)).unwrap()
}

fn su(n: usize) -> AmbientAlgebra {
    construct_algebra(AlgebraFamily::Su(n)).unwrap()
}

fn sp(n: usize) -> AmbientAlgebra {
    construct_algebra(AlgebraFamily::Sp(n)).unwrap()
}

fn sum(a: &Subspace, b: &Subspace) -> Subspace {
    a.sum(b).unwrap()
}

fn rot(size: usize, i: usize, j: usize) -> CMatrix {
    CMatrix::from_int_entries(size, &[(i, j, 1, 0), (j, i, -1, 0)])
}

/// Real antisymmetric matrices supported on `idx x idx`.
fn so_block(size: usize, idx: &[usize]) -> Vec<CMatrix> {
    let mut out = Vec::new();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            out.push(rot(size, i, j));
        }
    }
    out
}

// ---------------------------------------------------------------- so(n,1)

fn lemma51_derived(n: usize, k: usize) -> Vec<CMatrix> {
    so_block(n + 1, &(k..n).collect::<Vec<_>>())
}

fn lemma51_normalizer(n: usize, k: usize) -> Vec<CMatrix> {
    let mut out = so_block(n + 1, &(0..k).collect::<Vec<_>>());
    out.extend(lemma51_derived(n, k));
    out
}

#[test]
fn so_derived_and_normalizer_of_q_k_match_block_spaces() {
    for n in 3..=8 {
        let g = so(n);
        let k_alg = g.k().unwrap();
        for k in 0..=n {
            let q = make_normal_form(&g, &NormalFormSpec::q_k(n, k)).unwrap();
            let derived = derived_space(&g, &q);
            assert_eq!(derived, g.span_of_matrices(&lemma51_derived(n, k)).unwrap(), "n={n} k={k}");
            let norm = normalizer_in(&g, k_alg, &q);
            assert_eq!(norm, g.span_of_matrices(&lemma51_normalizer(n, k)).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn so_examples() {
    let g = so(5);
    let q2 = make_normal_form(&g, &NormalFormSpec::q_k(5, 2)).unwrap();
    assert_eq!(q2.dim(), 3);
    assert_eq!(derived_space(&g, &q2).dim(), 3);
    assert_eq!(normalizer_in(&g, g.k().unwrap(), &q2).dim(), 4);

    let line = Subspace::span(g.dim(), &q2.basis()[..1]);
    assert!(derived_space(&g, &line).is_zero());

    let q0 = make_normal_form(&g, &NormalFormSpec::q_k(5, 0)).unwrap();
    assert_eq!(lie_closure(&g, &q0).dim(), 15);
    assert_eq!(lie_closure(&g, &q0), g.full());

    let full = g.full();
    assert_eq!(normalizer_in(&g, &full, &full), full);
    assert!(centralizer_in(&g, &full, &full).is_zero());

    let a = g.a().clone();
    assert_eq!(centralizer_in(&g, g.k().unwrap(), &a).dim(), 6);
    assert_eq!(&centralizer_in(&g, g.k().unwrap(), &a), g.m());
}

#[test]
fn su_centralizer_of_a() {
    for n in 2..=5 {
        let g = su(n);
        let z = centralizer_in(&g, g.k().unwrap(), g.a());
        assert_eq!(&z, g.m());
        assert_eq!(z.dim(), (n - 1) * (n - 1));
    }
}

#[test]
fn subalgebra_checks() {
    for n in 3..=6 {
        let g = so(n);
        for k in 0..n - 1 {
            let q = make_normal_form(&g, &NormalFormSpec::q_k(n, k)).unwrap();
            assert!(!is_subalgebra(&g, &q));
        }
        let line = make_normal_form(&g, &NormalFormSpec::q_k(n, n - 1)).unwrap();
        assert!(is_subalgebra(&g, &line));
        assert!(is_subalgebra(&g, g.k().unwrap()));
        let parabolic = sum(&sum(g.m(), g.a()), g.n_nil());
        assert!(is_subalgebra(&g, &parabolic));
    }
}

#[test]
fn closure_is_idempotent_and_monotone() {
    let g = su(3);
    let q = make_normal_form(&g, &NormalFormSpec::q_kl(3, 1, 1)).unwrap();
    let c = lie_closure(&g, &q);
    assert!(c.contains_space(&q));
    assert_eq!(lie_closure(&g, &c), c);
    let bigger = make_normal_form(&g, &NormalFormSpec::q_kl(3, 0, 1)).unwrap();
    assert!(lie_closure(&g, &bigger).contains_space(&c));
}

#[test]
fn reductive_split_examples() {
    let g = so(5);
    let q2 = make_normal_form(&g, &NormalFormSpec::q_k(5, 2)).unwrap();
    let so31 = lie_closure(&g, &q2);
    assert_eq!(so31.dim(), 6);
    let so2 = g.span_of_matrices(&[rot(6, 0, 1)]).unwrap();
    let h = sum(&so2, &so31);
    let split = split_reductive(&g, &h).unwrap();
    assert_eq!((split.k_h.dim(), split.p_h.dim()), (4, 3));

    let k = g.k().unwrap().clone();
    let split = split_reductive(&g, &k).unwrap();
    assert_eq!(split.k_h, k);
    assert!(split.p_h.is_zero());

    let an = sum(g.a(), g.n_nil());
    assert_eq!(split_reductive(&g, &an), Err(ToolkitError::NotThetaStable));

    // q_2 with only the so(2) factor breaks [p_H, p_H] in k_H.
    let bad = sum(&so2, &q2);
    assert_eq!(split_reductive(&g, &bad), Err(ToolkitError::ConstraintChainViolation));
}

#[test]
fn parabolic_split_examples() {
    let g = so(5);
    let mn = sum(&sum(g.m(), g.a()), g.n_nil());
    let s = split_parabolic(&g, &mn).unwrap();
    assert_eq!((s.m_h, s.a_h, s.n_h), (g.m().clone(), g.a().clone(), g.n_nil().clone()));

    let an = sum(g.a(), g.n_nil());
    let s = split_parabolic(&g, &an).unwrap();
    assert!(s.m_h.is_zero());
    assert_eq!(s.a_h.dim(), 1);
    assert_eq!(s.n_h, *g.n_nil());

    let n2 = make_normal_form(&g, &NormalFormSpec::n_k(AlgebraFamily::So(5), 2)).unwrap();
    let h = sum(g.a(), &n2);
    let s = split_parabolic(&g, &h).unwrap();
    assert_eq!((s.m_h.dim(), s.a_h.dim(), s.n_h.dim()), (0, 1, 2));

    let k = g.k().unwrap().clone();
    assert_eq!(split_parabolic(&g, &k), Err(ToolkitError::NotInNormalPosition));
}

#[test]
fn candidate_detects_split() {
    let g = so(4);
    let c = CandidateSubalgebra::new(&g, g.k().unwrap().clone()).unwrap().with_detected_split().unwrap();
    assert!(matches!(c.split, Some(Split::Reductive(_))));
    let an = sum(g.a(), g.n_nil());
    let c = CandidateSubalgebra::new(&g, an).unwrap().with_detected_split().unwrap();
    assert!(matches!(c.split, Some(Split::Parabolic(_))));
    let q = make_normal_form(&g, &NormalFormSpec::q_k(4, 1)).unwrap();
    assert_eq!(CandidateSubalgebra::new(&g, q).err(), Some(ToolkitError::NotASubalgebra));
    let other = so(3);
    assert_eq!(
        CandidateSubalgebra::new(&other, g.full()).err(),
        Some(ToolkitError::DimensionMismatch(g.dim(), other.dim()))
    );
}

#[test]
fn normalizer_contains_centralizer() {
    for n in 2..=4 {
        let g = su(n);
        let k = g.k().unwrap();
        for kk in 0..n {
            for l in 0..=(n - kk) {
                let q = make_normal_form(&g, &NormalFormSpec::q_kl(n, kk, l)).unwrap();
                let norm = normalizer_in(&g, k, &q);
                let cent = centralizer_in(&g, k, &q);
                assert!(norm.contains_space(&cent));
                assert!(is_subalgebra(&g, &norm));
                assert!(is_subalgebra(&g, &cent));
            }
        }
    }
}

// ---------------------------------------------------------------- su(n,1)

fn gi(re: i64, im: i64) -> GaussianScalar {
    GaussianScalar::from_ints(re, im)
}

fn herm_pair(size: usize, i: usize, j: usize) -> CMatrix {
    CMatrix::from_int_entries(size, &[(i, j, 0, 1), (j, i, 0, 1)])
}

/// Skew-hermitian matrices supported on `idx x idx` (all of u(|idx|)).
fn u_block(size: usize, idx: &[usize]) -> Vec<CMatrix> {
    let mut out = so_block(size, idx);
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            out.push(herm_pair(size, i, j));
        }
        out.push(CMatrix::from_int_entries(size, &[(i, i, 0, 1)]));
    }
    out
}

fn lemma61_derived(n: usize, k: usize, l: usize) -> Vec<CMatrix> {
    let s = n + 1;
    let ls: Vec<usize> = (k..k + l).collect();
    let cs: Vec<usize> = (k + l..n).collect();
    let mut out = so_block(s, &ls);
    for &i in &ls {
        for &j in &cs {
            out.push(rot(s, i, j));
            out.push(herm_pair(s, i, j));
        }
    }
    out.extend(so_block(s, &cs));
    for (a, &i) in cs.iter().enumerate() {
        for &j in &cs[a + 1..] {
            out.push(herm_pair(s, i, j));
        }
        out.push(CMatrix::from_int_entries(s, &[(i, i, 0, 1), (n, n, 0, -1)]));
    }
    out
}

fn lemma61_normalizer(n: usize, k: usize, l: usize) -> Vec<CMatrix> {
    let s = n + 1;
    let mut out = u_block(s, &(0..k).collect::<Vec<_>>());
    out.extend(so_block(s, &(k..k + l).collect::<Vec<_>>()));
    let mut ix = CMatrix::zero(s);
    for i in k..k + l {
        ix.set(i, i, gi(0, 1));
    }
    ix.set(n, n, gi(0, 1));
    out.push(ix);
    out.extend(u_block(s, &(k + l..n).collect::<Vec<_>>()));
    out
}

#[test]
fn su_derived_and_normalizer_of_q_kl_match_block_spaces() {
    for n in 2..=6 {
        let g = su(n);
        let k_alg = g.k().unwrap();
        for k in 0..=n {
            for l in 0..=(n - k) {
                let q = make_normal_form(&g, &NormalFormSpec::q_kl(n, k, l)).unwrap();
                assert_eq!(q.dim(), l + 2 * (n - k - l));
                let derived = derived_space(&g, &q);
                assert_eq!(derived, g.span_of_matrices(&lemma61_derived(n, k, l)).unwrap(), "n={n} k={k} l={l}");
                let norm = normalizer_in(&g, k_alg, &q);
                let displayed = g.meet_matrix_span(&lemma61_normalizer(n, k, l)).unwrap();
                assert_eq!(norm, displayed, "n={n} k={k} l={l}");
            }
        }
    }
}

#[test]
fn su_examples() {
    let g = su(3);
    let q = make_normal_form(&g, &NormalFormSpec::q_kl(3, 1, 0)).unwrap();
    assert_eq!(derived_space(&g, &q).dim(), 4);
    let g4 = su(4);
    assert_eq!(make_normal_form(&g4, &NormalFormSpec::n_kl(4, 0, 2)).unwrap().dim(), 5);
}

// ---------------------------------------------------------------- sp(n,1)

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Group {
    K,
    L,
    M,
    P,
    R,
}

fn groups(n: usize, k: usize, l: usize, m: usize, p: usize) -> Vec<Group> {
    (0..n)
        .map(|i| {
            if i < k {
                Group::K
            } else if i < k + l {
                Group::L
            } else if i < k + l + m {
                Group::M
            } else if i < k + l + m + p {
                Group::P
            } else {
                Group::R
            }
        })
        .collect()
}

fn sp_a(n: usize, entries: Vec<((usize, usize), GaussianScalar)>) -> CMatrix {
    sp_element(n, &SpElement { a: entries, ..Default::default() })
}

fn sp_b(n: usize, entries: Vec<((usize, usize), GaussianScalar)>) -> CMatrix {
    sp_element(n, &SpElement { b: entries, ..Default::default() })
}

/// Generators of skew-hermitian `A` at `(i, j)`/`(j, i)`, real only when `real`.
fn a_gens(n: usize, i: usize, j: usize, real: bool) -> Vec<CMatrix> {
    let mut out = Vec::new();
    if i == j {
        if !real {
            out.push(sp_a(n, vec![((i, i), gi(0, 1))]));
        }
        return out;
    }
    out.push(sp_a(n, vec![((i, j), gi(1, 0)), ((j, i), gi(-1, 0))]));
    if !real {
        out.push(sp_a(n, vec![((i, j), gi(0, 1)), ((j, i), gi(0, 1))]));
    }
    out
}

/// Generators of symmetric `B` at `(i, j)`/`(j, i)`.
fn b_gens(n: usize, i: usize, j: usize, real: bool) -> Vec<CMatrix> {
    let pair = |v: GaussianScalar| {
        if i == j {
            vec![((i, i), v)]
        } else {
            vec![((i, j), v.clone()), ((j, i), v)]
        }
    };
    let mut out = vec![sp_b(n, pair(gi(1, 0)))];
    if !real {
        out.push(sp_b(n, pair(gi(0, 1))));
    }
    out
}

fn lemma71_lower(n: usize, gs: &[Group]) -> Vec<CMatrix> {
    use Group::*;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let (a, b) = (gs[i], gs[j]);
            if a == K || b == K {
                continue;
            }
            let lm = |x: Group| x == L || x == M;
            out.extend(a_gens(n, i, j, lm(a) && lm(b)));
            let b_zero = (lm(a) && lm(b)) && !(i == j && false);
            if b_zero {
                continue;
            }
            let b_real = (lm(a) && b == P) || (lm(b) && a == P);
            out.extend(b_gens(n, i, j, b_real));
        }
    }
    out
}

fn lemma71_upper(n: usize, gs: &[Group]) -> Vec<CMatrix> {
    use Group::*;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if gs[i] != gs[j] {
                continue;
            }
            match gs[i] {
                K | M | R => {
                    out.extend(a_gens(n, i, j, false));
                    out.extend(b_gens(n, i, j, false));
                }
                L | P => {
                    if i != j {
                        out.extend(a_gens(n, i, j, true));
                    }
                }
            }
        }
    }
    let of = |g: Group| (0..n).filter(move |&i| gs[i] == g);
    let e_gen = SpElement {
        a: of(L).map(|i| ((i, i), gi(0, 1))).chain(of(P).map(|i| ((i, i), gi(0, -1)))).collect(),
        e: gi(0, 1),
        ..Default::default()
    };
    out.push(sp_element(n, &e_gen));
    for f in [gi(1, 0), gi(0, 1)] {
        let gen = SpElement {
            b: of(L).map(|i| ((i, i), f.clone())).chain(of(P).map(|i| ((i, i), -f.conj()))).collect(),
            f: f.clone(),
            ..Default::default()
        };
        out.push(sp_element(n, &gen));
    }
    out
}

fn xi_choices() -> Vec<Quaternion> {
    vec![
        Quaternion::from_ints(0, 1, 0, 0),
        Quaternion::from_ints(0, 0, 1, 0),
        Quaternion::imaginary(frac(3, 5), frac(4, 5), int(0)),
    ]
}

fn xi_tuples(m: usize) -> Vec<Vec<Quaternion>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t| {
                xi_choices().into_iter().map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

#[test]
fn sp_derived_and_normalizer_bounds() {
    for n in 2..=3 {
        let g = sp(n);
        let k_alg = g.k().unwrap();
        let sp1 = g
            .span_of_matrices(&[
                sp_k_sp1(n, &int(1), &gi(0, 0)),
                sp_k_sp1(n, &int(0), &gi(1, 0)),
                sp_k_sp1(n, &int(0), &gi(0, 1)),
            ])
            .unwrap();
        for k in 0..=n {
            for l in 0..=(n - k) {
                for m in 0..=(n - k - l) {
                    for p in 0..=(n - k - l - m) {
                        let gs = groups(n, k, l, m, p);
                        let lower = g.span_of_matrices(&lemma71_lower(n, &gs)).unwrap();
                        let upper = g.span_of_matrices(&lemma71_upper(n, &gs)).unwrap();
                        for xi in xi_tuples(m) {
                            let spec = NormalFormSpec::q_klmp(n, k, l, m, p, xi.clone());
                            let q = make_normal_form(&g, &spec).unwrap();
                            let derived = derived_space(&g, &q);
                            let ctx = format!("n={n} k={k} l={l} m={m} p={p} xi={xi:?}");
                            let projected = sum(&derived, &sp1);
                            assert!(projected.contains_space(&lower), "lower bound mod sp(1) {ctx}");
                            if p == 0 || k + l + m + p < n {
                                assert!(derived.contains_space(&lower), "lower bound {ctx}");
                            } else {
                                let missing = lower.dim() - derived.intersection(&lower).unwrap().dim();
                                assert_eq!(missing, 3, "{ctx}");
                            }
                            assert!(upper.contains_space(&normalizer_in(&g, k_alg, &q)), "upper bound {ctx}");
                            if l > 0 && m > 0 {
                                let hit = derived.basis().iter().any(|v| {
                                    let mat = g.to_matrix(v).unwrap();
                                    (k..k + l).any(|i| (k + l..k + l + m).any(|j| !mat.get(n + 1 + i, j).is_zero()))
                                });
                                let off_complex = xi.iter().any(|x| !x.c.is_zero() || !x.d.is_zero());
                                assert_eq!(hit, off_complex, "C_1 {ctx}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn sp_examples() {
    let g = sp(2);
    let i = Quaternion::from_ints(0, 1, 0, 0);
    let q = make_normal_form(&g, &NormalFormSpec::q_klmp(2, 0, 0, 2, 0, vec![i.clone(), i])).unwrap();
    assert_eq!(q.dim(), 4);
    assert_eq!(lie_closure(&g, &q).dim(), 8);
}

#[test]
fn invalid_normal_form_parameters_are_rejected() {
    let g = sp(2);
    assert!(make_normal_form(&g, &NormalFormSpec::q_klmp(2, 1, 1, 1, 0, vec![Quaternion::from_ints(0, 1, 0, 0)])).is_err());
    assert!(make_normal_form(&g, &NormalFormSpec::q_klmp(2, 0, 0, 1, 0, vec![Quaternion::from_ints(0, 1, 1, 0)])).is_err());
    assert!(make_normal_form(&g, &NormalFormSpec::q_klmp(2, 0, 0, 1, 0, vec![])).is_err());
    assert!(make_normal_form(&so(3), &NormalFormSpec::q_k(3, 4)).is_err());
    assert!(make_normal_form(&so(3), &NormalFormSpec::q_k(4, 1)).is_err());
}

// ---------------------------------------------------------------- f4 model

#[test]
fn f4_normalizer_of_n_c_is_six_dimensional() {
    let g = f4_model().unwrap();
    for c in [int(0), int(1), int(-2)] {
        let nc = make_normal_form(&g, &NormalFormSpec::n_c(c.clone())).unwrap();
        assert_eq!(nc.dim(), 11);
        assert_eq!(normalizer_in(&g, g.m(), &nc).dim(), 6, "c={c}");
    }
}
