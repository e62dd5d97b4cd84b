use num_traits::{One, Zero};
use rankone::exact_linalg::{int, MatrixQ, Scalar, SparseVec, Subspace};
use rankone::lie_ambient::octonion::{
    lambda, lambda_basis, lambda_table_image, left_mul, octonion_mul, position, so7_index, SO7_LETTERS,
};
use rankone::lie_ambient::{
    construct_algebra, expected_m_dim, expected_p_dim, expected_root_dims, f4_model, phi_quaternion, AlgebraFamily,
    AmbientAlgebra, CMatrix, QuatMatrix, Quaternion, Selector, F4_G2ALPHA_START, F4_GALPHA_START,
};

fn alg(f: AlgebraFamily) -> AmbientAlgebra {
    construct_algebra(f).expect("construction succeeds")
}

fn derived(alg: &AmbientAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut out = Vec::new();
    for x in a.basis() {
        for y in b.basis() {
            out.push(alg.bracket(x, y));
        }
    }
    Subspace::span(alg.dim(), &out)
}

#[test]
fn so_dimensions_match_formulas() {
    for n in 3..=8 {
        let g = alg(AlgebraFamily::So(n));
        assert_eq!(g.dim(), n * (n + 1) / 2);
        assert_eq!(g.p().unwrap().dim(), n);
        assert_eq!(g.m().dim(), (n - 1) * (n - 2) / 2);
        assert_eq!(g.g_alpha().dim(), n - 1);
        assert_eq!(g.g_2alpha().dim(), 0);
    }
}

#[test]
fn su_and_sp_dimensions_match_formulas() {
    for n in 1..=6 {
        let f = AlgebraFamily::Su(n);
        let g = alg(f);
        assert_eq!(g.dim(), (n + 1) * (n + 1) - 1);
        assert_eq!(g.p().unwrap().dim(), 2 * n);
        assert_eq!(g.m().dim(), (n - 1) * (n - 1));
        assert_eq!((g.g_alpha().dim(), g.g_2alpha().dim()), (2 * (n - 1), 1));
    }
    for n in 2..=3 {
        let g = alg(AlgebraFamily::Sp(n));
        assert_eq!(g.dim(), (n + 1) * (2 * n + 3));
        assert_eq!(g.p().unwrap().dim(), 4 * n);
        assert_eq!(g.m().dim(), (n - 1) * (2 * n - 1) + 3);
        assert_eq!((g.g_alpha().dim(), g.g_2alpha().dim()), (4 * (n - 1), 3));
    }
}

#[test]
fn small_examples() {
    let g = alg(AlgebraFamily::So(3));
    assert_eq!((g.dim(), g.p().unwrap().dim(), g.g_alpha().dim(), g.g_2alpha().dim()), (6, 3, 2, 0));
    let g = alg(AlgebraFamily::Su(2));
    assert_eq!((g.dim(), g.g_alpha().dim(), g.g_2alpha().dim()), (8, 2, 1));
    let g = alg(AlgebraFamily::Sp(2));
    assert_eq!((g.dim(), g.g_alpha().dim(), g.g_2alpha().dim()), (21, 4, 3));
    assert_eq!(alg(AlgebraFamily::Sp(3)).dim(), 36);
}

#[test]
fn family_ranges_are_enforced() {
    assert!(construct_algebra(AlgebraFamily::So(2)).is_err());
    assert!(construct_algebra(AlgebraFamily::Su(0)).is_err());
    assert!(construct_algebra(AlgebraFamily::Sp(1)).is_err());
}

fn check_jacobi_all(g: &AmbientAlgebra) {
    let d = g.dim();
    for i in 0..d {
        for j in (i + 1)..d {
            let ij = g.basis_bracket(i, j);
            for k in (j + 1)..d {
                let ek = SparseVec::unit(k);
                let a = g.bracket(ij, &ek);
                let b = g.bracket(g.basis_bracket(j, k), &SparseVec::unit(i));
                let c = g.bracket(g.basis_bracket(k, i), &SparseVec::unit(j));
                assert!(a.add(&b).add(&c).is_zero(), "Jacobi fails at ({i},{j},{k}) in {}", g.family());
            }
        }
    }
}

#[test]
fn jacobi_exhaustive_small_rank() {
    for f in [AlgebraFamily::So(3), AlgebraFamily::Su(2), AlgebraFamily::Su(3), AlgebraFamily::Sp(2)] {
        check_jacobi_all(&alg(f));
    }
    check_jacobi_all(&f4_model().unwrap());
}

#[test]
fn cartan_relations_hold() {
    for f in [AlgebraFamily::So(5), AlgebraFamily::Su(3), AlgebraFamily::Sp(2)] {
        let g = alg(f);
        let (k, p) = (g.k().unwrap(), g.p().unwrap());
        assert_eq!(k.dim() + p.dim(), g.dim());
        assert!(k.sum(p).unwrap() == g.full());
        assert!(k.contains_space(&derived(&g, k, k)));
        assert!(p.contains_space(&derived(&g, k, p)));
        assert!(k.contains_space(&derived(&g, p, p)));
    }
}

#[test]
fn root_space_brackets() {
    for f in [AlgebraFamily::Su(3), AlgebraFamily::Sp(2), AlgebraFamily::Sp(3), AlgebraFamily::F4Model] {
        let g = construct_algebra(f).unwrap();
        assert_eq!(&derived(&g, g.g_alpha(), g.g_alpha()), g.g_2alpha(), "{f}");
        assert!(g.g_alpha().contains_space(&derived(&g, g.m(), g.g_alpha())));
        assert!(g.g_2alpha().contains_space(&derived(&g, g.m(), g.g_2alpha())));
    }
    let g = alg(AlgebraFamily::So(5));
    assert!(derived(&g, g.g_alpha(), g.g_alpha()).is_zero());
}

/// `n` for so(n,1): `[[0, v, -v], [-v^t, 0, 0], [-v^t, 0, 0]]`.
fn so_n_display(n: usize) -> Vec<CMatrix> {
    (0..n - 1)
        .map(|i| CMatrix::from_int_entries(n + 1, &[(i, n - 1, 1, 0), (i, n, -1, 0), (n - 1, i, -1, 0), (n, i, -1, 0)]))
        .collect()
}

/// `n` for su(n,1): `[[0, v, -v], [-v*, -ix, ix], [-v*, -ix, ix]]`.
fn su_n_display(n: usize) -> Vec<CMatrix> {
    let mut out = Vec::new();
    for i in 0..n - 1 {
        for (re, im) in [(1, 0), (0, 1)] {
            out.push(CMatrix::from_int_entries(
                n + 1,
                &[(i, n - 1, re, im), (i, n, -re, -im), (n - 1, i, -re, im), (n, i, -re, im)],
            ));
        }
    }
    out.push(CMatrix::from_int_entries(n + 1, &[(n - 1, n - 1, 0, -1), (n - 1, n, 0, 1), (n, n - 1, 0, -1), (n, n, 0, 1)]));
    out
}

/// Generic element of the sp(n,1) block pattern from `A, B, z, w, e, f`.
struct SpParts {
    a: Vec<((usize, usize), (i64, i64))>,
    b: Vec<((usize, usize), (i64, i64))>,
    z: Vec<(usize, (i64, i64))>,
    w: Vec<(usize, (i64, i64))>,
    e: (i64, i64),
    f: (i64, i64),
}

fn sp_matrix(n: usize, parts: &SpParts) -> CMatrix {
    let h = n + 1;
    let mut m = CMatrix::zero(2 * h);
    let g = |(re, im): (i64, i64)| rankone::exact_linalg::GaussianScalar::from_ints(re, im);
    for &((r, c), v) in &parts.a {
        m.add_at(r, c, &g(v));
        m.add_at(h + r, h + c, &g(v).conj());
    }
    for &((r, c), v) in &parts.b {
        m.add_at(h + r, c, &g(v));
        m.add_at(r, h + c, &-g(v).conj());
    }
    for &(i, v) in &parts.z {
        m.add_at(i, n, &g(v));
        m.add_at(n, i, &g(v).conj());
        m.add_at(h + i, 2 * n + 1, &g(v).conj());
        m.add_at(2 * n + 1, h + i, &g(v));
    }
    for &(i, v) in &parts.w {
        m.add_at(i, 2 * n + 1, &-g(v).conj());
        m.add_at(n, h + i, &g(v).conj());
        m.add_at(h + i, n, &g(v));
        m.add_at(2 * n + 1, i, &-g(v));
    }
    m.add_at(n, n, &g(parts.e));
    m.add_at(2 * n + 1, 2 * n + 1, &g(parts.e).conj());
    m.add_at(2 * n + 1, n, &g(parts.f));
    m.add_at(n, 2 * n + 1, &-g(parts.f).conj());
    m
}

/// `n` for sp(n,1) with `f = w_1`, `e = z_1` and the displayed `A`, `B`.
fn sp_n_display(n: usize) -> Vec<CMatrix> {
    let mut out = Vec::new();
    for i in 1..n {
        for (re, im) in [(1, 0), (0, 1)] {
            // z_i (0-based index i >= 1): A row 0 gets conj(z_i), A column 0 gets -z_i
            out.push(sp_matrix(
                n,
                &SpParts {
                    a: vec![((0, i), (re, -im)), ((i, 0), (-re, -im))],
                    b: vec![],
                    z: vec![(i, (re, im))],
                    w: vec![],
                    e: (0, 0),
                    f: (0, 0),
                },
            ));
            out.push(sp_matrix(
                n,
                &SpParts {
                    a: vec![],
                    b: vec![((0, i), (-re, -im)), ((i, 0), (-re, -im))],
                    z: vec![],
                    w: vec![(i, (re, im))],
                    e: (0, 0),
                    f: (0, 0),
                },
            ));
        }
    }
    out.push(sp_matrix(
        n,
        &SpParts { a: vec![((0, 0), (0, -1))], b: vec![], z: vec![(0, (0, 1))], w: vec![], e: (0, 1), f: (0, 0) },
    ));
    for (re, im) in [(1, 0), (0, 1)] {
        out.push(sp_matrix(
            n,
            &SpParts {
                a: vec![],
                b: vec![((0, 0), (-re, -im))],
                z: vec![],
                w: vec![(0, (re, im))],
                e: (0, 0),
                f: (re, im),
            },
        ));
    }
    out
}

fn span_of_matrices(g: &AmbientAlgebra, ms: &[CMatrix]) -> Subspace {
    let coords: Vec<SparseVec> = ms.iter().map(|m| g.from_matrix(m).expect("displayed matrix lies in g")).collect();
    Subspace::span(g.dim(), &coords)
}

#[test]
fn nilradical_matches_displays() {
    for n in 3..=6 {
        let g = alg(AlgebraFamily::So(n));
        assert_eq!(&span_of_matrices(&g, &so_n_display(n)), g.n_nil());
    }
    for n in 2..=5 {
        let g = alg(AlgebraFamily::Su(n));
        let disp = su_n_display(n);
        assert_eq!(&span_of_matrices(&g, &disp), g.n_nil());
        assert_eq!(&span_of_matrices(&g, &disp[disp.len() - 1..]), g.g_2alpha());
    }
    for n in 2..=3 {
        let g = alg(AlgebraFamily::Sp(n));
        let disp = sp_n_display(n);
        assert_eq!(&span_of_matrices(&g, &disp), g.n_nil());
        assert_eq!(&span_of_matrices(&g, &disp[disp.len() - 3..]), g.g_2alpha());
        assert_eq!(&span_of_matrices(&g, &disp[..disp.len() - 3]), g.g_alpha());
    }
}

#[test]
fn so_bracket_of_p_elements_is_rotation() {
    let n = 3;
    let g = alg(AlgebraFamily::So(n));
    let pe = |i: usize| CMatrix::from_int_entries(n + 1, &[(i, n, 1, 0), (n, i, 1, 0)]);
    for i in 0..n {
        for j in 0..n {
            let got = g.bracket_matrices(&pe(i), &pe(j)).unwrap();
            let want = CMatrix::from_int_entries(n + 1, &[(i, j, 1, 0), (j, i, -1, 0)]);
            assert_eq!(g.to_matrix(&got).unwrap(), want);
        }
    }
}

#[test]
fn bracket_of_element_with_itself_vanishes() {
    let g = alg(AlgebraFamily::Sp(2));
    let x = SparseVec::from_pairs((0..g.dim()).map(|i| (i, int(i as i64 % 5 - 2))));
    assert!(g.bracket(&x, &x).is_zero());
}

#[test]
fn su_bracket_trace_relation() {
    let n = 2;
    let g = alg(AlgebraFamily::Su(n));
    let q = |i: usize, re: i64, im: i64| CMatrix::from_int_entries(n + 1, &[(i, n, re, im), (n, i, re, -im)]);
    let elems = [q(0, 1, 0), q(0, 0, 1), q(1, 1, 0), q(1, 0, 1)];
    for x in &elems {
        for y in &elems {
            let b = g.to_matrix(&g.bracket_matrices(x, y).unwrap()).unwrap();
            let upper = b.block(0, 0, n).trace();
            assert_eq!(b.get(n, n), -upper);
        }
    }
}

#[test]
fn matrix_not_in_algebra_is_rejected() {
    let g = alg(AlgebraFamily::So(3));
    let bad = CMatrix::from_int_entries(4, &[(0, 1, 1, 0)]);
    assert!(g.from_matrix(&bad).is_err());
    assert!(g.bracket_matrices(&bad, &bad).is_err());
}

#[test]
fn grams() {
    let n = 4;
    let g = alg(AlgebraFamily::So(n));
    let pe: Vec<SparseVec> = (0..n)
        .map(|i| g.from_matrix(&CMatrix::from_int_entries(n + 1, &[(i, n, 1, 0), (n, i, 1, 0)])).unwrap())
        .collect();
    for i in 0..n {
        for j in 0..n {
            assert_eq!(g.inner(&pe[i], &pe[j]), if i == j { int(2) } else { int(0) });
        }
    }
    for f in [AlgebraFamily::So(4), AlgebraFamily::Su(3), AlgebraFamily::Sp(2), AlgebraFamily::F4Model] {
        let g = construct_algebra(f).unwrap();
        for sel in [Selector::NNil, Selector::G] {
            let gm = g.invariant_gram(sel).unwrap();
            assert!(gm.is_symmetric() && gm.is_positive_definite());
        }
        for x in g.g_alpha().basis() {
            for y in g.g_2alpha().basis() {
                assert!(g.inner(x, y).is_zero());
            }
        }
    }
    let g = alg(AlgebraFamily::Sp(2));
    let gp = g.invariant_gram(Selector::P).unwrap();
    assert!(gp.is_positive_definite());
    assert!(f4_model().unwrap().invariant_gram(Selector::P).is_err());
}

#[test]
fn invariant_form_is_ad_invariant() {
    for f in [AlgebraFamily::So(4), AlgebraFamily::Su(2), AlgebraFamily::F4Model] {
        let g = construct_algebra(f).unwrap();
        let compact = match g.k() {
            Some(k) => k.clone(),
            None => g.m().clone(),
        };
        for x in compact.basis() {
            for i in 0..g.dim() {
                for j in 0..g.dim() {
                    let (ei, ej) = (SparseVec::unit(i), SparseVec::unit(j));
                    let s = g.inner(&g.bracket(x, &ei), &ej) + g.inner(&ei, &g.bracket(x, &ej));
                    assert!(s.is_zero(), "{f}: form not invariant at ({i},{j})");
                }
            }
        }
    }
}

fn q(a: i64, b: i64, c: i64, d: i64) -> QuatMatrix {
    QuatMatrix::from_quaternion(&Quaternion::from_ints(a, b, c, d))
}

#[test]
fn phi_examples_and_multiplicativity() {
    assert_eq!(phi_quaternion(&q(1, 0, 0, 0)), CMatrix::identity(2));
    assert_eq!(phi_quaternion(&q(0, 0, 1, 0)), CMatrix::from_int_entries(2, &[(0, 1, -1, 0), (1, 0, 1, 0)]));
    let units = [q(1, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1)];
    for x in &units {
        for y in &units {
            assert_eq!(phi_quaternion(&x.mul(y)), phi_quaternion(x).mul(&phi_quaternion(y)));
        }
    }
    assert_eq!(phi_quaternion(&q(0, 1, 0, 0).mul(&q(0, 0, 1, 0))), phi_quaternion(&q(0, 0, 0, 1)));
}

#[test]
fn phi_is_multiplicative_on_matrices() {
    let m = |vals: [i64; 4]| MatrixQ::from_i64(&[&vals[..2], &vals[2..]]);
    let x = QuatMatrix::new(m([1, 2, 0, -1]), m([0, 1, 3, 0]), m([2, 0, 0, 1]), m([-1, 0, 1, 1]));
    let y = QuatMatrix::new(m([0, 1, 1, 0]), m([2, -1, 0, 0]), m([1, 1, 1, 1]), m([0, 0, -2, 3]));
    assert_eq!(phi_quaternion(&x.mul(&y)), phi_quaternion(&x).mul(&phi_quaternion(&y)));
}

#[test]
fn octonion_table_is_alternative_with_unit_e0() {
    for a in 0..8 {
        let mut ea = vec![Scalar::zero(); 8];
        ea[position(a)] = Scalar::one();
        let sq = octonion_mul(&ea, &ea);
        let mut expect = vec![Scalar::zero(); 8];
        expect[position(0)] = if a == 0 { int(1) } else { int(-1) };
        assert_eq!(sq, expect);
        let lm = left_mul(a);
        let lm2 = lm.mul(&lm);
        let want = if a == 0 { MatrixQ::identity(8) } else { MatrixQ::identity(8).scale(&int(-1)) };
        assert_eq!(lm2, want);
    }
}

#[test]
fn lambda_matches_octonion_left_multiplication() {
    for i in 1..=7 {
        for j in (i + 1)..=7 {
            let idx = so7_index(i, j);
            let want = left_mul(i).mul(&left_mul(j));
            let mut twice = vec![Scalar::zero(); 21];
            twice[idx] = int(2);
            assert_eq!(lambda(&twice), want, "pair ({i},{j}) letter {}", SO7_LETTERS[idx]);
            let mut unit = vec![Scalar::zero(); 21];
            unit[idx] = int(1);
            assert_eq!(lambda_table_image(&unit), want);
        }
    }
}

#[test]
fn lambda_images_are_skew_and_injective() {
    let mut rows = Vec::new();
    for s in 0..21 {
        let l = lambda_basis(s);
        assert_eq!(l.transpose(), l.scale(&int(-1)));
        rows.push((0..64).map(|x| l.get(x / 8, x % 8).clone()).collect::<Vec<_>>());
    }
    assert_eq!(MatrixQ::from_rows(rows).rank(), 21);
}

#[test]
fn lambda_orbit_of_e0_is_imaginary_octonions() {
    let e0 = SparseVec::unit(position(0));
    let images: Vec<SparseVec> = (0..21).map(|s| lambda_basis(s).mul_sparse(&e0)).collect();
    let span = Subspace::span(8, &images);
    let imag = Subspace::span(8, &(1..=7).map(|k| SparseVec::unit(position(k))).collect::<Vec<_>>());
    assert_eq!(span, imag);
}

#[test]
fn f4_model_structure() {
    let g = f4_model().unwrap();
    assert_eq!(g.dim(), 37);
    assert_eq!(g.m().dim(), expected_m_dim(AlgebraFamily::F4Model));
    assert_eq!((g.g_alpha().dim(), g.g_2alpha().dim()), expected_root_dims(AlgebraFamily::F4Model));
    assert!(g.k().is_none() && expected_p_dim(AlgebraFamily::F4Model).is_none());
    assert!(g.to_matrix(&SparseVec::unit(0)).is_err());
    let ga: Vec<usize> = g.g_alpha().pivots().to_vec();
    assert_eq!(ga, (F4_GALPHA_START..F4_G2ALPHA_START).collect::<Vec<_>>());
}
