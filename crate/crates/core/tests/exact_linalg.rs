use proptest::prelude::*;
use rankone::exact_linalg::{
    format_scalar, frac, int, kernel, ortho_complement, parse_scalar, rank, subspace_ops, GaussianScalar,
    LinalgError, MatrixQ, Scalar, SparseVec, Subspace,
};

fn v(entries: &[i64]) -> SparseVec {
    SparseVec::from_dense(&entries.iter().map(|&x| int(x)).collect::<Vec<_>>())
}

fn span(n: usize, vs: &[&[i64]]) -> Subspace {
    Subspace::span(n, &vs.iter().map(|x| v(x)).collect::<Vec<_>>())
}

#[test]
fn rank_examples() {
    assert_eq!(rank(&MatrixQ::identity(3)), 3);
    assert_eq!(rank(&MatrixQ::zeros(3, 3)), 0);
    assert_eq!(rank(&MatrixQ::from_i64(&[&[1, 2], &[2, 4]])), 1);
}

#[test]
fn kernel_examples() {
    assert!(kernel(&MatrixQ::identity(3)).is_zero());
    assert_eq!(kernel(&MatrixQ::zeros(2, 3)), Subspace::full(3));
    let k = kernel(&MatrixQ::from_i64(&[&[1, 1, 0]]));
    assert_eq!(k.basis(), &[v(&[1, -1, 0]), v(&[0, 0, 1])]);
}

#[test]
fn subspace_ops_examples() {
    let e1 = span(2, &[&[1, 0]]);
    let e2 = span(2, &[&[0, 1]]);
    let rel = subspace_ops(&e1, &e2).unwrap();
    assert_eq!(rel.sum, Subspace::full(2));
    assert!(rel.intersection.is_zero());
    assert!(!rel.contains && !rel.equal);

    let rel = subspace_ops(&e1, &e1).unwrap();
    assert!(rel.equal && rel.contains);
    assert_eq!(rel.sum, e1);
    assert_eq!(rel.intersection, e1);

    let a = span(3, &[&[1, 1, 0], &[0, 0, 1]]);
    let b = span(3, &[&[0, 1, 0], &[0, 0, 1]]);
    assert_eq!(subspace_ops(&a, &b).unwrap().intersection, span(3, &[&[0, 0, 1]]));

    let c = span(4, &[&[1, 0, 0, 0]]);
    assert_eq!(subspace_ops(&a, &c), Err(LinalgError::DimensionMismatch(3, 4)));
}

#[test]
fn ortho_complement_examples() {
    let full = Subspace::full(3);
    let id = MatrixQ::identity(3);
    let s = span(3, &[&[1, 0, 0]]);
    assert_eq!(ortho_complement(&s, &full, &id).unwrap(), span(3, &[&[0, 1, 0], &[0, 0, 1]]));
    assert!(ortho_complement(&full, &full, &id).unwrap().is_zero());

    let g = MatrixQ::diag(&[int(1), int(2), int(1)]);
    let s = span(3, &[&[1, 1, 0]]);
    assert_eq!(ortho_complement(&s, &full, &g).unwrap(), span(3, &[&[2, -1, 0], &[0, 0, 1]]));

    let within = span(3, &[&[0, 1, 0]]);
    assert_eq!(ortho_complement(&s, &within, &g), Err(LinalgError::NotContained));
}

#[test]
fn canonical_form_is_reduced_echelon() {
    let s = span(4, &[&[2, 4, 0, 6], &[1, 2, 1, 0], &[3, 6, 1, 6]]);
    assert_eq!(s.dim(), 2);
    assert_eq!(s.pivots(), &[0, 2]);
    assert_eq!(s.basis()[0], v(&[1, 2, 0, 3]));
    assert_eq!(s.basis()[1], v(&[0, 0, 1, -3]));
}

#[test]
fn scalar_text_round_trip() {
    assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
    assert_eq!(format_scalar(&frac(-3, 2)), "-3/2");
    assert_eq!(format_scalar(&int(7)), "7");
    for bad in ["1.5", "", "1/0", "a", "1/2/3"] {
        assert!(parse_scalar(bad).is_err(), "{bad}");
    }
}

#[test]
fn gaussian_arithmetic() {
    let z = GaussianScalar::from_ints(3, -4);
    assert_eq!(z.norm_sq(), int(25));
    assert_eq!(z.conj().conj(), z);
    assert_eq!(z.clone() * z.inv().unwrap(), GaussianScalar::one());
    assert!(GaussianScalar::zero().inv().is_none());
}

fn small_matrix(max_r: usize, max_c: usize) -> impl Strategy<Value = MatrixQ> {
    (1..=max_r, 1..=max_c).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=3), c), r).prop_map(|rows| {
            MatrixQ::from_rows(
                rows.into_iter().map(|row| row.into_iter().map(|(n, d)| frac(n, d)).collect()).collect(),
            )
        })
    })
}

fn subspace_in(n: usize, max_gens: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=max_gens)
        .prop_map(move |gens| Subspace::span(n, &gens.iter().map(|g| v(g)).collect::<Vec<_>>()))
}

fn pos_def_gram(n: usize) -> impl Strategy<Value = MatrixQ> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), n).prop_map(move |rows| {
        let b = MatrixQ::from_i64(&rows.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
        b.transpose().mul(&b).add(&MatrixQ::identity(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_transpose_invariant(m in small_matrix(5, 5)) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn kernel_dimension_theorem(m in small_matrix(5, 6)) {
        let k = kernel(&m);
        prop_assert_eq!(k.dim() + rank(&m), m.cols());
        for b in k.basis() {
            prop_assert!(m.mul_sparse(b).is_zero());
        }
    }

    #[test]
    fn echelon_reduction_is_idempotent(s in subspace_in(5, 4)) {
        let again = Subspace::span(5, s.basis());
        prop_assert_eq!(&again, &s);
        let doubled: Vec<SparseVec> = s.basis().iter().map(|b| b.scale(&int(-2))).collect();
        prop_assert_eq!(Subspace::span(5, &doubled), s);
    }

    #[test]
    fn sum_and_intersection_dimensions(a in subspace_in(5, 3), b in subspace_in(5, 3)) {
        let rel = subspace_ops(&a, &b).unwrap();
        prop_assert_eq!(rel.sum.dim() + rel.intersection.dim(), a.dim() + b.dim());
        prop_assert!(rel.sum.contains_space(&a) && rel.sum.contains_space(&b));
        prop_assert!(a.contains_space(&rel.intersection) && b.contains_space(&rel.intersection));
        prop_assert_eq!(rel.equal, a.contains_space(&b) && b.contains_space(&a));
    }

    #[test]
    fn double_complement_is_identity(
        w in subspace_in(5, 4),
        coeffs in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 0..3),
        g in pos_def_gram(5),
    ) {
        let gens: Vec<SparseVec> = coeffs
            .iter()
            .map(|c| {
                let c: Vec<Scalar> = c.iter().take(w.dim()).map(|&x| int(x)).collect();
                w.from_coordinates(&c)
            })
            .collect();
        let s = Subspace::span(5, &gens);
        let perp = ortho_complement(&s, &w, &g).unwrap();
        prop_assert_eq!(perp.dim() + s.dim(), w.dim());
        prop_assert_eq!(ortho_complement(&perp, &w, &g).unwrap(), s);
    }
}
