//! Quantitative checks in the f4 parabolic model.

use num_traits::{One, Zero};

use rankone::catalog::embeddings::flatten;
use rankone::catalog::{make_normal_form, so4c_in_f4model, NormalFormSpec};
use rankone::exact_linalg::{int, MatrixQ, Scalar, SparseVec, Subspace};
use rankone::lie_ambient::octonion::{lambda_basis, lambda_table_image, so7_coords, so7_matrix};
use rankone::lie_ambient::{f4_model, AlgebraFamily, F4_GALPHA_START};
use rankone::sphericity_core::restrict_action;
use rankone::subalgebra_toolkit::normalizer_in;

use super::{SuiteOutcome, Tally};

fn flat_span(size: usize, mats: &[MatrixQ]) -> Subspace {
    let v: Vec<SparseVec> = mats.iter().map(flatten).collect();
    Subspace::span(size * size, &v)
}

fn from_rows<const N: usize>(rows: [[Scalar; N]; N]) -> MatrixQ {
    let mut out = MatrixQ::zeros(N, N);
    for (r, row) in rows.into_iter().enumerate() {
        for (c, x) in row.into_iter().enumerate() {
            out.set(r, c, x);
        }
    }
    out
}

/// The six unit parameter choices.
fn units() -> impl Iterator<Item = [Scalar; 6]> {
    (0..6).map(|k| std::array::from_fn(|j| if j == k { Scalar::one() } else { Scalar::zero() }))
}

/// The 8x8 pattern of the normalizer of `n_4` on `g_alpha`, parameters `(i, m, n, t, u, v)`.
fn n4_pattern8([i, m, n, t, u, v]: [Scalar; 6]) -> MatrixQ {
    let z = Scalar::zero;
    from_rows([
        [z(), -&t, -&u, n.clone(), z(), z(), z(), z()],
        [t.clone(), z(), -&v, -&m, z(), z(), z(), z()],
        [u.clone(), v.clone(), z(), i.clone(), z(), z(), z(), z()],
        [-&n, m.clone(), -&i, z(), z(), z(), z(), z()],
        [z(), z(), z(), z(), z(), -&t, -&u, n.clone()],
        [z(), z(), z(), z(), t.clone(), z(), -&v, -&m],
        [z(), z(), z(), z(), u.clone(), v.clone(), z(), i.clone()],
        [z(), z(), z(), z(), -&n, m, -i, z()],
    ])
}

/// The 7x7 pattern of the same normalizer inside so(7). The entries at (6,7) and (7,6)
/// carry `+v` and `-v`; with the opposite signs the family is not bracket closed.
fn n4_pattern7([i, m, n, t, u, v]: [Scalar; 6]) -> MatrixQ {
    let z = Scalar::zero;
    from_rows([
        [z(), -&t, -&u, z(), z(), i.clone(), m.clone()],
        [t.clone(), z(), v.clone(), z(), -&i, z(), n.clone()],
        [u.clone(), -&v, z(), z(), -&m, -&n, z()],
        [z(), z(), z(), z(), z(), z(), z()],
        [z(), i.clone(), m.clone(), z(), z(), -&t, -&u],
        [-&i, z(), n.clone(), z(), t.clone(), z(), v.clone()],
        [-m, -n, z(), z(), u, -v, z()],
    ])
}

/// The normalizer of `n_c` acting on `g_alpha`, parameters `(h, l, p, r, s, v)`.
pub fn so4c_pattern(c: &Scalar, [h, l, p, r, s, v]: [Scalar; 6]) -> MatrixQ {
    let z = Scalar::zero;
    from_rows([
        [z(), &s + &r * c, -&r + &s * c, &p * c, p.clone(), z(), z(), z()],
        [-&s - &r * c, z(), -&v, &l * c, l.clone(), z(), z(), z()],
        [&r - &s * c, v.clone(), z(), -(&h * c), -&h, z(), z(), z()],
        [-(&p * c), -(&l * c), &h * c, z(), z(), -&r, -&s, -&p],
        [-&p, -&l, h.clone(), z(), z(), &r * c, &s * c, &p * c],
        [z(), z(), z(), r.clone(), -(&r * c), z(), -&v, &h + &l * c],
        [z(), z(), z(), s.clone(), -(&s * c), v.clone(), z(), -(&h * c) + &l],
        [z(), z(), z(), p.clone(), -(&p * c), -&h - &l * c, &h * c - &l, z()],
    ])
}

pub fn f4_displays() -> SuiteOutcome {
    let mut t = Tally::new("f4 model displays");
    let alg = match f4_model() {
        Ok(a) => a,
        Err(e) => {
            t.fail(format!("f4 model: {e}"));
            return t.finish();
        }
    };
    let image = flat_span(8, &(0..21).map(lambda_basis).collect::<Vec<_>>());
    t.check(image.dim() == 21, || format!("dim lambda(so(7)) = {}", image.dim()));

    match make_normal_form(&alg, &NormalFormSpec::n_k(AlgebraFamily::F4Model, 4)) {
        Ok(n4) => {
            let norm = normalizer_in(&alg, alg.m(), &n4);
            t.check(norm.dim() == 6, || format!("dim N_m(n_4) = {}", norm.dim()));
            let as7: Vec<MatrixQ> =
                norm.basis().iter().map(|x| so7_matrix(&(0..21).map(|c| x.get(c)).collect::<Vec<_>>())).collect();
            let pattern7: Vec<MatrixQ> = units().map(n4_pattern7).collect();
            t.check(flat_span(7, &as7) == flat_span(7, &pattern7), || "N_m(n_4) differs from its 7x7 pattern".into());
            let as8: Vec<MatrixQ> = as7.iter().map(|m| lambda_table_image(&so7_coords(m))).collect();
            let pattern8: Vec<MatrixQ> = units().map(n4_pattern8).collect();
            t.check(flat_span(8, &as8) == flat_span(8, &pattern8), || "N_m(n_4) differs from its 8x8 pattern".into());
        }
        Err(e) => t.fail(format!("n_4: {e}")),
    }

    let g_alpha = Subspace::coordinate(alg.dim(), F4_GALPHA_START..F4_GALPHA_START + 8);
    for c in [int(0), int(1), int(2), int(-1)] {
        let so4c = match so4c_in_f4model(&alg, &c) {
            Ok(s) => s,
            Err(e) => {
                t.fail(format!("so(4)_c at c = {c}: {e}"));
                continue;
            }
        };
        t.check(so4c.dim() == 6, || format!("dim so(4)_c = {} at c = {c}", so4c.dim()));
        match restrict_action(&alg, &so4c, &g_alpha) {
            Ok(act) => {
                let pattern: Vec<MatrixQ> = units().map(|p| so4c_pattern(&c, p)).collect();
                t.check(flat_span(8, &act.operators) == flat_span(8, &pattern), || format!("so(4)_c pattern at c = {c}"));
                let mut w = vec![Scalar::zero(); 8];
                w[3] = Scalar::one();
                w[4] = -c.clone();
                let rank = act.rank_at(&w);
                t.check(rank == 3, || format!("rank {rank} at w = e4 - c e5, c = {c}"));
            }
            Err(e) => t.fail(format!("so(4)_c action at c = {c}: {e}")),
        }
    }
    t.finish()
}
