//! Derived spaces and `k`-normalizers of the `q` normal forms against explicit block spaces.

use num_traits::Zero;

use rankone::catalog::elements::{sp_element, sp_k_sp1, SpElement};
use rankone::catalog::{make_normal_form, NormalFormSpec};
use rankone::exact_linalg::{frac, int, GaussianScalar};
use rankone::lie_ambient::{construct_algebra, AlgebraFamily, AmbientAlgebra, CMatrix, Quaternion};
use rankone::subalgebra_toolkit::{derived_space, normalizer_in};

use super::{SuiteOutcome, Tally};

fn gi(re: i64, im: i64) -> GaussianScalar {
    GaussianScalar::from_ints(re, im)
}

fn rot(size: usize, i: usize, j: usize) -> CMatrix {
    CMatrix::from_int_entries(size, &[(i, j, 1, 0), (j, i, -1, 0)])
}

fn herm_pair(size: usize, i: usize, j: usize) -> CMatrix {
    CMatrix::from_int_entries(size, &[(i, j, 0, 1), (j, i, 0, 1)])
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

/// All of `u(|idx|)` on `idx x idx`.
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

fn algebra(t: &mut Tally, f: AlgebraFamily) -> Option<AmbientAlgebra> {
    construct_algebra(f).map_err(|e| t.fail(format!("{f}: {e}"))).ok()
}

/// so(n,1): `[q_k, q_k] = so(n-k)` and `N_k(q_k) = so(k) + so(n-k)` on the leading coordinates.
pub fn so_q_k_blocks() -> SuiteOutcome {
    let mut t = Tally::new("so(n,1) q_k blocks");
    for n in 3..=8 {
        let Some(g) = algebra(&mut t, AlgebraFamily::So(n)) else { continue };
        let k_alg = g.k().expect("so(n,1) has k");
        for k in 0..=n {
            let ctx = format!("n={n} k={k}");
            let q = match make_normal_form(&g, &NormalFormSpec::q_k(n, k)) {
                Ok(q) => q,
                Err(e) => {
                    t.fail(format!("{ctx}: {e}"));
                    continue;
                }
            };
            let derived_gens = so_block(n + 1, &(k..n).collect::<Vec<_>>());
            let mut norm_gens = so_block(n + 1, &(0..k).collect::<Vec<_>>());
            norm_gens.extend(derived_gens.clone());
            match (g.span_of_matrices(&derived_gens), g.span_of_matrices(&norm_gens)) {
                (Ok(d), Ok(nm)) => {
                    t.check(derived_space(&g, &q) == d, || format!("{ctx}: derived space"));
                    t.check(normalizer_in(&g, k_alg, &q) == nm, || format!("{ctx}: normalizer"));
                }
                _ => t.fail(format!("{ctx}: block space outside the algebra")),
            }
        }
    }
    t.finish()
}

fn su_derived(n: usize, k: usize, l: usize) -> Vec<CMatrix> {
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

fn su_normalizer(n: usize, k: usize, l: usize) -> Vec<CMatrix> {
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

/// su(n,1): derived space and normalizer of `q_{k,l}` for all `(k, l)`.
pub fn su_q_kl_blocks() -> SuiteOutcome {
    let mut t = Tally::new("su(n,1) q_kl blocks");
    for n in 2..=6 {
        let Some(g) = algebra(&mut t, AlgebraFamily::Su(n)) else { continue };
        let k_alg = g.k().expect("su(n,1) has k");
        for k in 0..=n {
            for l in 0..=(n - k) {
                let ctx = format!("n={n} k={k} l={l}");
                let q = match make_normal_form(&g, &NormalFormSpec::q_kl(n, k, l)) {
                    Ok(q) => q,
                    Err(e) => {
                        t.fail(format!("{ctx}: {e}"));
                        continue;
                    }
                };
                match (g.span_of_matrices(&su_derived(n, k, l)), g.meet_matrix_span(&su_normalizer(n, k, l))) {
                    (Ok(d), Ok(nm)) => {
                        t.check(derived_space(&g, &q) == d, || format!("{ctx}: derived space"));
                        t.check(normalizer_in(&g, k_alg, &q) == nm, || format!("{ctx}: normalizer"));
                    }
                    _ => t.fail(format!("{ctx}: block space outside the algebra")),
                }
            }
        }
    }
    t.finish()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Slot {
    K,
    L,
    M,
    P,
    R,
}

fn slots(n: usize, k: usize, l: usize, m: usize, p: usize) -> Vec<Slot> {
    (0..n)
        .map(|i| match i {
            _ if i < k => Slot::K,
            _ if i < k + l => Slot::L,
            _ if i < k + l + m => Slot::M,
            _ if i < k + l + m + p => Slot::P,
            _ => Slot::R,
        })
        .collect()
}

fn sp_a(n: usize, entries: Vec<((usize, usize), GaussianScalar)>) -> CMatrix {
    sp_element(n, &SpElement { a: entries, ..Default::default() })
}

fn sp_b(n: usize, entries: Vec<((usize, usize), GaussianScalar)>) -> CMatrix {
    sp_element(n, &SpElement { b: entries, ..Default::default() })
}

/// Skew-hermitian `A` at `(i, j)`, `(j, i)`; real entries only when `real`.
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

/// Symmetric `B` at `(i, j)`, `(j, i)`.
fn b_gens(n: usize, i: usize, j: usize, real: bool) -> Vec<CMatrix> {
    let pair = |v: GaussianScalar| if i == j { vec![((i, i), v)] } else { vec![((i, j), v.clone()), ((j, i), v)] };
    let mut out = vec![sp_b(n, pair(gi(1, 0)))];
    if !real {
        out.push(sp_b(n, pair(gi(0, 1))));
    }
    out
}

fn sp_lower(n: usize, gs: &[Slot]) -> Vec<CMatrix> {
    use Slot::*;
    let lm = |x: Slot| x == L || x == M;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let (a, b) = (gs[i], gs[j]);
            if a == K || b == K {
                continue;
            }
            out.extend(a_gens(n, i, j, lm(a) && lm(b)));
            if lm(a) && lm(b) {
                continue;
            }
            let b_real = (lm(a) && b == P) || (lm(b) && a == P);
            out.extend(b_gens(n, i, j, b_real));
        }
    }
    out
}

fn sp_upper(n: usize, gs: &[Slot]) -> Vec<CMatrix> {
    use Slot::*;
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
                L | P if i != j => out.extend(a_gens(n, i, j, true)),
                L | P => {}
            }
        }
    }
    let of = |s: Slot| (0..n).filter(move |&i| gs[i] == s);
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

fn xi_tuples(m: usize) -> Vec<Vec<Quaternion>> {
    let choices = [
        Quaternion::from_ints(0, 1, 0, 0),
        Quaternion::from_ints(0, 0, 1, 0),
        Quaternion::imaginary(frac(3, 5), frac(4, 5), int(0)),
    ];
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t: Vec<Quaternion>| {
                choices.iter().map(move |x| {
                    let mut t = t.clone();
                    t.push(x.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// sp(n,1): lower bound on `[q, q]` (modulo the `sp(1)` factor when every slot is filled
/// by `P`-type planes) and upper bound on `N_k(q)` for all `(k, l, m, p, xi)`.
pub fn sp_q_klmp_bounds() -> SuiteOutcome {
    let mut t = Tally::new("sp(n,1) q_klmp bounds");
    for n in 2..=3 {
        let Some(g) = algebra(&mut t, AlgebraFamily::Sp(n)) else { continue };
        let k_alg = g.k().expect("sp(n,1) has k");
        let sp1 = g
            .span_of_matrices(&[
                sp_k_sp1(n, &int(1), &gi(0, 0)),
                sp_k_sp1(n, &int(0), &gi(1, 0)),
                sp_k_sp1(n, &int(0), &gi(0, 1)),
            ])
            .expect("sp(1) factor lies in k");
        for k in 0..=n {
            for l in 0..=(n - k) {
                for m in 0..=(n - k - l) {
                    for p in 0..=(n - k - l - m) {
                        let gs = slots(n, k, l, m, p);
                        let (lower, upper) = match (g.span_of_matrices(&sp_lower(n, &gs)), g.span_of_matrices(&sp_upper(n, &gs))) {
                            (Ok(a), Ok(b)) => (a, b),
                            _ => {
                                t.fail(format!("n={n} k={k} l={l} m={m} p={p}: bound outside the algebra"));
                                continue;
                            }
                        };
                        for xi in xi_tuples(m) {
                            let ctx = format!("n={n} k={k} l={l} m={m} p={p} xi={xi:?}");
                            let q = match make_normal_form(&g, &NormalFormSpec::q_klmp(n, k, l, m, p, xi.clone())) {
                                Ok(q) => q,
                                Err(e) => {
                                    t.fail(format!("{ctx}: {e}"));
                                    continue;
                                }
                            };
                            let derived = derived_space(&g, &q);
                            let projected = derived.sum(&sp1).expect("same ambient");
                            t.check(projected.contains_space(&lower), || format!("{ctx}: lower bound modulo sp(1)"));
                            if p == 0 || k + l + m + p < n {
                                t.check(derived.contains_space(&lower), || format!("{ctx}: lower bound"));
                            } else {
                                let missing = lower.dim() - derived.intersection(&lower).expect("same ambient").dim();
                                t.check(missing == 3, || format!("{ctx}: lower bound misses {missing}, expected 3"));
                            }
                            t.check(upper.contains_space(&normalizer_in(&g, k_alg, &q)), || format!("{ctx}: upper bound"));
                            if l > 0 && m > 0 {
                                let hit = derived.basis().iter().any(|v| {
                                    let mat = g.to_matrix(v).expect("element of the algebra");
                                    (k..k + l).any(|i| (k + l..k + l + m).any(|j| !mat.get(n + 1 + i, j).is_zero()))
                                });
                                let off_complex = xi.iter().any(|x| !x.c.is_zero() || !x.d.is_zero());
                                t.check(hit == off_complex, || format!("{ctx}: B-block between L and M slots"));
                            }
                        }
                    }
                }
            }
        }
    }
    t.finish()
}
