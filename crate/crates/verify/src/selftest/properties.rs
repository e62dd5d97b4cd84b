//! Structural invariants: Jacobi, Cartan relations, root-space brackets, oracle self-tests,
//! subspace calculus and report round-trips.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rankone::catalog::TheoremId;
use rankone::exact_linalg::{frac, Scalar, SparseVec, Subspace};
use rankone::lie_ambient::{construct_algebra, f4_model, AlgebraFamily, AmbientAlgebra};
use rankone::sphericity_core::{restrict_action, transitive_on_spheres};
use rankone::subalgebra_toolkit::bracket_space;

use super::{SuiteOutcome, Tally};
use crate::campaign::run_campaign;
use crate::report::Report;

fn jacobi_at(g: &AmbientAlgebra, i: usize, j: usize, k: usize) -> bool {
    let (ei, ej, ek) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
    let a = g.bracket(g.basis_bracket(i, j), &ek);
    let b = g.bracket(g.basis_bracket(j, k), &ei);
    let c = g.bracket(g.basis_bracket(k, i), &ej);
    a.add(&b).add(&c).is_zero()
}

fn jacobi(t: &mut Tally, g: &AmbientAlgebra, rng: Option<&mut ChaCha8Rng>) {
    let d = g.dim();
    let mut bad = Vec::new();
    match rng {
        None => {
            for i in 0..d {
                for j in i + 1..d {
                    for k in j + 1..d {
                        if !jacobi_at(g, i, j, k) {
                            bad.push((i, j, k));
                        }
                    }
                }
            }
        }
        Some(rng) => {
            for _ in 0..400 {
                let (i, j, k) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
                if !jacobi_at(g, i, j, k) {
                    bad.push((i, j, k));
                }
            }
        }
    }
    t.check(bad.is_empty(), || format!("{}: Jacobi fails at {:?}", g.family(), &bad[..bad.len().min(3)]));
}

fn cartan(t: &mut Tally, g: &AmbientAlgebra) {
    let f = g.family();
    let (Some(k), Some(p)) = (g.k(), g.p()) else {
        t.fail(format!("{f}: no Cartan decomposition"));
        return;
    };
    t.check(k.dim() + p.dim() == g.dim() && k.sum(p).map(|s| s == g.full()).unwrap_or(false), || format!("{f}: g != k + p"));
    t.check(k.contains_space(&bracket_space(g, k, k)), || format!("{f}: [k,k] not in k"));
    t.check(p.contains_space(&bracket_space(g, k, p)), || format!("{f}: [k,p] not in p"));
    t.check(k.contains_space(&bracket_space(g, p, p)), || format!("{f}: [p,p] not in k"));
}

fn root_spaces(t: &mut Tally, g: &AmbientAlgebra) {
    let f = g.family();
    let aa = bracket_space(g, g.g_alpha(), g.g_alpha());
    t.check(&aa == g.g_2alpha(), || format!("{f}: [g_alpha, g_alpha] != g_2alpha"));
    t.check(g.g_alpha().contains_space(&bracket_space(g, g.m(), g.g_alpha())), || format!("{f}: [m, g_alpha] not in g_alpha"));
    t.check(g.g_2alpha().contains_space(&bracket_space(g, g.m(), g.g_2alpha())), || format!("{f}: [m, g_2alpha] not in g_2alpha"));
}

/// `m` on `g_alpha` is transitive on spheres in every family; the oracle's own dichotomy and
/// scaling checks run on each call.
fn oracle(t: &mut Tally, g: &AmbientAlgebra, seed: u64) {
    let f = g.family();
    match restrict_action(g, g.m(), g.g_alpha()) {
        Ok(act) => {
            for s in [seed, seed.wrapping_add(1), seed.wrapping_mul(3)] {
                match transitive_on_spheres(&act, s) {
                    Ok(r) => t.check(r.transitive, || format!("{f}: m not transitive on g_alpha spheres")),
                    Err(e) => t.fail(format!("{f}: oracle self-test: {e}")),
                }
            }
        }
        Err(e) => t.fail(format!("{f}: {e}")),
    }
}

fn random_subspace(rng: &mut ChaCha8Rng, dim: usize) -> Subspace {
    let count = rng.gen_range(0..=dim);
    let mut vecs = Vec::with_capacity(count);
    for _ in 0..count {
        let mut pairs = Vec::new();
        for i in 0..dim {
            if rng.gen_bool(0.15) {
                pairs.push((i, frac(rng.gen_range(-2..=2), 1)));
            }
        }
        vecs.push(SparseVec::from_pairs(pairs));
    }
    Subspace::span(dim, &vecs)
}

fn subspace_calculus(t: &mut Tally, g: &AmbientAlgebra, rng: &mut ChaCha8Rng) {
    let f = g.family();
    let d = g.dim();
    for _ in 0..8 {
        let a = random_subspace(rng, d);
        let b = random_subspace(rng, d);
        let (Ok(sum), Ok(meet)) = (a.sum(&b), a.intersection(&b)) else {
            t.fail(format!("{f}: sum or intersection failed"));
            continue;
        };
        t.check(sum.dim() + meet.dim() == a.dim() + b.dim(), || format!("{f}: dim(A+B) + dim(A^B) != dim A + dim B"));
        t.check(sum.contains_space(&a) && a.contains_space(&meet) && b.contains_space(&meet), || format!("{f}: lattice order"));
        let coords: Vec<Scalar> = (0..a.dim()).map(|_| frac(rng.gen_range(-7..=7), rng.gen_range(1..=5))).collect();
        let v = a.from_coordinates(&coords);
        t.check(a.coordinates(&v).as_deref() == Some(&coords[..]), || format!("{f}: coordinate round-trip"));
        t.check(a.reduce(&v).is_zero(), || format!("{f}: element does not reduce to zero"));
        match a.ortho_complement(&g.full(), g.gram_g()) {
            Ok(c) => t.check(
                c.dim() + a.dim() == d && c.intersection(&a).map(|m| m.is_zero()).unwrap_or(false),
                || format!("{f}: orthogonal complement"),
            ),
            Err(e) => t.fail(format!("{f}: {e}")),
        }
    }
}

fn report_round_trip(t: &mut Tally, seed: u64) {
    let runs: Vec<_> = (0..2).map(|_| run_campaign(TheoremId::T5_2, 4..=5, seed)).collect();
    match (&runs[0], &runs[1]) {
        (Ok(a), Ok(b)) => {
            let text = a.to_jsonl();
            t.check(text == b.to_jsonl(), || "two campaign runs differ".into());
            match Report::from_jsonl(&text) {
                Ok(parsed) => t.check(parsed.to_jsonl() == text && &parsed == a, || "JSON round-trip changed bytes".into()),
                Err(e) => t.fail(format!("report does not parse back: {e}")),
            }
        }
        _ => t.fail("campaign for the round-trip failed".into()),
    }
}

pub fn properties(seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("structural properties");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let small = [
        AlgebraFamily::So(3),
        AlgebraFamily::Su(1),
        AlgebraFamily::Su(2),
        AlgebraFamily::Su(3),
        AlgebraFamily::Sp(2),
        AlgebraFamily::Sp(3),
    ];
    let large = [AlgebraFamily::So(5), AlgebraFamily::So(8), AlgebraFamily::Su(5), AlgebraFamily::Su(6)];
    for f in small.iter().chain(&large) {
        let Ok(g) = construct_algebra(*f) else {
            t.fail(format!("{f}: construction failed"));
            continue;
        };
        let exhaustive = small.contains(f);
        jacobi(&mut t, &g, if exhaustive { None } else { Some(&mut rng) });
        cartan(&mut t, &g);
        if !matches!(f, AlgebraFamily::So(_) | AlgebraFamily::Su(1)) {
            root_spaces(&mut t, &g);
        } else {
            t.check(bracket_space(&g, g.g_alpha(), g.g_alpha()).is_zero(), || format!("{f}: [g_alpha, g_alpha] != 0"));
        }
        oracle(&mut t, &g, seed);
        subspace_calculus(&mut t, &g, &mut rng);
    }
    match f4_model() {
        Ok(g) => {
            jacobi(&mut t, &g, Some(&mut rng));
            root_spaces(&mut t, &g);
            oracle(&mut t, &g, seed);
            subspace_calculus(&mut t, &g, &mut rng);
        }
        Err(e) => t.fail(format!("f4 model: {e}")),
    }
    report_round_trip(&mut t, seed);
    t.finish()
}
