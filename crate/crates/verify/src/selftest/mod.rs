//! Invariant suites behind `verify selftest`.

mod blocks;
mod f4;
mod properties;

use std::time::{Duration, Instant};

use rankone::catalog::{onishchik_entries, onishchik_negatives, ClassicalGroup};
use rankone::exact_linalg::MatrixQ;
use rankone::lie_ambient::{construct_algebra, AlgebraFamily};
use rankone::sphericity_core::{transitive_on_spheres, LinearAction};

pub use blocks::{so_q_k_blocks, sp_q_klmp_bounds, su_q_kl_blocks};
pub use f4::f4_displays;
pub use properties::properties;

/// Result of one suite: how many checks ran and which failed.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub(crate) struct Tally {
    name: &'static str,
    checks: usize,
    failures: Vec<String>,
    start: Instant,
}

impl Tally {
    pub(crate) fn new(name: &'static str) -> Self {
        Tally { name, checks: 0, failures: Vec::new(), start: Instant::now() }
    }

    pub(crate) fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub(crate) fn fail(&mut self, what: String) {
        self.checks += 1;
        self.failures.push(what);
    }

    pub(crate) fn finish(self) -> SuiteOutcome {
        SuiteOutcome { name: self.name, checks: self.checks, failures: self.failures, elapsed: self.start.elapsed() }
    }
}

/// Dimensions of `g`, `p`, `m`, `g_alpha` and `g_2alpha` against the closed formulas.
pub fn structure_dims() -> SuiteOutcome {
    let mut t = Tally::new("structure dimensions");
    let mut families: Vec<(AlgebraFamily, [usize; 5])> = Vec::new();
    for n in 3..=8 {
        families.push((AlgebraFamily::So(n), [n * (n + 1) / 2, n, (n - 1) * (n - 2) / 2, n - 1, 0]));
    }
    for n in 1..=6 {
        families.push((AlgebraFamily::Su(n), [(n + 1) * (n + 1) - 1, 2 * n, (n - 1) * (n - 1), 2 * (n - 1), 1]));
    }
    for n in 2..=3 {
        let m = (n - 1) * (2 * n - 1) + 3;
        families.push((AlgebraFamily::Sp(n), [(n + 1) * (2 * n + 3), 4 * n, m, 4 * (n - 1), 3]));
    }
    for (f, want) in families {
        match construct_algebra(f) {
            Ok(g) => {
                let got = [g.dim(), g.p().map_or(0, |p| p.dim()), g.m().dim(), g.g_alpha().dim(), g.g_2alpha().dim()];
                t.check(got == want, || format!("{f}: dims {got:?}, expected {want:?}"));
            }
            Err(e) => t.fail(format!("{f}: {e}")),
        }
    }
    match construct_algebra(AlgebraFamily::F4Model) {
        Ok(g) => {
            let got = [g.dim(), g.m().dim(), g.a().dim(), g.g_alpha().dim(), g.g_2alpha().dim()];
            t.check(got == [37, 21, 1, 8, 7], || format!("f4 model: dims {got:?}"));
        }
        Err(e) => t.fail(format!("f4 model: {e}")),
    }
    t.finish()
}

fn orbit_check(t: &mut Tally, label: &str, gens: &[MatrixQ], dim: usize, seed: u64, want_transitive: bool) {
    let test = LinearAction::from_operators(gens.to_vec(), MatrixQ::identity(dim))
        .map_err(|e| e.to_string())
        .and_then(|act| transitive_on_spheres(&act, seed).map(|r| (act, r)).map_err(|e| e.to_string()));
    match test {
        Ok((act, r)) => {
            t.check(r.transitive == want_transitive, || format!("{label}: transitive = {}", r.transitive));
            if let Some(w) = &r.witness {
                t.check(act.rank_at(w) == r.witness_rank, || format!("{label}: witness does not replay"));
            }
        }
        Err(e) => t.fail(format!("{label}: {e}")),
    }
}

/// Every sphere-transitive table row up to `R^16` is transitive; the negative list is not.
pub fn sphere_transitive_groups(seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("sphere-transitive groups");
    let groups = [(ClassicalGroup::O, 16), (ClassicalGroup::U, 8), (ClassicalGroup::Sp, 4)];
    for (group, max) in groups {
        for n in 1..=max {
            match onishchik_entries(group, n) {
                Ok(entries) => {
                    for e in entries {
                        orbit_check(&mut t, &format!("{group}({n}) {}", e.label), &e.generators, e.real_dim(), seed, true);
                    }
                }
                Err(e) => t.fail(format!("{group}({n}): {e}")),
            }
        }
    }
    for e in onishchik_negatives() {
        orbit_check(&mut t, &format!("negative {}", e.label), &e.generators, e.real_dim(), seed, false);
    }
    t.finish()
}

/// All suites in a fixed order.
pub fn all_suites(seed: u64) -> Vec<SuiteOutcome> {
    vec![
        structure_dims(),
        so_q_k_blocks(),
        su_q_kl_blocks(),
        sp_q_klmp_bounds(),
        sphere_transitive_groups(seed),
        f4_displays(),
        properties(seed),
    ]
}
