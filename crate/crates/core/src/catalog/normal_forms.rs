//! Normal forms of subspaces of `p` (reductive case) and of `n` (non-reductive case).

use num_traits::{One, Zero};

use crate::exact_linalg::{GaussianScalar, Scalar, SparseVec, Subspace};
use crate::lie_ambient::{AlgebraFamily, AmbientAlgebra, CMatrix, Quaternion, F4_GALPHA_START};

use super::elements::{sp_g2alpha, sp_galpha, sp_p, so_n, so_p, su_n, su_n_center, su_p};
use super::CatalogError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormalFormKind {
    QK,
    QKL,
    QKLMPXi,
    NK,
    NKL,
    NKLMPXi,
    NCF4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormSpec {
    pub family: AlgebraFamily,
    pub kind: NormalFormKind,
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub p: usize,
    pub xi: Vec<Quaternion>,
    pub c: Option<Scalar>,
}

impl NormalFormSpec {
    fn base(family: AlgebraFamily, kind: NormalFormKind) -> Self {
        NormalFormSpec { family, kind, k: 0, l: 0, m: 0, p: 0, xi: Vec::new(), c: None }
    }

    /// `q_k` in so(n,1).
    pub fn q_k(n: usize, k: usize) -> Self {
        NormalFormSpec { k, ..Self::base(AlgebraFamily::So(n), NormalFormKind::QK) }
    }

    /// `q_{k,l}` in su(n,1).
    pub fn q_kl(n: usize, k: usize, l: usize) -> Self {
        NormalFormSpec { k, l, ..Self::base(AlgebraFamily::Su(n), NormalFormKind::QKL) }
    }

    /// `q_{k,l,m,p,xi}` in sp(n,1).
    pub fn q_klmp(n: usize, k: usize, l: usize, m: usize, p: usize, xi: Vec<Quaternion>) -> Self {
        NormalFormSpec { k, l, m, p, xi, ..Self::base(AlgebraFamily::Sp(n), NormalFormKind::QKLMPXi) }
    }

    /// `n_k` in so(n,1) or in the f4 model.
    pub fn n_k(family: AlgebraFamily, k: usize) -> Self {
        NormalFormSpec { k, ..Self::base(family, NormalFormKind::NK) }
    }

    /// `n_{k,l}` in su(n,1).
    pub fn n_kl(n: usize, k: usize, l: usize) -> Self {
        NormalFormSpec { k, l, ..Self::base(AlgebraFamily::Su(n), NormalFormKind::NKL) }
    }

    /// `n_{k,l,m,p,xi}` in sp(n,1).
    pub fn n_klmp(n: usize, k: usize, l: usize, m: usize, p: usize, xi: Vec<Quaternion>) -> Self {
        NormalFormSpec { k, l, m, p, xi, ..Self::base(AlgebraFamily::Sp(n), NormalFormKind::NKLMPXi) }
    }

    /// `n_c = span(e1, e2, e3, c e4 + e5) + g_2alpha` in the f4 model.
    pub fn n_c(c: Scalar) -> Self {
        NormalFormSpec { c: Some(c), ..Self::base(AlgebraFamily::F4Model, NormalFormKind::NCF4) }
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        let bad = |why: &str| Err(CatalogError::InvalidParams(format!("{:?} on {}: {why}", self.kind, self.family)));
        let n = self.family.n().unwrap_or(0);
        let sum = self.k + self.l + self.m + self.p;
        match (self.kind, self.family) {
            (NormalFormKind::QK, AlgebraFamily::So(_)) if self.k <= n => Ok(()),
            (NormalFormKind::NK, AlgebraFamily::So(_)) if self.k < n => Ok(()),
            (NormalFormKind::NK, AlgebraFamily::F4Model) if self.k <= 8 => Ok(()),
            (NormalFormKind::QKL, AlgebraFamily::Su(_)) if self.k + self.l <= n => Ok(()),
            (NormalFormKind::NKL, AlgebraFamily::Su(_)) if self.k + self.l < n => Ok(()),
            (NormalFormKind::QKLMPXi, AlgebraFamily::Sp(_)) | (NormalFormKind::NKLMPXi, AlgebraFamily::Sp(_)) => {
                let limit = if self.kind == NormalFormKind::QKLMPXi { n } else { n - 1 };
                if sum > limit {
                    return bad("k + l + m + p too large");
                }
                if self.xi.len() != self.m {
                    return bad("need one xi per m-coordinate");
                }
                if self.xi.iter().any(|q| !q.is_imaginary() || !q.norm_sq().is_one()) {
                    return bad("xi must be unit imaginary quaternions");
                }
                Ok(())
            }
            (NormalFormKind::NCF4, AlgebraFamily::F4Model) if self.c.is_some() => Ok(()),
            _ => bad("parameters out of range"),
        }
    }

    /// Dimension predicted by the normal-form formulas.
    pub fn expected_dim(&self) -> usize {
        let n = self.family.n().unwrap_or(0);
        let four = |rest: usize| self.l + 2 * self.m + 3 * self.p + 4 * (rest - self.k - self.l - self.m - self.p);
        match self.kind {
            NormalFormKind::QK => n - self.k,
            NormalFormKind::NK => match self.family {
                AlgebraFamily::F4Model => self.k + 7,
                _ => n - 1 - self.k,
            },
            NormalFormKind::QKL => self.l + 2 * (n - self.k - self.l),
            NormalFormKind::NKL => self.l + 2 * (n - 1 - self.k - self.l) + 1,
            NormalFormKind::QKLMPXi => four(n),
            NormalFormKind::NKLMPXi => four(n - 1) + 3,
            NormalFormKind::NCF4 => 11,
        }
    }
}

fn g(re: i64, im: i64) -> GaussianScalar {
    GaussianScalar::from_ints(re, im)
}

/// Quaternionic coordinate slots `(z, w)` generating one coordinate of a `V_{k,l,m,p,xi}` pattern.
fn quaternion_slot_generators(kind: Slot, xi: Option<&Quaternion>) -> Vec<(GaussianScalar, GaussianScalar)> {
    let zero = GaussianScalar::zero();
    match kind {
        Slot::Zero => vec![],
        Slot::Real => vec![(g(1, 0), zero)],
        Slot::Plane => {
            // v = t0 + t1 xi with xi = alpha i + beta j + gamma k; v = z + j conj-free w gives
            // z = t0 + i alpha t1, w = (beta - i gamma) t1
            let q = xi.expect("plane slot needs xi");
            vec![
                (g(1, 0), zero),
                (GaussianScalar::new(Scalar::zero(), q.b.clone()), GaussianScalar::new(q.c.clone(), -&q.d)),
            ]
        }
        Slot::Three => vec![(g(1, 0), zero.clone()), (g(0, 1), zero), (GaussianScalar::zero(), g(1, 0))],
        Slot::Full => vec![(g(1, 0), g(0, 0)), (g(0, 1), g(0, 0)), (g(0, 0), g(1, 0)), (g(0, 0), g(0, 1))],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Zero,
    Real,
    Plane,
    Three,
    Full,
}

fn slots(spec: &NormalFormSpec, count: usize) -> Vec<Slot> {
    let (k, l, m, p) = (spec.k, spec.l, spec.m, spec.p);
    (0..count)
        .map(|i| {
            if i < k {
                Slot::Zero
            } else if i < k + l {
                Slot::Real
            } else if i < k + l + m {
                Slot::Plane
            } else if i < k + l + m + p {
                Slot::Three
            } else {
                Slot::Full
            }
        })
        .collect()
}

/// The displayed subspace for `spec`, in the algebra's coordinates.
pub fn make_normal_form(alg: &AmbientAlgebra, spec: &NormalFormSpec) -> Result<Subspace, CatalogError> {
    if spec.family != alg.family() {
        return Err(CatalogError::InvalidParams(format!("spec for {} used on {}", spec.family, alg.family())));
    }
    spec.validate()?;
    let n = spec.family.n().unwrap_or(0);
    let mut mats: Vec<CMatrix> = Vec::new();
    let mut coords: Vec<SparseVec> = Vec::new();
    match spec.kind {
        NormalFormKind::QK => mats.extend((spec.k..n).map(|i| so_p(n, i))),
        NormalFormKind::NK => match spec.family {
            AlgebraFamily::F4Model => {
                coords.extend((0..spec.k).map(|i| SparseVec::unit(F4_GALPHA_START + i)));
                coords.extend(alg.g_2alpha().basis().iter().cloned());
            }
            _ => mats.extend((spec.k..n - 1).map(|i| so_n(n, i))),
        },
        NormalFormKind::QKL => {
            for i in spec.k..n {
                mats.push(su_p(n, i, &g(1, 0)));
                if i >= spec.k + spec.l {
                    mats.push(su_p(n, i, &g(0, 1)));
                }
            }
        }
        NormalFormKind::NKL => {
            for i in spec.k..n - 1 {
                mats.push(su_n(n, i, &g(1, 0)));
                if i >= spec.k + spec.l {
                    mats.push(su_n(n, i, &g(0, 1)));
                }
            }
            mats.push(su_n_center(n));
        }
        NormalFormKind::QKLMPXi => {
            for (i, slot) in slots(spec, n).into_iter().enumerate() {
                let xi = spec.xi.get(i.wrapping_sub(spec.k + spec.l));
                for (z, w) in quaternion_slot_generators(slot, xi) {
                    mats.push(sp_p(n, i, &z, &w));
                }
            }
        }
        NormalFormKind::NKLMPXi => {
            for (j, slot) in slots(spec, n - 1).into_iter().enumerate() {
                let xi = spec.xi.get(j.wrapping_sub(spec.k + spec.l));
                for (z, w) in quaternion_slot_generators(slot, xi) {
                    mats.push(sp_galpha(n, j + 1, &z, &w));
                }
            }
            mats.push(sp_g2alpha(n, &Scalar::one(), &GaussianScalar::zero()));
            mats.push(sp_g2alpha(n, &Scalar::zero(), &g(1, 0)));
            mats.push(sp_g2alpha(n, &Scalar::zero(), &g(0, 1)));
        }
        NormalFormKind::NCF4 => {
            let c = spec.c.clone().expect("validated");
            coords.extend((0..3).map(|i| SparseVec::unit(F4_GALPHA_START + i)));
            coords.push(SparseVec::from_pairs([(F4_GALPHA_START + 3, c), (F4_GALPHA_START + 4, Scalar::one())]));
            coords.extend(alg.g_2alpha().basis().iter().cloned());
        }
    }
    if !mats.is_empty() {
        coords.extend(alg.span_of_matrices(&mats)?.basis().iter().cloned());
    }
    let out = Subspace::span(alg.dim(), &coords);
    if out.dim() != spec.expected_dim() {
        return Err(CatalogError::Construction(format!(
            "{:?} on {} has dimension {}, expected {}",
            spec.kind,
            spec.family,
            out.dim(),
            spec.expected_dim()
        )));
    }
    Ok(out)
}

/// `(real dimension, dimension of the largest complex subspace)` of a subspace of `p` in su(n,1),
/// with `p` identified with `C^n`.
pub fn su_complex_invariants(alg: &AmbientAlgebra, q: &Subspace) -> Result<(usize, usize), CatalogError> {
    let n = match alg.family() {
        AlgebraFamily::Su(n) => n,
        other => return Err(CatalogError::InvalidParams(format!("complex invariants need su(n,1), got {other}"))),
    };
    let mut real = Vec::new();
    let mut turned = Vec::new();
    for x in q.basis() {
        let m = alg.to_matrix(x)?;
        let mut v = Vec::new();
        let mut jv = Vec::new();
        for i in 0..n {
            let z = m.get(i, n);
            v.push((2 * i, z.re.clone()));
            v.push((2 * i + 1, z.im.clone()));
            jv.push((2 * i, -z.im.clone()));
            jv.push((2 * i + 1, z.re.clone()));
        }
        real.push(SparseVec::from_pairs(v));
        turned.push(SparseVec::from_pairs(jv));
    }
    let v = Subspace::span(2 * n, &real);
    let jv = Subspace::span(2 * n, &turned);
    let meet = v.intersection(&jv).map_err(|e| CatalogError::Construction(e.to_string()))?;
    Ok((v.dim(), meet.dim() / 2))
}

/// Per-coordinate shape of a subspace of `H^n` that splits along the coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotPattern {
    /// Dimension of the slice in each quaternionic coordinate.
    pub slot_dims: Vec<usize>,
    /// For each two-dimensional slot, a spanning imaginary direction of its imaginary part.
    pub xi_lines: Vec<Quaternion>,
}

impl SlotPattern {
    /// Counts of slices of dimension 0, 1, 2 and 3, i.e. `(k, l, m, p)`.
    pub fn klmp(&self) -> (usize, usize, usize, usize) {
        let count = |d| self.slot_dims.iter().filter(|x| **x == d).count();
        (count(0), count(1), count(2), count(3))
    }
}

/// Detects `(k, l, m, p)` and the `xi` lines of a subspace of `p` in sp(n,1); fails if the
/// subspace is not a direct sum of its coordinate slices.
pub fn sp_slot_pattern(alg: &AmbientAlgebra, q: &Subspace) -> Result<SlotPattern, CatalogError> {
    let n = match alg.family() {
        AlgebraFamily::Sp(n) => n,
        other => return Err(CatalogError::InvalidParams(format!("slot pattern needs sp(n,1), got {other}"))),
    };
    let h = n + 1;
    let mut vecs = Vec::new();
    for x in q.basis() {
        let m = alg.to_matrix(x)?;
        let mut v = Vec::new();
        for i in 0..n {
            let (z, w) = (m.get(i, n), m.get(h + i, n));
            v.extend([(4 * i, z.re), (4 * i + 1, z.im), (4 * i + 2, w.re), (4 * i + 3, -w.im)]);
        }
        vecs.push(SparseVec::from_pairs(v));
    }
    let v = Subspace::span(4 * n, &vecs);
    let meet = |a: &Subspace, b: &Subspace| a.intersection(b).map_err(|e| CatalogError::Construction(e.to_string()));
    let mut slot_dims = Vec::with_capacity(n);
    let mut xi_lines = Vec::new();
    for i in 0..n {
        let slice = meet(&v, &Subspace::coordinate(4 * n, 4 * i..4 * i + 4))?;
        if slice.dim() == 2 {
            let imaginary = meet(&slice, &Subspace::coordinate(4 * n, 4 * i + 1..4 * i + 4))?;
            let dir = imaginary.basis().first().ok_or_else(|| CatalogError::Construction("plane slot without imaginary line".into()))?;
            xi_lines.push(Quaternion::imaginary(dir.get(4 * i + 1), dir.get(4 * i + 2), dir.get(4 * i + 3)));
        }
        slot_dims.push(slice.dim());
    }
    if slot_dims.iter().sum::<usize>() != v.dim() {
        return Err(CatalogError::InvalidParams("subspace does not split along the quaternionic coordinates".into()));
    }
    Ok(SlotPattern { slot_dims, xi_lines })
}
