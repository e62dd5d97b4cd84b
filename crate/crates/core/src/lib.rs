//! Exact verification of sphericity criteria for subalgebras of the real rank-one simple Lie
//! algebras `so(n,1)`, `su(n,1)`, `sp(n,1)` and a parabolic model of `f4`.

pub mod exact_linalg;
pub mod lie_ambient;
pub mod subalgebra_toolkit;
pub mod catalog;
pub mod sphericity_core;
