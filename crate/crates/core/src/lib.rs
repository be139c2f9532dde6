//! Exact GF(2) computer algebra for Euler-class obstructions to equivariant
//! maps `S^n × V_{n,ℓ} → S(V)` under `(C₂)^{ℓ+1}`.
//!
//! The crate is organized bottom-up:
//!
//! * [`f2_poly`]: multivariate polynomials over the two-element field, with
//!   complete homogeneous symmetric polynomials and truncated power-series
//!   inversion.
//! * [`linalg`]: packed bit-row echelon bases used by the per-degree oracle.
//! * [`quotient_ring`]: graded quotient rings with a Gröbner normal-form
//!   engine, an independent per-degree linear-algebra engine, and Hilbert
//!   functions.
//! * [`rep_theory`]: characters and real representations of `(C₂)^r`.
//! * [`topology_facts`]: cohomology presentations of `RP^n` and the real
//!   partial flag manifolds `G_ℝ(1,…,1,n−ℓ)`.
//! * [`obstruction`]: Euler-class images and the nonexistence verdict.

pub mod error;
pub mod f2_poly;
pub mod linalg;
pub mod obstruction;
pub mod quotient_ring;
pub mod rep_theory;
pub mod topology_facts;

pub use error::{Error, Result};
pub use f2_poly::{complete_symmetric, series_invert, Monomial, PolyF2, Vars};
pub use obstruction::{
    certify_no_equivariant_map, certify_with_engine, euler_class_image, Engine, ObstructionVerdict,
};
pub use quotient_ring::{HilbertTable, IdealSlice, MonomialOrder, RingPresentation};
pub use rep_theory::{Character, RepSpec};
pub use topology_facts::{DifferentialTable, FlagSpec};
