//! Exact rational algebra on tensor spaces driven by path signatures.
//!
//! Everything here works over arbitrary-precision rationals, so every
//! identity the crate checks is checked as an exact equality. The crate is
//! `no_std` and only needs an allocator; file formats, caching and the
//! command-line frontend live in the `thrallkit` companion crate.
//!
//! Module map:
//!
//! * [`combinatorics`]: words, Lyndon words, partitions, tableaux and the
//!   counting formulas.
//! * [`permutation`]: permutations of `{1..k}` in one-line form.
//! * [`linalg`]: Gaussian elimination over the rationals.
//! * [`tensor`]: dense tensors, truncated tensor series, slot permutations,
//!   flattenings.
//! * [`group_algebra`]: the rational group algebra of `S_k`, Young
//!   symmetrizers, central and higher Lie idempotents.
//! * [`symfun`]: symmetric functions in the power-sum basis and Thrall
//!   coefficients.
//! * [`free_lie`]: the Lyndon basis of the free Lie algebra, truncated
//!   exp/log, the maps `phi_k` and `f_lambda`, and the Thrall decomposition.
//! * [`shuffle`]: shuffle products, group-likeness, signatures of
//!   piecewise-linear paths.
//! * [`invariants`]: SL-invariant functionals and their Thrall grading.
//! * [`rank_variety`]: rank-one and symmetry diagnostics for signature
//!   tensors.

#![no_std]

extern crate alloc;

pub mod combinatorics;
pub mod error;
pub mod free_lie;
pub mod group_algebra;
pub mod invariants;
pub mod linalg;
pub mod permutation;
pub mod rank_variety;
pub mod scalar;
pub mod shuffle;
pub mod symfun;
pub mod tensor;

pub use combinatorics::{Partition, Word, YoungTableau};
pub use error::{Error, Result};
pub use free_lie::LieElement;
pub use group_algebra::GroupAlgebraElement;
pub use permutation::Permutation;
pub use scalar::Scalar;
pub use shuffle::{PiecewiseLinearPath, WordFunctional};
pub use symfun::SymFun;
pub use tensor::{Tensor, TensorSeries};
