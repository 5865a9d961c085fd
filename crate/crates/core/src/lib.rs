//! Exact character theory for finite permutation groups, `no_std` + `alloc`.
//!
//! The crate computes irreducible character tables of permutation groups by
//! the Dixon–Schneider method (shared eigenvectors of class matrices over a
//! prime field, lifted to exact cyclotomic integers), derives character
//! codegrees `cod(chi) = |G : ker chi| / chi(1)`, and constructs the
//! projective linear families `L2(q)`, `PGL2(q)`, `PSigmaL2(q)`,
//! `PGammaL2(q)`, `SL2(q)` and the point stabilizer `M10` used to classify
//! nonsolvable groups with exactly three nonlinear codegrees.
//!
//! Everything is exact: no floats, no randomness, deterministic output for a
//! fixed input. Sizes are desk scale (groups up to a few tens of thousands of
//! elements); algorithms are chosen for transparency over asymptotics.

#![no_std]
#![forbid(unsafe_code)]
// Divisibility tests are written `x % n == 0` throughout to keep the
// number-theoretic code readable as congruences.
#![allow(clippy::manual_is_multiple_of)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod chartab;
pub mod codegree;
pub mod families;
pub mod numth;
pub mod permgroup;

pub use chartab::{
    character_table, format_table, verify_orthogonality, CharacterTable, ClassMatrix,
    CyclotomicValue,
};
pub use codegree::{CodegreeReport, NormalSubgroup, Verdict};
pub use families::{FamilyKind, FamilySpec, FiniteField};
pub use permgroup::{ClassTable, Group, Permutation};
