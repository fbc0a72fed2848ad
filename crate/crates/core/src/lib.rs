//! Exact computation of the canonical basis `C(λ)` of the equivariant
//! K-group of the nilpotent cone, expressed in the Andersen–Jantzen basis,
//! together with the graded-multiplicity map `Γ` and verifiers for explicit
//! formulas.
//!
//! All arithmetic is exact: coefficients live in `ℤ[v, v⁻¹]` with
//! arbitrary-precision integers, and weights are integer vectors in
//! fundamental-weight coordinates.

pub mod canonical;
pub mod cli;
pub mod error;
pub mod gamma;
pub mod kclass;
pub mod laurent;
mod memo;
pub mod rootsys;
pub mod verify;

pub use canonical::{b_matrix, canonical_element, is_canonical, r_matrix_column, BMatrix, CanonicalElement};
pub use error::{Error, Result};
pub use gamma::{gamma_map, kostka_q, GradedCharacter};
pub use kclass::{aj_class, pushforward, straighten, Basis, GroupRingElement, KClass};
pub use laurent::LaurentPoly;
pub use rootsys::{RootSystem, Weight};
