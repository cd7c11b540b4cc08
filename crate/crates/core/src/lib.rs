//! Finite group computations for classifying small quotients of braid
//! groups and of mod-2 symplectic groups.
//!
//! * [`group`]: permutations, enumerated groups, conjugacy, normal closure,
//!   orbit–stabilizer counts.
//! * [`gf2`]: 𝔽₂ vectors and matrices, the symplectic form, transvections,
//!   Sp(2g, 𝔽₂), quadratic refinements.
//! * [`braid`]: braid words and a free-group equality oracle.
//! * [`hom`]: enumeration and classification of homomorphisms `B_n → G`.
//! * [`checks`]: verification reports built on the above.
//! * [`catalog`]: catalog parsing and report serialization.

pub mod braid;
pub mod catalog;
pub mod checks;
pub mod error;
pub mod gf2;
pub mod group;
pub mod hom;

pub use error::{GroupError, Result};
