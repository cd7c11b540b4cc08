//! Black-box finite group arithmetic.
//!
//! Every carrier implements [`GroupElement`]. Products read left to right:
//! `a.mul(&b)` applies `a` first and then `b`. Conjugation of `x` by `g`
//! is `g·x·g⁻¹` under that convention.

pub mod named;
mod ops;
mod perm;
mod table;

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;

pub use ops::{
    centralizer, conjugacy_class, conjugacy_classes, is_simple, normal_closure,
    orbit_stabilizer, proper_normal_witness, ConjugacyClasses, ConjugationAction,
};
pub use perm::Permutation;
pub use table::{closure, FiniteGroupTable, SubgroupBuilder, DEFAULT_CEILING};

pub trait GroupElement: Clone + Eq + Ord + Hash + Debug + Send + Sync {
    type Key: Clone + Eq + Ord + Hash + Debug;

    /// Product applying `self` first, then `other`. Carriers must match.
    fn mul(&self, other: &Self) -> Self;

    fn inv(&self) -> Self;

    fn identity_like(&self) -> Self;

    fn is_identity(&self) -> bool;

    fn check_compatible(&self, other: &Self) -> Result<()>;

    /// Canonical key; equal keys iff equal elements.
    fn key(&self) -> Self::Key;

    /// Machine-readable rendering used by reports.
    fn render(&self) -> serde_json::Value;

    /// Rejects values that are not group elements (e.g. singular matrices).
    fn validate(&self) -> Result<()> {
        Ok(())
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul(other))
    }

    /// `g·self·g⁻¹`.
    fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inv())
    }

    fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }
}
