//! Linear and symplectic algebra over 𝔽₂ in dimension `2g ≤ 8`.
//!
//! Coordinates are 0-based bits: `e₁` is bit 0, `e₂` bit 1, and so on.
//! The symplectic form pairs coordinates `(1,2), (3,4), …`.

mod matrix;
mod refinement;
mod symplectic;

pub use matrix::{GF2Matrix, GF2Vector, MAX_DIM};
pub use refinement::{
    iso_to_symmetric, quadratic_refinements, refinement_permutation, QuadraticRefinement,
    RefinementIso,
};
pub use symplectic::{
    is_symplectic, sp_counting_checks, sp_group, sp_order_formula, symplectic_form,
    symplectic_pair_count, transvection, transvections, witness_vector, SpCountingReport,
};
