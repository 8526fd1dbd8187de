//! Finite groups as explicit multiplication tables, with the symmetric
//! group `S_n` as the principal instance.
//!
//! Points are 0-based internally and 1-based in cycle notation.

mod finite;
mod permutation;

pub use finite::{
    conjugacy_classes, enumerate, enumerate_with_bound, transpositions, FiniteGroup,
    DEFAULT_ENUMERATION_BOUND, MAX_TABLE_ORDER,
};
pub use permutation::{group_orbits, OrbitPartition, Permutation};

/// `(−1)^{|σ|}`.
pub fn sign(p: &Permutation) -> i64 {
    p.sign()
}
