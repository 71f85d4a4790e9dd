//! Finite groups given by Cayley tables, exact rational group algebras, Wedderburn
//! components from strong Shoda pairs, nilpotent decomposition checks and a small
//! `SL(2, Z)` toolkit.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod bitset;
pub mod group;
pub mod hilbert;
pub mod nd;
pub mod sl2z;
pub mod structure;
pub mod wedderburn;

pub use algebra::{AlgElement, Rational};
pub use bitset::ElemSet;
pub use group::{CayleyGroup, FamilyTag, GroupError};
pub use structure::Subgroup;
