//! Khovanskii-basis checks for the Hibi-type generators of distributive lattices.

pub mod checker;
pub mod classify;
pub mod error;
pub mod fixtures;
pub mod lattice;
pub mod par;
pub mod polyalg;
pub mod poset;
pub mod toric;

pub use error::*;
pub use lattice::{build_lattice, join_irreducibles, DistributiveLattice, PosetIdeal};
pub use par::Execution;
pub use poset::Poset;
