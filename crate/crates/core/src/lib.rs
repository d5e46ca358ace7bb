//! Finite transitive permutation groups and their intersecting sets.
//!
//! The crate builds a family of group actions (affine groups, wreath
//! products, PGL/PSL(2,q) coset actions), computes maximum intersecting
//! sets exactly at desk scale via branch-and-bound clique search on the
//! intersection graph, and checks the structural certificates that
//! replace exhaustive search where it is infeasible: intersecting
//! subgroups, sharply transitive sets, and Frobenius decompositions.
//!
//! The core is `no_std` + `alloc`; all collections are ordered
//! (`BTreeMap`/`BTreeSet`) so every enumeration, search and witness is
//! deterministic across runs and platforms.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod action;
pub mod affine;
pub mod analysis;
pub mod clique;
pub mod constructions;
pub mod error;
pub mod field;
pub mod graph;
pub mod group;
pub mod matrix;
pub mod perm;
pub mod psl2;
pub mod ratio;

pub use action::Action;
pub use error::Error;
pub use group::{Group, GroupElement};
pub use perm::Permutation;
pub use ratio::Ratio;
