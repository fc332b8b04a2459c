//! Hopf-Galois structures on finite Galois groups, worked at the level of
//! regular permutation subgroups.
//!
//! A Hopf-Galois structure on a Galois extension with group `G` is a regular
//! subgroup `N ≤ Perm(G)` normalised by the left regular representation
//! `λ(G)`. This crate builds small groups from Cayley tables, enumerates such
//! subgroups through holomorphs, partitions them under conjugation by the
//! right regular representation, extracts the associated skew braces, and
//! implements the classical constructions (fixed-point-free pairs, abelian
//! maps, induced structures) together with their transport laws.

pub mod brace;
pub mod constructions;
pub mod correspondence;
pub mod error;
pub mod families;
pub mod group;
pub mod hgs;
pub mod perm;
pub mod rho;
pub mod suite;

pub use error::{Error, Result};
pub use group::{build_group, ElementId, FiniteGroup, GroupHom, GroupSpec, Subgroup};
pub use hgs::{enumerate_hgs, HgsInventory, RegularSubgroup};
pub use perm::{lambda, rho, Perm, PermGroup};
