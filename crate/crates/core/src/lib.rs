//! Subgroup and normal-subgroup lattices of the Zassenhaus metacyclic groups
//! `ZM(m,n,r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>`.
//!
//! The lattice of all subgroups is enumerated through its triple
//! parametrization ([`lattice`]), normal subgroups are classified and counted
//! in closed form ([`normal`]), and [`oracle`] provides an independent
//! brute-force model to check both against.

pub mod error;
pub mod group;
pub mod lattice;
pub mod normal;
pub mod numtheory;
pub mod oracle;
pub mod poset;

pub use error::{Error, Result};
pub use group::{valid_triples, GroupElement, ZmTriple};
pub use lattice::{MaterializedSubgroup, SubgroupTriple};
pub use normal::NormalLatticeReport;
pub use numtheory::PrimePower;
pub use oracle::Oracle;
