//! Finite groups at desk scale: permutation and table backends, chief
//! series, Sylow families, the partial Π-property decision procedure, and a
//! harness that checks theorem statements extensionally on a catalog.

pub mod bsgs;
pub mod construct;
pub mod error;
pub mod group;
pub mod perm;
pub mod subgroup;

pub use construct::{quotient, restrict, semidirect_product, Embedded, Quotient};
pub use error::{GpiError, Result};
pub use group::{group_from_generators, Elem, Group, Limits};
pub use perm::Perm;
pub use subgroup::Subgroup;

pub mod desc;
pub mod families;
pub mod primes;
pub mod series;
pub mod structure;
#[cfg(test)]
mod testkit;
pub mod harness;
pub mod recognize;
pub mod sylow;
pub mod pi;
pub mod formation;
