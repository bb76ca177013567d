//! Cyclic subgroup counting over explicitly constructed finite groups.
//!
//! Every group is a permutation group whose elements are fully enumerated;
//! elements are addressed by their index in that enumeration. On top of the
//! [`Group`] type sit constructors for the standard families and a few named
//! groups, the cyclic subgroup census with its arithmetic identities,
//! structural predicates (solvable, supersolvable, simple, Sylow counts),
//! and a [`harness`] that runs classification checks over a corpus.

pub mod constructors;
pub mod counting;
pub mod error;
pub mod group;
pub mod harness;
pub mod matrix_groups;
pub mod perm;
pub mod structure;
pub mod subgroup;

pub use constructors::{build, GroupSpec};
pub use counting::{census, CyclicCensus};
pub use error::{Error, Result};
pub use group::Group;
pub use perm::Permutation;
pub use subgroup::SubgroupSet;

pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");
