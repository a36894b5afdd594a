//! Finite groups given by Cayley tables, with tools for deciding which
//! subgroup orders occur as cyclic or abelian subgroups.

mod abelian;
mod bitset;
pub mod catalog;
pub mod construct;
pub mod error;
mod group;
mod iso;
pub mod numbers;
pub mod predicates;
pub mod spec;
mod subgroup;
pub mod verify;
pub mod witness;
pub mod xgraph;

pub use error::{CatalogError, GroupError, NumberError, ParseError, WitnessError};
pub use group::{CayleyTableJson, FiniteGroup, CONSTRUCTION_LIMIT, DEFAULT_ENUMERATION_BOUND};
pub use spec::GroupSpec;
pub use subgroup::Subgroup;
