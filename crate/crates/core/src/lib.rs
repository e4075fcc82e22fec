//! Finite topological spaces: generalized closed-set classes, normality
//! variants built on πgD̂-open sets, maps between spaces, and exhaustive
//! checking over every topology on a few points.

pub mod atlas;
pub mod error;
pub mod format;
pub mod genclass;
pub mod harness;
pub mod maps;
pub mod normality;
pub mod report;
pub mod space;
pub mod subset;
pub mod weakopen;

pub use error::{HarnessError, ParseError, TokenError, TopologyError};
pub use genclass::{ClassTable, ClosedClass, SetProperty};
pub use space::{validate_topology, Subspace, Topology};
pub use subset::{Subset, SubsetFamily};
pub use weakopen::{ClosureKind, OpenKind};
