//! Exact computations for minimal surfaces isogenous to a product
//! `S = (C × D)/G` with `G` finite abelian acting diagonally.
//!
//! Every quantity is an integer or an exact rational rotation number; no
//! floating point is involved anywhere.

pub mod abelian;
pub mod cli;
pub mod constructions;
pub mod cover;
pub mod document;
pub mod fiber;
pub mod prodquot;
pub mod rotation;
pub mod search;
mod snf;

pub use abelian::{AbelianGroup, Automorphism, Character, Element, GroupError, Subgroup};
pub use cover::{CoverDatum, CoverDoc, CoverError, CoverViolation};
pub use fiber::{defect, Classification, DefectReport, FiberError, FiberModel, ReducedConfig, SingularPoint};
pub use prodquot::{ProductQuotient, SurfaceError, SurfaceRecord};
pub use rotation::Rotation;
pub use search::{run_census, CensusEntry, SearchParams};
