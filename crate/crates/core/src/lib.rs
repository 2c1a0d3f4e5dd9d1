//! Finite-group complement machinery: exhaustive subgroup-complement search,
//! Sylow and Hall computations, F_p[H]-module decomposition, and the
//! classification predicates that decide membership in the complemented
//! p-subgroup classes, cross-validated against brute force on a desk-scale
//! corpus.

pub mod complement;
pub mod error;
pub mod fp;
pub mod group;
pub mod lattice;
pub mod pstruct;
pub mod subgroup;

pub use error::{Error, Result};
pub use group::{Caps, ElemId, FiniteGroup};
pub use subgroup::SubgroupHandle;
