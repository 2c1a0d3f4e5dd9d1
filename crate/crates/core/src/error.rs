//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Group element enumeration outgrew the hard element cap.
    #[error("element enumeration cap exceeded: closure reached {reached} elements, cap is {cap}")]
    ElementCapExceeded { reached: u64, cap: u64 },

    /// A lattice-backed operation was asked about a group above the lattice cap.
    #[error("subgroup lattice cap exceeded: group order {order} above cap {cap}")]
    CapExceeded { order: u64, cap: u64 },

    /// A spin-enumeration operation was asked about a module above the spin cap.
    #[error("spin enumeration cap exceeded: module size {size} above cap {cap}")]
    SpinCapExceeded { size: u64, cap: u64 },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subspace is not invariant under the module action")]
    NotInvariant,

    /// The map onto the action matrices has a kernel.
    #[error("action is not faithful: kernel has order {kernel_order}")]
    NotFaithful { kernel_order: u64 },

    #[error("bad parameters: {0}")]
    BadParameters(String),

    /// A theorem-route precondition does not hold for the input.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("unknown catalog name: {0}")]
    UnknownName(String),

    /// Malformed group file or inconsistent CLI input.
    #[error("bad input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
