//! Buchberger's algorithm and the computations built on it.

mod elimination;
mod engine;
mod hilbert;
mod ideal;
mod syzygy;

pub use elimination::{eliminate, hom_kernel, hom_kernel_modulo, ideal_intersect, HomGraph};
pub use hilbert::{affine_hilbert, GradedDims};
pub use ideal::{buchberger, ideal_equal, Ideal};
pub use syzygy::{syzygies, FreeModuleVector, ModuleEncoding, SyzygyBasis};

use thiserror::Error;

use crate::poly::PolyError;

/// Reduction steps allowed per basis computation unless overridden.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GbError {
    #[error("step budget of {limit} reductions exhausted")]
    Budget { limit: u64 },
    #[error("not a member of the ideal (remainder {0})")]
    NotMember(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
