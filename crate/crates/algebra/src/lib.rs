//! Exact polynomial arithmetic and Groebner bases over `Q` or `F_p`.
//!
//! Rings carry variable weights; "degree" everywhere means weighted degree
//! and the default order is weighted degrevlex. Unit weights give the usual
//! notions.

pub mod groebner;
pub mod poly;

pub use groebner::{
    affine_hilbert, eliminate, hom_kernel, ideal_intersect, syzygies, FreeModuleVector, GbError,
    GradedDims, Ideal, SyzygyBasis, DEFAULT_BUDGET,
};
pub use poly::{
    format_poly, parse_poly, Coeff, Field, Monomial, MonomialOrder, PolyError, PolyRing, Polynomial,
    RingHom,
};
