//! Free crossed squares of commutative algebras built from 2-dimensional
//! construction data, with the comparisons that certify them at desk scale.

pub mod crossed;
pub mod data;
pub mod homotopy;
pub mod jobs;
pub mod linalg;
pub mod report;
pub mod simplicial;
pub mod tensor_coprod;

pub use crossed::{
    free_crossed_on, free_precrossed, functor_m, h_eval, ideal_square, linearize, peiffer_quotient, verify_square,
    simplicial_square, verify_xmod, CrossedModuleRep, CrossedSquareRep, HRule, LinearizedCrossedModule, MObject, Subquotient,
};
pub use data::{ConstructionData, DataError, FieldSpec, Generator};
pub use homotopy::{
    aq_h2, build_2crossed, build_squared_complex, compare_xy, h2_witnesses, homotopy_report, pi0, pi1, pi2, H2Route,
    Pi0, Pi1, SquaredComplexRep, TwoCrossedComplexRep,
};
pub use jobs::{build_report, compare_report, verify_report};
pub use report::{AxiomReport, BuildReport, Check, CompareReport, HomotopyReport, Status, VerifyReport};
pub use simplicial::{moore, peiffer_p1, peiffer_p2, MooreData, P2Route, Skeleton2};
pub use tensor_coprod::{
    assemble_l, compare_corner, coproduct, tensor_square, Assembly, CoproductRep, TensorPresentation,
};

use thiserror::Error;
use xsquare_algebra::{GbError, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error("invalid construction: {0}")]
    Invalid(String),
}

impl From<PolyError> for CoreError {
    fn from(e: PolyError) -> Self {
        CoreError::Gb(GbError::Poly(e))
    }
}

impl CoreError {
    pub fn is_budget(&self) -> bool {
        matches!(self, CoreError::Gb(GbError::Budget { .. }))
    }
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;
