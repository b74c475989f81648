//! The concrete orthogonal-polynomial families and their verification
//! checks: Wilson, continuous dual Hahn, generalized Dumont-Foata, Hahn,
//! plus the integer-sequence oracles they specialize to.

pub mod cdh;
pub mod dumont_foata;
pub mod hahn;
pub mod sequences;
pub mod wilson;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter pole: {0}")]
    ParameterPole(String),
    #[error("requires a nonnegative integer parameter: {0}")]
    NonIntegerN(String),
}

pub use cdh::CdhParams;
pub use dumont_foata::DumontFoataParams;
pub use hahn::HahnParams;
pub use wilson::WilsonParams;
