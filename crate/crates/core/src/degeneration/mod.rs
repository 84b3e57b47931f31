//! Degenerating families of plane curves over a discrete valuation ring, and
//! the comparison of `ord Δ` with Milnor numbers and Euler characteristics.

mod corpus;
mod family;
mod ledger;

pub use corpus::{builtin_corpus, load_corpus, CorpusEntry, ExpectedLedger, FAMILIES_JSON};
pub use family::{family_discriminant, interpolation_bound, DVRFamily, FamilyDiscriminant};
pub use ledger::{deligne_pencil_check, total_space_singularities, verify_formula, FormulaLedger};

use thiserror::Error;

use crate::exact::ExactError;
use crate::resultants::ResultantError;
use crate::singularity::SingularityError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegenerationError {
    #[error("discriminant vanishes identically: the generic fiber is singular")]
    IdenticallySingular,
    #[error("total space has a non-isolated singularity on the special fiber")]
    NotIsolatedTotalSpace,
    #[error("some singular point is not defined over Q")]
    NonRationalSingularity,
    #[error("special fiber is not reduced")]
    NonReducedSpecialFiber,
    #[error("invalid input: {0}")]
    Precondition(String),
    #[error("identity failed: ord = {}, rhs = {}", .0.lhs, .0.rhs)]
    AssertionFailure(Box<FormulaLedger>),
    #[error("corpus: {0}")]
    Corpus(String),
    #[error(transparent)]
    Resultant(#[from] ResultantError),
    #[error(transparent)]
    Singularity(#[from] SingularityError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
