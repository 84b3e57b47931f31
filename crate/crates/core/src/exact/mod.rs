//! Exact arithmetic substrate: big rationals, sparse polynomials, fraction-free
//! linear algebra, valuations, interpolation and Gröbner bases.

mod deadline;
pub mod groebner;
pub mod interpolate;
pub mod linalg;
pub mod poly;
pub mod rational_serde;
pub mod univariate;
pub mod valuation;

pub use deadline::Deadline;
pub use groebner::{groebner_basis, GroebnerBasis, MonomialOrder};
pub use interpolate::{interpolation_abscissae, lagrange_interpolate};
pub use linalg::{bareiss_determinant, determinant_rational, kernel_rank, Field, Fp, RankInfo, Ring};
pub use poly::{monomials_below, monomials_of_degree, rat, ratio, Integer, Monomial, MultiPoly, Rational};
pub use univariate::{rational_roots, UniPoly};
pub use valuation::{ord_poly, ord_rational, Valuation, ValuationContext};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(Rational),
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("sample ({x}, {y}) disagrees with the degree-{bound} interpolant")]
    InconsistentSamples { x: Rational, y: Rational, bound: usize },
    #[error("{0} is not a prime")]
    NotPrime(Integer),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("deadline exceeded")]
    Cancelled,
}
