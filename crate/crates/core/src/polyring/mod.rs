//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every [`Polynomial`] carries its ring dimension and [`MonomialOrder`];
//! binary operations require both to match.

mod division;
mod ideal;
mod monomial;
mod order;
mod polynomial;
pub mod text;

use thiserror::Error;

pub use division::{normal_form, reduce, Division};
pub use ideal::Ideal;
pub use monomial::{Exponent, Monomial};
pub use order::MonomialOrder;
pub use polynomial::{Polynomial, Term};
pub use text::{parse_polynomial, parse_raw_terms, PolySystem, RawTerm, RingHeader, TextError};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Largest ring dimension accepted from parsed input or encodings. Every
/// monomial stores a dense exponent vector of this length.
pub const MAX_VARIABLES: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ring dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },
    #[error("monomial order mismatch: {left} vs {right}")]
    OrderMismatch {
        left: MonomialOrder,
        right: MonomialOrder,
    },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("{nvars} variables exceeds the limit of {MAX_VARIABLES}")]
    TooManyVariables { nvars: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("unknown monomial order {0:?} (expected lex, grlex or grevlex)")]
    UnknownOrder(String),
}
