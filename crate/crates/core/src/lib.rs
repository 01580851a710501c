//! Exact commutative algebra for a family of zero-dimensional binomial ideals:
//! polynomial arithmetic and Buchberger's algorithm over an exact field,
//! Artinian quotients, symmetric-group characters, and checks of the
//! structural statements about the family.
//!
//! Everything is generic over [`Field`]; the `Q*` aliases fix the scalar to
//! arbitrary-precision rationals.

pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod paperlab;
pub mod polyarith;
pub mod quotient;
pub mod reptheory;

pub use error::{Error, Result};
pub use field::Field;

/// Arbitrary-precision rationals, the default scalar.
pub type Q = num_rational::BigRational;
pub type QPolynomial = polyarith::Polynomial<Q>;
pub type QIdeal = polyarith::Ideal<Q>;
pub type QGroebnerBasis = groebner::GroebnerBasis<Q>;
pub type QQuotientAlgebra = quotient::QuotientAlgebra<Q>;
pub type QDualPolynomial = quotient::DualPolynomial<Q>;
pub type QClassFunction = reptheory::ClassFunction<Q>;
pub type QGradedClassFunction = reptheory::GradedClassFunction<Q>;
pub type QMatrix = linalg::Matrix<Q>;
