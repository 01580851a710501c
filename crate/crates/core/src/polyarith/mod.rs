//! Exact multivariate polynomials, term orders and the division algorithm.

mod division;
mod ideal;
mod monomial;
mod order;
mod polynomial;
mod ring;

pub use division::{reduce, s_polynomial};
pub(crate) use division::spoly_unchecked;
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use order::{cmp_monomials, TermOrder};
pub use polynomial::{Polynomial, Term};
pub use ring::Ring;
