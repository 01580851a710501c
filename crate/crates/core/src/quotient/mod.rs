//! Artinian quotients `k[x]/I`: standard monomials, Hilbert series,
//! multiplication matrices, socles, equivariant traces and inverse systems.

mod algebra;
mod apolarity;
mod standard;

pub use algebra::QuotientAlgebra;
pub use apolarity::{annihilator, annihilator_up_to, contract, DualPolynomial};
pub use standard::{
    hilbert_series, standard_monomials, standard_monomials_with_bound, HilbertSeries, StandardBasis,
};
