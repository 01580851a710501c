//! The concrete objects of the binomial-ideal family and one verification
//! routine per statement about them.
//!
//! Conventions: `n` is the family parameter. `I_n`, `J_n`, `K_n` live in
//! `x_1..x_n`; the auxiliary ideal `L` for parameter `n` lives in
//! `x_1..x_{n-1}`, and `Q` for parameter `n` in `x_1..x_n, z`.

mod bernoulli;
mod claims;
mod cyclotomic;
mod ideals;
mod points;
mod report;

pub use bernoulli::{bernoulli_row, identity_check, row_sum_check, BernoulliTriangle};
pub use claims::{claim, claims, verify, Claim, Lab};
pub use cyclotomic::{cyclotomic_poly, CyclotomicElement, CyclotomicRing};
pub use ideals::{
    binomial_ideal, build_ideal, dual_socle_generator, expected_initial_generators, expected_standard_monomials,
    homogeneous_expected, initial_expected, unprojection_base, unprojection_ideal, Built, Which,
};
pub use points::{enumerate_points, points_count, verify_points_satisfy_ideal, SymbolicPoint};
pub use report::{Status, VerificationReport};

/// `1 + (n-2) 2^(n-1)`, the common dimension of all the quotients.
pub fn codimension(n: usize) -> u64 {
    assert!(n >= 2);
    1 + (n as u64 - 2) * (1u64 << (n - 1))
}
