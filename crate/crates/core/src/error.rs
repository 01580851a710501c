use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("term order mismatch: {left} vs {right}")]
    OrderMismatch { left: String, right: String },
    #[error("leading term of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("resource limit: pair queue reached {pairs} (cap {cap})")]
    ResourceLimit { pairs: usize, cap: usize },
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("quotient is not Artinian: standard monomials exist beyond degree {bound}")]
    NotArtinian { bound: u32 },
    #[error("ideal is not invariant under the permutation: {0}")]
    NotInvariant(String),
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("improper ideal: the ideal contains 1")]
    ImproperIdeal,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("class function mismatch: {0}")]
    ClassFunction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
