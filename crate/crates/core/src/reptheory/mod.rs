//! Symmetric groups: partitions, permutations, class functions and the
//! permutation characters that show up in the quotient computations.

mod characters;
mod classfun;
mod partition;
mod permutation;

pub use characters::{half_powerset_character, powerset_character, subset_character, xn_character};
pub use classfun::{ClassFunction, GradedClassFunction};
pub use partition::{conjugacy_classes, ConjugacyClass, Partition};
pub use permutation::{cycle_type, Permutation};

/// Largest n for which class sizes are computed (n! must fit in a u64).
pub const MAX_DEGREE: usize = 20;
