//! Permutation characters, computed from cycle types.
//!
//! A subset of {1..n} is fixed by σ exactly when it is a union of cycles of σ,
//! so every count below is a count of cycle unions.

use super::{ClassFunction, Partition};
use crate::error::{Error, Result};
use crate::field::Field;

/// `counts[k]` = number of unions of cycles with k points in total.
fn union_sizes(p: &Partition) -> Vec<u64> {
    let n = p.n();
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for &len in p.parts() {
        for k in (len..=n).rev() {
            counts[k] += counts[k - len];
        }
    }
    counts
}

fn int<F: Field>(v: u64) -> F {
    F::from_i64(i64::try_from(v).expect("character value fits in i64"))
}

/// The permutation character of S_n on k-element subsets.
pub fn subset_character<F: Field>(n: usize, k: usize) -> Result<ClassFunction<F>> {
    if k > n {
        return Err(Error::Range(format!("subset size {k} exceeds n = {n}")));
    }
    Ok(ClassFunction::from_fn(n, |p| int(union_sizes(p)[k])))
}

/// The permutation character on all subsets: 2^(number of cycles).
pub fn powerset_character<F: Field>(n: usize) -> ClassFunction<F> {
    ClassFunction::from_fn(n, |p| int(union_sizes(p).iter().sum()))
}

/// The permutation character on even-size subsets, for odd n.
///
/// For odd n every permutation has an odd cycle, so even and odd fixed subsets
/// are equinumerous and the value is 2^(cycles - 1).
pub fn half_powerset_character<F: Field>(n: usize) -> Result<ClassFunction<F>> {
    if n.is_multiple_of(2) {
        return Err(Error::Range(format!("half powerset character needs odd n, got {n}")));
    }
    Ok(ClassFunction::from_fn(n, |p| int(union_sizes(p).iter().step_by(2).sum())))
}

/// The permutation character on the point set of the binomial ideal family:
/// the origin plus, for each k in 0..n-2, the sign vectors ε in {±1}^n with
/// Π ε = (-1)^k. A point is fixed by σ iff its sign vector is constant on the
/// cycles of σ.
pub fn xn_character<F: Field>(n: usize) -> Result<ClassFunction<F>> {
    if n < 2 {
        return Err(Error::Range(format!("point set needs n >= 2, got {n}")));
    }
    Ok(ClassFunction::from_fn(n, |p| {
        let c = p.len();
        // sign of Π ε over the cycles choosing -1 is (-1)^(points in those cycles)
        let mut by_parity = [0u64; 2];
        for mask in 0u64..1 << c {
            let neg: usize = (0..c).filter(|i| mask >> i & 1 == 1).map(|i| p.parts()[i]).sum();
            by_parity[neg % 2] += 1;
        }
        let fixed: u64 = (0..n.saturating_sub(2)).map(|k| by_parity[k % 2]).sum();
        int(1 + fixed)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reptheory::Permutation;
    use num_rational::BigRational;

    type Q = BigRational;

    fn vals(c: &ClassFunction<Q>) -> Vec<i64> {
        c.values().map(|(_, v)| v.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn small_characters() {
        assert_eq!(vals(&subset_character(3, 1).unwrap()), vec![3, 1, 0]);
        assert_eq!(vals(&subset_character(3, 0).unwrap()), vec![1, 1, 1]);
        assert_eq!(vals(&powerset_character(3)), vec![8, 4, 2]);
        assert_eq!(vals(&half_powerset_character(3).unwrap()), vec![4, 2, 1]);
        assert_eq!(vals(&xn_character(3).unwrap()), vec![5, 3, 2]);
        assert!(half_powerset_character::<Q>(4).is_err());
        assert!(subset_character::<Q>(3, 4).is_err());
    }

    #[test]
    fn xn_at_double_transposition() {
        let c = xn_character::<Q>(4).unwrap();
        let p = Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(c.at(&p), &Q::from_i64(5));
    }
}
