use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Permutation, MAX_DEGREE};
use crate::error::{Error, Result};

/// A partition of n, parts in weakly decreasing order.
///
/// The derived ordering is lexicographic on the parts, so for n = 3 the
/// classes sort as (1,1,1) < (2,1) < (3).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Range("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All partitions of `n`, in ascending order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in 1..=rest.min(max) {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Order of the centralizer of a permutation of this cycle type:
    /// `z = prod_i i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> u64 {
        let mut z = 1u64;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i] as u64;
            let mut m = 0u64;
            while i < self.parts.len() && self.parts[i] as u64 == p {
                m += 1;
                i += 1;
                z *= p * m;
            }
        }
        z
    }

    /// The permutation whose cycles are consecutive runs of 1..n, longest first.
    pub fn representative(&self) -> Permutation {
        let n = self.n();
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &p in &self.parts {
            for k in 0..p {
                images[start + k] = start + (k + 1) % p;
            }
            start += p;
        }
        Permutation::from_images(images).expect("cycle layout is a bijection")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    pub size: u64,
    pub representative: Permutation,
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Conjugacy classes of S_n, in ascending partition order.
pub fn conjugacy_classes(n: usize) -> Result<Vec<ConjugacyClass>> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::Range(format!("symmetric group degree {n} not in 1..={MAX_DEGREE}")));
    }
    let order = factorial(n);
    Ok(Partition::all(n)
        .into_iter()
        .map(|p| ConjugacyClass {
            size: order / p.centralizer_order(),
            representative: p.representative(),
            cycle_type: p,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        let p3: Vec<String> = Partition::all(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(p3, vec!["(1,1,1)", "(2,1)", "(3)"]);
    }

    #[test]
    fn class_sizes() {
        let sizes: Vec<u64> = conjugacy_classes(3).unwrap().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let c4 = conjugacy_classes(4).unwrap();
        assert_eq!(c4.len(), 5);
        assert_eq!(c4.iter().map(|c| c.size).sum::<u64>(), 24);
        assert_eq!(conjugacy_classes(1).unwrap().len(), 1);
        for n in 1..=7 {
            let total: u64 = conjugacy_classes(n).unwrap().iter().map(|c| c.size).sum();
            assert_eq!(total, factorial(n));
        }
        assert!(conjugacy_classes(0).is_err());
    }

    #[test]
    fn representatives_have_their_cycle_type() {
        for n in 1..=7 {
            for c in conjugacy_classes(n).unwrap() {
                assert_eq!(c.representative.cycle_type(), c.cycle_type);
            }
        }
    }
}
