use std::collections::HashSet;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::cyclotomic::{CyclotomicElement, CyclotomicRing};
use super::ideals::binomial_ideal;
use super::report::VerificationReport;
use crate::error::{Error, Result};

/// A point of the zero set, described symbolically: either the origin or
/// `x_j = ε_j ξ^k` with ξ a primitive `2(n-2)`-th root of unity and
/// `prod ε_j = (-1)^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum SymbolicPoint {
    Origin,
    Root { k: usize, eps: Vec<i8> },
}

impl fmt::Display for SymbolicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicPoint::Origin => write!(f, "0"),
            SymbolicPoint::Root { k, eps } => {
                let s: Vec<&str> = eps.iter().map(|&e| if e > 0 { "+" } else { "-" }).collect();
                write!(f, "xi^{k}({})", s.join(""))
            }
        }
    }
}

impl fmt::Debug for SymbolicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn points_count(n: usize) -> u64 {
    super::codimension(n)
}

/// The origin, then for k = 0..n-3 every admissible sign vector; the sign
/// vectors are listed by increasing bitmask of their negative entries.
pub fn enumerate_points(n: usize) -> Result<Vec<SymbolicPoint>> {
    if !(3..=24).contains(&n) {
        return Err(Error::Range(format!("points are enumerated for 3 <= n <= 24, got {n}")));
    }
    let mut out = vec![SymbolicPoint::Origin];
    for k in 0..n - 2 {
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize % 2 == k % 2 {
                let eps = (0..n).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect();
                out.push(SymbolicPoint::Root { k, eps });
            }
        }
    }
    Ok(out)
}

fn coordinates(ring: &CyclotomicRing, n: usize, p: &SymbolicPoint) -> Vec<CyclotomicElement> {
    match p {
        SymbolicPoint::Origin => vec![ring.zero(); n],
        SymbolicPoint::Root { k, eps } => eps
            .iter()
            .map(|&e| ring.scale(&ring.xi_pow(*k as i64), &BigInt::from(e)))
            .collect(),
    }
}

/// Substitutes every symbolic point into every generator of `I_n` in
/// `Z[ξ]/Φ_{2(n-2)}` and checks that the points are pairwise distinct.
pub fn verify_points_satisfy_ideal(n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let claim = "points";
    let points = enumerate_points(n)?;
    let ring = CyclotomicRing::new(2 * (n - 2));
    let ideal = binomial_ideal::<BigRational>(n)?;

    let mut seen = HashSet::new();
    for p in &points {
        let xs = coordinates(&ring, n, p);
        for g in ideal.generators() {
            let mut value = ring.zero();
            for t in g.terms() {
                assert!(t.coeff.is_integer(), "generators have integer coefficients");
                let mut term = ring.from_int(t.coeff.to_integer());
                for (j, &e) in t.mono.exponents().iter().enumerate() {
                    if e > 0 {
                        term = ring.mul(&term, &ring.pow(&xs[j], e as u32));
                    }
                }
                value = ring.add(&value, &term);
            }
            if !value.is_zero() {
                let witness = format!("{p} does not satisfy {}", ideal.ring().format(g));
                return Ok(VerificationReport::fail(claim, n, witness).timed(start));
            }
        }
        if !seen.insert(xs) {
            return Ok(VerificationReport::fail(claim, n, format!("{p} listed twice")).timed(start));
        }
    }
    if points.len() as u64 != points_count(n) {
        let witness = format!("{} points, expected {}", points.len(), points_count(n));
        return Ok(VerificationReport::fail(claim, n, witness).timed(start));
    }
    let witness = format!("{} distinct points in Z[xi]/Phi_{}", points.len(), ring.order());
    Ok(VerificationReport::pass(claim, n, Some(witness)).timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paperlab::Status;

    #[test]
    fn three_points_listing() {
        let pts = enumerate_points(3).unwrap();
        let s: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
        assert_eq!(s, vec!["0", "xi^0(+++)", "xi^0(--+)", "xi^0(-+-)", "xi^0(+--)"]);
        assert!(enumerate_points(2).is_err());
    }

    #[test]
    fn counts() {
        for n in 3..=8 {
            assert_eq!(enumerate_points(n).unwrap().len() as u64, 1 + (n as u64 - 2) * (1 << (n - 1)));
        }
    }

    #[test]
    fn points_lie_on_the_variety() {
        for n in 3..=5 {
            assert_eq!(verify_points_satisfy_ideal(n).unwrap().status, Status::Pass, "n = {n}");
        }
    }
}
