//! Exact arithmetic in `Z[ξ]/Φ_m(ξ)`, ξ a primitive m-th root of unity.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Integer polynomial, coefficients from the constant term up.
type IntPoly = Vec<BigInt>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Exact quotient of `a` by a monic `b`; panics if the division leaves a remainder.
fn div_exact(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    if rem.len() <= db {
        assert!(trim(rem).is_empty(), "inexact division");
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (k, bk) in b.iter().enumerate() {
            rem[i + k] -= &c * bk;
        }
        quot[i] = c;
    }
    assert!(trim(rem).is_empty(), "inexact division");
    quot
}

/// The m-th cyclotomic polynomial, `(x^m - 1) / prod_{d | m, d < m} Φ_d`.
pub fn cyclotomic_poly(m: usize) -> Vec<BigInt> {
    assert!(m >= 1);
    let mut p = vec![BigInt::zero(); m + 1];
    p[0] = BigInt::from(-1);
    p[m] = BigInt::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        p = div_exact(&p, &cyclotomic_poly(d));
    }
    p
}

/// An element of `Z[ξ]/Φ_m`, stored in the power basis `1, ξ, .., ξ^(φ(m)-1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclotomicElement {
    coeffs: Vec<BigInt>,
}

impl CyclotomicElement {
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug)]
pub struct CyclotomicRing {
    m: usize,
    phi: Vec<BigInt>,
}

impl CyclotomicRing {
    pub fn new(m: usize) -> Self {
        CyclotomicRing { m, phi: cyclotomic_poly(m) }
    }

    pub fn order(&self) -> usize {
        self.m
    }

    fn rank(&self) -> usize {
        self.phi.len() - 1
    }

    /// Reduces an arbitrary integer polynomial in ξ modulo Φ_m.
    fn reduce(&self, mut p: IntPoly) -> CyclotomicElement {
        let d = self.rank();
        for i in (d..p.len()).rev() {
            let c = std::mem::take(&mut p[i]);
            if c.is_zero() {
                continue;
            }
            for k in 0..d {
                p[i - d + k] -= &c * &self.phi[k];
            }
        }
        p.resize(d, BigInt::zero());
        CyclotomicElement { coeffs: p }
    }

    pub fn from_int(&self, v: impl Into<BigInt>) -> CyclotomicElement {
        self.reduce(vec![v.into()])
    }

    pub fn zero(&self) -> CyclotomicElement {
        self.from_int(0)
    }

    pub fn one(&self) -> CyclotomicElement {
        self.from_int(1)
    }

    /// ξ^e for any integer e (negative powers use ξ^m = 1).
    pub fn xi_pow(&self, e: i64) -> CyclotomicElement {
        let e = e.rem_euclid(self.m as i64) as usize;
        let mut p = vec![BigInt::zero(); e + 1];
        p[e] = BigInt::one();
        self.reduce(p)
    }

    pub fn add(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        CyclotomicElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }

    pub fn neg(&self, a: &CyclotomicElement) -> CyclotomicElement {
        CyclotomicElement { coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, a: &CyclotomicElement, c: &BigInt) -> CyclotomicElement {
        CyclotomicElement { coeffs: a.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        let mut p = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                p[i + j] += x * y;
            }
        }
        self.reduce(p)
    }

    pub fn pow(&self, a: &CyclotomicElement, mut e: u32) -> CyclotomicElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// ξ^m = 1 and ξ^d ≠ 1 for every proper divisor d of m.
    pub fn is_primitive_root_model(&self) -> bool {
        let xi = self.xi_pow(1);
        let one = self.one();
        self.pow(&xi, self.m as u32) == one
            && (1..self.m).filter(|d| self.m.is_multiple_of(*d)).all(|d| self.pow(&xi, d as u32) != one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[BigInt]) -> Vec<i64> {
        p.iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(&cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_poly(2)), vec![1, 1]);
        assert_eq!(ints(&cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(ints(&cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(ints(&cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn degrees_are_euler_phi() {
        let phi = |m: usize| (1..=m).filter(|k| num_integer::gcd(*k, m) == 1).count();
        for m in 1..=30 {
            assert_eq!(cyclotomic_poly(m).len() - 1, phi(m), "m = {m}");
        }
    }

    #[test]
    fn primitive_roots() {
        for m in 1..=16 {
            assert!(CyclotomicRing::new(m).is_primitive_root_model(), "m = {m}");
        }
        let r = CyclotomicRing::new(4);
        let i = r.xi_pow(1);
        assert_eq!(r.mul(&i, &i), r.from_int(-1));
        assert_eq!(r.xi_pow(-1), r.neg(&i));
    }
}
