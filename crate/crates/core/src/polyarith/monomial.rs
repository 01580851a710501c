use std::fmt;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

/// Exponent vector of a monomial over a fixed list of ambient variables.
///
/// The total degree is cached; it is the first key of every graded order.
#[derive(Clone)]
pub struct Monomial {
    exps: SmallVec<[u16; 12]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn new(exps: &[u16]) -> Self {
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    /// `x_var^power` in a ring with `nvars` variables.
    pub fn var_pow(nvars: usize, var: usize, power: u16) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[var] = power;
        m.degree = power as u32;
        m
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        Self::var_pow(nvars, var, 1)
    }

    /// Product of the listed variables, each to the first power.
    pub fn squarefree(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Monomial::one(nvars);
        for v in vars {
            m.exps[v] += 1;
            m.degree += 1;
        }
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 12]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` is set when variable `i` occurs (variables past 63 share bit 63).
    pub fn divmask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | 1 << i.min(63))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Relabels variables: variable `i` becomes variable `images[i]`.
    pub fn permuted(&self, images: &[usize]) -> Monomial {
        let mut exps = SmallVec::from_elem(0, self.nvars());
        for (i, &e) in self.exps.iter().enumerate() {
            exps[images[i]] = e;
        }
        Monomial { exps, degree: self.degree }
    }

    /// Moves the monomial into a ring with `nvars` variables through `map`:
    /// variable `i` becomes `map[i]`, or must have exponent zero when `map[i]` is `None`.
    pub fn remap(&self, nvars: usize, map: &[Option<usize>]) -> Option<Monomial> {
        let mut exps = SmallVec::from_elem(0, nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            match map[i] {
                Some(j) => exps[j] += e,
                None if e > 0 => return None,
                None => {}
            }
        }
        Some(Monomial { exps, degree: self.degree })
    }

    /// Sets the exponent of `var` to zero, returning the removed power.
    pub fn split_off(&self, var: usize) -> (Monomial, u16) {
        let e = self.exps[var];
        let mut m = self.clone();
        m.exps[var] = 0;
        m.degree -= e as u32;
        (m, e)
    }

    /// All monomials of total degree `degree` in `nvars` variables, in lex-descending order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        fn rec(buf: &mut Vec<u16>, var: usize, nvars: usize, left: u32, out: &mut Vec<Monomial>) {
            if var + 1 == nvars {
                buf.push(left as u16);
                out.push(Monomial::new(buf));
                buf.pop();
                return;
            }
            for e in (0..=left).rev() {
                buf.push(e as u16);
                rec(buf, var + 1, nvars, left - e, out);
                buf.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(&mut Vec::with_capacity(nvars), 0, nvars, degree, &mut out);
        out
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars()).map(|i| format!("x{i}")).collect();
        f.write_str(&super::ring::format_monomial(self, &names))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::new(&[1, 1, 0]);
        let b = Monomial::new(&[1, 0, 1]);
        assert_eq!(a.lcm(&b), Monomial::new(&[1, 1, 1]));
        assert!(a.divides(&a.lcm(&b)));
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b).div(&a), Some(Monomial::var(3, 2)));
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(3, 0).is_coprime(&Monomial::var(3, 1)));
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(5, 7).len(), 330);
        assert_eq!(Monomial::all_of_degree(4, 0), vec![Monomial::one(4)]);
    }

    #[test]
    fn permute_and_remap() {
        let m = Monomial::new(&[2, 0, 1]);
        assert_eq!(m.permuted(&[1, 2, 0]), Monomial::new(&[1, 2, 0]));
        assert_eq!(m.remap(2, &[Some(0), None, Some(1)]), Some(Monomial::new(&[2, 1])));
        assert_eq!(m.remap(2, &[None, Some(0), Some(1)]), None);
        assert_eq!(m.split_off(0), (Monomial::new(&[0, 0, 1]), 2));
    }
}
