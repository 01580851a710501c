use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, TermOrder};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Term<F> {
    pub mono: Monomial,
    pub coeff: F,
}

/// Sparse polynomial with exact coefficients.
///
/// Terms are kept sorted ascending in the polynomial's term order, so the
/// leading term is the last entry. Arithmetic between polynomials stored under
/// different orders is rejected; use [`Polynomial::with_order`] to re-key.
#[derive(Clone)]
pub struct Polynomial<F> {
    nvars: usize,
    order: TermOrder,
    terms: Vec<Term<F>>,
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::Dimension {
            expected: a,
            found: b,
        });
    }
    Ok(())
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize, order: TermOrder) -> Self {
        Polynomial {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, order: TermOrder, c: F) -> Self {
        Self::monomial(Monomial::one(nvars), c, order)
    }

    pub fn one(nvars: usize, order: TermOrder) -> Self {
        Self::constant(nvars, order, F::one())
    }

    pub fn var(nvars: usize, var: usize, order: TermOrder) -> Self {
        Self::monomial(Monomial::var(nvars, var), F::one(), order)
    }

    pub fn monomial(mono: Monomial, coeff: F, order: TermOrder) -> Self {
        let nvars = mono.nvars();
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term { mono, coeff }]
        };
        Polynomial {
            nvars,
            order,
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining repeats and dropping zeros.
    pub fn from_terms(
        nvars: usize,
        order: TermOrder,
        terms: impl IntoIterator<Item = (Monomial, F)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match acc.get_mut(&m) {
                Some(v) => *v = v.clone() + c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term<F>> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        terms.sort_by(|a, b| order.cmp(&a.mono, &b.mono));
        Polynomial {
            nvars,
            order,
            terms,
        }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn order(&self) -> TermOrder {
        self.order
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending order (leading term first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Term<F>> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&F> {
        self.terms
            .binary_search_by(|t| self.order.cmp(&t.mono, m))
            .ok()
            .map(|i| &self.terms[i].coeff)
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &F)> {
        self.terms
            .last()
            .map(|t| (&t.mono, &t.coeff))
            .ok_or(Error::ZeroPolynomial)
    }

    #[inline]
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.last().map(|t| &t.mono)
    }

    #[inline]
    pub fn lc(&self) -> Option<&F> {
        self.terms.last().map(|t| &t.coeff)
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<Term<F>> {
        self.terms.pop()
    }

    /// Builds from terms already sorted strictly ascending in `order` with nonzero coefficients.
    pub(crate) fn from_sorted(nvars: usize, order: TermOrder, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].mono, &w[1].mono) == Ordering::Less));
        Polynomial {
            nvars,
            order,
            terms,
        }
    }

    /// Re-keys the term storage under another order.
    pub fn with_order(&self, order: TermOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&a.mono, &b.mono));
        Polynomial {
            nvars: self.nvars,
            order,
            terms,
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        check_dims(self.nvars, other.nvars)?;
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order.to_string(),
                right: other.order.to_string(),
            });
        }
        Ok(())
    }

    /// `self + c * m * g`, merging the sorted term lists.
    pub(crate) fn add_scaled(&self, c: &F, m: &Monomial, g: &Self) -> Self {
        let ord = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|t| Term {
                mono: t.mono.mul(m),
                coeff: t.coeff.clone() * c.clone(),
            })
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match ord.cmp(&x.mono, &y.mono) {
                    Ordering::Less => out.push(a.next().unwrap().clone()),
                    Ordering::Greater => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = x.coeff.clone() + y.coeff;
                        if !s.is_zero() {
                            out.push(Term {
                                mono: y.mono,
                                coeff: s,
                            });
                        }
                    }
                },
            }
        }
        Polynomial {
            nvars: self.nvars,
            order: ord,
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_scaled(&F::one(), &Monomial::one(self.nvars), other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_scaled(&-F::one(), &Monomial::one(self.nvars), other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars, self.order));
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        Ok(Self::from_terms(
            self.nvars,
            self.order,
            small.terms.iter().flat_map(|s| {
                big.terms
                    .iter()
                    .map(move |b| (s.mono.mul(&b.mono), s.coeff.clone() * b.coeff.clone()))
            }),
        ))
    }

    /// Product with the single term `c * m`; the term order is preserved so no re-sort happens.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(m),
                    coeff: t.coeff.clone() * c.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.mul_term(&Monomial::one(self.nvars), c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars, self.order);
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    /// Scales so the leading coefficient is one. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.lc() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| t.mono.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, degree: u32) -> Self {
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|t| t.mono.degree() == degree)
                .cloned()
                .collect(),
        }
    }

    /// Homogeneous component of highest degree.
    pub fn top_form(&self) -> Self {
        match self.total_degree() {
            Some(d) => self.homogeneous_component(d),
            None => self.clone(),
        }
    }

    /// Applies `x_i -> x_{images[i]}` to every term.
    pub fn permute_vars(&self, images: &[usize]) -> Self {
        Self::from_terms(
            self.nvars,
            self.order,
            self.terms
                .iter()
                .map(|t| (t.mono.permuted(images), t.coeff.clone())),
        )
    }

    /// Moves the polynomial into another ring through a variable map (see [`Monomial::remap`]).
    pub fn remap(&self, nvars: usize, map: &[Option<usize>], order: TermOrder) -> Option<Self> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.mono.remap(nvars, map).map(|m| (m, t.coeff.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::from_terms(nvars, order, terms))
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exponent(var) > 0)
    }

    /// Ring homomorphism `var -> value`. The result lives in the ring with `var`
    /// deleted, which is where `value` must live.
    pub fn substitute(&self, var: usize, value: &Self) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::Range(format!(
                "variable index {var} in a ring with {} variables",
                self.nvars
            )));
        }
        check_dims(self.nvars - 1, value.nvars)?;
        let map: Vec<Option<usize>> = (0..self.nvars)
            .map(|i| match i.cmp(&var) {
                Ordering::Less => Some(i),
                Ordering::Equal => None,
                Ordering::Greater => Some(i - 1),
            })
            .collect();
        let value = value.with_order(self.order);
        let mut powers: Vec<Self> = vec![Self::one(value.nvars, self.order)];
        let mut acc = Self::zero(value.nvars, self.order);
        for t in &self.terms {
            let (rest, e) = t.mono.split_off(var);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().checked_mul(&value)?;
                powers.push(next);
            }
            let rest = rest.remap(value.nvars, &map).expect("variable removed");
            acc = acc.add_scaled(&t.coeff, &rest, &powers[e as usize]);
        }
        Ok(acc)
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.nvars != other.nvars {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::Ring::xs(self.nvars).format(self))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&-F::one())
    }
}
