//! Gröbner bases and the ideal operations built on them.

mod buchberger;
mod monomial_ideal;
mod ops;

pub use buchberger::{Engine, DEFAULT_PAIR_CAP};
pub(crate) use buchberger::Reducer;
pub use monomial_ideal::{krull_dim_monomial, MonomialIdeal};
pub use ops::{
    colon_ideal, eliminate, ideal_equal, ideal_member, initial_ideal, intersect,
    is_regular_element, krull_dim, quotient_by_element, top_form_ideal,
};

use crate::error::Result;
use crate::field::Field;
use crate::polyarith::{s_polynomial, Ideal, Monomial, Polynomial, Ring, TermOrder};

/// A Gröbner basis tagged with its term order.
///
/// Bases produced by [`Engine::buchberger`] are reduced: monic, no term of an
/// element divisible by another element's leading monomial, and sorted ascending
/// by leading monomial. That form is unique for a given ideal and order.
#[derive(Clone)]
pub struct GroebnerBasis<F> {
    ring: Ring,
    order: TermOrder,
    elements: Vec<Polynomial<F>>,
    reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    pub(crate) fn from_minimal(ring: Ring, order: TermOrder, minimal: Vec<Polynomial<F>>) -> Self {
        GroebnerBasis {
            ring,
            order,
            elements: buchberger::interreduce(minimal, order),
            reduced: true,
        }
    }

    /// Wraps a list that the caller asserts is a Gröbner basis. Marked as not reduced.
    pub fn from_elements_unchecked(ring: Ring, order: TermOrder, elements: Vec<Polynomial<F>>) -> Self {
        GroebnerBasis {
            ring,
            order,
            elements: elements.into_iter().map(|p| p.with_order(order)).collect(),
            reduced: false,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.lm().unwrap().clone()).collect()
    }

    /// True when the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.lm().unwrap().is_one())
    }

    /// Fully reduced normal form of `f`, stored under the basis order.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        Reducer::new(&self.elements).normal_form(&f.with_order(self.order))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal::new(self.ring.clone(), self.elements.clone()).expect("same ring")
    }

    /// Re-checks the Gröbner property: every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> Result<bool> {
        for (i, f) in self.elements.iter().enumerate() {
            for g in &self.elements[i + 1..] {
                let s = s_polynomial(f, g, self.order)?;
                if !self.normal_form(&s).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn display(&self) -> Vec<String> {
        self.elements.iter().map(|g| self.ring.format(g)).collect()
    }
}

impl<F: Field> std::fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroebnerBasis[{}]{:?}", self.order, self.display())
    }
}

/// Reduced Gröbner basis with the default engine settings.
pub fn buchberger<F: Field>(ideal: &Ideal<F>, ord: TermOrder) -> Result<GroebnerBasis<F>> {
    Engine::default().buchberger(ideal, ord)
}
