use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::Engine;
use crate::linalg::Matrix;
use crate::polyarith::{Ideal, Monomial, Polynomial, Ring, TermOrder};

/// A polynomial in the dual variables `y_1..y_n`, acted on by contraction.
#[derive(Clone)]
pub struct DualPolynomial<F> {
    poly: Polynomial<F>,
}

impl<F: Field> PartialEq for DualPolynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

impl<F: Field> DualPolynomial<F> {
    pub fn new(poly: Polynomial<F>) -> Self {
        DualPolynomial { poly: poly.with_order(TermOrder::GRevLex) }
    }

    pub fn parse(nvars: usize, s: &str) -> Result<Self> {
        Ok(Self::new(Ring::ys(nvars).parse(s, TermOrder::GRevLex)?))
    }

    pub fn polynomial(&self) -> &Polynomial<F> {
        &self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl<F: Field> fmt::Display for DualPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Ring::ys(self.nvars()).format(&self.poly))
    }
}

impl<F: Field> fmt::Debug for DualPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Contraction: `x^a ∘ y^b = y^(b-a)` when `a <= b` componentwise, else 0.
pub fn contract<F: Field>(f: &Polynomial<F>, g: &DualPolynomial<F>) -> Result<DualPolynomial<F>> {
    if f.nvars() != g.nvars() {
        return Err(Error::Dimension { expected: g.nvars(), found: f.nvars() });
    }
    let terms = f.terms().flat_map(|a| {
        g.poly.terms().filter_map(move |b| {
            b.mono.div(&a.mono).map(|m| (m, a.coeff.clone() * b.coeff.clone()))
        })
    });
    Ok(DualPolynomial::new(Polynomial::from_terms(g.nvars(), TermOrder::GRevLex, terms)))
}

/// The annihilator of `g` under contraction, as an ideal in `x_1..x_n`.
///
/// Generators are collected from degree 1 to `deg g + 1`; in degree `deg g + 1`
/// every monomial annihilates `g`, so nothing new appears above that.
pub fn annihilator<F: Field>(engine: &Engine, g: &DualPolynomial<F>) -> Result<Ideal<F>> {
    let top = homogeneous_degree(g)?;
    annihilator_up_to(engine, g, top + 1)
}

/// Like [`annihilator`] but with an explicit cutoff on generator degrees.
///
/// Each degree contributes the kernel of the catalecticant map `f ↦ f ∘ g`.
/// Everything already in the ideal generated so far annihilates `g`, so
/// reducing a kernel element modulo that ideal stays in the kernel: it is
/// enough to restrict the map to the monomials that are standard for the
/// current generators. The kernel there is exactly the new generators needed
/// in degree d, and the result is a minimal homogeneous generating set.
pub fn annihilator_up_to<F: Field>(engine: &Engine, g: &DualPolynomial<F>, max_degree: u32) -> Result<Ideal<F>> {
    let top = homogeneous_degree(g)?;
    let n = g.nvars();
    let ring = Ring::xs(n);
    let ord = TermOrder::GRevLex;
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();

    for d in 1..=max_degree {
        let domain: Vec<Monomial> = Monomial::all_of_degree(n, d)
            .into_iter()
            .filter(|m| !lms.iter().any(|l| l.divides(m)))
            .collect();
        if domain.is_empty() {
            continue;
        }
        let codomain = if d <= top { Monomial::all_of_degree(n, top - d) } else { Vec::new() };
        let row: HashMap<&Monomial, usize> = codomain.iter().enumerate().map(|(i, m)| (m, i)).collect();

        let mut cat = Matrix::zeros(codomain.len(), domain.len());
        for (j, a) in domain.iter().enumerate() {
            for t in g.poly.terms() {
                if let Some(q) = t.mono.div(a) {
                    cat[(row[&q], j)] = t.coeff.clone();
                }
            }
        }
        let fresh: Vec<Polynomial<F>> = cat
            .nullspace()
            .into_iter()
            .map(|v| Polynomial::from_terms(n, ord, domain.iter().cloned().zip(v)))
            .collect();
        if !fresh.is_empty() {
            gens.extend(fresh);
            let gb = engine.buchberger(&Ideal::new(ring.clone(), gens.clone())?, ord)?;
            lms = gb.leading_monomials();
        }
    }
    Ideal::new(ring, gens)
}

fn homogeneous_degree<F: Field>(g: &DualPolynomial<F>) -> Result<u32> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !g.poly.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(g.poly.total_degree().expect("nonzero"))
}
