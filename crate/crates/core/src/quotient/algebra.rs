use std::fmt;
use std::sync::OnceLock;

use super::standard::{hilbert_series, standard_monomials, HilbertSeries, StandardBasis};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{Engine, GroebnerBasis};
use crate::linalg::Matrix;
use crate::polyarith::{Ideal, Monomial, Polynomial, Ring, TermOrder};
use crate::reptheory::Permutation;

/// A finite-dimensional quotient `k[x]/I` together with its monomial basis.
///
/// Multiplication matrices are built on first use and cached per variable.
pub struct QuotientAlgebra<F> {
    gb: GroebnerBasis<F>,
    basis: StandardBasis,
    mult: Vec<OnceLock<Matrix<F>>>,
}

impl<F: Field> QuotientAlgebra<F> {
    pub fn new(gb: GroebnerBasis<F>) -> Result<Self> {
        let basis = standard_monomials(&gb)?;
        let mult = (0..gb.nvars()).map(|_| OnceLock::new()).collect();
        Ok(QuotientAlgebra { gb, basis, mult })
    }

    pub fn from_ideal(engine: &Engine, ideal: &Ideal<F>, ord: TermOrder) -> Result<Self> {
        Self::new(engine.buchberger(ideal, ord)?)
    }

    pub fn gb(&self) -> &GroebnerBasis<F> {
        &self.gb
    }

    pub fn ring(&self) -> &Ring {
        self.gb.ring()
    }

    pub fn nvars(&self) -> usize {
        self.gb.nvars()
    }

    pub fn basis(&self) -> &StandardBasis {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        hilbert_series(&self.basis)
    }

    /// Coordinates of the normal form of `f` in the standard basis.
    pub fn coords(&self, f: &Polynomial<F>) -> Result<Vec<F>> {
        if f.nvars() != self.nvars() {
            return Err(Error::Dimension { expected: self.nvars(), found: f.nvars() });
        }
        let nf = self.gb.normal_form(&f.with_order(self.gb.order()));
        let mut v = vec![F::zero(); self.dimension()];
        for t in nf.terms() {
            let i = self.basis.index_of(&t.mono).expect("normal form is supported on standard monomials");
            v[i] = t.coeff.clone();
        }
        Ok(v)
    }

    /// The element with coordinate vector `v`.
    pub fn element(&self, v: &[F]) -> Polynomial<F> {
        let terms = self.basis.monomials().iter().cloned().zip(v.iter().cloned());
        Polynomial::from_terms(self.nvars(), self.gb.order(), terms)
    }

    fn coords_of_monomial(&self, m: Monomial) -> Vec<F> {
        self.coords(&Polynomial::monomial(m, F::one(), self.gb.order()))
            .expect("monomial lives in the ambient ring")
    }

    /// Matrix of multiplication by `x_var`: column j holds `x_var * basis[j]`.
    pub fn mult_matrix(&self, var: usize) -> Result<&Matrix<F>> {
        let cell = self
            .mult
            .get(var)
            .ok_or_else(|| Error::Range(format!("variable index {var} in a ring of {}", self.nvars())))?;
        Ok(cell.get_or_init(|| {
            let x = Monomial::var(self.nvars(), var);
            let cols = self.basis.monomials().iter().map(|b| self.coords_of_monomial(b.mul(&x))).collect();
            Matrix::from_columns(cols, self.dimension())
        }))
    }

    /// Basis of the socle `{f : x_i f = 0 for all i}`, as coordinate vectors.
    pub fn socle(&self) -> Vec<Vec<F>> {
        if self.dimension() == 0 {
            return Vec::new();
        }
        let mats: Vec<&Matrix<F>> = (0..self.nvars()).map(|i| self.mult_matrix(i).expect("in range")).collect();
        if mats.is_empty() {
            return Matrix::<F>::identity(self.dimension()).nullspace();
        }
        Matrix::vstack(&mats).nullspace()
    }

    pub fn socle_basis(&self) -> Vec<Polynomial<F>> {
        self.socle().iter().map(|v| self.element(v)).collect()
    }

    pub fn socle_dimension(&self) -> usize {
        self.socle().len()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle_dimension() == 1
    }

    /// Per-degree traces of the action of `perm` on the quotient.
    ///
    /// The ideal must be invariant under `perm`; this is checked generator by
    /// generator against the Gröbner basis.
    pub fn equivariant_graded_trace(&self, perm: &Permutation) -> Result<Vec<F>> {
        let n = self.nvars();
        if perm.degree() != n {
            return Err(Error::Dimension { expected: n, found: perm.degree() });
        }
        let images = perm.images();
        for g in self.gb.elements() {
            if !self.gb.contains(&g.permute_vars(images)) {
                return Err(Error::NotInvariant(format!(
                    "{perm} maps {} outside the ideal",
                    self.ring().format(g)
                )));
            }
        }
        let traces = (0..self.basis.num_degrees())
            .map(|d| {
                self.basis.degree_range(d).fold(F::zero(), |acc, j| {
                    let image = self.coords_of_monomial(self.basis.monomials()[j].permuted(images));
                    acc + image[j].clone()
                })
            })
            .collect();
        Ok(traces)
    }
}

impl<F: Field> fmt::Debug for QuotientAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuotientAlgebra")
            .field("gb", &self.gb)
            .field("basis", &self.basis)
            .finish()
    }
}
