use super::{Polynomial, Ring, TermOrder};
use crate::error::{Error, Result};
use crate::field::Field;

/// A finitely generated ideal. The zero ideal has no generators.
#[derive(Clone)]
pub struct Ideal<F> {
    ring: Ring,
    gens: Vec<Polynomial<F>>,
    homogeneous: bool,
}

impl<F: Field> Ideal<F> {
    /// Drops zero generators; the homogeneity flag is set when every generator is homogeneous.
    pub fn new(ring: Ring, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != ring.nvars() {
                return Err(Error::Dimension {
                    expected: ring.nvars(),
                    found: g.nvars(),
                });
            }
        }
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = gens.iter().all(Polynomial::is_homogeneous);
        Ok(Ideal {
            ring,
            gens,
            homogeneous,
        })
    }

    pub fn parse(ring: Ring, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| ring.parse(s, TermOrder::GRevLex))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal {
            ring,
            gens: Vec::new(),
            homogeneous: true,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when the ideal is known to be generated by homogeneous polynomials.
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// `self + other`.
    pub fn sum(&self, other: &Ideal<F>) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::Dimension {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(self.ring.clone(), gens)
    }

    pub fn with_generator(&self, g: Polynomial<F>) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.push(g);
        Self::new(self.ring.clone(), gens)
    }

    /// Applies `x_i -> x_{images[i]}` to every generator.
    pub fn permute_vars(&self, images: &[usize]) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.iter().map(|g| g.permute_vars(images)).collect(),
            homogeneous: self.homogeneous,
        }
    }

    /// Generatorwise substitution `var -> value`; the image lives in the ring without `var`.
    pub fn substitute(&self, var: usize, value: &Polynomial<F>) -> Result<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.substitute(var, value))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.ring.without(var), gens)
    }

    pub fn display(&self) -> String {
        let gs: Vec<String> = self.gens.iter().map(|g| self.ring.format(g)).collect();
        format!("<{}>", gs.join(", "))
    }
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.display())
    }
}
