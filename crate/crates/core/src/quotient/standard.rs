use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::GroebnerBasis;
use crate::polyarith::Monomial;

/// Monomials outside an initial ideal, grouped by degree.
///
/// Within a degree the monomials are listed in descending term order.
#[derive(Clone)]
pub struct StandardBasis {
    nvars: usize,
    monomials: Vec<Monomial>,
    offsets: Vec<usize>,
    index: HashMap<Monomial, usize>,
}

impl StandardBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Number of nonempty degrees (top degree + 1), zero for the zero ring.
    pub fn num_degrees(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Index range of the monomials of degree `d`.
    pub fn degree_range(&self, d: usize) -> Range<usize> {
        if d >= self.num_degrees() {
            return self.len()..self.len();
        }
        self.offsets[d]..self.offsets[d + 1]
    }

    pub fn of_degree(&self, d: usize) -> &[Monomial] {
        &self.monomials[self.degree_range(d)]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.index.contains_key(m)
    }
}

impl fmt::Debug for StandardBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degs: Vec<String> = (0..self.num_degrees())
            .map(|d| {
                let ms: Vec<String> = self.of_degree(d).iter().map(|m| m.to_string()).collect();
                ms.join(", ")
            })
            .collect();
        write!(f, "{{{}}}", degs.join("; "))
    }
}

/// Standard monomials of a reduced basis, with the degree bound `4 n`.
pub fn standard_monomials<F: Field>(g: &GroebnerBasis<F>) -> Result<StandardBasis> {
    standard_monomials_with_bound(g, 4 * g.nvars() as u32)
}

/// Standard monomials by breadth-first search over degrees. The complement of
/// a monomial ideal is closed under division, so every standard monomial of
/// degree d+1 is a variable times one of degree d.
pub fn standard_monomials_with_bound<F: Field>(g: &GroebnerBasis<F>, bound: u32) -> Result<StandardBasis> {
    if !g.is_reduced() {
        return Err(Error::Contract("standard monomials need a reduced Gröbner basis".into()));
    }
    let n = g.nvars();
    let lms = g.leading_monomials();
    let masks: Vec<u64> = lms.iter().map(Monomial::divmask).collect();
    let standard = |m: &Monomial| {
        let mask = m.divmask();
        !lms.iter().zip(&masks).any(|(l, lm)| lm & !mask == 0 && l.divides(m))
    };
    // a variable with no pure power among the leading monomials has all its powers standard
    if !g.is_unit() && (0..n).any(|v| !lms.iter().any(|l| l.support().eq([v]))) {
        return Err(Error::NotArtinian { bound });
    }

    let ord = g.order();
    let mut monomials = Vec::new();
    let mut offsets = vec![0];
    let mut layer: Vec<Monomial> = [Monomial::one(n)].into_iter().filter(|m| standard(m)).collect();
    let mut degree = 0u32;
    while !layer.is_empty() {
        if degree > bound {
            return Err(Error::NotArtinian { bound });
        }
        layer.sort_by(|a, b| ord.cmp(b, a));
        let next: BTreeSet<Vec<u16>> = layer
            .iter()
            .flat_map(|m| (0..n).map(move |v| m.mul(&Monomial::var(n, v))))
            .filter(|m| standard(m))
            .map(|m| m.exponents().to_vec())
            .collect();
        monomials.append(&mut layer);
        offsets.push(monomials.len());
        layer = next.iter().map(|e| Monomial::new(e)).collect();
        degree += 1;
    }
    let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    Ok(StandardBasis { nvars: n, monomials, offsets, index })
}

/// Hilbert function of a quotient, as a coefficient list indexed by degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    coefficients: Vec<u64>,
}

impl HilbertSeries {
    pub fn new(coefficients: Vec<u64>) -> Self {
        HilbertSeries { coefficients }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn dimension(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }
}

impl fmt::Display for HilbertSeries {
    /// Space-separated coefficients, e.g. `1 3 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coefficients.iter().map(u64::to_string).collect();
        write!(f, "{}", cs.join(" "))
    }
}

impl fmt::Debug for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}t"),
                _ => format!("{c}t^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

pub fn hilbert_series(b: &StandardBasis) -> HilbertSeries {
    HilbertSeries::new((0..b.num_degrees()).map(|d| b.degree_range(d).len() as u64).collect())
}
