use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyarith::{Ideal, Monomial, Polynomial, Ring, TermOrder};
use crate::quotient::DualPolynomial;

const ORD: TermOrder = TermOrder::GRevLex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Which {
    /// `I_n`: `prod_{j != i} x_j - x_i`, and `<x_1, x_2>` for n = 2.
    I,
    /// The monomial list expected to generate `in_grevlex(I_n)`.
    JExpected,
    /// `x_i^2 - x_n^2` (i < n) and the n products of n-1 variables.
    KExpected,
    /// `L` in n-1 variables: `x_i^2 - x_{n-1}^2` (i < n-1) and `x_1..x_{n-1}`.
    L,
    /// `Q` in `x_1..x_n, z`: `L + <x_n p_i, x_n z - x_{n-1}^2>`.
    Q,
    /// The dual socle generator: sum of squares of the degree n-2 monomials in y.
    GDual,
}

impl std::fmt::Display for Which {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Which::I => "I",
            Which::JExpected => "J",
            Which::KExpected => "K",
            Which::L => "L",
            Which::Q => "Q",
            Which::GDual => "g",
        })
    }
}

impl std::str::FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "I" => Which::I,
            "J" => Which::JExpected,
            "K" => Which::KExpected,
            "L" => Which::L,
            "Q" => Which::Q,
            "g" => Which::GDual,
            _ => return Err(Error::Range(format!("unknown object {s:?}; expected I, J, K, L, Q or g"))),
        })
    }
}

#[derive(Clone)]
pub enum Built<F> {
    Ideal(Ideal<F>),
    Dual(DualPolynomial<F>),
}

impl<F: Field> std::fmt::Debug for Built<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Built::Ideal(i) => write!(f, "{i:?}"),
            Built::Dual(g) => write!(f, "{g}"),
        }
    }
}

pub fn build_ideal<F: Field>(which: Which, n: usize) -> Result<Built<F>> {
    Ok(match which {
        Which::I => Built::Ideal(binomial_ideal(n)?),
        Which::JExpected => Built::Ideal(initial_expected(n)?),
        Which::KExpected => Built::Ideal(homogeneous_expected(n)?),
        Which::L => Built::Ideal(unprojection_base(n)?),
        Which::Q => Built::Ideal(unprojection_ideal(n)?),
        Which::GDual => Built::Dual(dual_socle_generator(n)?),
    })
}

fn at_least(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::Range(format!("{what} needs n >= {min}, got {n}")));
    }
    Ok(())
}

fn mono<F: Field>(m: Monomial) -> Polynomial<F> {
    Polynomial::monomial(m, F::one(), ORD)
}

fn product_except<F: Field>(nvars: usize, upto: usize, skip: Option<usize>) -> Polynomial<F> {
    mono(Monomial::squarefree(nvars, (0..upto).filter(|&j| Some(j) != skip)))
}

fn square_difference<F: Field>(nvars: usize, i: usize, j: usize) -> Polynomial<F> {
    &mono(Monomial::var_pow(nvars, i, 2)) - &mono(Monomial::var_pow(nvars, j, 2))
}

pub fn binomial_ideal<F: Field>(n: usize) -> Result<Ideal<F>> {
    at_least(n, 2, "I")?;
    let ring = Ring::xs(n);
    if n == 2 {
        return Ideal::new(ring, vec![Polynomial::var(2, 0, ORD), Polynomial::var(2, 1, ORD)]);
    }
    let gens = (0..n)
        .map(|i| &product_except(n, n, Some(i)) - &Polynomial::var(n, i, ORD))
        .collect();
    Ideal::new(ring, gens)
}

fn subsets(size: usize, of: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << of)
        .filter(move |mask| mask.count_ones() as usize == size)
        .map(move |mask| (0..of).filter(|i| mask >> i & 1 == 1).collect())
}

/// Squares `x_i^2` (i < n), the product `x_1..x_{n-1}`, and
/// `x_n^(2j+1) prod_T x_i` for `|T| = n-2-j`.
pub fn expected_initial_generators(n: usize) -> Result<Vec<Monomial>> {
    at_least(n, 2, "J")?;
    let mut out: Vec<Monomial> = (0..n - 1).map(|i| Monomial::var_pow(n, i, 2)).collect();
    out.push(Monomial::squarefree(n, 0..n - 1));
    for j in 0..=n - 2 {
        for t in subsets(n - 2 - j, n - 1) {
            out.push(Monomial::squarefree(n, t).mul(&Monomial::var_pow(n, n - 1, 2 * j as u16 + 1)));
        }
    }
    Ok(out)
}

/// `x_n^s prod_T x_i` for `|T| = n-2-j`, `0 <= s <= 2j`.
pub fn expected_standard_monomials(n: usize) -> Result<Vec<Monomial>> {
    at_least(n, 2, "J")?;
    let mut out = Vec::new();
    for j in 0..=n - 2 {
        for t in subsets(n - 2 - j, n - 1) {
            for s in 0..=2 * j {
                out.push(Monomial::squarefree(n, t.iter().copied()).mul(&Monomial::var_pow(n, n - 1, s as u16)));
            }
        }
    }
    Ok(out)
}

pub fn initial_expected<F: Field>(n: usize) -> Result<Ideal<F>> {
    let gens = expected_initial_generators(n)?.into_iter().map(mono).collect();
    Ideal::new(Ring::xs(n), gens)
}

/// The homogeneous generator list; defined for n >= 2 so that the
/// auxiliary ideals of the smallest family member exist.
pub fn homogeneous_expected<F: Field>(n: usize) -> Result<Ideal<F>> {
    at_least(n, 2, "K")?;
    let mut gens: Vec<Polynomial<F>> = (0..n - 1).map(|i| square_difference(n, i, n - 1)).collect();
    gens.extend((0..n).map(|i| product_except(n, n, Some(i))));
    Ideal::new(Ring::xs(n), gens)
}

fn base_generators<F: Field>(nvars: usize, m: usize) -> Vec<Polynomial<F>> {
    let mut gens: Vec<Polynomial<F>> = (0..m - 1).map(|i| square_difference(nvars, i, m - 1)).collect();
    gens.push(product_except(nvars, m, None));
    gens
}

/// `L` for parameter n, in the n-1 variables `x_1..x_{n-1}`.
pub fn unprojection_base<F: Field>(n: usize) -> Result<Ideal<F>> {
    at_least(n, 3, "L")?;
    Ideal::new(Ring::xs(n - 1), base_generators(n - 1, n - 1))
}

/// `Q` for parameter n, in `x_1..x_n, z` (z is the last variable).
pub fn unprojection_ideal<F: Field>(n: usize) -> Result<Ideal<F>> {
    at_least(n, 3, "Q")?;
    let nv = n + 1;
    let m = n - 1;
    let (xn, z) = (n - 1, n);
    let mut gens = base_generators(nv, m);
    for i in 0..m {
        gens.push(product_except::<F>(nv, m, Some(i)).mul_term(&Monomial::var(nv, xn), &F::one()));
    }
    gens.push(&mono(Monomial::var(nv, xn).mul(&Monomial::var(nv, z))) - &mono(Monomial::var_pow(nv, m - 1, 2)));
    Ideal::new(Ring::xs_with(n, &["z"]), gens)
}

pub fn dual_socle_generator<F: Field>(n: usize) -> Result<DualPolynomial<F>> {
    at_least(n, 3, "g")?;
    let terms = Monomial::all_of_degree(n, n as u32 - 2)
        .into_iter()
        .map(|m| (m.mul(&m), F::one()));
    Ok(DualPolynomial::new(Polynomial::from_terms(n, ORD, terms)))
}
