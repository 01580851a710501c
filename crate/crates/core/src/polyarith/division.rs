use super::{Monomial, Polynomial, Term, TermOrder};
use crate::error::{Error, Result};
use crate::field::Field;

/// Multivariate division of `p` by the list `divisors` under `ord`.
///
/// Returns the remainder and one quotient per divisor with
/// `p = sum(q_i * g_i) + remainder`, where no term of the remainder is divisible
/// by a leading monomial of a divisor. At each step the leading term is divided
/// by the first divisor (in list order) whose leading monomial divides it.
pub fn reduce<F: Field>(
    p: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    ord: TermOrder,
) -> Result<(Polynomial<F>, Vec<Polynomial<F>>)> {
    let n = p.nvars();
    let divs = prepare(n, divisors, ord)?;
    let mut quotients = vec![Polynomial::zero(n, ord); divs.len()];
    let mut rest = p.with_order(ord);
    let mut remainder: Vec<Term<F>> = Vec::new();
    while let Some((m, c)) = rest.leading_term().ok().map(|(m, c)| (m.clone(), c.clone())) {
        match divs.iter().position(|g| g.lm().unwrap().divides(&m)) {
            Some(i) => {
                let g = &divs[i];
                let shift = m.div(g.lm().unwrap()).unwrap();
                let factor = c / g.lc().unwrap().clone();
                quotients[i] = quotients[i].add_scaled(&factor, &shift, &Polynomial::one(n, ord));
                rest = rest.add_scaled(&-factor, &shift, g);
            }
            None => {
                remainder.push(rest.pop_leading().unwrap());
            }
        }
    }
    remainder.reverse();
    Ok((Polynomial::from_sorted(n, ord, remainder), quotients))
}

fn prepare<F: Field>(
    n: usize,
    divisors: &[Polynomial<F>],
    ord: TermOrder,
) -> Result<Vec<Polynomial<F>>> {
    divisors
        .iter()
        .map(|g| {
            if g.nvars() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: g.nvars(),
                });
            }
            if g.is_zero() {
                return Err(Error::Contract("zero divisor in division".into()));
            }
            Ok(g.with_order(ord))
        })
        .collect()
}

/// The S-polynomial `(L / lt(f)) * f - (L / lt(g)) * g` with `L = lcm(lm f, lm g)`.
pub fn s_polynomial<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    ord: TermOrder,
) -> Result<Polynomial<F>> {
    if f.nvars() != g.nvars() {
        return Err(Error::Dimension {
            expected: f.nvars(),
            found: g.nvars(),
        });
    }
    let f = f.with_order(ord);
    let g = g.with_order(ord);
    let (fm, fc) = f.leading_term()?;
    let (gm, gc) = g.leading_term()?;
    Ok(spoly_unchecked(&f, fm, fc, &g, gm, gc))
}

pub(crate) fn spoly_unchecked<F: Field>(
    f: &Polynomial<F>,
    fm: &Monomial,
    fc: &F,
    g: &Polynomial<F>,
    gm: &Monomial,
    gc: &F,
) -> Polynomial<F> {
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).unwrap(), &fc.inv());
    a.add_scaled(&-gc.inv(), &l.div(gm).unwrap(), g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::Ring;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type P = Polynomial<BigRational>;
    const ORD: TermOrder = TermOrder::GRevLex;

    fn p(s: &str) -> P {
        Ring::xs(3).parse(s, ORD).unwrap()
    }

    #[test]
    fn single_division_step() {
        let (nf, q) = reduce(&p("x1^2"), &[p("x1^2 - x3^2")], ORD).unwrap();
        assert_eq!(nf, p("x3^2"));
        assert_eq!(q, vec![p("1")]);
    }

    #[test]
    fn standard_monomial_is_left_alone() {
        let j3: Vec<P> = ["x1^2", "x2^2", "x1*x2", "x1*x3", "x2*x3", "x3^3"].iter().map(|s| p(s)).collect();
        assert_eq!(reduce(&p("x3^2"), &j3, ORD).unwrap().0, p("x3^2"));
        assert!(reduce(&P::zero(3, ORD), &j3, ORD).unwrap().0.is_zero());
    }

    #[test]
    fn division_identity_holds() {
        let f = p("x1^3*x2 - 2*x2*x3^2 + x1 + 7");
        let gs = vec![p("x1*x2 - x3"), p("x1^2 - x3^2"), p("x3^3 - x3")];
        let (nf, qs) = reduce(&f, &gs, ORD).unwrap();
        let mut acc = nf.clone();
        for (q, g) in qs.iter().zip(&gs) {
            acc = &acc + &(q * g);
        }
        assert_eq!(acc, f);
        for t in nf.terms() {
            assert!(gs.iter().all(|g| !g.lm().unwrap().divides(&t.mono)));
        }
    }

    #[test]
    fn s_polynomials() {
        let s = s_polynomial(&p("x1*x2 - x3"), &p("x1*x3 - x2"), ORD).unwrap();
        assert_eq!(s, p("x2^2 - x3^2"));
        let f = p("x2*x3 - x1");
        assert!(s_polynomial(&f, &f, ORD).unwrap().is_zero());
        let coprime = s_polynomial(&p("x1^2"), &p("x2^2"), ORD).unwrap();
        let (nf, _) = reduce(&coprime, &[p("x1^2"), p("x2^2")], ORD).unwrap();
        assert!(nf.is_zero());
        assert_eq!(s_polynomial(&f, &P::zero(3, ORD), ORD).unwrap_err(), Error::ZeroPolynomial);
    }

    fn poly() -> impl Strategy<Value = P> {
        proptest::collection::vec((proptest::collection::vec(0u16..3, 3), -3i64..4), 0..5).prop_map(|ts| {
            P::from_terms(3, ORD, ts.into_iter().map(|(e, a)| (Monomial::new(&e), BigRational::from_i64(a))))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn reduction_is_idempotent(f in poly(), g in poly(), h in poly()) {
            let gs: Vec<P> = [g, h].into_iter().filter(|x| !x.is_zero()).collect();
            let (nf, _) = reduce(&f, &gs, ORD).unwrap();
            let (again, qs) = reduce(&nf, &gs, ORD).unwrap();
            prop_assert_eq!(again, nf);
            prop_assert!(qs.iter().all(P::is_zero));
        }
    }
}
