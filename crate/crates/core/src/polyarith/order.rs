use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Monomial;
use crate::error::{Error, Result};

/// Monomial orders. Variable precedence is always `x1 > x2 > ... > xn`,
/// followed by any auxiliary variables in ring order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    GRevLex,
    Lex,
    DegLex,
    /// Block order: GRevLex on the first `k` variables, ties broken by GRevLex on the rest.
    /// Any polynomial whose leading monomial avoids the first block lies in the subring
    /// of the remaining variables.
    Elimination(usize),
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        // the last nonzero entry of a - b decides, with the sign flipped
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl TermOrder {
    /// Compares two monomials of the same length.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            TermOrder::Lex => a.exponents().cmp(b.exponents()),
            TermOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exponents().cmp(b.exponents())),
            TermOrder::GRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            TermOrder::Elimination(k) => {
                let k = k.min(a.nvars());
                let (a0, a1) = a.exponents().split_at(k);
                let (b0, b1) = b.exponents().split_at(k);
                grevlex(a0, b0).then_with(|| grevlex(a1, b1))
            }
        }
    }

    pub fn is_graded(&self) -> bool {
        !matches!(self, TermOrder::Lex | TermOrder::Elimination(_))
    }
}

/// Dimension-checked comparison.
pub fn cmp_monomials(a: &Monomial, b: &Monomial, ord: TermOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::Dimension {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    Ok(ord.cmp(a, b))
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::GRevLex => f.write_str("grevlex"),
            TermOrder::Lex => f.write_str("lex"),
            TermOrder::DegLex => f.write_str("deglex"),
            TermOrder::Elimination(k) => write!(f, "elim({k})"),
        }
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "grevlex" => Ok(TermOrder::GRevLex),
            "lex" => Ok(TermOrder::Lex),
            "deglex" => Ok(TermOrder::DegLex),
            other => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown term order `{other}`"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn grevlex_examples() {
        // x1*x2 vs x3^2: equal degree, difference (1,1,-2) ends negative
        assert_eq!(
            cmp_monomials(&m(&[1, 1, 0]), &m(&[0, 0, 2]), TermOrder::GRevLex).unwrap(),
            Ordering::Greater
        );
        assert_eq!(TermOrder::GRevLex.cmp(&m(&[0, 0, 0]), &m(&[1, 0, 0])), Ordering::Less);
        // the textbook distinction from deglex: x1*x3^2 vs x2^3 in three variables
        assert_eq!(TermOrder::GRevLex.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
        assert_eq!(TermOrder::DegLex.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Greater);
        // x_n is the smallest variable
        assert_eq!(TermOrder::GRevLex.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_and_elimination() {
        assert_eq!(TermOrder::Lex.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(TermOrder::Lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        // any monomial containing the eliminated variable beats any that does not
        let e = TermOrder::Elimination(1);
        assert_eq!(e.cmp(&m(&[1, 0, 0]), &m(&[0, 7, 7])), Ordering::Greater);
        assert_eq!(e.cmp(&m(&[0, 1, 1]), &m(&[0, 0, 3])), Ordering::Less);
    }

    #[test]
    fn mismatched_lengths() {
        assert!(matches!(
            cmp_monomials(&m(&[1]), &m(&[1, 0]), TermOrder::Lex),
            Err(Error::Dimension { .. })
        ));
    }

    fn orders() -> impl Strategy<Value = TermOrder> {
        prop_oneof![
            Just(TermOrder::GRevLex),
            Just(TermOrder::Lex),
            Just(TermOrder::DegLex),
            (0usize..4).prop_map(TermOrder::Elimination),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..4, 4).prop_map(|v| Monomial::new(&v))
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(ord in orders(), a in mono(), b in mono(), c in mono()) {
            let ab = ord.cmp(&a, &b);
            prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_ne!(ord.cmp(&a, &Monomial::one(4)), Ordering::Less);
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(ord.cmp(&b, &a), ab.reverse());
        }

        #[test]
        fn orders_are_transitive(ord in orders(), a in mono(), b in mono(), c in mono()) {
            if ord.cmp(&a, &b) != Ordering::Greater && ord.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(ord.cmp(&a, &c), Ordering::Greater);
            }
        }
    }
}
