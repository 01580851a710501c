//! Variable names, plus the text format for polynomials.
//!
//! A polynomial prints as terms joined by ` + ` / ` - `, each term an optional
//! integer or rational coefficient followed by `*`-separated factors `name^e`,
//! e.g. `-2*x1^2*x3 + 1/3*x2`. Parsing accepts the same grammar with arbitrary
//! whitespace.

use std::sync::Arc;

use super::{Monomial, Polynomial, TermOrder};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Ring {
            names: names.into_iter().map(Into::into).collect(),
        }
    }

    /// `x1, ..., xn`.
    pub fn xs(n: usize) -> Self {
        Ring::new((1..=n).map(|i| format!("x{i}")))
    }

    /// `x1, ..., xn` followed by the given auxiliary names.
    pub fn xs_with(n: usize, extra: &[&str]) -> Self {
        Ring::new((1..=n).map(|i| format!("x{i}")).chain(extra.iter().map(|s| s.to_string())))
    }

    /// Dual variables `y1, ..., yn`.
    pub fn ys(n: usize) -> Self {
        Ring::new((1..=n).map(|i| format!("y{i}")))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The ring with one more variable appended at the end.
    pub fn extended(&self, name: &str) -> Ring {
        Ring::new(self.names.iter().cloned().chain(std::iter::once(name.to_string())))
    }

    pub fn without(&self, var: usize) -> Ring {
        Ring::new(
            self.names
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != var)
                .map(|(_, n)| n.clone()),
        )
    }

    pub fn format<F: Field>(&self, p: &Polynomial<F>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, t) in p.terms().enumerate() {
            let c = t.coeff.to_string();
            let (neg, mag) = match c.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, c),
            };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mono = format_monomial(&t.mono, &self.names);
            if t.mono.is_one() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        format_monomial(m, &self.names)
    }

    pub fn parse<F: Field>(&self, s: &str, order: TermOrder) -> Result<Polynomial<F>> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
            ring: self,
        }
        .polynomial(order)
    }

    /// Parses a single monomial such as `x1*x3^2` or `1`.
    pub fn parse_monomial(&self, s: &str) -> Result<Monomial> {
        let p: Polynomial<num_rational::BigRational> = self.parse(s, TermOrder::Lex)?;
        match p.leading_term() {
            Ok((m, c)) if p.len() == 1 && num_traits::One::is_one(c) => Ok(m.clone()),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("`{s}` is not a monomial"),
            }),
        }
    }
}

pub(crate) fn format_monomial(m: &Monomial, names: &[String]) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                names[i].clone()
            } else {
                format!("{}^{e}", names[i])
            }
        })
        .collect();
    parts.join("*")
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn polynomial<F: Field>(mut self, order: TermOrder) -> Result<Polynomial<F>> {
        let n = self.ring.nvars();
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return self.err("empty polynomial"),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(c) => return self.err(format!("expected `+` or `-`, found `{}`", c as char)),
            };
            first = false;
            let (m, mut c) = self.term::<F>()?;
            if sign {
                c = -c;
            }
            terms.push((m, c));
        }
        debug_assert!(terms.iter().all(|(m, _): &(Monomial, F)| m.nvars() == n));
        Ok(Polynomial::from_terms(n, order, terms))
    }

    fn term<F: Field>(&mut self) -> Result<(Monomial, F)> {
        let n = self.ring.nvars();
        let mut exps = vec![0u16; n];
        let mut coeff = F::one();
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.digits();
            let mut text = num.to_string();
            if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let den = self.digits();
                if den.is_empty() {
                    return self.err("missing denominator");
                }
                if den.bytes().all(|b| b == b'0') {
                    return self.err("zero denominator");
                }
                text = format!("{num}/{den}");
            }
            coeff = match text.parse::<F>() {
                Ok(c) => c,
                Err(_) => return self.err(format!("bad coefficient `{text}`")),
            };
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((Monomial::one(n), coeff));
            }
        }
        {
            loop {
                self.skip_ws();
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                if start == self.pos {
                    return self.err("expected a variable");
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let Some(var) = self.ring.index_of(name) else {
                    self.pos = start;
                    return self.err(format!("unknown variable `{name}`"));
                };
                let mut e: u16 = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.digits();
                    e = match d.parse() {
                        Ok(v) => v,
                        Err(_) => return self.err("bad exponent"),
                    };
                }
                exps[var] += e;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        Ok((Monomial::new(&exps), coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type P = Polynomial<BigRational>;

    #[test]
    fn formats_canonically() {
        let r = Ring::xs(3);
        let p: P = r.parse("x2*x3 - x1", TermOrder::GRevLex).unwrap();
        assert_eq!(r.format(&p), "x2*x3 - x1");
        let q: P = r.parse(" 1/3 *x2 -2*x1 ^2* x3", TermOrder::GRevLex).unwrap();
        assert_eq!(r.format(&q), "-2*x1^2*x3 + 1/3*x2");
        let c: P = r.parse("-5", TermOrder::GRevLex).unwrap();
        assert_eq!(r.format(&c), "-5");
        assert_eq!(r.format(&P::zero(3, TermOrder::Lex)), "0");
    }

    #[test]
    fn auxiliary_and_dual_names() {
        let r = Ring::xs_with(2, &["z", "t"]);
        let p: P = r.parse("x2*z - t^2", TermOrder::GRevLex).unwrap();
        assert_eq!(p.nvars(), 4);
        assert_eq!(r.format(&p), "x2*z - t^2");
        let y = Ring::ys(2);
        let g: P = y.parse("y1^2 + y2^2", TermOrder::GRevLex).unwrap();
        assert_eq!(y.format(&g), "y1^2 + y2^2");
    }

    #[test]
    fn parse_errors() {
        let r = Ring::xs(2);
        assert!(matches!(r.parse::<BigRational>("x3", TermOrder::Lex), Err(Error::Parse { .. })));
        assert!(matches!(r.parse::<BigRational>("", TermOrder::Lex), Err(Error::Parse { .. })));
        assert!(matches!(r.parse::<BigRational>("x1 x2", TermOrder::Lex), Err(Error::Parse { .. })));
        assert!(matches!(r.parse::<BigRational>("1/0*x1", TermOrder::Lex), Err(Error::Parse { .. })));
        assert!(r.parse_monomial("2*x1").is_err());
        assert_eq!(r.parse_monomial("x1*x2^3").unwrap(), Monomial::new(&[1, 3]));
    }

    fn poly() -> impl Strategy<Value = P> {
        proptest::collection::vec(
            (proptest::collection::vec(0u16..3, 3), -5i64..5, 1i64..4),
            0..6,
        )
        .prop_map(|ts| {
            P::from_terms(
                3,
                TermOrder::GRevLex,
                ts.into_iter()
                    .map(|(e, a, b)| (Monomial::new(&e), BigRational::new(a.into(), b.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(p in poly()) {
            let r = Ring::xs(3);
            let q: P = r.parse(&r.format(&p), TermOrder::GRevLex).unwrap();
            prop_assert_eq!(q, p);
        }
    }
}
