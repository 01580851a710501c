//! Buchberger completion with the Gebauer–Möller pair criteria and the normal
//! selection strategy (smallest lcm first).

use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyarith::{spoly_unchecked, Ideal, Monomial, Polynomial, Term, TermOrder};

pub const DEFAULT_PAIR_CAP: usize = 1_000_000;

/// Settings shared by every Gröbner-based computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Engine {
    /// Completion fails with [`Error::ResourceLimit`] once the pair queue grows past this.
    pub pair_cap: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            pair_cap: DEFAULT_PAIR_CAP,
        }
    }
}

/// Leading-monomial index used for reducer lookup.
pub(crate) struct Reducer<'a, F> {
    polys: Vec<&'a Polynomial<F>>,
    masks: Vec<u64>,
}

impl<'a, F: Field> Reducer<'a, F> {
    pub(crate) fn new(polys: impl IntoIterator<Item = &'a Polynomial<F>>) -> Self {
        let polys: Vec<_> = polys.into_iter().collect();
        let masks = polys.iter().map(|p| p.lm().unwrap().divmask()).collect();
        Reducer { polys, masks }
    }

    fn find(&self, m: &Monomial) -> Option<&'a Polynomial<F>> {
        let mask = m.divmask();
        self.polys
            .iter()
            .zip(&self.masks)
            .find(|(p, &pm)| pm & !mask == 0 && p.lm().unwrap().divides(m))
            .map(|(p, _)| *p)
    }

    /// Fully reduced normal form: no term is divisible by a leading monomial.
    pub(crate) fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let mut rest = p.clone();
        let mut out: Vec<Term<F>> = Vec::new();
        while let Some(m) = rest.lm() {
            match self.find(m) {
                Some(g) => {
                    let shift = m.div(g.lm().unwrap()).unwrap();
                    let factor = -(rest.lc().unwrap().clone() / g.lc().unwrap().clone());
                    rest = rest.add_scaled(&factor, &shift, g);
                }
                None => out.push(rest.pop_leading().unwrap()),
            }
        }
        out.reverse();
        Polynomial::from_sorted(p.nvars(), p.order(), out)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<F> {
    ord: TermOrder,
    store: Vec<Polynomial<F>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    cap: usize,
}

impl<F: Field> State<F> {
    fn lm(&self, i: usize) -> &Monomial {
        self.store[i].lm().unwrap()
    }

    fn active_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.store.len()).filter(|&i| self.active[i])
    }

    fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        Reducer::new(self.active_indices().map(|i| &self.store[i])).normal_form(p)
    }

    /// Inserts a new monic, fully reduced element and updates the pair set.
    fn update(&mut self, h: Polynomial<F>) -> Result<()> {
        let hi = self.store.len();
        let hm = h.lm().unwrap().clone();
        self.store.push(h);
        self.active.push(true);

        let cands: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, hm.lcm(self.lm(g))))
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g, l)) in cands.iter().enumerate() {
            let coprime = hm.is_coprime(self.lm(*g));
            let dominated = cands[k + 1..]
                .iter()
                .chain(kept.iter())
                .any(|(_, other)| other.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }
        // product criterion
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !hm.is_coprime(self.lm(*g)))
            .map(|(g, lcm)| Pair { i: g, j: hi, lcm })
            .collect();
        // old pairs made redundant by h
        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| {
                !hm.divides(&p.lcm)
                    || hm.lcm(self.lm(p.i)) == p.lcm
                    || hm.lcm(self.lm(p.j)) == p.lcm
            })
            .collect();
        self.pairs.extend(fresh);
        for g in 0..hi {
            if self.active[g] && hm.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        if self.pairs.len() > self.cap {
            return Err(Error::ResourceLimit {
                pairs: self.pairs.len(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let ord = self.ord;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.lcm
                .degree()
                .cmp(&q.lcm.degree())
                .then_with(|| ord.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

impl Engine {
    pub fn new(pair_cap: usize) -> Self {
        Engine { pair_cap }
    }

    /// Reduced Gröbner basis of `ideal` under `ord`.
    ///
    /// The result is canonical: it depends only on the ideal and the order, not on
    /// the generator list. The zero ideal yields an empty basis.
    pub fn buchberger<F: Field>(&self, ideal: &Ideal<F>, ord: TermOrder) -> Result<GroebnerBasis<F>> {
        let mut gens: Vec<Polynomial<F>> = ideal
            .generators()
            .iter()
            .map(|g| g.with_order(ord).monic())
            .collect();
        gens.sort_by(|a, b| {
            ord.cmp(a.lm().unwrap(), b.lm().unwrap())
                .then_with(|| a.len().cmp(&b.len()))
        });
        let mut st = State {
            ord,
            store: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            cap: self.pair_cap,
        };
        for g in gens {
            let h = st.normal_form(&g);
            if !h.is_zero() {
                st.update(h.monic())?;
            }
        }
        while let Some(pair) = st.pop_pair() {
            let (f, g) = (&st.store[pair.i], &st.store[pair.j]);
            let (fm, fc) = f.leading_term()?;
            let (gm, gc) = g.leading_term()?;
            let s = spoly_unchecked(f, fm, fc, g, gm, gc);
            let h = st.normal_form(&s);
            if !h.is_zero() {
                st.update(h.monic())?;
            }
        }
        let minimal: Vec<Polynomial<F>> = st
            .active_indices()
            .map(|i| st.store[i].clone())
            .collect();
        Ok(GroebnerBasis::from_minimal(ideal.ring().clone(), ord, minimal))
    }
}

/// Interreduces a minimal basis (distinct leading monomials, none dividing another).
pub(crate) fn interreduce<F: Field>(minimal: Vec<Polynomial<F>>, ord: TermOrder) -> Vec<Polynomial<F>> {
    let mut out = Vec::with_capacity(minimal.len());
    for (i, p) in minimal.iter().enumerate() {
        let others = Reducer::new(minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q));
        let mut tail = p.clone();
        let lead = tail.pop_leading().unwrap();
        let mut reduced = others.normal_form(&tail);
        let lm = Polynomial::monomial(lead.mono, lead.coeff, ord);
        reduced = &reduced + &lm;
        out.push(reduced.monic());
    }
    out.sort_by(|a, b| ord.cmp(a.lm().unwrap(), b.lm().unwrap()));
    out
}
