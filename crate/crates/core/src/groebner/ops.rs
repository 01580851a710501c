use super::{Engine, GroebnerBasis, MonomialIdeal};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyarith::{reduce, Ideal, Polynomial, Ring, TermOrder};

/// Minimal generators of the leading-term ideal of a reduced basis.
pub fn initial_ideal<F: Field>(g: &GroebnerBasis<F>) -> Result<MonomialIdeal> {
    if !g.is_reduced() {
        return Err(Error::Contract("initial_ideal needs a reduced Gröbner basis".into()));
    }
    MonomialIdeal::new(g.nvars(), g.leading_monomials())
}

/// The ideal of top-degree forms of all elements of `ideal`.
///
/// GRevLex refines the degree filtration, so the top forms of a GRevLex Gröbner
/// basis generate it.
pub fn top_form_ideal<F: Field>(engine: &Engine, ideal: &Ideal<F>) -> Result<Ideal<F>> {
    let gb = engine.buchberger(ideal, TermOrder::GRevLex)?;
    Ideal::new(
        ideal.ring().clone(),
        gb.elements().iter().map(Polynomial::top_form).collect(),
    )
}

pub fn ideal_member<F: Field>(f: &Polynomial<F>, g: &GroebnerBasis<F>) -> bool {
    f.is_zero() || g.contains(f)
}

/// Equality through canonical reduced bases.
pub fn ideal_equal<F: Field>(engine: &Engine, a: &Ideal<F>, b: &Ideal<F>, ord: TermOrder) -> Result<bool> {
    if a.nvars() != b.nvars() {
        return Err(Error::Dimension {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    let ga = engine.buchberger(a, ord)?;
    let gb = engine.buchberger(b, ord)?;
    Ok(ga.elements() == gb.elements())
}

/// `ideal ∩ k[remaining variables]`, returned in the ring with `vars` deleted.
pub fn eliminate<F: Field>(engine: &Engine, ideal: &Ideal<F>, vars: &[usize]) -> Result<Ideal<F>> {
    let n = ideal.nvars();
    let mut elim: Vec<usize> = vars.to_vec();
    elim.sort_unstable();
    elim.dedup();
    if let Some(&v) = elim.iter().find(|&&v| v >= n) {
        return Err(Error::Range(format!("variable index {v} in a ring with {n} variables")));
    }
    if elim.is_empty() {
        return Ok(ideal.clone());
    }
    let k = elim.len();
    let rest: Vec<usize> = (0..n).filter(|i| !elim.contains(i)).collect();
    // old index -> position in the block-ordered ring
    let mut images = vec![0; n];
    for (pos, &v) in elim.iter().chain(rest.iter()).enumerate() {
        images[v] = pos;
    }
    let block_ring = Ring::new(elim.iter().chain(rest.iter()).map(|&v| ideal.ring().name(v).to_string()));
    let permuted = Ideal::new(
        block_ring,
        ideal.generators().iter().map(|g| g.permute_vars(&images)).collect(),
    )?;
    let gb = engine.buchberger(&permuted, TermOrder::Elimination(k))?;
    let back: Vec<Option<usize>> = (0..n).map(|p| p.checked_sub(k)).collect();
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.lm().unwrap().exponents()[..k].iter().all(|&e| e == 0))
        .map(|g| g.remap(n - k, &back, TermOrder::GRevLex).expect("eliminated variables absent"))
        .collect();
    let mut ring = ideal.ring().clone();
    for &v in elim.iter().rev() {
        ring = ring.without(v);
    }
    Ideal::new(ring, kept)
}

fn fresh_name(ring: &Ring) -> String {
    let mut name = "t".to_string();
    while ring.index_of(&name).is_some() {
        name.push('_');
    }
    name
}

/// `a ∩ b` by eliminating `t` from `t*a + (1 - t)*b`.
pub fn intersect<F: Field>(engine: &Engine, a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    if a.ring() != b.ring() {
        return Err(Error::Dimension {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(a.ring().clone()));
    }
    let n = a.nvars();
    let ord = TermOrder::GRevLex;
    let big = a.ring().extended(&fresh_name(a.ring()));
    let lift: Vec<Option<usize>> = (0..n).map(Some).collect();
    let t = Polynomial::<F>::var(n + 1, n, ord);
    let one_minus_t = &Polynomial::one(n + 1, ord) - &t;
    let mut gens = Vec::new();
    for f in a.generators() {
        gens.push(&t * &f.remap(n + 1, &lift, ord).unwrap());
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.remap(n + 1, &lift, ord).unwrap());
    }
    eliminate(engine, &Ideal::new(big, gens)?, &[n])
}

/// `(ideal : f)`, via `ideal ∩ <f>` divided by `f`.
pub fn quotient_by_element<F: Field>(engine: &Engine, ideal: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>> {
    if f.is_zero() {
        return Err(Error::Contract("colon by the zero polynomial".into()));
    }
    let gb = engine.buchberger(ideal, TermOrder::GRevLex)?;
    if gb.contains(f) {
        return Ideal::new(ideal.ring().clone(), vec![Polynomial::one(ideal.nvars(), TermOrder::GRevLex)]);
    }
    let principal = Ideal::new(ideal.ring().clone(), vec![f.clone()])?;
    let meet = intersect(engine, ideal, &principal)?;
    let f = f.with_order(TermOrder::GRevLex);
    let quotients = meet
        .generators()
        .iter()
        .map(|h| {
            let (rem, q) = reduce(h, std::slice::from_ref(&f), TermOrder::GRevLex)?;
            if !rem.is_zero() {
                return Err(Error::Contract("intersection generator not divisible by f".into()));
            }
            Ok(q.into_iter().next().unwrap())
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring().clone(), quotients)
}

/// `(a : b) = ∩ (a : f)` over the generators `f` of `b`.
pub fn colon_ideal<F: Field>(engine: &Engine, a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    if b.is_zero() {
        return Err(Error::Contract("colon by the zero ideal".into()));
    }
    if a.ring() != b.ring() {
        return Err(Error::Dimension {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    let mut acc: Option<Ideal<F>> = None;
    for f in b.generators() {
        let q = quotient_by_element(engine, a, f)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => intersect(engine, &prev, &q)?,
        });
    }
    Ok(acc.unwrap())
}

/// True when `f` is a nonzerodivisor on `R / ideal`, i.e. `(ideal : f) = ideal`.
pub fn is_regular_element<F: Field>(engine: &Engine, ideal: &Ideal<F>, f: &Polynomial<F>) -> Result<bool> {
    let colon = quotient_by_element(engine, ideal, f)?;
    ideal_equal(engine, &colon, ideal, TermOrder::GRevLex)
}

/// Krull dimension of `R / ideal`, read off its GRevLex initial ideal.
pub fn krull_dim<F: Field>(engine: &Engine, ideal: &Ideal<F>) -> Result<usize> {
    let gb = engine.buchberger(ideal, TermOrder::GRevLex)?;
    super::krull_dim_monomial(&initial_ideal(&gb)?)
}
